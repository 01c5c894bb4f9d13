# A small sweep written as CSV: girth, bounds and exact abelian girth for n <= 20.
import sys

from ablgirth.experiments import rows_to_csv, run_experiment

rows = run_experiment([10, 20, 50], 3, range(5), workers=1)
sys.stdout.write(rows_to_csv(rows))
