# Constructive abelian-girth upper bounds on random cubic graphs, against log2 n.
import math
import statistics

from ablgirth import certify_abl_upper, moore_h, random_regular
from ablgirth.moore import replay

for n in (10, 50, 200, 800):
    bounds = []
    for seed in range(10):
        g = random_regular(n, 3, seed)
        cert = certify_abl_upper(g)
        assert not replay(cert, g)
        bounds.append(cert.bound)
    h = moore_h(n, 3)
    print(f"n={n:4d} h={h:2d} limit 6h={6 * h:3d} median bound {statistics.median(bounds):5.1f} "
          f"median/log2 n {statistics.median(bounds) / math.log2(n):.2f}")
