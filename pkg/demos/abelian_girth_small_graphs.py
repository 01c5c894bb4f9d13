# Exact abelian girth: subgraph witnesses, the walk oracle and the 3*girth bound.
import math

from ablgirth import abelian_girth, complete, cycle, girth, make_barbell, make_figure_eight, make_theta
from ablgirth.abelian import abl_oracle

graphs = {
    "C6": cycle(6),
    "theta(1,2,2)": make_theta(1, 2, 2),
    "figure-eight(3,3)": make_figure_eight(3, 3),
    "barbell(3,4,2)": make_barbell(3, 4, 2),
    "K4": complete(4),
}
for name, g in graphs.items():
    res = abelian_girth(g)
    gir = girth(g).value
    kind = res.witness.kind if res.witness else "-"
    print(f"{name:18s} girth {gir!s:>4}  abl {res.value!s:>4}  witness {kind:8s}  3*girth <= abl: {res.value == math.inf or 3 * gir <= res.value}")

# the oracle alone, searching closed NB edge-neutral walks by length
res = abl_oracle(complete(4), 12)
print("oracle on K4:", res.value, res.witness.walk)
