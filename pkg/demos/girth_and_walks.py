# Girth, non-backtracking walks and free reduction on small graphs.
from ablgirth import complete, girth, petersen
from ablgirth.girth import enumerate_nb_walks
from ablgirth.walks import commutator, format_darts, reduce

k4 = complete(4)
pg = petersen()
print("girth(K4) =", girth(k4).value, " witness", format_darts(girth(k4).witness.steps))
print("girth(Petersen) =", girth(pg).value)

# 3 * 2^(h-1) NB walks of length h from any vertex of K4
for h in range(1, 5):
    print(f"h={h}: {len(list(enumerate_nb_walks(k4, 0, h)))} NB walks")

# two different triangles at vertex 0; their commutator is edge-neutral
closed = [w for w in enumerate_nb_walks(k4, 0, 3) if w.is_closed]
a = closed[0]
b = next(w for w in closed if w.steps not in (a.steps, a.inverse().steps))
ell = commutator(a, b)
print("a =", a, " b =", b)
print("[a, b] has length", ell.length, "and reduces to length", reduce(ell).length)
print("[a, a^-1] reduces to length", reduce(commutator(a, a.inverse())).length)
