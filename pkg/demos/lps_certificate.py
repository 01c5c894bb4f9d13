# Build X^{5,13}, inspect it and certify abl <= 8 r0 from three closed walks at the identity.
from ablgirth import build_lps, girth
from ablgirth.lps import certify_lps_abl, goodness_witnesses

lps = build_lps(5, 13)
print(f"n={lps.n} degree={lps.params.degree} bipartite={lps.params.bipartite} r0={lps.params.r0}")
for note in lps.notes():
    print("note:", note)
print("girth =", girth(lps.graph).value)

for m, value, positive, good in goodness_witnesses(5, 13, lps.params.r0):
    print(f"m={m:2d}: 2 m p^r - m^2 q^2 = {value} positive={positive} good={good}")

rep = certify_lps_abl(lps)
print(f"abl <= {rep.certificate.bound} (8 r0 = {rep.bound_limit}, (16/3) log_5 n = {rep.log_bound:.2f})")
