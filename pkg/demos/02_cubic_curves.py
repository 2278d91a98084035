"""Stability analysis of plane cubic curves (n = 3, d = 3).

Each monomial x^a y^b z^c of degree 3 carries the weight
(a - 1, b - 1, c - 1).  The minimal combinations of this weight set are
the candidate values beta of the moment map; for each certified beta the
candidate critical form is

    f_beta = sum_alpha sqrt(q_alpha) / ||x^alpha|| * x^alpha,

which is a genuine critical point exactly when its moment matrix equals
diag(beta).  The critical value is M(f) = ||beta||: positive for
unstable forms, zero on the semistable boundary.
"""

from mincombs import WeightTable, analyze, render

table = WeightTable.build(3, 3)
print("monomial weights:")
for alpha, w in zip(table.alphas, table.weights):
    print(f"  {alpha} -> {w}")

# Restrict to the Weyl chamber (non-increasing coordinates); every other
# beta is a coordinate permutation of one of these representatives.
report = analyze(3, 3, weyl_only=True, reproducible=True)
print()
print(render(report, "table"))

# Highlights:
#   beta=(2,-1,-1)            f = x^3                      M = sqrt(6)
#   beta=(2/7,1/14,-5/14)     f = 3 sqrt(3) x^2 z + sqrt(5) y^3
#   beta=(0,0,0)              f = x^3 + y^3 + z^3          M = 0
# Some convex certificates do NOT survive verification: x^2y + xy^2 and
# x^2y + x^2z are listed with "[not critical]" because their moment
# matrices are not diagonal.
rejected = [
    cand
    for rec in report.records
    for cand in rec.candidates
    if not cand.verified
]
print("rejected candidates:", [c.display() for c in rejected])
