"""Minimal combinations of a point set: exact engine vs. float oracle.

A *minimal combination* of a finite set A in R^n is the nearest point
from the origin to the convex hull of some subset of A.  Every such
point is certified by an affinely independent subset S: the least-norm
point of Aff(S) must have strictly positive barycentric coordinates.

This demo walks through the certificate machinery on a tiny set and
cross-checks the exact answer with the floating-point Frank-Wolfe
oracle.
"""

from mincombs import (
    PointSet,
    barycentric,
    min_square,
    minimal_combinations,
    nearest_point_oracle,
    tau_full,
)

# Two points whose segment passes near (but not through) the origin.
S = [(1, -1, 0), (-1, 2, -1)]

# The least-norm point of the affine hull, computed exactly:
sigma = min_square(S)
print("least-norm point of Aff(S):", sigma)  # (2/7, 1/14, -5/14)

# Its barycentric coordinates are strictly positive, so the segment
# itself (not an endpoint) is nearest to the origin:
nu = barycentric(S, sigma)
print("barycentric coordinates:   ", nu)  # (9/14, 5/14)
assert all(v > 0 for v in nu)

# The float oracle agrees to near machine precision:
approx = nearest_point_oracle(S, tol=1e-14)
print("float oracle:              ", approx)
assert max(abs(a - float(e)) for a, e in zip(approx, sigma)) < 1e-9

# tau_full handles affinely dependent sets too -- here the origin lies
# inside the triangle spanned by the first three points:
T = [(-1, -1, 2), (-1, 2, -1), (2, -1, -1), (0, 0, 0)]
print("tau of a dependent set:    ", tau_full(T))  # (0, 0, 0)

# Enumerating all subsets groups certificates by their common beta:
A = PointSet(3, [(1, -1, 0), (-1, 2, -1), (2, -1, -1), (1, 0, -1)])
for mc in minimal_combinations(A):
    certs = ", ".join(f"k={c.k} S={c.subset}" for c in mc.certificates)
    print(f"beta={mc.beta}  |beta|^2={mc.norm_sq}  [{certs}]")

# Nested sets can only get closer to the origin:
assert sum(b * b for b in tau_full(S)) >= sum(
    b * b for b in tau_full(S + [(2, -1, -1)])
)
print("monotonicity under inclusion: ok")
