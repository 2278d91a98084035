"""Stability analysis of cubic surfaces (n = 4, d = 3).

The 20 degree-3 monomials in x, y, z, w carry weights (i_k - 3/4); the
full enumeration yields a few hundred distinct beta values.  This demo
reproduces the interior highlights and the moment-matrix embedding that
relates cubic curves to cubic surfaces.
"""

from fractions import Fraction as F

from mincombs import (
    MomentMatrix,
    RadicalPolynomial,
    analyze,
    embed_check,
    moment_matrix,
)

report = analyze(4, 3, reproducible=True)
print(f"distinct beta values: {len(report.records)}")

highlights = [
    (F(1, 4), F(-1, 12), F(-1, 12), F(-1, 12)),
    (F(1, 2), F(0), F(0), F(-1, 2)),
    (F(1, 4), F(1, 4), F(-1, 4), F(-1, 4)),
    (F(9, 20), F(3, 20), F(-3, 20), F(-9, 20)),
    (F(33, 100), F(9, 100), F(-3, 100), F(-39, 100)),
]
rows = {rec.beta: rec for rec in report.records}
for beta in highlights:
    rec = rows[beta]
    print(f"\nbeta = {tuple(map(str, beta))}  (interior: {rec.interior})")
    for cand in rec.candidates:
        tag = "critical" if cand.verified else "NOT critical"
        print(f"  f = {cand.display():45s} [{tag}]  M(f) = {cand.value}")

# A cubic curve f(x, y, z), viewed as a cubic surface, shifts its moment
# matrix by a fixed diagonal: m4(f) = block(m3(f), -1) + (1/4) I.
fermat = RadicalPolynomial.from_coeff_sq(
    3, 3, {(3, 0, 0): F(1), (0, 3, 0): F(1), (0, 0, 3): F(1)}
)
assert embed_check(fermat)
print("\nembedding relation holds for x^3 + y^3 + z^3:")
print("  m4 diagonal:", [str(v) for v in moment_matrix(fermat.embed(4)).diagonal_vector()])

# The whole pencil lambda (x^3+y^3+z^3) + mu xyz sits on the zero fiber
# of the 3-variable moment map:
pencil = RadicalPolynomial.from_coeff_sq(
    3, 3, {(3, 0, 0): F(2, 3), (0, 3, 0): F(2, 3), (0, 0, 3): F(2, 3), (1, 1, 1): F(7, 2)}
)
assert moment_matrix(pencil) == MomentMatrix.diagonal((0, 0, 0))
print("pencil lambda(x^3+y^3+z^3) + mu xyz: zero moment matrix, as expected")
