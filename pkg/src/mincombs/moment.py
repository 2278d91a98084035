"""Moment matrices of homogeneous forms and critical candidates.

The moment matrix of a nonzero form f of degree d in n variables is
H(f) - (d/n) I, where H(f)_ij = <df/dx_i, df/dx_j> / (d ||f||^2) under
the monomial-orthogonal inner product.  For a convex certificate of a
weight beta, the candidate form sum_a sqrt(q_a)/||x^a|| * x^a is a
genuine critical point exactly when its moment matrix equals diag(beta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .exact import RadicalScalar, rational_to_str, sqrt_rational, vector_to_str
from .weights import (
    MultiIndex,
    WeightTable,
    monomial_norm_sq,
    monomial_string,
    weight_of,
)


@dataclass(frozen=True)
class RadicalPolynomial:
    """Homogeneous polynomial with quadratic-radical coefficients."""

    n: int
    d: int
    terms: dict[MultiIndex, RadicalScalar]

    def __post_init__(self):
        clean = {
            a: c
            for a, c in self.terms.items()
            if not c.is_zero()
        }
        for a in clean:
            if len(a) != self.n or sum(a) != self.d:
                raise ValueError(f"term {a} does not have degree {self.d} in {self.n} variables")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_coeff_sq(cls, n: int, d: int, coeff_sq: dict[MultiIndex, Fraction]) -> "RadicalPolynomial":
        """Form with coefficients +sqrt(coeff_sq[alpha])."""
        return cls(n, d, {a: sqrt_rational(q) for a, q in coeff_sq.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def norm_sq(self) -> RadicalScalar:
        total = RadicalScalar()
        for a, c in self.terms.items():
            total = total + c * c * monomial_norm_sq(a)
        return total

    def scale(self, factor) -> "RadicalPolynomial":
        return RadicalPolynomial(
            self.n, self.d, {a: c * factor for a, c in self.terms.items()}
        )

    def embed(self, n: int) -> "RadicalPolynomial":
        """View the polynomial in a larger variable set (exponents padded with 0)."""
        if n < self.n:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (n - self.n)
        return RadicalPolynomial(n, self.d, {a + pad: c for a, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms, reverse=True):
            c = self.terms[a]
            mono = monomial_string(a)
            parts.append(mono if c == RadicalScalar.from_rational(1) else f"({c})*{mono}")
        return " + ".join(parts)


def poly_inner(f: RadicalPolynomial, g: RadicalPolynomial) -> RadicalScalar:
    """Exact inner product: monomials are orthogonal with norm_sq i_1!...i_n!/d!."""
    if (f.n, f.d) != (g.n, g.d):
        raise ValueError("polynomials must share variable count and degree")
    total = RadicalScalar()
    for a, c in f.terms.items():
        other = g.terms.get(a)
        if other is not None:
            total = total + c * other * monomial_norm_sq(a)
    return total


def partial_derivative(f: RadicalPolynomial, i: int) -> RadicalPolynomial:
    """d f / d x_i, degree drops by one; terms without x_i vanish."""
    if f.d < 1:
        raise ValueError("degree must be at least 1")
    terms: dict[MultiIndex, RadicalScalar] = {}
    for a, c in f.terms.items():
        if a[i] == 0:
            continue
        b = a[:i] + (a[i] - 1,) + a[i + 1 :]
        terms[b] = terms.get(b, RadicalScalar()) + c * a[i]
    return RadicalPolynomial(f.n, f.d - 1, terms)


@dataclass(frozen=True)
class MomentMatrix:
    """Symmetric trace-zero matrix of radical scalars."""

    size: int
    entries: tuple[tuple[RadicalScalar, ...], ...]

    @classmethod
    def diagonal(cls, values: Sequence) -> "MomentMatrix":
        n = len(values)
        zero = RadicalScalar()
        return cls(
            n,
            tuple(
                tuple(
                    RadicalScalar.from_rational(values[i]) if i == j else zero
                    for j in range(n)
                )
                for i in range(n)
            ),
        )

    def __getitem__(self, ij: tuple[int, int]) -> RadicalScalar:
        return self.entries[ij[0]][ij[1]]

    def trace(self) -> RadicalScalar:
        total = RadicalScalar()
        for i in range(self.size):
            total = total + self.entries[i][i]
        return total

    def diagonal_vector(self) -> tuple[RadicalScalar, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def to_json(self) -> list[list[list[dict]]]:
        return [[e.to_json() for e in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> "MomentMatrix":
        entries = tuple(
            tuple(RadicalScalar.from_json(e) for e in row) for row in data
        )
        return cls(len(entries), entries)


def moment_matrix(f: RadicalPolynomial) -> MomentMatrix:
    """Exact moment matrix H(f) - (d/n) I of a nonzero form."""
    if f.is_zero():
        raise ValueError("moment matrix of the zero polynomial is undefined")
    n, d = f.n, f.d
    scale = (f.norm_sq() * d).inverse()
    grads = [partial_derivative(f, i) for i in range(n)]
    shift = Fraction(d, n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(rows[j][i])
                continue
            h = poly_inner(grads[i], grads[j]) * scale
            if i == j:
                h = h - shift
            row.append(h)
        rows.append(row)
    return MomentMatrix(n, tuple(tuple(r) for r in rows))


def is_diagonal(M: MomentMatrix) -> bool:
    return all(
        M.entries[i][j].is_zero()
        for i in range(M.size)
        for j in range(M.size)
        if i != j
    )


def zbeta_support(beta: Sequence, table: WeightTable) -> list[MultiIndex]:
    """Monomials whose weights lie on the hyperplane through beta orthogonal to beta.

    For beta = 0 the condition is vacuous and every monomial qualifies.
    """
    beta = tuple(Fraction(b) for b in beta)
    bb = sum((b * b for b in beta), Fraction(0))
    out = []
    for a, w in zip(table.alphas, table.weights):
        if sum((wi * bi for wi, bi in zip(w, beta)), Fraction(0)) == bb:
            out.append(a)
    return out


def critical_value(beta: Sequence) -> RadicalScalar:
    """Canonical sqrt of ||beta||^2; the stability-criterion value of f_beta."""
    bb = sum((Fraction(b) ** 2 for b in beta), Fraction(0))
    return sqrt_rational(bb)


def _integer_rescale(coeff_sq: dict[MultiIndex, Fraction]) -> dict[MultiIndex, int]:
    """Scale squared coefficients to coprime positive integers."""
    lcm = 1
    for q in coeff_sq.values():
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    ints = {a: int(q * lcm) for a, q in coeff_sq.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {a: v // g for a, v in ints.items()}


@dataclass
class CriticalCandidate:
    """A candidate critical form for a weight beta, with its verdict."""

    beta: tuple[Fraction, ...]
    support: tuple[MultiIndex, ...]
    q_weights: tuple[Fraction, ...]
    coeff_sq: dict[MultiIndex, Fraction]
    moment: MomentMatrix
    verified: bool
    value: RadicalScalar

    def polynomial(self) -> RadicalPolynomial:
        n = len(self.beta)
        d = sum(self.support[0])
        return RadicalPolynomial.from_coeff_sq(n, d, self.coeff_sq)

    def display(self) -> str:
        """Integer-rescaled form, e.g. '(3*sqrt(3))*x^2z + (sqrt(5))*y^3'."""
        ints = _integer_rescale(self.coeff_sq)
        parts = []
        for a in sorted(ints, reverse=True):
            c = sqrt_rational(ints[a])
            mono = monomial_string(a)
            parts.append(mono if c == RadicalScalar.from_rational(1) else f"({c})*{mono}")
        return " + ".join(parts)

    def coeff_sq_ratio(self) -> dict[MultiIndex, int]:
        return _integer_rescale(self.coeff_sq)

    def to_json(self) -> dict:
        return {
            "beta": vector_to_str(self.beta),
            "support": [list(a) for a in self.support],
            "q": vector_to_str(self.q_weights),
            "coeff_sq": {
                ",".join(map(str, a)): rational_to_str(q)
                for a, q in sorted(self.coeff_sq.items(), reverse=True)
            },
            "verified": self.verified,
            "M": self.value.to_json(),
            "moment": self.moment.to_json(),
            "display": self.display(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CriticalCandidate":
        coeff_sq = {
            tuple(int(x) for x in key.split(",")): Fraction(val)
            for key, val in data["coeff_sq"].items()
        }
        return cls(
            beta=tuple(Fraction(x) for x in data["beta"]),
            support=tuple(tuple(a) for a in data["support"]),
            q_weights=tuple(Fraction(x) for x in data["q"]),
            coeff_sq=coeff_sq,
            moment=MomentMatrix.from_json(data["moment"]),
            verified=bool(data["verified"]),
            value=RadicalScalar.from_json(data["M"]),
        )


def build_f_beta(
    beta: Sequence,
    support: Sequence[MultiIndex],
    weights: Sequence,
    table: WeightTable,
) -> CriticalCandidate:
    """Build and verify the candidate form for a certified beta.

    The certificate must be consistent: the q weights are positive, sum
    to 1 and combine the support's weight vectors into beta.  The
    candidate is verified iff its moment matrix equals diag(beta).
    """
    beta = tuple(Fraction(b) for b in beta)
    q = tuple(Fraction(w) for w in weights)
    support = tuple(tuple(a) for a in support)
    if len(q) != len(support):
        raise ValueError("one weight per support monomial required")
    if sum(q) != 1 or any(v <= 0 for v in q):
        raise ValueError("weights must be positive and sum to 1")
    combined = [Fraction(0)] * table.n
    for a, qa in zip(support, q):
        for i, wi in enumerate(weight_of(a, table.n)):
            combined[i] += qa * wi
    if tuple(combined) != beta:
        raise ValueError("certificate does not combine to beta")
    coeff_sq = {a: qa / monomial_norm_sq(a) for a, qa in zip(support, q)}
    f = RadicalPolynomial.from_coeff_sq(table.n, table.d, coeff_sq)
    moment = moment_matrix(f)
    verified = moment == MomentMatrix.diagonal(beta)
    return CriticalCandidate(
        beta=beta,
        support=support,
        q_weights=q,
        coeff_sq=coeff_sq,
        moment=moment,
        verified=verified,
        value=critical_value(beta),
    )


def calpha_reconstruct(
    f: RadicalPolynomial, table: WeightTable
) -> Optional[tuple[Fraction, ...]]:
    """Recover the diagonal moment vector from squared coefficients.

    Returns sum_a (c_a^2 ||x^a||^2 / ||f||^2) * weight(a) when the moment
    matrix of f is diagonal, None otherwise.
    """
    if not is_diagonal(moment_matrix(f)):
        return None
    norm_sq = f.norm_sq()
    out = [RadicalScalar() for _ in range(f.n)]
    for a, c in f.terms.items():
        share = c * c * monomial_norm_sq(a) / norm_sq
        for i, wi in enumerate(weight_of(a, f.n)):
            out[i] = out[i] + share * wi
    return tuple(v.as_rational() for v in out)


def embed_check(f: RadicalPolynomial) -> bool:
    """Check the cubic-curve to cubic-surface moment embedding.

    For f of degree 3 in 3 variables, the 4-variable moment matrix must
    equal the 3-variable one with -1 appended on the diagonal, plus
    (1/4) I.
    """
    if f.n != 3 or f.d != 3:
        raise ValueError("defined for degree-3 forms in 3 variables")
    m3 = moment_matrix(f)
    m4 = moment_matrix(f.embed(4))
    quarter = Fraction(1, 4)
    zero = RadicalScalar()
    for i in range(4):
        for j in range(4):
            block = m3.entries[i][j] if i < 3 and j < 3 else (
                RadicalScalar.from_rational(-1) if i == j else zero
            )
            expected = block + quarter if i == j else block
            if m4.entries[i][j] != expected:
                return False
    return True
