"""Exact scalar and matrix arithmetic.

Scalars are arbitrary-precision rationals (``fractions.Fraction``) or
quadratic radicals (finite sums ``sum_k r_k * sqrt(s_k)`` with rational
coefficients and squarefree positive integer radicands).  Matrices are
dense rational matrices with fraction-free (Bareiss) elimination for
rank and linear solves, so every result is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    """Raised when a linear solve meets a non-invertible matrix."""


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n > 0 as m**2 * s with s squarefree; return (m, s)."""
    if n <= 0:
        raise ValueError("positive integer required")
    m, s = 1, 1
    # trial division; radicands stay small in practice
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    s *= n
    return m, s


class RadicalScalar:
    """Canonical sum of quadratic radicals with rational coefficients.

    Stored as a map radicand -> coefficient where every radicand is a
    squarefree positive integer (1 marks the rational part) and no
    coefficient is zero.  Equality and the zero test are therefore exact
    dictionary comparisons.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self.terms = {s: c for s, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_rational(cls, q) -> "RadicalScalar":
        q = Fraction(q)
        return cls({1: q}) if q else cls()

    @classmethod
    def sqrt_rational(cls, q) -> "RadicalScalar":
        """Exact square root of a non-negative rational, as r*sqrt(s)."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("cannot take the square root of a negative rational")
        if q == 0:
            return cls()
        # sqrt(p/q) = sqrt(p*q)/q
        m, s = squarefree_decompose(q.numerator * q.denominator)
        return cls({s: Fraction(m, q.denominator)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(s == 1 for s in self.terms)

    def rational_part(self) -> Fraction:
        return self.terms.get(1, Fraction(0))

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.rational_part()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.from_rational(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.from_rational(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, Fraction(0)) + c
        return RadicalScalar(terms)

    __radd__ = __add__

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar({s: -c for s, c in self.terms.items()})

    def __sub__(self, other) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.from_rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "RadicalScalar":
        return RadicalScalar.from_rational(other) - self

    def __mul__(self, other) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.from_rational(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                g = gcd(s1, s2)
                s = (s1 // g) * (s2 // g)  # squarefree since s1, s2 are
                c = c1 * c2 * g
                terms[s] = terms.get(s, Fraction(0)) + c
        return RadicalScalar(terms)

    __rmul__ = __mul__

    def inverse(self) -> "RadicalScalar":
        """Exact multiplicative inverse via conjugation over each prime."""
        if not self.terms:
            raise ZeroDivisionError("inverse of zero radical")
        if self.is_rational():
            return RadicalScalar({1: 1 / self.terms[1]})
        # pick a prime dividing some radicand and conjugate it away
        p = None
        for s in self.terms:
            if s != 1:
                q = 2
                while s % q:
                    q += 1 if q == 2 else 2
                p = q
                break
        conj = RadicalScalar(
            {s: (-c if s % p == 0 else c) for s, c in self.terms.items()}
        )
        return conj * (self * conj).inverse()

    def __truediv__(self, other) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.from_rational(other)
        return self * other.inverse()

    def __float__(self) -> float:
        return sum((float(c) * isqrt_float(s) for s, c in self.terms.items()), 0.0)

    def __repr__(self) -> str:
        return f"RadicalScalar({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s in sorted(self.terms):
            c = self.terms[s]
            if s == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"sqrt({s})")
            else:
                parts.append(f"{c}*sqrt({s})")
        return " + ".join(parts)

    def to_json(self) -> list[dict[str, str]]:
        return [
            {"coef": rational_to_str(self.terms[s]), "radicand": str(s)}
            for s in sorted(self.terms)
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict[str, str]]) -> "RadicalScalar":
        return cls({int(t["radicand"]): Fraction(t["coef"]) for t in data})


def isqrt_float(s: int) -> float:
    return float(s) ** 0.5


def sqrt_rational(q) -> RadicalScalar:
    """Module-level alias for :meth:`RadicalScalar.sqrt_rational`."""
    return RadicalScalar.sqrt_rational(q)


def rational_to_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vector_to_str(v: Sequence[Fraction]) -> list[str]:
    return [rational_to_str(Fraction(x)) for x in v]


def vector_from_str(v: Iterable[str]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


class RationalMatrix:
    """Dense matrix of exact rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RationalMatrix":
        return cls(list(map(list, zip(*columns))))

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(map(list, zip(*self.entries))))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return RationalMatrix(
            [
                [
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), Fraction(0))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((row[j] * Fraction(v[j]) for j in range(self.cols)), Fraction(0))
            for row in self.entries
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"RationalMatrix({self.entries!r})"


def _fraction_free_rows(entries: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row, returning integer rows."""
    out = []
    for row in entries:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def rank(A: RationalMatrix) -> int:
    """Exact rank via Bareiss fraction-free elimination."""
    m = _fraction_free_rows(A.entries)
    rows, cols = A.rows, A.cols
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def rat_solve(A: RationalMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Solve the square system A x = b exactly.

    Raises :class:`SingularMatrixError` when det(A) = 0; a dimension
    mismatch is a usage error (ValueError).
    """
    if A.rows != A.cols:
        raise ValueError("square matrix required")
    if len(b) != A.rows:
        raise ValueError("dimension mismatch")
    n = A.rows
    aug = [list(row) + [Fraction(b[i])] for i, row in enumerate(A.entries)]
    m = _fraction_free_rows(aug)
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        for i in range(c + 1, n):
            for j in range(c + 1, n + 1):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        for j in range(i + 1, n):
            s -= m[i][j] * x[j]
        x[i] = s / m[i][i]
    return tuple(x)
