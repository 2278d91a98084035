"""Monomials of degree d in n variables and their weight vectors.

Each monomial x^alpha carries the weight (i_1 - d/n, ..., i_n - d/n),
whose coordinates sum to zero, and the squared norm i_1! ... i_n! / d!
under the inner product that makes the monomials orthogonal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exact import rational_to_str, vector_from_str, vector_to_str

MultiIndex = tuple[int, ...]


def multi_indices(n: int, d: int) -> list[MultiIndex]:
    """All exponent vectors of degree d in n variables.

    Ordered descending-lexicographically (x > y > z ...), matching the
    fixed global monomial order used in reports.
    """
    if n < 1 or d < 1:
        raise ValueError("n >= 1 and d >= 1 required")

    def gen(n_left: int, d_left: int) -> list[MultiIndex]:
        if n_left == 1:
            return [(d_left,)]
        return [
            (i,) + rest
            for i in range(d_left, -1, -1)
            for rest in gen(n_left - 1, d_left - i)
        ]

    out = gen(n, d)
    assert len(out) == comb(n + d - 1, d)
    return out


def monomial_norm_sq(alpha: MultiIndex) -> Fraction:
    """Squared norm of x^alpha: i_1! ... i_n! / d!."""
    d = sum(alpha)
    num = 1
    for i in alpha:
        num *= factorial(i)
    return Fraction(num, factorial(d))


def weight_of(alpha: MultiIndex, n: int | None = None) -> tuple[Fraction, ...]:
    """Weight vector (i_k - d/n); coordinates sum to zero."""
    if n is None:
        n = len(alpha)
    if n != len(alpha):
        raise ValueError("variable count mismatch")
    d = sum(alpha)
    shift = Fraction(d, n)
    return tuple(Fraction(i) - shift for i in alpha)


def in_weyl_chamber(v: Sequence) -> bool:
    """True iff the coordinates are non-increasing."""
    v = [Fraction(x) for x in v]
    return all(a >= b for a, b in zip(v, v[1:]))


DEFAULT_NAMES = ("x", "y", "z", "w", "u", "v")


def monomial_string(alpha: MultiIndex, names: Sequence[str] | None = None) -> str:
    """Human-readable monomial; exponent 1 unwritten, exponent 0 omitted."""
    if names is None:
        names = DEFAULT_NAMES[: len(alpha)]
    if len(names) != len(alpha):
        raise ValueError("need one name per variable")
    parts = []
    for name, e in zip(names, alpha):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts) if parts else "1"


@dataclass(frozen=True)
class WeightTable:
    """Monomials of P(n, d) with weights and squared norms, in fixed order."""

    n: int
    d: int
    alphas: tuple[MultiIndex, ...]
    weights: tuple[tuple[Fraction, ...], ...]
    norms_sq: tuple[Fraction, ...]

    @classmethod
    def build(cls, n: int, d: int) -> "WeightTable":
        alphas = tuple(multi_indices(n, d))
        return cls(
            n=n,
            d=d,
            alphas=alphas,
            weights=tuple(weight_of(a, n) for a in alphas),
            norms_sq=tuple(monomial_norm_sq(a) for a in alphas),
        )

    def __len__(self) -> int:
        return len(self.alphas)

    def index_of_weight(self, w: Sequence) -> int:
        w = tuple(Fraction(x) for x in w)
        return self.weights.index(w)

    def alpha_of_weight(self, w: Sequence) -> MultiIndex:
        return self.alphas[self.index_of_weight(w)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "entries": [
                {
                    "alpha": list(a),
                    "weight": vector_to_str(w),
                    "norm_sq": rational_to_str(s),
                }
                for a, w, s in zip(self.alphas, self.weights, self.norms_sq)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeightTable":
        entries = data["entries"]
        return cls(
            n=int(data["n"]),
            d=int(data["d"]),
            alphas=tuple(tuple(e["alpha"]) for e in entries),
            weights=tuple(vector_from_str(e["weight"]) for e in entries),
            norms_sq=tuple(Fraction(e["norm_sq"]) for e in entries),
        )

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh)
