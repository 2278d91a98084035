"""Minimal combinations of a finite rational point set.

A minimal combination of a set A is the nearest point from the origin
to the convex hull of some subset of A.  Every such point is certified
by an affinely independent subset S whose affine hull's least-norm
point lies strictly inside the simplex spanned by S; enumerating those
subsets yields the full set of minimal combinations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .exact import (
    RationalMatrix,
    SingularMatrixError,
    rank,
    rat_solve,
    rational_to_str,
    vector_from_str,
    vector_to_str,
)

Vector = tuple[Fraction, ...]


class NotInHullError(ValueError):
    """Raised when a point is not in the affine hull of the given set."""


class OracleFailedError(RuntimeError):
    """Raised when the floating-point oracle fails to converge."""


def _as_vector(x: Sequence) -> Vector:
    return tuple(Fraction(v) for v in x)


def _norm_sq(x: Vector) -> Fraction:
    return sum((v * v for v in x), Fraction(0))


def _difference_matrix(S: Sequence[Vector], pivot: int) -> RationalMatrix:
    """Columns x_j - x_pivot for j != pivot."""
    cols = [
        [xj - xi for xj, xi in zip(S[j], S[pivot])]
        for j in range(len(S))
        if j != pivot
    ]
    return RationalMatrix.from_columns(cols)


def affinely_independent(S: Sequence[Sequence]) -> bool:
    """True iff the difference vectors from any member are linearly independent."""
    S = [_as_vector(x) for x in S]
    if not S:
        raise ValueError("non-empty set required")
    if len(S) == 1:
        return True
    return rank(_difference_matrix(S, 0)) == len(S) - 1


def min_square(S: Sequence[Sequence], pivot: int = 0) -> Vector:
    """Least-norm point of the affine hull of an affinely independent set.

    Computed as (I - P) x_pivot with P the orthogonal projection onto the
    span of the difference vectors; the result does not depend on the
    pivot choice.
    """
    S = [_as_vector(x) for x in S]
    if len(S) == 1:
        return S[0]
    B = _difference_matrix(S, pivot)
    Bt = B.transpose()
    x = S[pivot]
    # x* = x - B (B^T B)^{-1} B^T x
    y = rat_solve(Bt @ B, Bt.apply(x))
    proj = B.apply(y)
    return tuple(xi - pi for xi, pi in zip(x, proj))


def barycentric(S: Sequence[Sequence], x: Sequence) -> tuple[Fraction, ...]:
    """Coefficients nu with sum(nu) = 1 and sum(nu_i x_i) = x.

    Requires S affinely independent; raises :class:`NotInHullError` when
    x does not lie in the affine hull of S.
    """
    S = [_as_vector(x_) for x_ in S]
    x = _as_vector(x)
    if len(S) == 1:
        if x != S[0]:
            raise NotInHullError("point not in affine hull")
        return (Fraction(1),)
    B = _difference_matrix(S, 0)
    Bt = B.transpose()
    rhs = tuple(xi - si for xi, si in zip(x, S[0]))
    try:
        lam = rat_solve(Bt @ B, Bt.apply(rhs))
    except SingularMatrixError:
        raise NotInHullError("set is affinely dependent") from None
    if B.apply(lam) != rhs:
        raise NotInHullError("point not in affine hull")
    return (1 - sum(lam),) + tuple(lam)


@dataclass(frozen=True)
class Certificate:
    """An affinely independent subset certifying a minimal combination."""

    k: int
    subset: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "subset": list(self.subset),
            "weights": vector_to_str(self.weights),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        return cls(data["k"], tuple(data["subset"]), vector_from_str(data["weights"]))


@dataclass
class MinimalCombination:
    beta: Vector
    norm_sq: Fraction
    certificates: list[Certificate] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "beta": vector_to_str(self.beta),
            "norm_sq": rational_to_str(self.norm_sq),
            "certificates": [c.to_json() for c in self.certificates],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinimalCombination":
        return cls(
            beta=vector_from_str(data["beta"]),
            norm_sq=Fraction(data["norm_sq"]),
            certificates=[Certificate.from_json(c) for c in data["certificates"]],
        )


@dataclass(frozen=True)
class PointSet:
    """Ordered set of distinct rational points in R^dim."""

    dim: int
    points: tuple[Vector, ...]

    def __init__(self, dim: int, points: Sequence[Sequence]):
        pts = tuple(_as_vector(p) for p in points)
        if any(len(p) != dim for p in pts):
            raise ValueError("point dimension mismatch")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {"dim": self.dim, "points": [vector_to_str(p) for p in self.points]}

    @classmethod
    def from_json(cls, data: dict) -> "PointSet":
        return cls(int(data["dim"]), [vector_from_str(p) for p in data["points"]])

    @classmethod
    def load(cls, path) -> "PointSet":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def tau_candidate(S: Sequence[Sequence]) -> Optional[tuple[Vector, tuple[Fraction, ...]]]:
    """Interior least-norm candidate of S, or None.

    Returns (sigma(S), weights) when S is affinely independent and the
    least-norm point of its affine hull has strictly positive barycentric
    coordinates; boundary or dependent sets return None.
    """
    S = [_as_vector(x) for x in S]
    if len(S) == 1:
        return S[0], (Fraction(1),)
    if not affinely_independent(S):
        return None
    sigma = min_square(S)
    nu = barycentric(S, sigma)
    if any(v <= 0 for v in nu):
        return None
    return sigma, nu


def minimal_combinations(
    A: PointSet, k_max: Optional[int] = None
) -> list[MinimalCombination]:
    """All minimal combinations of A with their certifying subsets.

    Enumerates subsets of size 1..min(k_max, dim) in lexicographic index
    order, keeps the interior candidates, and groups certificates by
    exact beta equality.  Singletons always certify, so the size-1
    stratum is A itself.
    """
    if len(A) == 0:
        raise ValueError("non-empty point set required")
    if k_max is None:
        k_max = A.dim
    k_max = min(k_max, len(A))
    found: dict[Vector, MinimalCombination] = {}
    for k in range(1, k_max + 1):
        for subset in combinations(range(len(A)), k):
            cand = tau_candidate([A.points[i] for i in subset])
            if cand is None:
                continue
            beta, weights = cand
            mc = found.get(beta)
            if mc is None:
                mc = MinimalCombination(beta, _norm_sq(beta))
                found[beta] = mc
            mc.certificates.append(Certificate(k, subset, weights))
    out = sorted(found.values(), key=lambda mc: (mc.norm_sq, mc.beta))
    for mc in out:
        mc.certificates.sort(key=lambda c: (c.k, c.subset))
    return out


def tau_full(S: Sequence[Sequence]) -> Vector:
    """Exact nearest point from the origin to the convex hull of S.

    Works for arbitrary (possibly affinely dependent) S by taking the
    least-norm interior candidate over all affinely independent subsets.
    """
    S = [_as_vector(x) for x in S]
    if not S:
        raise ValueError("non-empty set required")
    n = len(S[0])
    best: Optional[Vector] = None
    best_norm: Optional[Fraction] = None
    for k in range(1, min(len(S), n + 1) + 1):
        for subset in combinations(S, k):
            cand = tau_candidate(subset)
            if cand is None:
                continue
            beta, _ = cand
            ns = _norm_sq(beta)
            if best_norm is None or ns < best_norm:
                best, best_norm = beta, ns
    assert best is not None  # singletons always certify
    return best


def nearest_point_oracle(
    S: Sequence[Sequence], tol: float = 1e-12, max_iter: int = 100_000
) -> np.ndarray:
    """Floating-point minimum-norm point in the convex hull of S.

    Frank-Wolfe with away steps on the simplex of convex weights; stops
    when the duality gap of ||X lambda||^2 drops below tol.  Independent
    of the exact path, used only for cross-validation.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    X = np.array([[float(Fraction(v)) for v in p] for p in S], dtype=float)
    m = X.shape[0]
    lam = np.full(m, 1.0 / m)
    G = X @ X.T  # gradient of ||X^T lam||^2 is 2 G lam
    # roundoff floor for the duality gap: below this the float iteration
    # cannot make reliable progress and the active face is refined directly
    floor = 64.0 * np.finfo(float).eps * max(1.0, float(np.abs(G).max()))
    for _ in range(max_iter):
        grad = 2.0 * G @ lam
        fw = int(np.argmin(grad))
        active = np.flatnonzero(lam > 0)
        away = active[int(np.argmax(grad[active]))]
        gap = float(lam @ grad - grad[fw])
        if gap <= max(tol, floor):
            return _refine_active_face(X, G, lam)
        d_fw = -lam.copy()
        d_fw[fw] += 1.0  # e_fw - lam
        d_aw = lam.copy()
        d_aw[away] -= 1.0  # lam - e_away
        # pick the steeper of the toward/away descent directions
        if grad @ d_fw <= grad @ d_aw:
            d, gamma_max = d_fw, 1.0
        else:
            d = d_aw
            gamma_max = lam[away] / (1.0 - lam[away]) if lam[away] < 1.0 else 1e12
        # exact line search: minimize ||X^T (lam + g d)||^2
        Gd = G @ d
        denom = float(d @ Gd)
        if denom <= 0:
            gamma = gamma_max
        else:
            gamma = min(max(-float(lam @ Gd) / denom, 0.0), gamma_max)
        if gamma == 0.0:
            return _refine_active_face(X, G, lam)
        lam = lam + gamma * d
        np.clip(lam, 0.0, None, out=lam)
        lam /= lam.sum()
    raise OracleFailedError(f"no convergence within {max_iter} iterations")


def _refine_active_face(X: np.ndarray, G: np.ndarray, lam: np.ndarray) -> np.ndarray:
    """Polish a near-optimal simplex point on its active face.

    Solves the equality-constrained least-norm problem on the support of
    lam (KKT system); the solution is kept only when it stays inside the
    simplex and does not increase the objective, otherwise lam stands.
    """
    active = np.flatnonzero(lam > 1e-9)
    k = active.size
    K = np.zeros((k + 1, k + 1))
    K[:k, :k] = 2.0 * G[np.ix_(active, active)]
    K[:k, k] = 1.0
    K[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    sol, *_ = np.linalg.lstsq(K, rhs, rcond=None)
    w = sol[:k]
    if np.max(np.abs(K @ sol - rhs)) > 1e-9 or np.min(w) < -1e-9:
        return lam @ X
    full = np.zeros_like(lam)
    full[active] = np.clip(w, 0.0, None)
    full /= full.sum()
    if full @ G @ full <= lam @ G @ lam + 1e-12:
        return full @ X
    return lam @ X
