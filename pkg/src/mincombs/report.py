"""Full analysis pipeline and deterministic report rendering.

Ties the pieces together: weight table -> minimal combinations ->
candidate forms per certificate -> a report reproducing the
beta | S | f | M(f) table layout, serializable to JSON, plain text
or LaTeX.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from math import comb
from typing import Optional

from . import __version__
from .exact import rational_to_str, vector_to_str, vector_from_str
from .mincomb import (
    Certificate,
    MinimalCombination,
    PointSet,
    minimal_combinations,
    nearest_point_oracle,
)
from .moment import CriticalCandidate, build_f_beta
from .weights import WeightTable, in_weyl_chamber, monomial_string


class TooLargeError(ValueError):
    """Raised when the monomial count exceeds the configured limit."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} monomials exceeds the limit of {limit}")
        self.count = count
        self.limit = limit


@dataclass
class BetaRecord:
    """One minimal combination with its certificates and candidate forms."""

    beta: tuple[Fraction, ...]
    norm_sq: Fraction
    interior: bool
    k_strata: tuple[int, ...]
    certificates: list[Certificate]
    candidates: list[CriticalCandidate]

    def to_json(self) -> dict:
        return {
            "beta": vector_to_str(self.beta),
            "norm_sq": rational_to_str(self.norm_sq),
            "interior": self.interior,
            "k_strata": list(self.k_strata),
            "certificates": [c.to_json() for c in self.certificates],
            "candidates": [c.to_json() for c in self.candidates],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BetaRecord":
        return cls(
            beta=vector_from_str(data["beta"]),
            norm_sq=Fraction(data["norm_sq"]),
            interior=bool(data["interior"]),
            k_strata=tuple(data["k_strata"]),
            certificates=[Certificate.from_json(c) for c in data["certificates"]],
            candidates=[CriticalCandidate.from_json(c) for c in data["candidates"]],
        )


@dataclass
class AnalysisReport:
    n: int
    d: int
    weyl_only: bool
    records: list[BetaRecord]
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "weyl_only": self.weyl_only,
            "records": [r.to_json() for r in self.records],
            "metadata": self.metadata,
        }

    @classmethod
    def from_json(cls, data: dict) -> "AnalysisReport":
        return cls(
            n=int(data["n"]),
            d=int(data["d"]),
            weyl_only=bool(data["weyl_only"]),
            records=[BetaRecord.from_json(r) for r in data["records"]],
            metadata=dict(data["metadata"]),
        )


def _metadata(digest_payload: bytes, reproducible: bool) -> dict:
    meta = {
        "version": __version__,
        "input_digest": hashlib.sha256(digest_payload).hexdigest(),
    }
    if not reproducible:
        meta["timestamp"] = datetime.now(timezone.utc).isoformat()
    return meta


def analyze(
    n: int,
    d: int,
    weyl_only: bool = False,
    k_max: Optional[int] = None,
    interior_only: bool = False,
    max_monomials: int = 35,
    reproducible: bool = False,
) -> AnalysisReport:
    """Run the full pipeline for degree-d forms in n variables."""
    if n < 2 or d < 1:
        raise ValueError("n >= 2 and d >= 1 required")
    count = comb(n + d - 1, d)
    if count > max_monomials:
        raise TooLargeError(count, max_monomials)
    table = WeightTable.build(n, d)
    A = PointSet(n, table.weights)
    threshold = -Fraction(d, n)  # interior of the weight simplex: all beta_i above it
    records = []
    for mc in minimal_combinations(A, k_max=k_max):
        if weyl_only and not in_weyl_chamber(mc.beta):
            continue
        interior = all(b > threshold for b in mc.beta)
        if interior_only and not interior:
            continue
        candidates = [
            build_f_beta(
                mc.beta,
                [table.alphas[i] for i in cert.subset],
                cert.weights,
                table,
            )
            for cert in mc.certificates
        ]
        records.append(
            BetaRecord(
                beta=mc.beta,
                norm_sq=mc.norm_sq,
                interior=interior,
                k_strata=tuple(sorted({c.k for c in mc.certificates})),
                certificates=list(mc.certificates),
                candidates=candidates,
            )
        )
    params = json.dumps(
        {"n": n, "d": d, "weyl_only": weyl_only, "k_max": k_max, "interior_only": interior_only},
        sort_keys=True,
    ).encode()
    return AnalysisReport(
        n=n,
        d=d,
        weyl_only=weyl_only,
        records=records,
        metadata=_metadata(params, reproducible),
    )


def _beta_str(beta) -> str:
    return "(" + ", ".join(vector_to_str(beta)) + ")"


def _support_str(cand: CriticalCandidate) -> str:
    return "{" + ", ".join(monomial_string(a) for a in cand.support) + "}"


def render(report: AnalysisReport, fmt: str = "json") -> str:
    """Render a report deterministically as json, table or latex."""
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2) + "\n"
    rows = []
    for rec in report.records:
        value = None
        for cand in rec.candidates:
            value = str(cand.value) if cand.value.terms else "0"
            mark = "" if cand.verified else " [not critical]"
            rows.append(
                (
                    _beta_str(rec.beta),
                    _support_str(cand),
                    cand.display() + mark,
                    value,
                )
            )
        if not rec.candidates:
            rows.append((_beta_str(rec.beta), "-", "-", "-"))
    header = ("beta", "S", "f", "M(f)")
    if fmt == "table":
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(4)]
        lines = [
            " | ".join(h.ljust(w) for h, w in zip(header, widths)),
            "-+-".join("-" * w for w in widths),
        ]
        lines += [" | ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "latex":
        lines = [
            r"\begin{tabular}{llll}",
            r"\hline",
            r"$\beta$ & $S$ & $f$ & $M(f)$ \\",
            r"\hline",
        ]
        lines += [" & ".join(row) + r" \\" for row in rows]
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_mincomb(
    results: list[MinimalCombination],
    fmt: str = "json",
    oracle_deltas: Optional[list[float]] = None,
) -> str:
    """Render a minimal-combination list; json is the canonical format."""
    if fmt == "json":
        payload = []
        for i, mc in enumerate(results):
            rec = mc.to_json()
            if oracle_deltas is not None:
                rec["oracle_delta"] = oracle_deltas[i]
            payload.append(rec)
        return json.dumps(payload, indent=2) + "\n"
    header = ("beta", "norm_sq", "certificates")
    rows = [
        (
            _beta_str(mc.beta),
            rational_to_str(mc.norm_sq),
            "; ".join(f"k={c.k} {list(c.subset)}" for c in mc.certificates),
        )
        for mc in results
    ]
    if fmt == "table":
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(3)]
        lines = [
            " | ".join(h.ljust(w) for h, w in zip(header, widths)),
            "-+-".join("-" * w for w in widths),
        ]
        lines += [" | ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "latex":
        lines = [r"\begin{tabular}{lll}", r"\hline", r"$\beta$ & $\|\beta\|^2$ & $S$ \\", r"\hline"]
        lines += [" & ".join(row) + r" \\" for row in rows]
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def run_mincomb(points: PointSet, oracle: bool = False, tol: float = 1e-9):
    """Minimal combinations of a point set, with optional float cross-check.

    Returns (results, oracle_deltas); deltas are per-beta maximum
    componentwise differences between the exact beta and the oracle run
    on the first certifying subset.
    """
    results = minimal_combinations(points)
    deltas = None
    if oracle:
        deltas = []
        for mc in results:
            cert = mc.certificates[0]
            approx = nearest_point_oracle(
                [points.points[i] for i in cert.subset], tol=tol
            )
            exact = [float(b) for b in mc.beta]
            deltas.append(max(abs(a - e) for a, e in zip(approx, exact)))
    return results, deltas
