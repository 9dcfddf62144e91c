"""Twist-parameter enumeration: scan d, filter by admissibility, attach class data.

The scan is deterministic: candidates stream in order of |d| (ascending by
default), every emitted row re-validates its admissibility report, and class
group work can fan out over processes with an order-preserving merge.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .checker import (
    Overall,
    admissibility_check,
    compute_s_sets,
    corollary_sandwich,
    hypothesis_check,
    selmer_lower_bound,
)
from .curves import CurveQ
from .dirichlet import DirichletPredicate
from .errors import InvalidParameterError, PreconditionError
from .intmath import squarefree_sieve
from .quadforms import class_number, ell_rank, field_discriminant
from .reduction import conductor


def enumerate_d(lo: int, hi: int, ell: int, N: int, ascending_abs: bool = True):
    """Candidates d in [lo, hi]: negative, squarefree, d = 3 (mod 4), coprime to ell N."""
    if lo > hi or hi >= 0:
        raise InvalidParameterError("need lo <= hi < 0")
    flags = squarefree_sieve(lo, hi)
    rng = range(hi, lo - 1, -1) if ascending_abs else range(lo, hi + 1)
    for d in rng:
        if d % 4 != 3:
            continue
        if not flags[d - lo]:
            continue
        if math.gcd(d, ell * N) != 1:
            continue
        yield d


class SearchMode(Enum):
    COROLLARY_E = "CorollaryE"
    LOWER_BOUND_ONLY = "LowerBoundOnly"


@dataclass(frozen=True)
class TwistCandidate:
    d: int
    D: int
    h: int | None
    ell_rank: int | None
    selmer_lower_bound: int | None
    verdict: str
    failed_clauses: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "D": self.D,
            "h": self.h,
            "ell_rank": self.ell_rank,
            "selmer_lb": self.selmer_lower_bound,
            "verdict": self.verdict,
            "failed_clauses": list(self.failed_clauses),
        }

    def to_csv_row(self) -> str:
        lb = "" if self.selmer_lower_bound is None else str(self.selmer_lower_bound)
        h = "" if self.h is None else str(self.h)
        r = "" if self.ell_rank is None else str(self.ell_rank)
        return f"{self.d},{self.D},{h},{r},{lb},{self.verdict},{';'.join(self.failed_clauses)}"


CSV_HEADER = "d,D,h,ell_rank,selmer_lb,verdict,failed_clauses"


def _class_data(args: tuple[int, int]) -> tuple[int, int, int]:
    D, ell = args
    h = class_number(D)
    r, _ = ell_rank(D, ell)
    return D, h, r


def search_twists(
    E: CurveQ,
    ell: int,
    lo: int,
    hi: int,
    mode: SearchMode = SearchMode.COROLLARY_E,
    predicate: DirichletPredicate | None = None,
    include_inadmissible: bool = False,
    jobs: int = 1,
) -> list[TwistCandidate]:
    """Scan twist parameters for one curve; rows sorted by |d| ascending."""
    hyp = hypothesis_check(E, ell)
    if not hyp.ok:
        raise PreconditionError(
            "curve-level hypotheses fail: "
            + ", ".join(c.clause_id for c in hyp.checks if c.verdict.value != "pass")
        )
    N, _ = conductor(E)
    ssets = compute_s_sets(E, ell, predicate)
    admissible: list[int] = []
    rows: list[TwistCandidate] = []
    for d in enumerate_d(lo, hi, ell, N):
        report = admissibility_check(E, ell, d, predicate)
        if report.overall is Overall.ADMISSIBLE:
            admissible.append(d)
        elif include_inadmissible:
            rows.append(
                TwistCandidate(
                    d,
                    field_discriminant(d),
                    None,
                    None,
                    None,
                    report.overall.value,
                    tuple(report.failed_clauses()),
                )
            )
    # class-group side: embarrassingly parallel over d
    work = [(field_discriminant(d), ell) for d in admissible]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            class_data = list(pool.map(_class_data, work, chunksize=16))
    else:
        class_data = [_class_data(w) for w in work]
    for d, (D, h, r) in zip(admissible, class_data):
        if mode is SearchMode.COROLLARY_E:
            result = corollary_sandwich(E, ell, d, predicate)
            verdict = result.verdict.value
        else:
            verdict = ""
        bound = selmer_lower_bound(E, ell, d, predicate)
        lb = bound.bound
        rank_over_s = bound.rank
        rows.append(TwistCandidate(d, D, h, rank_over_s, lb, verdict, ()))
    rows.sort(key=lambda row: -row.d)
    return rows
