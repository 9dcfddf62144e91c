"""Admissibility checker and certified Selmer divisibility verdicts.

Given a curve E/Q with a rational point of odd prime order ell and a twist
parameter d, this module computes the exceptional prime sets, checks every
admissibility clause (sign conditions, coprimality, quadratic symbols at the
bad primes sorted by reduction type), and emits the certified conclusions:
a lower bound ell^r | #Sel_ell(E^d, Q) through the tame ray class rank, and,
when the exceptional set above is empty, the two-sided class-group sandwich
with the nontriviality equivalence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .curves import CurveQ, PointQ
from .dirichlet import DirichletPredicate, minus_one_congruence_predicate
from .divpoly import rational_ell_torsion_point
from .errors import InvalidParameterError, PreconditionError, UnsupportedError
from .intmath import is_prime, is_squarefree, kronecker, valuation
from .quadforms import class_number, ell_rank, field_discriminant
from .rayclass import ray_class_ell_rank
from .reduction import (
    ReductionKind,
    SupersingularVerdict,
    bad_primes,
    conductor,
    in_kernel_of_reduction,
    is_supersingular,
    local_reduction,
)


class ArtinClass(Enum):
    SPLIT = "Split"
    INERT = "Inert"
    RAMIFIED = "Ramified"


def artin_symbol_quadratic(d: int, p: int) -> ArtinClass:
    """Behavior of p in Q(sqrt(d)): the quadratic Artin symbol.

    Ramified iff p divides the field discriminant; otherwise Split exactly
    when the Kronecker symbol of the discriminant at p is +1 (for p = 2 this
    is the d mod 8 rule).
    """
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    D = field_discriminant(d)
    if D % p == 0:
        return ArtinClass.RAMIFIED
    return ArtinClass.SPLIT if kronecker(D, p) == 1 else ArtinClass.INERT


@dataclass(frozen=True)
class SSets:
    """The exceptional bad-prime sets of the twist theorems.

    s_tilde: odd p | N with the ramification predicate and ell not dividing
    ord_p of the minimal discriminant; s: the subset with ord_p(j) < 0.
    """

    s_tilde: tuple[int, ...]
    s: tuple[int, ...]
    predicate_used: str


def compute_s_sets(E: CurveQ, ell: int, predicate: DirichletPredicate | None = None) -> SSets:
    if predicate is None:
        pred = minus_one_congruence_predicate(ell)
        desc = pred.description
    else:
        if predicate.ell != ell:
            raise InvalidParameterError("character order must equal ell")
        pred = predicate.is_nonzero_at
        desc = predicate.describe()
    s_tilde = []
    s = []
    for p in bad_primes(E):
        if p == 2:
            continue
        red = local_reduction(E, p)
        if not pred(p):
            continue
        if red.ord_delta_min % ell == 0:
            continue
        s_tilde.append(p)
        if red.ord_j_negative:
            s.append(p)
    return SSets(tuple(s_tilde), tuple(s), desc)


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Clause:
    clause_id: str
    cite: str
    verdict: Verdict
    detail: str


class Overall(Enum):
    ADMISSIBLE = "Admissible"
    INADMISSIBLE = "Inadmissible"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ConditionReport:
    curve: CurveQ
    ell: int
    d: int
    clauses: tuple[Clause, ...]
    overall: Overall

    def failed_clauses(self) -> list[str]:
        return [c.clause_id for c in self.clauses if c.verdict is Verdict.FAIL]

    def to_dict(self) -> dict:
        return {
            "curve": str(self.curve),
            "ell": self.ell,
            "d": self.d,
            "clauses": [
                {
                    "id": c.clause_id,
                    "cite": c.cite,
                    "pass": {"pass": True, "fail": False, "undetermined": None}[c.verdict.value],
                    "detail": c.detail,
                }
                for c in self.clauses
            ],
            "overall": self.overall.value,
        }


@dataclass(frozen=True)
class HypothesisReport:
    curve: CurveQ
    ell: int
    torsion_point: PointQ | None
    checks: tuple[Clause, ...]
    ok: bool
    undetermined: bool = False

    def to_dict(self) -> dict:
        return {
            "curve": str(self.curve),
            "ell": self.ell,
            "torsion_point": str(self.torsion_point) if self.torsion_point else None,
            "checks": [
                {
                    "id": c.clause_id,
                    "cite": c.cite,
                    "pass": {"pass": True, "fail": False, "undetermined": None}[c.verdict.value],
                    "detail": c.detail,
                }
                for c in self.checks
            ],
            "ok": self.ok,
        }


def _vp_frac(x: Fraction, p: int) -> int:
    if x == 0:
        return 10**9
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def hypothesis_check(E: CurveQ, ell: int) -> HypothesisReport:
    """Curve-level hypotheses: a rational point of order ell that avoids the
    kernel of reduction at ell, and no supersingular reduction in the
    potentially good branch."""
    if ell < 5 or not is_prime(ell):
        raise UnsupportedError("the twist theorems need an odd prime ell >= 5")
    checks: list[Clause] = []
    P = rational_ell_torsion_point(E, ell)
    if P is None:
        checks.append(
            Clause(
                "hypothesis.torsion",
                f"rational point of odd prime order {ell}",
                Verdict.FAIL,
                f"no rational root of the {ell}-division polynomial lifts to a rational point",
            )
        )
        return HypothesisReport(E, ell, None, tuple(checks), False)
    checks.append(
        Clause(
            "hypothesis.torsion",
            f"rational point of odd prime order {ell}",
            Verdict.PASS,
            f"P = {P} has exact order {ell}",
        )
    )
    red = local_reduction(E, ell)
    if red.is_good:
        in_ker = in_kernel_of_reduction(E, P, ell)
        checks.append(
            Clause(
                "hypothesis.kernel",
                f"P not in the kernel of reduction mod {ell}",
                Verdict.FAIL if in_ker else Verdict.PASS,
                f"good reduction at {ell}; ord_{ell}(x(P)) on the minimal model decides",
            )
        )
    else:
        # bad reduction: the formal-group test on the minimal model still
        # detects the kernel of reduction
        from .curves import minimal_model

        E_min, (u, r, s, t) = minimal_model(E)
        P_min = E.transform_point(P, u, r, s, t)
        in_ker = _vp_frac(P_min.x, ell) < 0
        checks.append(
            Clause(
                "hypothesis.kernel",
                f"P not in the kernel of reduction mod {ell}",
                Verdict.FAIL if in_ker else Verdict.PASS,
                f"bad reduction at {ell} ({red.kodaira}); x-valuation test on the minimal model",
            )
        )
    undetermined = False
    if not red.ord_j_negative:
        ss = is_supersingular(E, ell)
        if ss.verdict is SupersingularVerdict.NOT_APPLICABLE:
            checks.append(
                Clause(
                    "hypothesis.ordinary",
                    f"E not supersingular mod {ell} when ord_{ell}(j) >= 0",
                    Verdict.UNDETERMINED,
                    ss.reason,
                )
            )
            undetermined = True
        else:
            checks.append(
                Clause(
                    "hypothesis.ordinary",
                    f"E not supersingular mod {ell} when ord_{ell}(j) >= 0",
                    Verdict.FAIL if ss.verdict is SupersingularVerdict.YES else Verdict.PASS,
                    ss.reason,
                )
            )
    else:
        checks.append(
            Clause(
                "hypothesis.ordinary",
                f"E not supersingular mod {ell} when ord_{ell}(j) >= 0",
                Verdict.PASS,
                f"vacuous: ord_{ell}(j) < 0",
            )
        )
    ok = all(c.verdict is Verdict.PASS for c in checks)
    return HypothesisReport(E, ell, P, tuple(checks), ok, undetermined)


def admissibility_check(
    E: CurveQ, ell: int, d: int, predicate: DirichletPredicate | None = None
) -> ConditionReport:
    """Clause-by-clause admissibility of the twist parameter d for (E, ell)."""
    if ell < 5 or not is_prime(ell):
        raise UnsupportedError("the twist theorems need an odd prime ell >= 5")
    if not isinstance(d, int) or d == 0:
        raise InvalidParameterError("twist parameter must be a nonzero integer")
    N, _ = conductor(E)
    ssets = compute_s_sets(E, ell, predicate)
    clauses: list[Clause] = []

    def add(cid: str, cite: str, ok: bool | None, detail: str) -> None:
        v = Verdict.UNDETERMINED if ok is None else (Verdict.PASS if ok else Verdict.FAIL)
        clauses.append(Clause(cid, cite, v, detail))

    add("domain.negative", "d < 0", d < 0, f"d = {d}")
    add("domain.squarefree", "d squarefree", is_squarefree(d), f"d = {d}")
    add("domain.congruence", "d = 3 (mod 4)", d % 4 == 3, f"d mod 4 = {d % 4}")
    g = math.gcd(d, ell * N)
    add("domain.coprime", "gcd(d, ell N) = 1", g == 1, f"gcd({d}, {ell}*{N}) = {g}")
    viable = all(c.verdict is Verdict.PASS for c in clauses)

    if N % 2 == 0:
        sym2 = artin_symbol_quadratic(d, 2) if viable else None
        add(
            "dyadic.ramified",
            "primes above 2 in the conductor ramify in Q(sqrt(d))",
            None if sym2 is None else sym2 is ArtinClass.RAMIFIED,
            "automatic for d = 3 (mod 4): the field discriminant is 4d",
        )

    red_ell = local_reduction(E, ell)
    if red_ell.ord_j_negative:
        sym = artin_symbol_quadratic(d, ell) if viable else None
        add(
            "ell.inert",
            f"ord_{ell}(j) < 0 forces d inert at {ell}",
            None if sym is None else sym is ArtinClass.INERT,
            f"symbol at {ell}: {sym.value if sym else 'skipped'}",
        )
    exempt = set(ssets.s)
    for p in bad_primes(E):
        if p == 2 or p == ell:
            continue
        if p in exempt:
            clauses.append(
                Clause(
                    f"symbol.{p}",
                    f"prime {p} lies in the exceptional set; no symbol condition",
                    Verdict.PASS,
                    "exempt: ramification is permitted here",
                )
            )
            continue
        red = local_reduction(E, p)
        if not red.ord_j_negative:
            want, why = ArtinClass.INERT, f"ord_{p}(j) >= 0"
        elif red.kind is ReductionKind.MULTIPLICATIVE_SPLIT:
            want, why = ArtinClass.INERT, f"split multiplicative at {p}"
        else:
            want, why = ArtinClass.SPLIT, f"ord_{p}(j) < 0, not split multiplicative at {p}"
        sym = artin_symbol_quadratic(d, p) if viable else None
        add(
            f"symbol.{p}",
            f"quadratic symbol at {p} must be {want.value}",
            None if sym is None else sym is want,
            f"{why}; symbol: {sym.value if sym else 'skipped'}",
        )
    if any(c.verdict is Verdict.FAIL for c in clauses):
        overall = Overall.INADMISSIBLE
    elif any(c.verdict is Verdict.UNDETERMINED for c in clauses):
        overall = Overall.UNDETERMINED
    else:
        overall = Overall.ADMISSIBLE
    return ConditionReport(E, ell, d, tuple(clauses), overall)


@dataclass(frozen=True)
class SelmerBound:
    ell: int
    d: int
    rank: int | None
    bound: int | None
    s_used: tuple[int, ...]
    undetermined_reason: str | None = None

    @property
    def is_undetermined(self) -> bool:
        return self.rank is None


def selmer_lower_bound(
    E: CurveQ, ell: int, d: int, predicate: DirichletPredicate | None = None
) -> SelmerBound:
    """Certified divisor ell^r of #Sel_ell(E^d, Q): the tame ray class rank at S_E."""
    report = admissibility_check(E, ell, d, predicate)
    if report.overall is not Overall.ADMISSIBLE:
        raise PreconditionError(
            f"d = {d} is not admissible for this curve and ell = {ell}: "
            + ", ".join(report.failed_clauses() or ["undetermined clauses"])
        )
    ssets = compute_s_sets(E, ell, predicate)
    try:
        r = ray_class_ell_rank(d, ssets.s, ell)
    except (PreconditionError, UnsupportedError) as exc:
        return SelmerBound(ell, d, None, None, ssets.s, str(exc))
    return SelmerBound(ell, d, r, ell**r, ssets.s)


class SelmerVerdict(Enum):
    NONTRIVIAL = "SelmerNontrivial"
    TRIVIAL = "SelmerTrivial"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class SandwichResult:
    verdict: SelmerVerdict
    ell: int
    d: int
    h: int | None
    ell_rank: int | None
    lower: int | None
    upper: int | None
    reason: str


def corollary_sandwich(
    E: CurveQ, ell: int, d: int, predicate: DirichletPredicate | None = None
) -> SandwichResult:
    """Nontriviality equivalence and the two-sided bound, valid when the
    exceptional set is empty: ell^r | #Sel_ell(E^d, Q) | ell^(2r) with r the
    ell-rank of cl(Q(sqrt(d)))."""
    report = admissibility_check(E, ell, d, predicate)
    if report.overall is not Overall.ADMISSIBLE:
        raise PreconditionError(f"d = {d} is not admissible: {report.failed_clauses()}")
    ssets = compute_s_sets(E, ell, predicate)
    if ssets.s_tilde:
        return SandwichResult(
            SelmerVerdict.NOT_APPLICABLE,
            ell,
            d,
            None,
            None,
            None,
            None,
            f"exceptional set is nonempty: {list(ssets.s_tilde)}",
        )
    D = field_discriminant(d)
    h = class_number(D)
    r, _order = ell_rank(D, ell)
    verdict = SelmerVerdict.NONTRIVIAL if r > 0 else SelmerVerdict.TRIVIAL
    return SandwichResult(
        verdict,
        ell,
        d,
        h,
        r,
        ell**r,
        ell ** (2 * r),
        f"h({D}) = {h}, {ell}-rank {r}",
    )
