"""Built-in golden verification suite behind the verify-paper-examples command.

Each case reproduces one of the pinned reference computations: the cubic
quartic shape of the 3-division polynomial, the conductor-11 curve's local
data and 5-torsion, the degree-84 division polynomial pipeline on the large
13-torsion example (cubic factor, splitting of 2, root-of-unity exclusion,
ordinary reduction), and an end-to-end admissibility scan with the certified
class-group verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .checker import (
    Overall,
    SelmerVerdict,
    admissibility_check,
    compute_s_sets,
    corollary_sandwich,
    hypothesis_check,
)
from .curves import CurveQ, PointQ, point_order
from .divpoly import division_polynomial, psi_factor_shape, rational_ell_torsion_point
from .numfield import NO, dedekind_split, number_field, zeta_in_field
from .reduction import (
    ReductionKind,
    SupersingularVerdict,
    conductor,
    in_kernel_of_reduction,
    is_supersingular,
    local_reduction,
)

CURVE_11A3 = CurveQ(0, -1, 1, 0, 0)
CURVE_13TORS = CurveQ(0, 0, 0, 13674069, 324405221670)


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: str


def _case_psi3_shape() -> CaseResult:
    a, b = 2, 3
    psi = division_polynomial(CurveQ(0, 0, 0, a, b), 3)
    expect = tuple(Fraction(c) for c in (-a * a, 12 * b, 6 * a, 0, 3))
    ok = psi.coeffs == expect
    return CaseResult(
        "psi3-quartic-shape", ok, "3x^4 + 6ax^2 + 12bx - a^2 on a short model"
    )


def _case_conductor11() -> CaseResult:
    E = CURVE_11A3
    checks = []
    checks.append(E.disc == -11)
    checks.append(E.j == Fraction(-4096, 11))
    checks.append(conductor(E)[0] == 11)
    red = local_reduction(E, 11)
    checks.append(red.kodaira == "I1")
    checks.append(red.kind is ReductionKind.MULTIPLICATIVE_SPLIT)
    P = rational_ell_torsion_point(E, 5)
    checks.append(P == PointQ(0, 0) and point_order(E, P, 12) == 5)
    checks.append(is_supersingular(E, 5).verdict is SupersingularVerdict.NO)
    checks.append(not in_kernel_of_reduction(E, P, 5))
    return CaseResult(
        "conductor-11-curve",
        all(checks),
        "disc -11, j -4096/11, N = 11, split I1, 5-torsion (0,0) ordinary at 5",
    )


def _case_degree84_pipeline() -> CaseResult:
    E = CURVE_13TORS
    shape = psi_factor_shape(E, 13, 6)
    cubics = [list(g) for deg, g in shape.factors if deg == 3]
    if not cubics:
        return CaseResult("degree84-pipeline", False, "no cubic factor found in psi_13")
    K = number_field(cubics[0])
    split2 = dedekind_split(K, 2)
    ok_split = split2 != "Undetermined" and split2.shape == ((1, 1), (1, 1), (1, 1))
    ok_zeta = zeta_in_field(K, 13) == NO
    ss = is_supersingular(E, 13)
    ok_ss = ss.verdict is SupersingularVerdict.NO
    ok = ok_split and ok_zeta and ok_ss
    return CaseResult(
        "degree84-pipeline",
        ok,
        f"cubic factor found; 2 splits completely: {ok_split}; "
        f"13th roots of unity excluded: {ok_zeta}; ordinary at 13: {ok_ss}",
    )


def _case_scan() -> CaseResult:
    E = CURVE_11A3
    checks = []
    checks.append(hypothesis_check(E, 5).ok)
    checks.append(compute_s_sets(E, 5).s_tilde == ())
    r37 = admissibility_check(E, 5, -37)
    checks.append(r37.overall is Overall.ADMISSIBLE)
    s37 = corollary_sandwich(E, 5, -37)
    checks.append(s37.verdict is SelmerVerdict.TRIVIAL and (s37.lower, s37.upper) == (1, 1))
    r13 = admissibility_check(E, 5, -13)
    checks.append(r13.overall is Overall.INADMISSIBLE and "symbol.11" in r13.failed_clauses())
    s181 = corollary_sandwich(E, 5, -181)
    checks.append(s181.verdict is SelmerVerdict.NONTRIVIAL and (s181.lower, s181.upper) == (5, 25))
    return CaseResult(
        "twist-scan",
        all(checks),
        "empty exceptional set; -37 trivial [1,1]; -13 rejected at 11; -181 nontrivial [5,25]",
    )


ALL_CASES = [
    _case_psi3_shape,
    _case_conductor11,
    _case_degree84_pipeline,
    _case_scan,
]


def run_golden_suite() -> list[CaseResult]:
    return [case() for case in ALL_CASES]
