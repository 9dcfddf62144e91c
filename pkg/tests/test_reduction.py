import pytest

from oracle_ec import nonsingular_reduction_count
from twistsel.curves import CurveQ, PointQ, curve_from_string, minimal_model, multiply_point, quadratic_twist
from twistsel.errors import PreconditionError, UnsupportedError
from twistsel.intmath import legendre, primes_up_to
from twistsel.reduction import (
    ReductionKind,
    SupersingularVerdict,
    ap,
    bad_primes,
    conductor,
    in_kernel_of_reduction,
    is_supersingular,
    local_reduction,
    tate_algorithm,
)

E11A3 = CurveQ(0, -1, 1, 0, 0)

# (ainvs string, conductor, {p: kodaira}); conductors are published values
KNOWN = [
    ("[0,-1,1,0,0]", 11, {11: "I1"}),
    ("[0,0,1,-1,0]", 37, {37: "I1"}),
    ("[0,0,0,1,0]", 64, {2: "II"}),
    ("[0,0,0,-1,0]", 32, {2: "III"}),
    ("[1,1,1,-10,-10]", 15, {3: "I4", 5: "I4"}),
    ("[1,-1,0,-2,-1]", 49, {7: "III"}),
    ("[0,0,1,0,-7]", 27, {3: "IV*"}),
    ("[0,-1,0,-4,4]", 24, {2: "I1*", 3: "I2"}),
    ("[0,1,0,4,4]", 20, {2: "IV*", 5: "I2"}),
    ("[0,1,0,-3,1]", 256, {2: "III"}),
    ("[0,0,0,0,1]", 36, {2: "IV", 3: "III"}),
    ("[0,0,0,0,16]", 27, {3: "II"}),
    ("[1,0,0,-1,0]", 65, {5: "I1", 13: "I1"}),
    ("[1,1,1,0,1]", 38, {2: "I5", 19: "I1"}),
]


@pytest.mark.parametrize("curve,N,kodairas", KNOWN)
def test_known_conductors(curve, N, kodairas):
    E = curve_from_string(curve)
    got, exps = conductor(E)
    assert got == N
    for p, symbol in kodairas.items():
        assert local_reduction(E, p).kodaira == symbol


def test_local_reduction_11a3():
    red = local_reduction(E11A3, 11)
    assert red.kind is ReductionKind.MULTIPLICATIVE_SPLIT
    assert red.kodaira == "I1"
    assert red.conductor_exponent == 1
    assert red.ord_delta_min == 1
    assert red.ord_j == -1
    assert local_reduction(E11A3, 7).kind is ReductionKind.GOOD


def test_split_flag_matches_point_count_oracle():
    # multiplicative reduction: #E_ns(F_p) = p - a_p with a_p = +1 split, -1 nonsplit
    cases = [(E11A3, 11), (curve_from_string("[1,1,1,-10,-10]"), 3),
             (curve_from_string("[1,1,1,-10,-10]"), 5),
             (quadratic_twist(E11A3, -5), 11),
             (curve_from_string("[1,1,1,0,1]"), 19)]
    for E, p in cases:
        red = local_reduction(E, p)
        assert red.conductor_exponent == 1
        E_min, _ = minimal_model(E)
        count = nonsingular_reduction_count(E_min.ainvs, p)
        a_p = p - count
        assert a_p in (1, -1)
        want_split = a_p == 1
        got_split = red.kind is ReductionKind.MULTIPLICATIVE_SPLIT
        assert got_split == want_split


def test_twist_flips_split_at_nonresidue():
    # (d/p) = -1 flips split <-> nonsplit at odd multiplicative p not dividing d
    curves = ["[0,-1,1,0,0]", "[0,0,1,-1,0]", "[1,1,1,-10,-10]", "[1,0,0,-1,0]", "[1,1,1,0,1]"]
    checked = 0
    for s in curves:
        E = curve_from_string(s)
        for p in bad_primes(E):
            if p == 2 or local_reduction(E, p).conductor_exponent != 1:
                continue
            for d in (-7, -11, -19):
                if d % p == 0 or legendre(d, p) != -1:
                    continue
                before = local_reduction(E, p).kind
                after = local_reduction(quadratic_twist(E, d), p).kind
                assert {before, after} == {
                    ReductionKind.MULTIPLICATIVE_SPLIT,
                    ReductionKind.MULTIPLICATIVE_NONSPLIT,
                }
                checked += 1
    assert checked >= 5


def test_conductor_exponent_bounds():
    for s, _N, _k in KNOWN:
        E = curve_from_string(s)
        E_min, _ = minimal_model(E)
        for p, f in conductor(E)[1].items():
            red = local_reduction(E, p)
            assert f <= red.ord_delta_min
            if red.kind in (ReductionKind.MULTIPLICATIVE_SPLIT, ReductionKind.MULTIPLICATIVE_NONSPLIT):
                assert f == 1
                assert red.ord_j == -red.ord_delta_min
            if red.kind is ReductionKind.ADDITIVE:
                assert f >= 2
                if p >= 5:
                    assert f == 2


def test_tate_on_nonminimal_model():
    # u = 6 scaling of 11a3: Tate at 11 must agree after scaling out nothing at 11,
    # and at 2, 3 the algorithm detects non-minimality
    E = CurveQ(0, 0, 0, -432, 8208)
    res11 = tate_algorithm(E, 11)
    assert res11.kodaira == "I1" and res11.conductor_exponent == 1
    res2 = tate_algorithm(E, 2)
    assert res2.minimality_scale == 2
    assert res2.kodaira == "I0" and res2.conductor_exponent == 0
    res3 = tate_algorithm(E, 3)
    assert res3.minimality_scale == 3


def test_ap_examples():
    assert ap(E11A3, 2) == -2  # 5 points over F_2
    assert ap(CurveQ(0, 0, 0, 0, 1), 5) == 0
    assert ap(CurveQ(0, 0, 0, 1, 0), 3) == 0
    assert ap(E11A3, 5) == 1


def test_ap_preconditions():
    with pytest.raises(PreconditionError):
        ap(E11A3, 11)
    with pytest.raises(UnsupportedError):
        ap(E11A3, 10**6 + 3)


def test_hasse_bound():
    for s, _N, _k in KNOWN[:6]:
        E = curve_from_string(s)
        for p in primes_up_to(60):
            if local_reduction(E, p).is_good:
                assert ap(E, p) ** 2 <= 4 * p


def test_torsion_injects():
    # ell | #E(F_p) at good p for a curve with a rational ell-torsion point
    for p in primes_up_to(97):
        if p in (5, 11):
            continue
        if local_reduction(E11A3, p).is_good:
            assert (p + 1 - ap(E11A3, p)) % 5 == 0


def test_supersingular_examples():
    assert is_supersingular(CurveQ(0, 0, 0, 0, 1), 5).verdict is SupersingularVerdict.YES
    assert is_supersingular(E11A3, 5).verdict is SupersingularVerdict.NO
    res = is_supersingular(E11A3, 11)
    assert res.verdict is SupersingularVerdict.NOT_APPLICABLE
    with pytest.raises(UnsupportedError):
        is_supersingular(E11A3, 3)


def test_supersingular_after_twist_resolution():
    # additive potentially good reduction resolved through a quadratic twist
    E = quadratic_twist(CurveQ(0, 0, 0, 0, 1), 5)  # additive at 5, ord_5(j) = 0
    red = local_reduction(E, 5)
    assert red.kind is ReductionKind.ADDITIVE and not red.ord_j_negative
    res = is_supersingular(E, 5)
    assert res.verdict is SupersingularVerdict.YES  # same geometric fiber as y^2 = x^3 + 1


def test_kernel_of_reduction():
    P = PointQ(0, 0)
    assert not in_kernel_of_reduction(E11A3, P, 5)
    assert not in_kernel_of_reduction(E11A3, PointQ(1, 0), 5)
    # multiply a generator into the kernel of reduction mod 5 on 37a1
    E37 = CurveQ(0, 0, 1, -1, 0)
    count5 = 5 + 1 - ap(E37, 5)
    Q = multiply_point(E37, count5, PointQ(0, 0))
    assert not Q.is_infinity()
    from twistsel.intmath import valuation

    assert valuation(Q.x.denominator, 5) > 0
    assert in_kernel_of_reduction(E37, Q, 5)
    with pytest.raises(PreconditionError):
        in_kernel_of_reduction(E11A3, P, 11)
    with pytest.raises(PreconditionError):
        in_kernel_of_reduction(E11A3, PointQ.infinity(), 5)
