import random
from fractions import Fraction

import pytest

from oracle_ec import torsion_x_coords
from twistsel.curves import CurveQ, PointQ, curve_from_string, point_order, quadratic_twist
from twistsel.divpoly import (
    division_poly_primitive,
    division_polynomial,
    has_rational_isogeny,
    is_kernel_polynomial,
    psi_factor_shape,
    rational_ell_torsion_point,
    torsion_field_polynomial,
)
from twistsel.errors import InvalidParameterError, UnsupportedError
from twistsel.intmath import primes_up_to
from twistsel.polyzq import zx_eval, zx_mul, zx_primitive
from twistsel.reduction import local_reduction

E11A3 = CurveQ(0, -1, 1, 0, 0)
E_J0 = CurveQ(0, 0, 0, 0, 1)

SAMPLE_CURVES = [
    E11A3,
    E_J0,
    CurveQ(0, 0, 0, 1, 0),
    CurveQ(0, 0, 1, -1, 0),
    CurveQ(1, 1, 1, -10, -10),
]


def test_psi3_shape_short_model():
    for a, b in ((2, 3), (-1, 3), (0, 1), (1, 0), (-7, -11)):
        E = CurveQ(0, 0, 0, a, b)
        psi = division_polynomial(E, 3)
        assert psi.coeffs == tuple(Fraction(c) for c in (-a * a, 12 * b, 6 * a, 0, 3))


def test_psi_small_indices():
    psi1 = division_polynomial(E11A3, 1)
    assert psi1.coeffs == (Fraction(1),) and not psi1.even_cofactor
    psi2 = division_polynomial(E11A3, 2)
    assert psi2.coeffs == (Fraction(1),) and psi2.even_cofactor
    with pytest.raises(UnsupportedError):
        division_polynomial(E11A3, 0)
    with pytest.raises(UnsupportedError):
        division_polynomial(E11A3, 41)


def test_psi_degree_and_leading():
    rng = random.Random(7)
    curves = list(SAMPLE_CURVES)
    while len(curves) < 20:
        a, b = rng.randint(-8, 8), rng.randint(-8, 8)
        try:
            curves.append(CurveQ(0, rng.randint(-2, 2), 0, a, b))
        except Exception:
            continue
    for E in curves:
        for ell in (3, 5, 7, 11, 13):
            psi = division_polynomial(E, ell)
            assert psi.degree == (ell * ell - 1) // 2
            assert psi.leading == ell


def test_psi_rational_model_matches_scaled():
    # psi of a rational model has the roots of the integral model scaled back
    E = CurveQ(0, 0, 0, Fraction(1, 16), Fraction(-1, 64))
    psi = division_polynomial(E, 3)
    assert psi.leading == 3
    # roots of psi correspond to 3-torsion x-coordinates: verify via the curve
    prim = division_poly_primitive(E, 3)
    from twistsel.polyzq import zx_factor_bounded

    linear, _ = zx_factor_bounded(prim, 1)
    for g in linear:
        x0 = Fraction(-g[0], g[1])
        s = E.a1 * x0 + E.a3
        disc = s * s + 4 * E.rhs(x0)
        from twistsel.curves import rational_sqrt

        root = rational_sqrt(disc)
        if root is not None:
            P = PointQ(x0, (-s + root) / 2)
            assert point_order(E, P, 3) == 3


def test_finite_field_torsion_oracle():
    # roots of psi_ell mod p contain all x-coordinates of ell-torsion of E(F_p)
    for E in SAMPLE_CURVES:
        for ell in (3, 5, 7):
            prim = division_poly_primitive(E, ell)
            for p in primes_up_to(50):
                if not local_reduction(E, p).is_good or p == ell:
                    continue
                E_min = E  # sample curves are already minimal
                xs = torsion_x_coords(tuple(int(a) for a in E_min.ainvs), p, ell)
                for x in xs:
                    assert zx_eval(prim, x) % p == 0


def test_rational_torsion_examples():
    assert rational_ell_torsion_point(E11A3, 5) == PointQ(0, 0)
    assert rational_ell_torsion_point(E_J0, 5) is None
    assert rational_ell_torsion_point(E_J0, 3) == PointQ(0, 1)
    P = rational_ell_torsion_point(CurveQ(1, 1, 1, 0, 1), 5)
    assert P is not None and point_order(CurveQ(1, 1, 1, 0, 1), P, 5) == 5


def test_rational_torsion_excluded_by_counting():
    # cross-check: no 5-torsion on y^2 = x^3 + 1 because 5 divides neither
    # #E(F_7) nor #E(F_13)... actually gcd argument: 5 must divide both if present
    from twistsel.reduction import ap

    n7 = 7 + 1 - ap(E_J0, 7)
    n13 = 13 + 1 - ap(E_J0, 13)
    assert n7 % 5 != 0 or n13 % 5 != 0


def test_factor_shape_11a3():
    shape = psi_factor_shape(E11A3, 5, 2)
    assert [d for d, _ in shape.factors] == [1, 1]
    polys = [list(g) for _, g in shape.factors]
    assert [-1, 1] in polys and [0, 1] in polys
    assert shape.residual_degree == 10
    # product of factors times residual = primitive psi
    rebuilt = list(shape.residual)
    for _, g in shape.factors:
        rebuilt = zx_mul(rebuilt, list(g))
    assert rebuilt == division_poly_primitive(E11A3, 5)


def test_factor_shape_j0():
    shape = psi_factor_shape(E_J0, 3, 4)
    assert sorted(d for d, _ in shape.factors) == [1, 3]
    assert shape.residual_degree == 0
    with pytest.raises(UnsupportedError):
        psi_factor_shape(E11A3, 17, 6)
    with pytest.raises(UnsupportedError):
        psi_factor_shape(E11A3, 5, 13)


def test_kernel_polynomial_and_isogeny():
    found, witness = has_rational_isogeny(E11A3, 5)
    assert found
    _, prim = zx_primitive(witness)
    assert prim == [0, -1, 1]  # x(x - 1)
    assert is_kernel_polynomial(E11A3, [0, -1, 1])
    # a degree-2 divisor of psi_5 that is NOT a kernel polynomial: x * (residual linear)?
    # use x^2 - x + 1 (coprime to psi_5): not even a divisor, but the closure test still runs
    assert not is_kernel_polynomial(E11A3, [1, -1, 1])


def test_isogeny_absent():
    found, witness = has_rational_isogeny(E11A3, 7)
    assert not found and witness is None
    found_j0, _ = has_rational_isogeny(E_J0, 5)
    assert not found_j0  # regression baseline


@pytest.mark.parametrize("curve", ["[0,-1,1,0,0]", "[0,0,1,-1,0]", "[0,0,0,0,1]",
                                   "[1,1,1,-10,-10]", "[1,1,1,0,1]"])
@pytest.mark.parametrize("d", [-7, -11])
def test_isogeny_invariant_under_twist(curve, d):
    E = curve_from_string(curve)
    for ell in (5, 7):
        before, _ = has_rational_isogeny(E, ell)
        after, _ = has_rational_isogeny(quadratic_twist(E, d), ell)
        assert before == after


def test_torsion_field_polynomial_cases():
    # rational 5-torsion: the tower over g = x degenerates to degree 1
    K = torsion_field_polynomial(E11A3, 5, [0, 1])
    assert K.degree == 1
    # an irreducible quadratic factor of psi_5 for 11a3 gives a nontrivial tower
    shape = psi_factor_shape(E11A3, 5, 3)
    with pytest.raises(InvalidParameterError):
        torsion_field_polynomial(E11A3, 5, [0, -1, 1])  # reducible
    with pytest.raises(InvalidParameterError):
        torsion_field_polynomial(E11A3, 5, [1, 1, 1])  # irreducible but not a divisor
