"""Division polynomials, rational torsion, factor shapes, kernel polynomials, towers.

The n-th division polynomial is computed from the b-invariants of a scaled
integral model and rescaled back, so its roots are x-coordinates of n-torsion
in the input model's own coordinates. For odd n it is a polynomial in x of
degree (n^2 - 1)/2 with leading coefficient n; for even n the returned
x-polynomial carries the cofactor 2y + a1 x + a3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .curves import CurveQ, PointQ, point_order, rational_sqrt, short_model_data
from .errors import InvalidParameterError, UnsupportedError
from .intmath import factorint, is_prime
from .numfield import NumberFieldDef, adjoin_sqrt
from .polyzq import (
    ZX,
    zx_deg,
    zx_div_exact,
    zx_factor_bounded,
    zx_is_irreducible,
    zx_mul,
    zx_primitive,
    zx_sub,
    zx_trim,
)

MAX_DIVPOLY_INDEX = 40


def _tuple_mul(f: tuple, g: tuple) -> tuple:
    return tuple(zx_mul(list(f), list(g)))


def _tuple_sub(f: tuple, g: tuple) -> tuple:
    return tuple(zx_sub(list(f), list(g)))


@lru_cache(maxsize=None)
def _t_poly(b: tuple[int, int, int, int], n: int) -> tuple[int, ...]:
    """x-part of the n-th division polynomial on a model with integral b-invariants."""
    b2, b4, b6, b8 = b
    if n == 0:
        return ()
    if n in (1, 2):
        return (1,)
    if n == 3:
        return (b8, 3 * b6, 3 * b4, b2, 3)
    if n == 4:
        return (
            b4 * b8 - b6 * b6,
            b2 * b8 - b4 * b6,
            10 * b8,
            10 * b6,
            5 * b4,
            b2,
            2,
        )
    F = (b6, 2 * b4, b2, 4)  # (2y + a1 x + a3)^2 as a polynomial in x
    m = n // 2
    if n % 2 == 1:
        F2 = _tuple_mul(F, F)
        a = _tuple_mul(_t_poly(b, m + 2), _tuple_mul(_t_poly(b, m), _tuple_mul(_t_poly(b, m), _t_poly(b, m))))
        c = _tuple_mul(_t_poly(b, m - 1), _tuple_mul(_t_poly(b, m + 1), _tuple_mul(_t_poly(b, m + 1), _t_poly(b, m + 1))))
        if m % 2 == 0:
            return _tuple_sub(_tuple_mul(F2, a), c)
        return _tuple_sub(a, _tuple_mul(F2, c))
    inner = _tuple_sub(
        _tuple_mul(_t_poly(b, m + 2), _tuple_mul(_t_poly(b, m - 1), _t_poly(b, m - 1))),
        _tuple_mul(_t_poly(b, m - 2), _tuple_mul(_t_poly(b, m + 1), _t_poly(b, m + 1))),
    )
    return _tuple_mul(_t_poly(b, m), inner)


def _integral_b_scale(E: CurveQ) -> int:
    """Smallest m > 0 with m^2 b2, m^4 b4, m^6 b6, m^8 b8 all integral."""
    scale: dict[int, int] = {}
    for w, b in ((2, E.b2), (4, E.b4), (6, E.b6), (8, E.b8)):
        den = b.denominator
        if den > 1:
            for q, e in factorint(den).items():
                need = -(-e // w)
                scale[q] = max(scale.get(q, 0), need)
    m = 1
    for q, e in scale.items():
        m *= q**e
    return m


@dataclass(frozen=True)
class DivisionPoly:
    """psi_n of a curve: x-polynomial (lowest degree first) plus an even-index flag."""

    n: int
    coeffs: tuple[Fraction, ...]
    even_cofactor: bool  # True: the full psi_n is (2y + a1 x + a3) * coeffs(x)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]


def division_polynomial(E: CurveQ, n: int) -> DivisionPoly:
    """The n-th division polynomial of E, 1 <= n <= 40, in E's own x-coordinate."""
    if not 1 <= n <= MAX_DIVPOLY_INDEX:
        raise UnsupportedError(f"division polynomial index must lie in [1, {MAX_DIVPOLY_INDEX}]")
    m = _integral_b_scale(E)
    b = (int(E.b2 * m**2), int(E.b4 * m**4), int(E.b6 * m**6), int(E.b8 * m**8))
    t = list(_t_poly(b, n))
    d = zx_deg(t)
    m2 = Fraction(m) ** 2
    coeffs = tuple(Fraction(c) * m2 ** (j - d) for j, c in enumerate(t))
    return DivisionPoly(n, coeffs, n % 2 == 0)


def division_poly_primitive(E: CurveQ, n: int) -> ZX:
    """Primitive integer polynomial with the same roots as the x-part of psi_n."""
    psi = division_polynomial(E, n)
    den = 1
    for c in psi.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in psi.coeffs]
    _, prim = zx_primitive(ints)
    return prim


def rational_ell_torsion_point(E: CurveQ, ell: int) -> PointQ | None:
    """A rational point of exact order ell, or None.

    Complete for ell in {3, 5, 7} (the only odd prime orders possible over Q);
    for larger ell it reports None when no rational root of psi_ell yields one.
    """
    if ell < 3 or not is_prime(ell):
        raise InvalidParameterError("ell must be an odd prime")
    psi = division_poly_primitive(E, ell)
    linear, _ = zx_factor_bounded(psi, 1)
    roots = sorted(Fraction(-g[0], g[1]) for g in linear)
    for x0 in roots:
        # y^2 + (a1 x0 + a3) y = rhs(x0); the discriminant is F(x0) = psi_2^2 at x0
        s = E.a1 * x0 + E.a3
        disc = s * s + 4 * E.rhs(x0)
        root = rational_sqrt(disc)
        if root is None:
            continue
        P = PointQ(x0, (-s + root) / 2)
        if point_order(E, P, ell) == ell:
            return P
    return None


@dataclass(frozen=True)
class FactorShape:
    """Irreducible factors of psi_ell up to a degree bound, plus the unfactored cofactor."""

    ell: int
    degree_bound: int
    factors: tuple[tuple[int, tuple[int, ...]], ...]  # (degree, primitive factor)
    residual: tuple[int, ...]

    @property
    def residual_degree(self) -> int:
        return len(self.residual) - 1

    def degrees(self) -> list[int]:
        return [d for d, _ in self.factors]


def psi_factor_shape(E: CurveQ, ell: int, degree_bound: int) -> FactorShape:
    """Bounded-degree factor shape of psi_ell over Q."""
    if ell > 13 or ell < 3 or ell % 2 == 0:
        raise UnsupportedError("factor shapes are supported for odd primes ell <= 13")
    if not 1 <= degree_bound <= 12:
        raise UnsupportedError("degree bound must lie in [1, 12]")
    psi = division_poly_primitive(E, ell)
    factors, residual = zx_factor_bounded(psi, degree_bound)
    return FactorShape(
        ell,
        degree_bound,
        tuple((zx_deg(g), tuple(g)) for g in factors),
        tuple(residual),
    )


def _doubling_x_map(E: CurveQ) -> tuple[ZX, ZX]:
    """x(2P) = num(x) / den(x) with integer coefficients (common denominator cleared)."""
    num = [-E.b8, -2 * E.b6, -E.b4, Fraction(0), Fraction(1)]
    den = [E.b6, 2 * E.b4, E.b2, Fraction(4)]
    lcm = 1
    for c in num + den:
        c = Fraction(c)
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    n = zx_trim([int(Fraction(c) * lcm) for c in num])
    d = zx_trim([int(Fraction(c) * lcm) for c in den])
    return n, d


def _qx_divmod(f: list[Fraction], g: list[Fraction]):
    f = f[:]
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    while f and len(f) >= len(g):
        if f[-1] == 0:
            f.pop()
            continue
        k = f[-1] / g[-1]
        d = len(f) - len(g)
        q[d] = k
        for i, gc in enumerate(g):
            f[i + d] -= k * gc
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return q, f


def _qx_invert_mod(a: list[Fraction], g: list[Fraction]) -> list[Fraction] | None:
    """Inverse of a modulo g over Q, or None if gcd(a, g) is nonconstant."""
    r0, r1 = g[:], _qx_divmod(a, g)[1]
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = _qx_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qx_sub(s0, _qx_mul(q, s1))
    if len(r0) != 1:
        return None
    inv = 1 / r0[0]
    return [c * inv for c in s0]


def _qx_mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    while out and out[-1] == 0:
        out.pop()
    return out


def _qx_sub(f, g):
    n = max(len(f), len(g))
    out = [Fraction(0)] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def is_kernel_polynomial(E: CurveQ, g: ZX) -> bool:
    """Whether the root set of g is stable under the doubling x-map, computed mod g."""
    gq = [Fraction(c) for c in g]
    num, den = _doubling_x_map(E)
    den_q = _qx_divmod([Fraction(c) for c in den], gq)[1]
    inv = _qx_invert_mod(den_q, gq) if den_q else None
    if inv is None:
        return False
    num_q = _qx_divmod([Fraction(c) for c in num], gq)[1]
    x2 = _qx_divmod(_qx_mul(num_q, inv), gq)[1]
    # evaluate g at x2 in Q[x]/(g)
    acc: list[Fraction] = []
    for c in reversed(gq):
        acc = _qx_divmod(_qx_mul(acc, x2), gq)[1]
        acc = _qx_sub(acc, [-c])
    return not acc


def has_rational_isogeny(E: CurveQ, ell: int) -> tuple[bool, ZX | None]:
    """Detect a rational ell-isogeny: a degree-(ell-1)/2 kernel polynomial inside psi_ell."""
    if ell > 13 or ell < 3 or ell % 2 == 0:
        raise UnsupportedError("isogeny detection is supported for odd primes ell <= 13")
    k = (ell - 1) // 2
    psi = division_poly_primitive(E, ell)
    factors, _ = zx_factor_bounded(psi, k)
    factors.sort(key=lambda h: (zx_deg(h), h))
    n = len(factors)
    for mask in range(1, 1 << n):
        combo = [factors[i] for i in range(n) if mask >> i & 1]
        if sum(zx_deg(h) for h in combo) != k:
            continue
        g = [1]
        for h in combo:
            g = zx_mul(g, h)
        if is_kernel_polynomial(E, g):
            return True, g
    return False, None


def torsion_field_polynomial(E: CurveQ, ell: int, g: ZX) -> NumberFieldDef:
    """Defining polynomial of the field of a torsion point with x-coordinate in Q[t]/(g).

    g must be an irreducible factor of psi_ell in E's x-coordinate; the
    construction adjoins a root alpha of g and then the square root of the
    short-model cubic at alpha. Degenerates to a smaller field when that
    value is already a square.
    """
    g = zx_trim(g[:])
    if not zx_is_irreducible(g):
        raise InvalidParameterError("factor must be irreducible over Q")
    psi = division_poly_primitive(E, ell)
    if zx_div_exact(psi, g) is None:
        raise InvalidParameterError("factor does not divide psi_ell")
    A, B, (mu, nu) = short_model_data(E)
    # move g to the short model's x-coordinate: roots map by x -> mu x + nu
    gq = [Fraction(c) for c in g]
    # g_short(t) = g((t - nu)/mu) cleared of denominators
    shifted: list[Fraction] = []
    inv_mu = 1 / mu
    for c in reversed(gq):
        shifted = _qx_mul(shifted, [-nu * inv_mu, inv_mu])
        if not shifted:
            shifted = [Fraction(c)]
        else:
            shifted[0] += c
    lcm = 1
    for c in shifted:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    g_short = zx_trim([int(c * lcm) for c in shifted])
    _, g_short = zx_primitive(g_short)
    return adjoin_sqrt(g_short, [B, A, 0, 1])
