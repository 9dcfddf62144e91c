"""Exact Weierstrass curve arithmetic over Q.

Long models [a1,a2,a3,a4,a6] with rational coefficients, their standard
invariants, coordinate transformations, the group law, quadratic twists, and
global minimal models (Laska-Kraus-Connell). All arithmetic is exact; no
floating point anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParameterError
from .intmath import factorint, is_square, is_squarefree, valuation

Rat = Fraction


def format_rational(x: Fraction | int) -> str:
    """Canonical text form: plain integer, or "p/q" with q > 0 and gcd(p, q) = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not re.fullmatch(r"-?\d+(/\d+)?", s):
        raise InvalidParameterError(f"not a rational: {s!r}")
    return Fraction(s)


@dataclass(frozen=True)
class CurveQ:
    """Nonsingular long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.disc == 0:
            raise InvalidParameterError("singular model: discriminant is zero")

    @property
    def ainvs(self) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self) -> Fraction:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        return (
            self.a1 * self.a1 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3 * self.a3
            - self.a4 * self.a4
        )

    @property
    def c4(self) -> Fraction:
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self) -> Fraction:
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j(self) -> Fraction:
        return self.c4**3 / self.disc

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.ainvs)

    def rhs(self, x: Fraction) -> Fraction:
        """x^3 + a2 x^2 + a4 x + a6."""
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def transform(self, u: Fraction, r: Fraction, s: Fraction, t: Fraction) -> "CurveQ":
        """Model in the coordinates (x', y') with x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        u, r, s, t = Fraction(u), Fraction(r), Fraction(s), Fraction(t)
        if u == 0:
            raise InvalidParameterError("transform scale u must be nonzero")
        a1, a2, a3, a4, a6 = self.ainvs
        return CurveQ(
            (a1 + 2 * s) / u,
            (a2 - s * a1 + 3 * r - s * s) / u**2,
            (a3 + r * a1 + 2 * t) / u**3,
            (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4,
            (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6,
        )

    def transform_point(self, P: "PointQ", u, r, s, t) -> "PointQ":
        """Image of a point of this curve under the same (u, r, s, t) change of coordinates."""
        if P.is_infinity():
            return P
        u, r, s, t = Fraction(u), Fraction(r), Fraction(s), Fraction(t)
        x1 = (P.x - r) / u**2
        y1 = (P.y - s * (P.x - r) - t) / u**3
        return PointQ(x1, y1)

    def __str__(self) -> str:
        return "[" + ",".join(format_rational(a) for a in self.ainvs) + "]"


_INF = object()


@dataclass(frozen=True)
class PointQ:
    """Affine rational point (x, y) or the point at infinity."""

    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise InvalidParameterError("point needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @staticmethod
    def infinity() -> "PointQ":
        return PointQ()

    def is_infinity(self) -> bool:
        return self.x is None

    def on_curve(self, E: CurveQ) -> bool:
        if self.is_infinity():
            return True
        x, y = self.x, self.y
        return y * y + E.a1 * x * y + E.a3 * y == E.rhs(x)

    def __str__(self) -> str:
        if self.is_infinity():
            return "inf"
        return f"({format_rational(self.x)},{format_rational(self.y)})"


def curve_from_string(text: str) -> CurveQ:
    """Parse "[a1,a2,a3,a4,a6]" with integer or "p/q" entries."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise InvalidParameterError(f"curve text must look like [a1,a2,a3,a4,a6]: {text!r}")
    parts = text[1:-1].split(",")
    if len(parts) != 5:
        raise InvalidParameterError("curve text needs exactly five coefficients")
    return CurveQ(*(parse_rational(p) for p in parts))


def point_from_string(text: str) -> PointQ:
    """Parse "(x,y)" or "inf"."""
    text = text.strip()
    if text.lower() in ("inf", "infinity", "o"):
        return PointQ.infinity()
    if not (text.startswith("(") and text.endswith(")")):
        raise InvalidParameterError(f"point text must look like (x,y) or inf: {text!r}")
    parts = text[1:-1].split(",")
    if len(parts) != 2:
        raise InvalidParameterError("point text needs exactly two coordinates")
    return PointQ(parse_rational(parts[0]), parse_rational(parts[1]))


def curve_invariants(E: CurveQ) -> dict[str, Fraction]:
    """The standard quantities b2, b4, b6, b8, c4, c6, disc, j."""
    return {
        "b2": E.b2,
        "b4": E.b4,
        "b6": E.b6,
        "b8": E.b8,
        "c4": E.c4,
        "c6": E.c6,
        "disc": E.disc,
        "j": E.j,
    }


# ---------------------------------------------------------------------------
# group law


def negate(E: CurveQ, P: PointQ) -> PointQ:
    if P.is_infinity():
        return P
    return PointQ(P.x, -P.y - E.a1 * P.x - E.a3)


def add_points(E: CurveQ, P: PointQ, Q: PointQ) -> PointQ:
    """Chord-tangent addition on the long model."""
    if not P.on_curve(E) or not Q.on_curve(E):
        raise InvalidParameterError("point not on curve")
    if P.is_infinity():
        return Q
    if Q.is_infinity():
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + E.a1 * x2 + E.a3 == 0:
            return PointQ.infinity()
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (2 * y1 + E.a1 * x1 + E.a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return PointQ(x3, y3)


def multiply_point(E: CurveQ, n: int, P: PointQ) -> PointQ:
    if n < 0:
        return multiply_point(E, -n, negate(E, P))
    R = PointQ.infinity()
    Q = P
    while n:
        if n & 1:
            R = add_points(E, R, Q)
        Q = add_points(E, Q, Q)
        n >>= 1
    return R


def point_order(E: CurveQ, P: PointQ, bound: int) -> int | None:
    """Smallest n <= bound with nP = infinity, or None if no such n exists."""
    if not P.on_curve(E):
        raise InvalidParameterError("point not on curve")
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity():
            return n
        Q = add_points(E, Q, P)
    return None


# ---------------------------------------------------------------------------
# twists


def quadratic_twist(E: CurveQ, d: int) -> CurveQ:
    """Twist by the squarefree integer d: short model (a, b) -> (a d^2, b d^3).

    General models are first put in short form with a = -c4/48, b = -c6/864,
    which leaves a model that is already short untouched.
    """
    if not isinstance(d, int) or d == 0:
        raise InvalidParameterError("twist parameter must be a nonzero integer")
    if not is_squarefree(d):
        raise InvalidParameterError(f"twist parameter must be squarefree: {d}")
    a = -E.c4 / 48
    b = -E.c6 / 864
    return CurveQ(0, 0, 0, a * d * d, b * d**3)


# ---------------------------------------------------------------------------
# minimal models (Laska-Kraus-Connell)


def _kraus_ok_at_2(c4: int, c6: int) -> bool:
    # Kraus: a pair (c4, c6) comes from an integral model iff, at 2, either
    # c6 = -1 (mod 4), or c4 = 0 (mod 16) and c6 = 0 or 8 (mod 32).
    if c6 % 4 == 3:
        return True
    return c4 % 16 == 0 and c6 % 32 in (0, 8)


def _kraus_ok_at_3(c6: int) -> bool:
    return c6 == 0 or valuation(c6, 3) != 2


def _model_from_c4c6(c4: int, c6: int) -> CurveQ:
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4 = (b2 * b2 - c4) // 24
    b6 = (-(b2**3) + 36 * b2 * b4 - c6) // 216
    a1 = b2 % 2
    a2 = (b2 - a1) // 4
    a3 = b6 % 2
    a4 = (b4 - a1 * a3) // 2
    a6 = (b6 - a3) // 4
    E = CurveQ(a1, a2, a3, a4, a6)
    if E.c4 != c4 or E.c6 != c6:
        raise InvalidParameterError("invariant pair fails the integrality conditions")
    return E


def integral_model(E: CurveQ) -> tuple[CurveQ, Fraction]:
    """Scale to integral coefficients; returns (model, u) with model = E.transform(u, 0, 0, 0)."""
    m = 1
    dens: dict[int, int] = {}
    for i, a in zip((1, 2, 3, 4, 6), E.ainvs):
        for q, e in factorint(a.denominator).items() if a.denominator > 1 else ():
            need = -(-e // i)  # ceil(e / i)
            dens[q] = max(dens.get(q, 0), need)
    for q, e in dens.items():
        m *= q**e
    u = Fraction(1, m)
    return E.transform(u, 0, 0, 0), u


@lru_cache(maxsize=None)
def minimal_model(E: CurveQ) -> tuple[CurveQ, tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Global minimal model and the (u, r, s, t) with E.transform(u, r, s, t) = E_min.

    The returned model is the canonical reduced one: a1, a3 in {0, 1} and
    a2 in {-1, 0, 1}. disc(E) / disc(E_min) = u^12.
    """
    E_int, u0 = integral_model(E)
    c4 = int(E_int.c4)
    c6 = int(E_int.c6)
    disc = int(E_int.disc)
    g = math.gcd(math.gcd(c4, c6), disc)
    u1 = 1
    for p in factorint(g) if g > 1 else ():
        d = min(
            valuation(c4, p) // 4 if c4 else 10**9,
            valuation(c6, p) // 6 if c6 else 10**9,
            valuation(disc, p) // 12,
        )
        if p == 2:
            while d > 0 and not _kraus_ok_at_2(c4 // 2 ** (4 * d), c6 // 2 ** (6 * d)):
                d -= 1
        elif p == 3:
            while d > 0 and not _kraus_ok_at_3(c6 // 3 ** (6 * d)):
                d -= 1
        u1 *= p**d
    E_min = _model_from_c4c6(c4 // u1**4, c6 // u1**6)
    u = u0 * u1
    # solve the translation part of the transform taking E to E_min
    s = (u * E_min.a1 - E.a1) / 2
    r = (u**2 * E_min.a2 - E.a2 + s * E.a1 + s * s) / 3
    t = (u**3 * E_min.a3 - E.a3 - r * E.a1) / 2
    if E.transform(u, r, s, t) != E_min:
        raise InvalidParameterError("internal: minimal model transform mismatch")
    return E_min, (u, r, s, t)


def short_model_data(E: CurveQ) -> tuple[int, int, tuple[Fraction, Fraction]]:
    """Integral short model y^2 = x^3 + A x + B attached to the minimal model.

    Returns (A, B, (mu, nu)) where x_short = mu * x + nu maps x-coordinates of E
    to x-coordinates of the short model. A = -27 c4, B = -54 c6 of the minimal model.
    """
    Emin, (u, r, _s, _t) = minimal_model(E)
    A = -27 * int(Emin.c4)
    B = -54 * int(Emin.c6)
    # x_min = (x - r) / u^2, then x_short = 36 x_min + 3 b2(E_min)
    mu = Fraction(36) / u**2
    nu = -36 * r / u**2 + 3 * Emin.b2
    return A, B, (mu, nu)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if x is not a square."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    if not (is_square(n) and is_square(d)):
        return None
    return Fraction(math.isqrt(n), math.isqrt(d))
