"""Local reduction data: Tate's algorithm, conductors, point counts, supersingularity.

Tate's algorithm is implemented in full for every prime, including 2 and 3;
conductor exponents come from the algorithm's exit points, never from a
global formula. The split / nonsplit test for multiplicative reduction uses
the -c6 square criterion on the minimal model (Legendre symbol at odd p, a
2-adic unit-square check at p = 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from ._kernels import count_points
from .curves import CurveQ, PointQ, minimal_model, quadratic_twist
from .errors import InvalidParameterError, PreconditionError, UnsupportedError
from .intmath import factorint, is_squarefree, legendre, valuation

AP_PRIME_LIMIT = 10**6  # exhaustive point counting only; no Schoof


class ReductionKind(Enum):
    GOOD = "Good"
    MULTIPLICATIVE_SPLIT = "MultiplicativeSplit"
    MULTIPLICATIVE_NONSPLIT = "MultiplicativeNonsplit"
    ADDITIVE = "Additive"


@dataclass(frozen=True)
class LocalReduction:
    p: int
    ord_delta_min: int
    ord_j: int | None  # None encodes +infinity (j = 0)
    kind: ReductionKind
    kodaira: str
    conductor_exponent: int

    @property
    def is_good(self) -> bool:
        return self.kind is ReductionKind.GOOD

    @property
    def ord_j_negative(self) -> bool:
        return self.ord_j is not None and self.ord_j < 0


def _vp(n: int, p: int) -> int:
    return valuation(n, p) if n else 10**9


class _Model:
    """Mutable integral model used while running Tate's algorithm at one prime."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6")

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1, self.a2, self.a3, self.a4, self.a6 = int(a1), int(a2), int(a3), int(a4), int(a6)

    def translate(self, r: int = 0, s: int = 0, t: int = 0) -> None:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.a1 = a1 + 2 * s
        self.a2 = a2 - s * a1 + 3 * r - s * s
        self.a3 = a3 + r * a1 + 2 * t
        self.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
        self.a6 = a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1

    def rescale_down(self, p: int) -> None:
        self.a1 //= p
        self.a2 //= p**2
        self.a3 //= p**3
        self.a4 //= p**4
        self.a6 //= p**6

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        return (
            self.a1 * self.a1 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3 * self.a3
            - self.a4 * self.a4
        )

    @property
    def disc(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def _singular_point(m: _Model, p: int) -> tuple[int, int]:
    """A singular point of the reduction mod p, as integers in [0, p)."""
    if p <= 3:
        for x0 in range(p):
            for y0 in range(p):
                on = (
                    y0 * y0 + m.a1 * x0 * y0 + m.a3 * y0 - x0**3 - m.a2 * x0 * x0 - m.a4 * x0 - m.a6
                ) % p == 0
                dx = (m.a1 * y0 - 3 * x0 * x0 - 2 * m.a2 * x0 - m.a4) % p == 0
                dy = (2 * y0 + m.a1 * x0 + m.a3) % p == 0
                if on and dx and dy:
                    return x0, y0
        raise PreconditionError("no singular point found; reduction is good")
    # odd p >= 5: complete the square, then x0 is the multiple root of
    # g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 mod p.
    g = [m.b6 % p, (2 * m.b4) % p, m.b2 % p, 4 % p]
    gp = [g[1], (2 * g[2]) % p, (3 * g[3]) % p]
    h = _fp_gcd(g, gp, p)
    if len(h) == 2:
        x0 = (-h[0] * pow(h[1], -1, p)) % p
    elif len(h) == 3:
        x0 = (-h[1] * pow(2 * h[2], -1, p)) % p
    else:
        raise PreconditionError("no multiple root; reduction is good")
    y0 = (-(m.a1 * x0 + m.a3) * pow(2, -1, p)) % p
    return x0, y0


def _fp_norm(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    q = [0] * max(len(a) - len(b) + 1, 1)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and a:
        k = a[-1] * inv % p
        d = len(a) - len(b)
        q[d] = k
        for i, bc in enumerate(b):
            a[i + d] = (a[i + d] - k * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_norm(a, p), _fp_norm(b, p)
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _cubic_root_structure(m: _Model, p: int) -> tuple[str, int]:
    """Root structure of P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) mod p.

    Returns ("distinct", 0), ("double", root) or ("triple", root). The triple
    test is a characteristic-aware coefficient match; gcd degrees alone do not
    separate double from triple roots when p is 2.
    """
    c2 = m.a2 // p % p
    c1 = m.a4 // p**2 % p
    c0 = m.a6 // p**3 % p
    # triple root r: P = (T - r)^3, i.e. c2 = -3r, c1 = 3r^2, c0 = -r^3
    r = (-c2 * pow(3, -1, p)) % p if p != 3 else (-c0) % 3
    if c2 % p == (-3 * r) % p and c1 % p == (3 * r * r) % p and c0 % p == (-(r**3)) % p:
        return "triple", r
    P = _fp_norm([c0, c1, c2, 1], p)
    Pp = _fp_norm([c1, 2 * c2, 3], p)
    g = _fp_gcd(P, Pp, p)
    if len(g) == 1:
        return "distinct", 0
    if len(g) == 2:
        return "double", (-g[0]) % p
    if p == 2:  # gcd (T - r)^2 = T^2 + r^2; the double root is its constant term
        return "double", g[0] % 2
    raise PreconditionError("internal: unexpected multiplicity pattern in step-6 cubic")


@dataclass(frozen=True)
class TateResult:
    kodaira: str
    conductor_exponent: int
    ord_disc_min: int
    minimality_scale: int  # p^k scaled out of the input model


def tate_algorithm(E_int: CurveQ, p: int) -> TateResult:
    """Run Tate's algorithm at p on an integral model."""
    if not E_int.is_integral():
        raise PreconditionError("Tate's algorithm needs an integral model")
    m = _Model(*(int(a) for a in E_int.ainvs))
    scale = 1
    while True:
        disc = m.disc
        n = _vp(disc, p)
        if n == 0:
            return TateResult("I0", 0, 0, scale)
        x0, y0 = _singular_point(m, p)
        m.translate(r=x0, t=y0)
        if m.b2 % p != 0:
            return TateResult(f"I{n}", 1, n, scale)
        # additive reduction from here on
        if _vp(m.a6, p) < 2:
            return TateResult("II", n, n, scale)
        if _vp(m.b8, p) < 3:
            return TateResult("III", n - 1, n, scale)
        if _vp(m.b6, p) < 3:
            return TateResult("IV", n - 2, n, scale)
        # normalize to v(a1) >= 1, v(a2) >= 1, v(a3) >= 2, v(a4) >= 2, v(a6) >= 3
        if p == 2:
            s = m.a2 % 2
            m.translate(s=s)
            t = 2 * ((m.a6 // 4) % 2)
        else:
            s = (-m.a1 * pow(2, -1, p)) % p
            m.translate(s=s)
            t = p * ((-(m.a3 // p) * pow(2, -1, p)) % p)
        m.translate(t=t)
        assert m.a1 % p == 0 and m.a2 % p == 0
        assert m.a3 % p**2 == 0 and m.a4 % p**2 == 0 and m.a6 % p**3 == 0
        shape, root = _cubic_root_structure(m, p)
        if shape == "distinct":
            return TateResult("I0*", n - 4, n, scale)
        if shape == "double":
            m.translate(r=p * root)
            return _type_in_star(m, p, n, scale)
        # triple root
        m.translate(r=p * root)
        # quadratic Y^2 + (a3/p^2) Y - a6/p^4
        beta = m.a3 // p**2
        gamma = (-(m.a6 // p**4)) % p
        if _quadratic_separable(1, beta, gamma, p):
            return TateResult("IV*", n - 6, n, scale)
        y1 = _quadratic_double_root(1, beta, gamma, p)
        m.translate(t=p**2 * y1)
        if _vp(m.a4, p) < 4:
            return TateResult("III*", n - 7, n, scale)
        if _vp(m.a6, p) < 6:
            return TateResult("II*", n - 8, n, scale)
        # non-minimal at p: scale down and run again
        m.rescale_down(p)
        scale *= p


def _quadratic_separable(alpha: int, beta: int, gamma: int, p: int) -> bool:
    # alpha Y^2 + beta Y + gamma mod p, alpha a unit: distinct roots in the closure
    if p == 2:
        return beta % 2 == 1
    return (beta * beta - 4 * alpha * gamma) % p != 0


def _quadratic_double_root(alpha: int, beta: int, gamma: int, p: int) -> int:
    if p == 2:
        return (gamma * alpha) % 2
    return (-beta * pow(2 * alpha, -1, p)) % p


def _type_in_star(m: _Model, p: int, n: int, scale: int) -> TateResult:
    # entered with v(a1) >= 1, v(a2) = 1, v(a3) >= 2, v(a4) >= 3, v(a6) >= 4
    a21 = m.a2 // p % p
    mm = 1
    j = 1
    while True:
        if mm % 2 == 1:  # quadratic in Y: Y^2 + (a3/p^(j+1)) Y - a6/p^(2j+2)
            beta = m.a3 // p ** (j + 1)
            gamma = (-(m.a6 // p ** (2 * j + 2))) % p
            if _quadratic_separable(1, beta, gamma, p):
                return TateResult(f"I{mm}*", n - 4 - mm, n, scale)
            y1 = _quadratic_double_root(1, beta, gamma, p)
            m.translate(t=p ** (j + 1) * y1)
        else:  # quadratic in X: (a2/p) X^2 + (a4/p^(j+2)) X + a6/p^(2j+3)
            beta = m.a4 // p ** (j + 2)
            gamma = m.a6 // p ** (2 * j + 3)
            if _quadratic_separable(a21, beta, gamma, p):
                return TateResult(f"I{mm}*", n - 4 - mm, n, scale)
            x1 = _quadratic_double_root(a21, beta, gamma, p)
            m.translate(r=p ** (j + 1) * x1)
            j += 1
        mm += 1
        if mm > n:
            raise PreconditionError("internal: I_n* loop failed to terminate")


def _is_split_multiplicative(E_min: CurveQ, p: int) -> bool:
    """-c6 square test on the minimal model; valid whenever reduction is multiplicative."""
    c6 = int(E_min.c6)
    if p == 2:
        # odd unit u is a 2-adic square iff u = 1 (mod 8)
        return (-c6) % 8 == 1
    return legendre(-c6, p) == 1


@lru_cache(maxsize=None)
def local_reduction(E: CurveQ, p: int) -> LocalReduction:
    """Reduction data of E at p, computed on the global minimal model."""
    E_min, _ = minimal_model(E)
    res = tate_algorithm(E_min, p)
    if res.minimality_scale != 1:
        raise PreconditionError("internal: global minimal model was not p-minimal")
    c4 = int(E_min.c4)
    ord_j = 3 * _vp(c4, p) - res.ord_disc_min if c4 else None
    if res.conductor_exponent == 0:
        kind = ReductionKind.GOOD
    elif res.conductor_exponent == 1:
        split = _is_split_multiplicative(E_min, p)
        kind = ReductionKind.MULTIPLICATIVE_SPLIT if split else ReductionKind.MULTIPLICATIVE_NONSPLIT
    else:
        kind = ReductionKind.ADDITIVE
    return LocalReduction(p, res.ord_disc_min, ord_j, kind, res.kodaira, res.conductor_exponent)


def is_tate_curve(E: CurveQ, p: int) -> bool:
    """Split multiplicative reduction at p."""
    return local_reduction(E, p).kind is ReductionKind.MULTIPLICATIVE_SPLIT


@lru_cache(maxsize=None)
def conductor(E: CurveQ) -> tuple[int, dict[int, int]]:
    """Conductor N and its factorization {p: f_p}, from Tate's algorithm at each bad prime."""
    E_min, _ = minimal_model(E)
    disc = int(E_min.disc)
    exps: dict[int, int] = {}
    for p in factorint(disc):
        f = local_reduction(E, p).conductor_exponent
        if f:
            exps[p] = f
    N = 1
    for p, f in exps.items():
        N *= p**f
    return N, exps


def bad_primes(E: CurveQ) -> list[int]:
    return sorted(conductor(E)[1])


def ap(E: CurveQ, p: int) -> int:
    """Trace of Frobenius a_p = p + 1 - #E(F_p) at a prime of good reduction."""
    if p > AP_PRIME_LIMIT:
        raise UnsupportedError(f"point counting is exhaustive and capped at p <= {AP_PRIME_LIMIT}")
    red = local_reduction(E, p)
    if not red.is_good:
        raise PreconditionError(f"bad reduction at {p}; a_p needs good reduction")
    E_min, _ = minimal_model(E)
    coeffs = tuple(int(a) % p for a in E_min.ainvs)
    return p + 1 - count_points(*coeffs, p)


class SupersingularVerdict(Enum):
    YES = "Yes"
    NO = "No"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class SupersingularResult:
    verdict: SupersingularVerdict
    reason: str
    ap_value: int | None = None


def is_supersingular(E: CurveQ, ell: int) -> SupersingularResult:
    """Supersingularity of the reduction of E mod ell, for ell >= 5.

    Decides via a_ell = 0 at good primes. With additive but potentially good
    reduction, tries to reach good reduction by a quadratic twist; when no
    twist in the standard candidate set works, reports NotApplicable. The
    ord_ell(j) < 0 branch is outside the hypothesis and is NotApplicable.
    """
    if ell < 5:
        raise UnsupportedError("supersingularity test requires a prime ell >= 5")
    red = local_reduction(E, ell)
    if red.ord_j_negative:
        return SupersingularResult(
            SupersingularVerdict.NOT_APPLICABLE, f"ord_{ell}(j) < 0; outside the hypothesis branch"
        )
    if red.is_good:
        a = ap(E, ell)
        verdict = SupersingularVerdict.YES if a == 0 else SupersingularVerdict.NO
        return SupersingularResult(verdict, f"good reduction, a_{ell} = {a}", a)
    # additive, potentially good: try the standard quadratic twists
    for d in (-1, ell, -ell, 2, -2, 2 * ell, -2 * ell, 3, -3, 3 * ell, -3 * ell):
        if d == 1 or not is_squarefree(d):
            continue
        Ed = quadratic_twist(E, d)
        if local_reduction(Ed, ell).is_good:
            a = ap(Ed, ell)
            verdict = SupersingularVerdict.YES if a == 0 else SupersingularVerdict.NO
            return SupersingularResult(
                verdict, f"good reduction after twist by {d}, a_{ell} = {a}", a
            )
    return SupersingularResult(
        SupersingularVerdict.NOT_APPLICABLE,
        f"additive reduction at {ell} not resolved by a quadratic twist",
    )


def in_kernel_of_reduction(E: CurveQ, P: PointQ, ell: int) -> bool:
    """Whether P lies in the kernel of reduction mod ell: ord_ell(x) < 0 on the minimal model."""
    if P.is_infinity():
        raise PreconditionError("kernel-of-reduction test needs an affine point")
    if not P.on_curve(E):
        raise InvalidParameterError("point not on curve")
    red = local_reduction(E, ell)
    if not red.is_good:
        raise PreconditionError(f"bad reduction at {ell}; consult local_reduction first")
    E_min, (u, r, s, t) = minimal_model(E)
    P_min = E.transform_point(P, u, r, s, t)
    x = P_min.x
    return _vp_frac(x, ell) < 0


def _vp_frac(x: Fraction, p: int) -> int:
    if x == 0:
        return 10**9
    return valuation(x.numerator, p) - valuation(x.denominator, p)
