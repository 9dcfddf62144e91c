"""Light number-field probes: factorization over Q, Dedekind splitting, tower building.

No integral bases and no class groups of general fields; everything here is a
certified necessary-condition test or an exact polynomial computation on a
monogenic order Z[x]/(f). Undetermined is a value, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateTowerError, InvalidParameterError
from .polyzq import (
    ZX,
    fp_factor,
    fp_gcd,
    fp_mul,
    fp_norm,
    resultant_eliminate,
    zx_compose_x_square,
    zx_deg,
    zx_discriminant,
    zx_factor,
    zx_is_irreducible,
    zx_primitive,
    zx_trim,
)


@dataclass(frozen=True)
class NumberFieldDef:
    """A number field presented by a monic irreducible integer polynomial."""

    minpoly: tuple[int, ...]

    def __post_init__(self) -> None:
        f = list(self.minpoly)
        if zx_deg(f) < 1:
            raise InvalidParameterError("defining polynomial must be nonconstant")
        if f[-1] != 1:
            raise InvalidParameterError("defining polynomial must be monic")
        object.__setattr__(self, "minpoly", tuple(f))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def poly_disc(self) -> int:
        return zx_discriminant(list(self.minpoly))


def make_monic(f: ZX) -> ZX:
    """Monic integer polynomial with the same root field: c^(n-1) f(x/c) for c = lc(f)."""
    _, f = zx_primitive(zx_trim(f[:]))
    n = zx_deg(f)
    c = f[-1]
    if c == 1:
        return f
    out = [f[i] * c ** (n - 1 - i) for i in range(n)] + [1]
    _, out = zx_primitive(out)
    return out


def number_field(f: ZX, check_irreducible: bool = True) -> NumberFieldDef:
    """NumberFieldDef from any irreducible integer polynomial (monicized if needed)."""
    g = make_monic(f)
    if check_irreducible and not zx_is_irreducible(g):
        raise InvalidParameterError("defining polynomial is reducible")
    return NumberFieldDef(tuple(g))


@dataclass(frozen=True)
class FactorizationQ:
    content: int
    factors: tuple[tuple[tuple[int, ...], int], ...]  # (primitive factor, multiplicity)
    residual: tuple[int, ...]  # cofactor left unfactored under a degree bound


def factor_poly_q(f: ZX, degree_bound: int | None = None) -> FactorizationQ:
    """Factor an integer polynomial over Q.

    Complete factorization by default (degrees up to 30 are routine); with
    degree_bound only irreducible factors up to that degree are extracted and
    the rest is reported in `residual`.
    """
    f = zx_trim(f[:])
    if not f:
        raise InvalidParameterError("cannot factor the zero polynomial")
    if degree_bound is None:
        c, parts = zx_factor(f)
        return FactorizationQ(c, tuple((tuple(g), m) for g, m in parts), (1,))
    from .polyzq import zx_factor_bounded, zx_squarefree_decomposition

    c, prim = zx_primitive(f)
    out = []
    residual = [1]
    for part, mult in zx_squarefree_decomposition(prim):
        facs, res = zx_factor_bounded(part, degree_bound)
        out.extend((tuple(g), mult) for g in facs)
        if zx_deg(res) > 0:
            for _ in range(mult):
                residual = _zx_mul(residual, res)
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return FactorizationQ(c, tuple(out), tuple(zx_trim(residual)))


def _zx_mul(f, g):
    from .polyzq import zx_mul

    return zx_mul(f, g)


@dataclass(frozen=True)
class SplittingShape:
    """Shape [(e_i, f_i)] of p O_K = prod P_i^{e_i} with residue degrees f_i.

    `via` records how the shape was certified: "dedekind" when p does not
    divide the index of the polynomial order, "padic-roots" when the index
    test failed but a full set of p-adic roots settled the split shape.
    """

    p: int
    shape: tuple[tuple[int, int], ...]
    via: str = "dedekind"

    @property
    def is_split_completely(self) -> bool:
        return all(e == 1 and f == 1 for e, f in self.shape)

    @property
    def is_ramified(self) -> bool:
        return any(e > 1 for e, f in self.shape)


UNDETERMINED = "Undetermined"


def _padic_root_count(f: ZX, p: int, cap: int = 64) -> int | None:
    """Number of distinct roots of a squarefree monic f in Z_p; None if too deep.

    Simple roots mod p lift uniquely (Hensel); multiple residue classes recurse
    on f(r + p t) with the p-power content removed. Squarefreeness bounds the
    recursion depth.
    """
    from .intmath import valuation

    def subst(g: ZX, r: int) -> ZX:
        out = [0]
        for c in reversed(g):
            new = [0] * (len(out) + 1)
            for i, o in enumerate(out):
                new[i] += o * r
                new[i + 1] += o * p
            new[0] += c
            out = zx_trim(new)
        return out

    def count(g: ZX, depth: int) -> int | None:
        if depth > cap:
            return None
        gp = [i * c for i, c in enumerate(g)][1:]
        total = 0
        for r in range(p):
            val = 0
            for c in reversed(g):
                val = (val * r + c) % p
            if val:
                continue
            dval = 0
            for c in reversed(gp):
                dval = (dval * r + c) % p
            if dval:
                total += 1
                continue
            h = subst(g, r)
            shift = min(valuation(c, p) for c in h if c)
            h = [c // p**shift for c in h]
            sub = count(h, depth + 1)
            if sub is None:
                return None
            total += sub
        return total

    return count(f, 0)


def dedekind_split(K: NumberFieldDef, p: int) -> SplittingShape | str:
    """Splitting of p in O_K via the Dedekind criterion on the defining polynomial.

    Returns the shape when p does not divide the index [O_K : Z[alpha]]. When
    the index test fails, a certified p-adic root count can still decide the
    completely-split shape (p < deg K split completely forces p to divide the
    index of every generator, so no mod-p read-off exists); anything else is
    "Undetermined".
    """
    f = list(K.minpoly)
    _, parts = fp_factor(f, p)
    # Dedekind test: with fbar = prod gbar_i^{e_i}, g = prod g_i, h = fbar/g lifted,
    # p | index iff gcd((g h - f)/p, g, h) is nonconstant mod p.
    gbar = [1]
    hbar = [1]
    for gi, ei in parts:
        gbar = fp_mul(gbar, gi, p)
        if ei > 1:
            for _ in range(ei - 1):
                hbar = fp_mul(hbar, gi, p)
    # symmetric lifts
    g = [c if 2 * c <= p else c - p for c in gbar]
    h = [c if 2 * c <= p else c - p for c in hbar]
    gh = _zx_mul(g, h)
    diff = [a - b for a, b in zip(gh + [0] * len(f), f + [0] * len(gh))]
    F = [c // p for c in diff]
    Fbar = fp_norm(F, p)
    d = fp_gcd(fp_gcd(Fbar, gbar, p), hbar, p)
    if zx_deg(d) > 0:
        roots = _padic_root_count(f, p)
        if roots == K.degree:
            return SplittingShape(p, ((1, 1),) * K.degree, via="padic-roots")
        return UNDETERMINED
    shape = tuple(sorted((ei, zx_deg(gi)) for gi, ei in parts))
    return SplittingShape(p, shape)


NO = "No"


def zeta_in_field(K: NumberFieldDef, ell: int) -> str:
    """One-sided membership test for an ell-th root of unity: "No" or "Undetermined".

    "No" is certified either by (ell - 1) not dividing the degree, or by a
    determined splitting of ell with no ramification index divisible by
    ell - 1 (the cyclotomic field is totally ramified above ell with
    e = ell - 1, so containment forces such an index).
    """
    if ell < 3 or ell % 2 == 0:
        raise InvalidParameterError("ell must be an odd prime")
    if K.degree % (ell - 1) != 0:
        return NO
    split = dedekind_split(K, ell)
    if split == UNDETERMINED:
        return UNDETERMINED
    if all(e % (ell - 1) != 0 for e, _f in split.shape):
        return NO
    return UNDETERMINED


def adjoin_sqrt(g: ZX, f: ZX) -> NumberFieldDef:
    """Defining polynomial of Q(alpha, sqrt(f(alpha))) for alpha a root of irreducible g.

    Built from the norm form Res_t(g(t), x^2 - f(t)), then factored; the
    irreducible factor of maximal degree is returned (smallest coefficient
    sequence on ties). When f(alpha) is a square in Q(alpha) the degree drops.
    """
    g = zx_trim(g[:])
    f = zx_trim(f[:])
    if zx_deg(g) < 1:
        raise InvalidParameterError("base factor must be nonconstant")
    if not zx_is_irreducible(g):
        raise InvalidParameterError("base factor must be irreducible over Q")
    # degenerate tower: f = 0 mod g
    rem_ok = _zx_rem_nonzero(f, g)
    if not rem_ok:
        raise DegenerateTowerError("f vanishes identically modulo g")
    h = resultant_eliminate(g, f)
    cand = zx_compose_x_square(h)
    _, parts = zx_factor(cand)
    best = max(parts, key=lambda t: zx_deg(t[0]))
    best_deg = zx_deg(best[0])
    choices = sorted(g0 for g0, _m in parts if zx_deg(g0) == best_deg)
    return number_field(list(choices[0]), check_irreducible=False)


def _zx_rem_nonzero(f: ZX, g: ZX) -> bool:
    """f mod g != 0, computed over Q."""
    fq = [Fraction(c) for c in f]
    gq = [Fraction(c) for c in g]
    while len(fq) >= len(gq) and any(fq):
        while fq and fq[-1] == 0:
            fq.pop()
        if len(fq) < len(gq):
            break
        k = fq[-1] / gq[-1]
        d = len(fq) - len(gq)
        for i, gc in enumerate(gq):
            fq[i + d] -= k * gc
        fq.pop()
    return any(fq)


def poly_discriminant(f: ZX) -> int:
    """Discriminant of a squarefree integer polynomial."""
    d = zx_discriminant(f)
    if d == 0:
        raise InvalidParameterError("polynomial is not squarefree")
    return d
