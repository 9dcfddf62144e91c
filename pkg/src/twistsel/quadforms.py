"""Class groups of imaginary quadratic fields via binary quadratic forms.

Forms (a, b, c) of discriminant D = b^2 - 4ac < 0 are enumerated exhaustively
in reduced shape, composed by Dirichlet composition, and the group structure
is read off from torsion counts. Only imaginary discriminants: positive D
would drag in infinite unit groups on purpose left out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ._kernels import class_number as _kernel_class_number
from ._kernels import reduced_forms as _kernel_reduced_forms
from .errors import InvalidParameterError, UnsupportedError
from .intmath import is_squarefree


def field_discriminant(d: int) -> int:
    """Fundamental discriminant of Q(sqrt(d)) for squarefree d: d, or 4d when d != 1 mod 4."""
    if d in (0, 1) or not is_squarefree(d):
        raise InvalidParameterError("d must be a squarefree integer other than 0 and 1")
    return d if d % 4 == 1 else 4 * d


@dataclass(frozen=True)
class QuadDisc:
    """A squarefree d with the discriminant D of Q(sqrt(d))."""

    d: int

    @property
    def D(self) -> int:
        return field_discriminant(self.d)


def _check_disc(D: int) -> None:
    if D >= 0:
        raise UnsupportedError("only negative discriminants are supported here")
    if D % 4 not in (0, 1):
        raise InvalidParameterError("a discriminant must be 0 or 1 mod 4")


@dataclass(frozen=True)
class BQF:
    """Primitive positive definite binary quadratic form a x^2 + b xy + c y^2."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0 or self.disc >= 0:
            raise InvalidParameterError("form must be positive definite with negative discriminant")
        if math.gcd(math.gcd(self.a, self.b), self.c) != 1:
            raise InvalidParameterError("form must be primitive")

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        if not (-self.a < self.b <= self.a <= self.c):
            return False
        return self.b >= 0 if self.a == self.c else True

    def reduced(self) -> "BQF":
        a, b, c = self.a, self.b, self.c
        while True:
            if -a < b <= a <= c:
                break
            if b > a or b <= -a:
                # normalize: shift b into (-a, a]
                r = (a - b) // (2 * a)
                b, c = b + 2 * r * a, a * r * r + b * r + c
            if a > c:
                a, b, c = c, -b, a
        if a == c and b < 0:
            b = -b
        return BQF(a, b, c)

    def inverse(self) -> "BQF":
        return BQF(self.a, -self.b, self.c).reduced()

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def principal_form(D: int) -> BQF:
    _check_disc(D)
    k = D % 2
    return BQF(1, k, (k * k - D) // 4)


def compose(f: BQF, g: BQF) -> BQF:
    """Dirichlet composition, reduced; the group law of cl(D)."""
    if f.disc != g.disc:
        raise InvalidParameterError("forms must share a discriminant")
    if f.a > g.a:
        f, g = g, f
    a1, b1, c1 = f.a, f.b, f.c
    a2, b2, c2 = g.a, g.b, g.c
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _v = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u, v = _xgcd(s, d)
        x2, y2 = u, -v
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (c2 * d1 + r * (b2 + v2 * r)) // v1
    return BQF(a3, b3, c3).reduced()


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x a + y b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def form_power(f: BQF, n: int) -> BQF:
    out = principal_form(f.disc)
    base = f
    if n < 0:
        base = f.inverse()
        n = -n
    while n:
        if n & 1:
            out = compose(out, base)
        base = compose(base, base)
        n >>= 1
    return out


def reduced_forms(D: int) -> list[BQF]:
    """All primitive reduced forms of discriminant D < 0 (exhaustive enumeration)."""
    _check_disc(D)
    return [BQF(a, b, c) for a, b, c in _kernel_reduced_forms(D)]


def class_number(D: int) -> int:
    _check_disc(D)
    return _kernel_class_number(D)


def form_order(f: BQF) -> int:
    one = principal_form(f.disc)
    g = f.reduced()
    n = 1
    while g != one:
        g = compose(g, f)
        n += 1
    return n


@dataclass(frozen=True)
class ClassGroupData:
    D: int
    forms: tuple[BQF, ...]
    h: int
    structure: tuple[int, ...]  # elementary divisors d_1 | d_2 | ... | d_k

    def ell_rank(self, ell: int) -> int:
        return sum(1 for d in self.structure if d % ell == 0)


@lru_cache(maxsize=None)
def class_group_structure(D: int) -> ClassGroupData:
    """Full structure of cl(D): forms, order, elementary divisors.

    The p-parts are read off torsion counts: the number of cyclic factors of
    order divisible by p^k is log_p of #cl[p^k] / #cl[p^(k-1)].
    """
    forms = reduced_forms(D)
    h = len(forms)
    structure: dict[int, list[int]] = {}
    n = h
    p = 2
    while n > 1:
        if n % p:
            p += 1 if p == 2 else 2
            continue
        # p-part: count p^k-torsion layer by layer
        layers = []
        prev = 1
        k = 1
        while True:
            cnt = sum(1 for f in forms if form_power(f, p**k) == principal_form(D))
            if cnt == prev:
                break
            layers.append(cnt // prev)
            prev = cnt
            k += 1
        # layers[i] = p^(number of cyclic p-factors of order >= p^(i+1))
        exps = []
        for layer in layers:
            exps.append(round(math.log(layer, p)))
        # exps is non-increasing; cyclic factor orders from the conjugate partition
        n_factors = exps[0] if exps else 0
        orders = [0] * n_factors
        for count in exps:
            for i in range(count):
                orders[i] += 1
        structure[p] = sorted(p**e for e in orders)
        while n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    # merge prime-power cyclic factors into elementary divisors
    divisors: list[int] = []
    parts = {p: list(reversed(v)) for p, v in structure.items()}
    while any(parts.values()):
        d = 1
        for p in parts:
            if parts[p]:
                d *= parts[p].pop(0)
        divisors.append(d)
    divisors.sort()
    return ClassGroupData(D, tuple(forms), h, tuple(divisors))


def ell_rank(D: int, ell: int) -> tuple[int, int]:
    """(r, ell^r) with r the ell-rank of cl(D); counts ell-torsion directly."""
    _check_disc(D)
    if ell < 2:
        raise InvalidParameterError("ell must be a prime")
    one = principal_form(D)
    count = sum(1 for f in reduced_forms(D) if form_power(f, ell) == one)
    r = 0
    while ell**r < count:
        r += 1
    if ell**r != count:
        raise InvalidParameterError("internal: ell-torsion count is not a power of ell")
    return r, ell**r
