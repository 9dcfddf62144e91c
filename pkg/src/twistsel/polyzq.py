"""Dense exact polynomial arithmetic over Z and F_p, with factorization over Q.

Polynomials are lists of coefficients, lowest degree first, matching the text
interchange format. The factorizer is Zassenhaus-style: factor mod several
good primes, intersect degree patterns, Hensel-lift one of them quadratically
past the Mignotte bound, then recombine subsets bounded by total degree. The
bound makes degree-84 inputs tractable; only factors up to the requested
degree are extracted and the cofactor is reported as a residual.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import InvalidParameterError, ResourceError

ZX = list  # integer coefficients, lowest degree first

_MAX_CANDIDATES = 2 * 10**6  # recombination work cap before ResourceError


# ---------------------------------------------------------------------------
# basic Z[x] operations


def zx_trim(f: ZX) -> ZX:
    while f and f[-1] == 0:
        f.pop()
    return f


def zx_deg(f: ZX) -> int:
    return len(f) - 1


def zx_add(f: ZX, g: ZX) -> ZX:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return zx_trim(out)


def zx_sub(f: ZX, g: ZX) -> ZX:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] -= c
    return zx_trim(out)


def zx_neg(f: ZX) -> ZX:
    return [-c for c in f]


def zx_mul(f: ZX, g: ZX) -> ZX:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return out


def zx_mul_scalar(f: ZX, c: int) -> ZX:
    return [] if c == 0 else [c * a for a in f]


def zx_pow(f: ZX, e: int) -> ZX:
    out = [1]
    for _ in range(e):
        out = zx_mul(out, f)
    return out


def zx_eval(f: ZX, x):
    out = 0
    for c in reversed(f):
        out = out * x + c
    return out


def zx_derivative(f: ZX) -> ZX:
    return zx_trim([i * c for i, c in enumerate(f)][1:])


def zx_content(f: ZX) -> int:
    c = 0
    for a in f:
        c = math.gcd(c, a)
    return c


def zx_primitive(f: ZX) -> tuple[int, ZX]:
    """(content with the sign of the leading coefficient, primitive part)."""
    if not f:
        return 0, []
    c = zx_content(f)
    if f[-1] < 0:
        c = -c
    return c, [a // c for a in f]


def zx_div_exact(f: ZX, g: ZX) -> ZX | None:
    """Quotient f / g over Z, or None when g does not divide f exactly."""
    if not g:
        raise InvalidParameterError("division by zero polynomial")
    f = f[:]
    if not f:
        return []
    if len(f) < len(g):
        return None
    q = [0] * (len(f) - len(g) + 1)
    lc = g[-1]
    for k in range(len(f) - len(g), -1, -1):
        head = f[k + len(g) - 1]
        if head % lc:
            return None
        coef = head // lc
        q[k] = coef
        if coef:
            for i, gc in enumerate(g):
                f[k + i] -= coef * gc
    return q if not any(f[: len(g) - 1]) else None


def zx_pseudo_rem(f: ZX, g: ZX) -> ZX:
    """prem(f, g): lc(g)^(deg f - deg g + 1) * f mod g."""
    f, g = f[:], g[:]
    df, dg = zx_deg(f), zx_deg(g)
    if dg < 0:
        raise InvalidParameterError("pseudo-remainder by zero")
    lc = g[-1]
    n = df - dg + 1
    while zx_deg(f) >= dg and f:
        shift = zx_deg(f) - dg
        head = f[-1]
        f = zx_sub(zx_mul_scalar(f, lc), zx_mul_scalar([0] * shift + g, head))
        n -= 1
    return zx_mul_scalar(f, lc ** max(n, 0))


def zx_gcd(f: ZX, g: ZX) -> ZX:
    """Primitive gcd over Z, positive leading coefficient; primitive PRS."""
    f, g = zx_trim(f[:]), zx_trim(g[:])
    if not f:
        return zx_primitive(g)[1]
    if not g:
        return zx_primitive(f)[1]
    cf, f = zx_primitive(f)
    cg, g = zx_primitive(g)
    c = math.gcd(abs(cf), abs(cg))
    if zx_deg(f) < zx_deg(g):
        f, g = g, f
    while g:
        r = zx_pseudo_rem(f, g)
        f, g = g, zx_primitive(r)[1] if r else []
    if zx_deg(f) == 0:
        return [c] if c else [1]
    return f


def zx_squarefree_decomposition(f: ZX) -> list[tuple[ZX, int]]:
    """Yun's algorithm on a primitive polynomial: f = prod g_i^i, g_i squarefree coprime."""
    out: list[tuple[ZX, int]] = []
    fp = zx_derivative(f)
    a = zx_gcd(f, fp)
    if zx_deg(a) == 0:
        return [(f, 1)]
    b = zx_div_exact(f, a)
    c = zx_div_exact(fp, a)
    i = 1
    while True:
        d = zx_sub(c, zx_derivative(b))
        if not d:
            if zx_deg(b) > 0:
                out.append((b, i))
            return out
        g = zx_gcd(b, d)
        if zx_deg(g) > 0:
            out.append((g, i))
        b = zx_div_exact(b, g)
        c = zx_div_exact(d, g)
        i += 1


def zx_l2_norm_sq(f: ZX) -> int:
    return sum(c * c for c in f)


# ---------------------------------------------------------------------------
# F_p[x] operations (p prime; lists lowest degree first, coefficients in [0, p))


def fp_norm(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def fp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def fp_divmod(f, g, p):
    if not g:
        raise InvalidParameterError("division by zero polynomial")
    f = f[:]
    q = [0] * max(len(f) - len(g) + 1, 1)
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g) and f:
        k = f[-1] * inv % p
        d = len(f) - len(g)
        q[d] = k
        for i, gc in enumerate(g):
            f[i + d] = (f[i + d] - k * gc) % p
        while f and f[-1] == 0:
            f.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, f


def fp_gcd(f, g, p):
    f, g = fp_norm(f, p), fp_norm(g, p)
    while g:
        f, g = g, fp_divmod(f, g, p)[1]
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def fp_monic(f, p):
    f = fp_norm(f, p)
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def fp_pow_mod(f, e, m, p):
    out = [1]
    f = fp_divmod(f, m, p)[1]
    while e:
        if e & 1:
            out = fp_divmod(fp_mul(out, f, p), m, p)[1]
        f = fp_divmod(fp_mul(f, f, p), m, p)[1]
        e >>= 1
    return out


def fp_sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c % p
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def fp_derivative(f, p):
    return fp_norm([i * c for i, c in enumerate(f)][1:], p)


def fp_is_squarefree(f, p):
    d = fp_derivative(f, p)
    if not d:
        return False
    return len(fp_gcd(f, d, p)) == 1


def fp_ddf(f, p):
    """Distinct-degree factorization of a monic squarefree f: list of (product, degree)."""
    out = []
    v = f[:]
    h = [0, 1]
    d = 0
    while zx_deg(v) >= 2 * (d + 1):
        d += 1
        h = fp_pow_mod(h, p, v, p)
        g = fp_gcd(fp_sub(h, [0, 1], p), v, p)
        if zx_deg(g) > 0:
            out.append((g, d))
            v = fp_divmod(v, g, p)[0]
            h = fp_divmod(h, v, p)[1]
    if zx_deg(v) > 0:
        out.append((v, zx_deg(v)))
    return out


def fp_edf(f, d, p, rng: random.Random):
    """Cantor-Zassenhaus split of monic squarefree f into its degree-d irreducible factors."""
    n = zx_deg(f)
    if n == d:
        return [f]
    while True:
        r = fp_norm([rng.randrange(p) for _ in range(n)], p)
        if zx_deg(r) < 1:
            continue
        g = fp_gcd(r, f, p)
        if not 0 < zx_deg(g) < n:
            if p == 2:
                # trace map: r + r^2 + r^4 + ... + r^(2^(d-1)) mod f
                acc = r[:]
                h = r[:]
                for _ in range(d - 1):
                    acc = fp_pow_mod(acc, 2, f, 2)
                    h = fp_norm(
                        [x + y for x, y in zip(h + [0] * len(acc), acc + [0] * len(h))], 2
                    )
            else:
                h = fp_sub(fp_pow_mod(r, (p**d - 1) // 2, f, p), [1], p)
            g = fp_gcd(h, f, p)
            if not 0 < zx_deg(g) < n:
                continue
        return fp_edf(g, d, p, rng) + fp_edf(fp_divmod(f, g, p)[0], d, p, rng)


def fp_factor_squarefree(f, p, seed: int = 0) -> list[list[int]]:
    """Monic irreducible factors of a monic squarefree f over F_p, sorted."""
    rng = random.Random(0x5EED ^ seed ^ (p << 16))
    out = []
    for g, d in fp_ddf(f, p):
        out.extend(fp_edf(g, d, p, rng))
    return sorted(out, key=lambda h: (len(h), h))


def _fp_squarefree_parts(f, p) -> list[tuple[list[int], int]]:
    # char-p squarefree decomposition; the p-th root step uses that Frobenius
    # fixes F_p, so g(x)^p = g(x^p) coefficientwise.
    out: list[tuple[list[int], int]] = []
    c = fp_gcd(f, fp_derivative(f, p), p)
    w = fp_divmod(f, c, p)[0]
    i = 1
    while zx_deg(w) > 0:
        y = fp_gcd(w, c, p)
        z = fp_divmod(w, y, p)[0]
        if zx_deg(z) > 0:
            out.append((z, i))
        w = y
        c = fp_divmod(c, y, p)[0]
        i += 1
    if zx_deg(c) > 0:
        root = [c[j] for j in range(0, len(c), p)]
        out.extend((g, m * p) for g, m in _fp_squarefree_parts(root, p))
    return out


def fp_factor(f, p) -> tuple[int, list[tuple[list[int], int]]]:
    """Complete factorization over F_p: (lc, [(monic irreducible, multiplicity)])."""
    f = fp_norm(f, p)
    if not f:
        raise InvalidParameterError("cannot factor the zero polynomial")
    lc = f[-1]
    f = fp_monic(f, p)
    out: list[tuple[list[int], int]] = []
    for part, mult in _fp_squarefree_parts(f, p):
        for g in fp_factor_squarefree(part, p):
            out.append((g, mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return lc, out


# ---------------------------------------------------------------------------
# Hensel lifting


def _zx_trunc(f: ZX, m: int) -> ZX:
    """Reduce coefficients into the symmetric residue system mod m."""
    out = []
    for c in f:
        c %= m
        if 2 * c > m:
            c -= m
        out.append(c)
    return zx_trim(out)


def _zm_divmod_monic(f: ZX, g: ZX, m: int):
    """Division by monic g with coefficients taken mod m."""
    r = zx_trim([c % m for c in f])
    dg = len(g) - 1
    q = [0] * max(len(r) - dg, 1)
    while r and len(r) - 1 >= dg:
        d = len(r) - 1 - dg
        k = r[-1]
        q[d] = k
        for i, gc in enumerate(g):
            r[i + d] = (r[i + d] - k * gc) % m
        zx_trim(r)
    return zx_trim(q), r


def _hensel_step(m: int, f: ZX, g: ZX, h: ZX, s: ZX, t: ZX):
    """One quadratic lift: from f = g h (mod m) to mod m^2, h monic."""
    M = m * m
    e = _zx_trunc(zx_sub(f, zx_mul(g, h)), M)
    q, r = _zm_divmod_monic(zx_mul(s, e), h, M)
    G = _zx_trunc(zx_add(zx_add(g, zx_mul(t, e)), zx_mul(q, g)), M)
    H = _zx_trunc(zx_add(h, r), M)
    b = _zx_trunc(zx_sub(zx_add(zx_mul(s, G), zx_mul(t, H)), [1]), M)
    c, d = _zm_divmod_monic(zx_mul(s, b), H, M)
    S = _zx_trunc(zx_sub(s, d), M)
    T = _zx_trunc(zx_sub(zx_sub(t, zx_mul(t, b)), zx_mul(c, G)), M)
    return G, H, S, T


def _fp_gcdex(f, g, p):
    """(s, t) with s f + t g = 1 mod p for coprime f, g."""
    r0, r1 = fp_norm(f, p), fp_norm(g, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, fp_sub(s0, fp_mul(q, s1, p), p)
        t0, t1 = t1, fp_sub(t0, fp_mul(q, t1, p), p)
    if zx_deg(r0) != 0:
        raise InvalidParameterError("gcdex of non-coprime polynomials")
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def hensel_lift(p: int, f: ZX, factors: list[list[int]], target: int) -> list[ZX]:
    """Lift the monic mod-p factors of f to monic factors mod p^target.

    The product of the lifted factors equals f / lc(f) made monic mod p^target.
    """
    r = len(factors)
    lc = f[-1]
    if r == 1:
        inv = pow(lc, -1, p**target)
        return [_zx_trunc(zx_mul_scalar(f, inv), p**target)]
    k = r // 2
    steps = max(1, math.ceil(math.log2(target)))
    g = [lc % p]
    for fac in factors[:k]:
        g = fp_mul(g, fac, p)
    h = [1]
    for fac in factors[k:]:
        h = fp_mul(h, fac, p)
    s, t = _fp_gcdex(g, h, p)
    m = p
    G, H, S, T = g, h, s, t
    for _ in range(steps):
        G, H, S, T = _hensel_step(m, f, G, H, S, T)
        m = m * m
        if m >= p ** (2 * target):
            break
    return hensel_lift(p, G, factors[:k], target) + hensel_lift(p, H, factors[k:], target)


# ---------------------------------------------------------------------------
# factorization over Z with a degree bound


def _good_primes(f: ZX, count: int, p_limit: int = 10000) -> list[int]:
    """Odd primes not dividing lc(f) where f stays squarefree of full degree."""
    from .intmath import is_prime

    out = []
    p = 2
    while len(out) < count:
        p += 1
        while not is_prime(p):
            p += 1
        if p > p_limit:
            raise ResourceError("no suitable factorization primes below threshold")
        if f[-1] % p == 0:
            continue
        fbar = fp_norm(f, p)
        if zx_deg(fbar) == zx_deg(f) and fp_is_squarefree(fbar, p):
            out.append(p)
    return out


def _subset_degree_sums(degrees: list[int], bound: int) -> set[int]:
    reachable = 1  # bitset
    for d in degrees:
        reachable |= reachable << d
        reachable &= (1 << (bound + 1)) - 1
    return {i for i in range(1, bound + 1) if reachable >> i & 1}


def zx_factor_bounded(f: ZX, bound: int, n_primes: int = 3) -> tuple[list[ZX], ZX]:
    """Irreducible factors of degree <= bound of a primitive squarefree f, plus cofactor.

    Returns (factors, residual) with prod(factors) * residual = f exactly. The
    factors are primitive with positive leading coefficient, sorted.
    """
    f = zx_trim(f[:])
    if zx_deg(f) < 1:
        return [], f
    bound = min(bound, zx_deg(f))
    primes = _good_primes(f, n_primes)
    patterns = {}
    for p in primes:
        patterns[p] = fp_factor_squarefree(fp_monic(f, p), p)
    allowed = None
    for p in primes:
        sums = _subset_degree_sums([zx_deg(g) for g in patterns[p]], bound)
        allowed = sums if allowed is None else (allowed & sums)
    if not allowed:
        return [], f
    # lift at the prime with the fewest modular factors
    p = min(primes, key=lambda q: (len(patterns[q]), q))
    modular = patterns[p]
    # Mignotte-style bound for a degree <= bound factor of f, times lc(f)
    bnd = 2**bound * math.isqrt(zx_l2_norm_sq(f)) + 1
    need = 2 * abs(f[-1]) * bnd + 1
    target = 1
    while p**target < need:
        target *= 2
    lifted = hensel_lift(p, f, modular, target)
    pl = p**target
    return _recombine(f, lifted, pl, allowed, bound)


def _recombine(f: ZX, lifted: list[ZX], pl: int, allowed: set[int], bound: int):
    found: list[ZX] = []
    remaining = list(range(len(lifted)))
    degs = {i: zx_deg(lifted[i]) for i in remaining}
    budget = [_MAX_CANDIDATES]

    def try_subset(indices: list[int]) -> tuple[ZX, ZX] | None:
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceError(
                "factor recombination exceeded its work cap (non-squarefree input?)"
            )
        g = [f[-1] % pl]
        for i in indices:
            g = _zx_mul_mod(g, lifted[i], pl)
        g = _zx_trunc(g, pl)
        _, g = zx_primitive(g)
        if zx_deg(g) < 1:
            return None
        q = zx_div_exact(f, g)
        if q is None:
            return None
        return g, q

    size = 1
    while remaining and size <= len(remaining):
        hit = False
        for combo in _combos_bounded(remaining, degs, size, bound, allowed):
            res = try_subset(combo)
            if res is None:
                continue
            g, q = res
            found.append(g)
            f = q
            remaining = [i for i in remaining if i not in set(combo)]
            hit = True
            break
        if not hit:
            size += 1
    found.sort(key=lambda h: (zx_deg(h), h))
    return found, f


def _combos_bounded(indices, degs, size, bound, allowed):
    """Subsets of the given size whose total degree is in the allowed set."""
    idx = list(indices)

    def rec(start, chosen, total):
        if len(chosen) == size:
            if total in allowed:
                yield list(chosen)
            return
        for k in range(start, len(idx)):
            i = idx[k]
            if total + degs[i] > bound:
                continue
            chosen.append(i)
            yield from rec(k + 1, chosen, total + degs[i])
            chosen.pop()

    yield from rec(0, [], 0)


def _zx_mul_mod(f: ZX, g: ZX, m: int) -> ZX:
    out = [0] * max(len(f) + len(g) - 1, 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % m
    return zx_trim(out)


def zx_factor(f: ZX) -> tuple[int, list[tuple[ZX, int]]]:
    """Complete factorization over Z: (content-with-sign, [(primitive factor, multiplicity)])."""
    f = zx_trim(f[:])
    if not f:
        raise InvalidParameterError("cannot factor the zero polynomial")
    c, f = zx_primitive(f)
    if zx_deg(f) == 0:
        return c, []
    out: list[tuple[ZX, int]] = []
    for part, mult in zx_squarefree_decomposition(f):
        factors, residual = zx_factor_bounded(part, zx_deg(part))
        if zx_deg(residual) > 0:
            _, residual = zx_primitive(residual)
            factors.append(residual)
        for g in sorted(factors, key=lambda h: (zx_deg(h), h)):
            out.append((g, mult))
    return c, out


def zx_is_irreducible(f: ZX) -> bool:
    c, parts = zx_factor(f)
    return len(parts) == 1 and parts[0][1] == 1 and zx_deg(parts[0][0]) == zx_deg(zx_trim(f[:]))


# ---------------------------------------------------------------------------
# resultants (fraction-free Bareiss on the Sylvester matrix)


def _bareiss_det(M, mul, sub, div_exact, is_zero):
    """Fraction-free determinant; entries from any integral domain with exact division."""
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = None
    for k in range(n - 1):
        if is_zero(M[k][k]):
            for i in range(k + 1, n):
                if not is_zero(M[i][k]):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0 if isinstance(M[0][0], int) else []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = sub(mul(M[i][j], M[k][k]), mul(M[i][k], M[k][j]))
                if prev is not None:
                    val = div_exact(val, prev)
                M[i][j] = val
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else mul(det, -1 if isinstance(det, int) else [-1])


def zx_resultant(f: ZX, g: ZX) -> int:
    """Res(f, g) over Z via the Sylvester determinant."""
    f, g = zx_trim(f[:]), zx_trim(g[:])
    if not f or not g:
        return 0
    n, m = zx_deg(f), zx_deg(g)
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    rows = []
    fh = list(reversed(f))
    gh = list(reversed(g))
    for i in range(m):
        rows.append([0] * i + fh + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gh + [0] * (size - m - 1 - i))
    return _bareiss_det(
        rows,
        lambda a, b: a * b,
        lambda a, b: a - b,
        lambda a, b: a // b,
        lambda a: a == 0,
    )


def zx_discriminant(f: ZX) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    f = zx_trim(f[:])
    n = zx_deg(f)
    if n < 1:
        raise InvalidParameterError("discriminant needs degree >= 1")
    res = zx_resultant(f, zx_derivative(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val, rem = divmod(sign * res, f[-1])
    if rem:
        raise InvalidParameterError("internal: resultant not divisible by leading coefficient")
    return val


def resultant_eliminate(g: ZX, f: ZX) -> ZX:
    """Res_t(g(t), z - f(t)) as a polynomial in z: the norm-form of f modulo g.

    Entries of the Sylvester matrix live in Z[z]; Bareiss keeps everything exact.
    """
    g = zx_trim(g[:])
    f = zx_trim(f[:])
    n, m = zx_deg(g), zx_deg(f)
    if n < 1:
        raise InvalidParameterError("base polynomial must be nonconstant")
    if m < 1:  # constant f: the norm form is (z - f0)^n
        return zx_pow([-(f[0] if f else 0), 1], n)
    # rows for g: coefficients in t are constants of Z[z]; rows for z - f(t):
    # constant term in t is [ -f0, 1 ] (i.e. z - f0), others are constants -f_i.
    size = n + m
    gh = [[c] if c else [] for c in reversed(g)]
    hh: list[list[int]] = []
    for i, c in enumerate(reversed(f)):
        hh.append([-c] if c else [])
    hh[-1] = zx_trim([-f[0], 1])
    rows = []
    for i in range(m):
        rows.append([[]] * i + gh + [[]] * (size - n - 1 - i))
    for i in range(n):
        rows.append([[]] * i + hh + [[]] * (size - m - 1 - i))
    det = _bareiss_det(
        rows,
        zx_mul,
        zx_sub,
        lambda a, b: zx_div_exact(a, b),
        lambda a: not zx_trim(a[:]),
    )
    return zx_trim(det if isinstance(det, list) else [det])


def zx_compose_x_square(h: ZX) -> ZX:
    """h(z) -> h(x^2)."""
    out = [0] * (2 * len(h) - 1) if h else []
    for i, c in enumerate(h):
        out[2 * i] = c
    return zx_trim(out)


# ---------------------------------------------------------------------------
# text form


def zx_to_string(f: ZX) -> str:
    return "[" + ",".join(str(c) for c in f) + "]"


def poly_from_string(text: str) -> ZX:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise InvalidParameterError("polynomial text must be a bracketed coefficient list")
    inner = text[1:-1].strip()
    if not inner:
        return []
    out = []
    for part in inner.split(","):
        c = Fraction(part.strip())
        if c.denominator != 1:
            raise InvalidParameterError("integer coefficient lists only at this interface")
        out.append(int(c))
    return zx_trim(out)
