# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot enumeration kernels in _kernels_py.

Same contracts as the pure versions: count_points assumes the caller reduced
the coefficients mod p and that p <= 10**6; reduced_forms/class_number assume
a negative discriminant congruent to 0 or 1 mod 4.
"""

from libc.stdlib cimport calloc, free

BACKEND = "cython"


def count_points(long long a1, long long a2, long long a3, long long a4,
                 long long a6, long long p):
    cdef long long x, y, z, g, rhs, count
    cdef long long b2, b4, b6
    cdef unsigned char* sq
    if p == 2:
        count = 1
        for x in range(2):
            rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2
            for y in range(2):
                if (y * y + a1 * x * y + a3 * y) % 2 == rhs:
                    count += 1
        return count
    b2 = (a1 * a1 + 4 * a2) % p
    b4 = (2 * a4 + a1 * a3) % p
    b6 = (a3 * a3 + 4 * a6) % p
    sq = <unsigned char*> calloc(p, 1)
    if sq == NULL:
        raise MemoryError()
    try:
        for z in range(p // 2 + 1):
            sq[(z * z) % p] = 1
        count = 1
        for x in range(p):
            g = (((4 * x + b2) % p * x + 2 * b4) % p * x + b6) % p
            if g == 0:
                count += 1
            elif sq[g]:
                count += 2
    finally:
        free(sq)
    return count


cdef long long _gcd3(long long a, long long b, long long c):
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    while c:
        t = a % c
        a = c
        c = t
    return a


cdef long long _isqrt(long long n):
    cdef long long r = <long long> (n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def reduced_forms(long long D):
    cdef long long a, b, c, t, amax
    out = []
    amax = _isqrt((-D) // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            t = b * b - D
            if t % (4 * a):
                continue
            c = t // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if _gcd3(a, b if b >= 0 else -b, c) != 1:
                continue
            out.append((a, b, c))
    return out


def class_number(long long D):
    cdef long long a, b, c, t, amax, h
    h = 0
    amax = _isqrt((-D) // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            t = b * b - D
            if t % (4 * a):
                continue
            c = t // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if _gcd3(a, b if b >= 0 else -b, c) != 1:
                continue
            h += 1
    return h
