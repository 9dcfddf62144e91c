import pytest
from hypothesis import given, strategies as st

from twistsel.errors import InvalidParameterError
from twistsel.intmath import (
    factorint,
    is_prime,
    is_square,
    is_squarefree,
    jacobi,
    kronecker,
    legendre,
    primes_up_to,
    primitive_root,
    squarefree_sieve,
    valuation,
)


def test_primes_small():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [n for n in range(60) if is_prime(n)] == primes_up_to(59)


def test_is_prime_larger():
    assert is_prime(10**9 + 7)
    assert not is_prime(2**61 + 1)  # divisible by 3
    assert not is_prime(561)  # Carmichael
    assert is_prime(2**61 - 1)


@given(st.integers(min_value=2, max_value=10**6))
def test_factorint_reconstructs(n):
    f = factorint(n)
    prod = 1
    for p, e in f.items():
        assert is_prime(p)
        prod *= p**e
    assert prod == n


def test_factorint_bigger():
    n = 2**5 * 3 * 10**9 + 7  # arbitrary
    f = factorint(n)
    prod = 1
    for p, e in f.items():
        prod *= p**e
    assert prod == n
    assert factorint(-12) == {2: 2, 3: 1}
    with pytest.raises(InvalidParameterError):
        factorint(0)


@given(st.integers(min_value=-300, max_value=300))
def test_squarefree_matches_definition(n):
    if n == 0:
        assert not is_squarefree(n)
        return
    naive = all(n % (k * k) for k in range(2, int(abs(n)) + 1) if k * k <= abs(n))
    assert is_squarefree(n) == naive


def test_squarefree_sieve_agrees():
    lo, hi = -100, -1
    flags = squarefree_sieve(lo, hi)
    for n in range(lo, hi + 1):
        assert flags[n - lo] == is_squarefree(n)


@given(st.integers(min_value=-200, max_value=200))
def test_legendre_vs_jacobi(a):
    for p in (3, 5, 7, 11, 13):
        assert legendre(a, p) == jacobi(a, p) == kronecker(a, p)


def test_legendre_euler():
    # quadratic residues mod 11
    squares = {x * x % 11 for x in range(1, 11)}
    for a in range(1, 11):
        assert legendre(a, 11) == (1 if a in squares else -1)


def test_kronecker_at_2():
    # (D/2) for odd D follows the mod 8 rule
    # (a/2) = +1 for a = +-1 mod 8 and -1 for a = +-3 mod 8
    for D, want in ((1, 1), (7, 1), (9, 1), (3, -1), (5, -1), (-1, 1), (-7, 1), (-5, -1)):
        assert kronecker(D, 2) == want
    assert kronecker(4, 2) == 0


def test_valuation():
    assert valuation(48, 2) == 4
    assert valuation(-27, 3) == 3
    assert valuation(5, 7) == 0
    with pytest.raises(InvalidParameterError):
        valuation(0, 5)


def test_primitive_root():
    for p in (3, 5, 7, 11, 13, 101):
        g = primitive_root(p)
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        assert len(seen) == p - 1


def test_is_square():
    assert is_square(0) and is_square(49)
    assert not is_square(50) and not is_square(-4)
