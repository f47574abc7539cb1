"""Number-theoretic helpers, checked against naive reference loops."""

import math

import pytest

from knormal import numtheory
from knormal.errors import NotCoprime, NotPrimePower


def naive_is_prime(x):
    return x >= 2 and all(x % f for f in range(2, x))


def naive_order(a, modulus):
    value, e = a % modulus, 1
    while value != 1:
        value = value * a % modulus
        e += 1
    return e


def test_is_prime_matches_naive():
    for x in range(0, 500):
        assert numtheory.is_prime(x) == naive_is_prime(x)


def test_is_prime_larger_values():
    assert numtheory.is_prime(104729)  # 10000th prime
    assert not numtheory.is_prime(104729 * 104729)
    assert not numtheory.is_prime(2**16)


def test_factorize_roundtrip():
    for x in range(1, 2000):
        factors = numtheory.factorize(x)
        product = 1
        for p, e in factors.items():
            assert numtheory.is_prime(p)
            product *= p**e
        assert product == x


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        numtheory.factorize(0)


@pytest.mark.parametrize(
    "x,expected",
    [(2, (2, 1)), (9, (3, 2)), (16, (2, 4)), (27, (3, 3)), (25, (5, 2)), (64, (2, 6))],
)
def test_prime_power_decompose(x, expected):
    assert numtheory.prime_power_decompose(x) == expected


@pytest.mark.parametrize("x", [0, 1, 6, 12, 100, 2 * 3 * 5])
def test_prime_power_decompose_rejects(x):
    with pytest.raises(NotPrimePower):
        numtheory.prime_power_decompose(x)


def test_divisors():
    assert numtheory.divisors(1) == [1]
    assert numtheory.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert numtheory.divisors(49) == [1, 7, 49]
    for x in range(1, 400):
        assert numtheory.divisors(x) == [d for d in range(1, x + 1) if x % d == 0]


def test_moebius():
    expected = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 7: -1, 8: 0, 9: 0, 10: 1, 30: -1}
    for x, value in expected.items():
        assert numtheory.moebius(x) == value
    # sum over divisors of n is 1 exactly for n = 1
    for n in range(1, 200):
        total = sum(numtheory.moebius(d) for d in numtheory.divisors(n))
        assert total == (1 if n == 1 else 0)


def test_euler_phi_matches_naive():
    for x in range(1, 300):
        naive = sum(1 for a in range(1, x + 1) if math.gcd(a, x) == 1)
        assert numtheory.euler_phi(x) == naive


def test_multiplicative_order_examples():
    assert numtheory.multiplicative_order(2, 5) == 4
    assert numtheory.multiplicative_order(27, 11) == 5
    assert numtheory.multiplicative_order(7, 1) == 1


def test_multiplicative_order_matches_naive():
    for modulus in range(2, 60):
        for a in range(1, modulus):
            if math.gcd(a, modulus) != 1:
                with pytest.raises(NotCoprime):
                    numtheory.multiplicative_order(a, modulus)
            else:
                assert numtheory.multiplicative_order(a, modulus) == naive_order(a, modulus)


def test_multiplicative_order_rejects_bad_modulus():
    with pytest.raises(ValueError):
        numtheory.multiplicative_order(2, 0)


def test_gcd_qr_minus_one_examples():
    assert numtheory.gcd_qr_minus_one(2, 4, 5) == 5
    assert numtheory.gcd_qr_minus_one(25, 1, 3) == 3
    assert numtheory.gcd_qr_minus_one(27, 1, 11) == 1


def test_gcd_qr_minus_one_matches_bigint_gcd():
    for q in (2, 3, 4, 5, 25, 27):
        for r in range(1, 9):
            for n in range(1, 60):
                assert numtheory.gcd_qr_minus_one(q, r, n) == math.gcd(q**r - 1, n)


def test_gcd_qr_minus_one_divisibility_tower():
    # gcd(q**r - 1, n) divides gcd(q**(r*s) - 1, n) since q**r - 1 | q**(rs) - 1
    for q in (2, 3, 5, 16):
        for r in range(1, 6):
            for s in range(1, 5):
                for n in (4, 9, 15, 21, 50):
                    assert (
                        numtheory.gcd_qr_minus_one(q, r * s, n)
                        % numtheory.gcd_qr_minus_one(q, r, n)
                        == 0
                    )
