import pytest

from period_lab.errors import NotPrimePower, OutOfRange
from period_lab.intfactor import (
    INT64_MAX,
    divisor_list,
    euler_phi,
    factor_integer,
    is_prime,
    lcm64,
    split_prime_power,
)


def naive_factor(n):
    """Oracle: plain trial division."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def test_factor_examples():
    assert factor_integer(15) == ((3, 1), (5, 1))
    assert factor_integer(1) == ()
    # derived by trial division
    assert naive_factor(2 ** 20 - 1) == ((3, 1), (5, 2), (11, 1), (31, 1), (41, 1))
    assert factor_integer(2 ** 20 - 1) == ((3, 1), (5, 2), (11, 1), (31, 1), (41, 1))


def test_factor_matches_oracle_small():
    for n in range(1, 2000):
        assert factor_integer(n) == naive_factor(n)


def test_factor_reconstructs_and_entries_prime():
    for n in (360, 2 ** 31 - 1, 10 ** 12 + 39, 999983 * 999979):
        fac = factor_integer(n)
        prod = 1
        for p, e in fac:
            assert naive_factor(p) == ((p, 1),)  # prime, by trial division
            prod *= p ** e
        assert prod == n
        assert list(fac) == sorted(fac)


def test_factor_pollard_path():
    # both primes sit above the trial-division budget
    p, q = 1_000_003, 1_000_033
    assert factor_integer(p * q) == ((p, 1), (q, 1))
    assert factor_integer(p * p) == ((p, 2),)


def test_factor_range_errors():
    for bad in (0, -5, INT64_MAX + 1):
        with pytest.raises(OutOfRange):
            factor_integer(bad)


def test_is_prime():
    primes_below_100 = [n for n in range(100) if naive_factor(n) == ((n, 1),) and n > 1]
    assert [n for n in range(100) if is_prime(n)] == primes_below_100
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 62 - 1)


def test_divisor_list():
    assert divisor_list(6) == [1, 2, 3, 6]
    assert divisor_list(1) == [1]
    assert divisor_list(15) == [1, 3, 5, 15]
    assert divisor_list(2 ** 4 - 1) == [1, 3, 5, 15]
    for n in (12, 36, 100, 2 ** 10):
        divs = divisor_list(n)
        assert divs == sorted(d for d in range(1, n + 1) if n % d == 0)


def test_euler_phi():
    # oracle: count coprime residues
    from math import gcd

    for n in (1, 2, 12, 15, 31, 100):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_lcm64():
    assert lcm64() == 1
    assert lcm64(4, 6) == 12
    assert lcm64(3, 20) == 60
    with pytest.raises(OverflowError):
        lcm64(2 ** 62, 3)
    with pytest.raises(OutOfRange):
        lcm64(0, 3)


def test_split_prime_power():
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(2) == (2, 1)
    assert split_prime_power(64) == (2, 6)
    for bad in (1, 6, 12, 100):
        with pytest.raises(NotPrimePower):
            split_prime_power(bad)
