"""Integer primality, factorization, and divisor helpers.

Everything here is exact and deterministic: trial division up to a fixed
budget with a fixed-increment Pollard rho fallback, so results (and
failures) reproduce across runs.  All entry points police the 64-bit
range the rest of the library promises.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import NotPrimePower, OutOfRange

INT64_MAX = (1 << 63) - 1
TRIAL_LIMIT = 10 ** 6

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n <= INT64_MAX."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n <= TRIAL_LIMIT:
        d = 41
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True
    # Miller-Rabin with these bases is deterministic far beyond 2^63.
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n, found deterministically."""
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1  # cycle collapsed without a split; restart with new increment


@lru_cache(maxsize=None)
def factor_integer(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((prime, exponent), ...), primes ascending.

    factor_integer(1) is the empty product ().  The cache is insert-only
    and shared; entries are immutable tuples.
    """
    if not isinstance(n, int) or not 1 <= n <= INT64_MAX:
        raise OutOfRange(f"factor_integer requires 1 <= n <= {INT64_MAX}, got {n!r}")
    found: dict[int, int] = {}
    rem = n
    while rem % 2 == 0:
        found[2] = found.get(2, 0) + 1
        rem //= 2
    d = 3
    while d <= TRIAL_LIMIT and d * d <= rem:
        while rem % d == 0:
            found[d] = found.get(d, 0) + 1
            rem //= d
        d += 2
    if rem > 1:
        stack = [rem]
        while stack:
            m = stack.pop()
            if is_prime(m):
                found[m] = found.get(m, 0) + 1
            else:
                f = _pollard_rho(m)
                stack.append(f)
                stack.append(m // f)
    return tuple(sorted(found.items()))


def divisor_list(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for prime, exp in factor_integer(n):
        powers = [prime ** j for j in range(1, exp + 1)]
        divs += [d * pw for d in divs for pw in powers]
    return sorted(divs)


def euler_phi(n: int) -> int:
    out = 1
    for prime, exp in factor_integer(n):
        out *= (prime - 1) * prime ** (exp - 1)
    return out


def lcm64(*values: int) -> int:
    """Least common multiple with a hard 64-bit overflow check."""
    out = 1
    for v in values:
        if v < 1:
            raise OutOfRange(f"lcm of non-positive value {v}")
        out = out // math.gcd(out, v) * v
        if out > INT64_MAX:
            raise OverflowError("lcm exceeds the 64-bit range")
    return out


def split_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^e with p prime, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    fac = factor_integer(q)
    if len(fac) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return fac[0]
