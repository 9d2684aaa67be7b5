"""Polynomial orders: the factorization pipeline and a brute-force oracle.

The order of f = x^r * g with g(0) != 0 is the least n > 0 with g(x)
dividing x^n - 1, equivalently the multiplicative order of x in
F_q[x]/<g>.  The pipeline strips x^r, factors g, handles each repeated
irreducible via the characteristic boost e*p^t, and combines with lcm;
poly_order_bruteforce walks powers of x directly and is independent of
factorization, so the two routes check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    LimitExceeded,
    ReduciblePolynomial,
    ZeroConstantTerm,
    ZeroPolynomial,
)
from .intfactor import factor_integer, lcm64
from .poly import DEFAULT_SEED, Poly, _mk, _rmonic, _rpowmod, factor, is_irreducible


@dataclass(frozen=True)
class FactorContribution:
    """One distinct irreducible factor's share of the order."""

    factor: Poly
    multiplicity: int
    base_order: int      # order of the irreducible factor itself
    char_exponent: int   # smallest t with p^t >= multiplicity
    contribution: int    # base_order * p^char_exponent


@dataclass(frozen=True)
class OrderResult:
    """Order of a polynomial plus the per-factor ledger behind it."""

    order: int
    strip_exponent: int
    contributions: tuple[FactorContribution, ...]


def strip_x_power(f: Poly) -> tuple[int, Poly]:
    """Write f = x^r * g with g(0) != 0 and return (r, g)."""
    if f.is_zero:
        raise ZeroPolynomial("cannot strip the zero polynomial")
    r = 0
    while f.coeffs[r] == 0:
        r += 1
    return r, _mk(f.field, f.coeffs[r:])


@lru_cache(maxsize=None)
def _irreducible_order(field, coeffs: tuple) -> int:
    d = len(coeffs) - 1
    n = field.q ** d - 1
    for prime, _ in factor_integer(n):
        while n % prime == 0 and _rpowmod(field, (0, 1), n // prime, coeffs) == (1,):
            n //= prime
    return n


def irreducible_order(g: Poly) -> int:
    """Multiplicative order of x in F_q[x]/<g> for monic irreducible g."""
    gm = g.monic()
    if gm.degree >= 1 and gm.constant_term == 0:
        raise ZeroConstantTerm("x divides the polynomial; strip it first")
    if gm.degree < 1 or not is_irreducible(gm):
        raise ReduciblePolynomial(f"{gm} is not irreducible")
    return _irreducible_order(gm.field, gm.coeffs)


def _char_boost(p: int, multiplicity: int) -> tuple[int, int]:
    # smallest (t, p^t) with p^t >= multiplicity
    t, pt = 0, 1
    while pt < multiplicity:
        pt *= p
        t += 1
    return t, pt


def prime_power_order(g: Poly, b: int) -> int:
    """Order of g^b for monic irreducible g: ord(g) * p^t with p^t >= b."""
    e = irreducible_order(g)
    _, pt = _char_boost(g.field.p, b)
    return e * pt


def poly_order(f: Poly, seed: int = DEFAULT_SEED) -> OrderResult:
    """Order of any nonzero f, with the full per-factor ledger."""
    r, g = strip_x_power(f)
    if g.degree == 0:
        return OrderResult(1, r, ())
    p = f.field.p
    entries = []
    order = 1
    for irr, mult in factor(g, seed=seed):
        e = _irreducible_order(irr.field, irr.coeffs)
        t, pt = _char_boost(p, mult)
        contribution = e * pt
        entries.append(FactorContribution(irr, mult, e, t, contribution))
        order = lcm64(order, contribution)
    return OrderResult(order, r, tuple(entries))


def poly_order_bruteforce(f: Poly, limit: int | None = None) -> int:
    """Least n with g | x^n - 1, found by walking h <- x*h mod g.

    Independent of the factorization pipeline.  The default limit is the
    provable bound q^deg(g) - 1; passing it raises LimitExceeded, which
    signals a bug rather than a hard input.
    """
    r, g = strip_x_power(f)
    if g.degree == 0:
        return 1
    F = f.field
    gcs = _rmonic(F, g.coeffs)
    d = len(gcs) - 1
    cap = limit if limit is not None else F.q ** d - 1
    mul, sub, neg = F.mul, F.sub, F.neg
    if d == 1:
        h = [neg(gcs[0])]
    else:
        h = [0] * d
        h[1] = 1
    one = [1] + [0] * (d - 1)
    n = 1
    while n <= cap:
        if h == one:
            return n
        carry = h[-1]
        for i in range(d - 1, 0, -1):
            h[i] = h[i - 1]
        h[0] = 0
        if carry:
            for i in range(d):
                if gcs[i]:
                    h[i] = sub(h[i], mul(carry, gcs[i]))
        n += 1
    raise LimitExceeded(f"no order found within {cap} steps (bug?)")
