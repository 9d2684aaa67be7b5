"""Period sets of degree-k recurrences: divisor-set combinatorics, the
union lower bound, exact closed forms for degrees 1-4, and a brute-force
order-set enumeration that oracles them.

Degree k over F_q realizes exactly the orders of degree-k polynomials,
so the brute-force route enumerates monic polynomials only (orders are
invariant under nonzero scalar multiples).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded, DegreeOutOfRange, OutOfRange
from .ff import FieldCtx, make_field
from .intfactor import INT64_MAX, divisor_list, split_prime_power
from .orders import poly_order
from .poly import DEFAULT_SEED, monic_polys

DEFAULT_BUDGET = 10 ** 6
BUDGET_ENV_VAR = "PERIOD_LAB_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise OutOfRange(f"bad {BUDGET_ENV_VAR} value {raw!r}") from exc


@dataclass(frozen=True)
class PeriodSet:
    """Sorted deduplicated set of achievable periods, tagged with how it
    was produced ("closed", "bound", "bruteforce", "lcm", ...).  Equality
    ignores the tag."""

    values: tuple[int, ...]
    method: str = ""

    @classmethod
    def of(cls, iterable, method: str = "") -> "PeriodSet":
        vals = sorted(set(iterable))
        if vals and vals[0] < 1:
            raise OutOfRange("periods are positive integers")
        return cls(tuple(vals), method)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, n):
        return n in set(self.values)

    def as_set(self) -> frozenset:
        return frozenset(self.values)

    def issubset(self, other) -> bool:
        return self.as_set() <= _as_frozenset(other)

    def __eq__(self, other):
        if isinstance(other, PeriodSet):
            return self.values == other.values
        if isinstance(other, (set, frozenset, tuple, list)):
            return self.as_set() == _as_frozenset(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        tag = f", method={self.method!r}" if self.method else ""
        return f"PeriodSet({list(self.values)}{tag})"


def _as_frozenset(other) -> frozenset:
    if isinstance(other, PeriodSet):
        return other.as_set()
    return frozenset(other)


def divisors(n: int) -> PeriodSet:
    """All positive divisors of n."""
    return PeriodSet(tuple(divisor_list(n)), "divisors")


def set_scale(a: int, s: PeriodSet) -> PeriodSet:
    """{a*x for x in s}, overflow-checked."""
    if a < 1:
        raise OutOfRange("scale factor must be positive")
    out = []
    for x in s:
        v = a * x
        if v > INT64_MAX:
            raise OverflowError("scaled period exceeds the 64-bit range")
        out.append(v)
    return PeriodSet(tuple(out), "scaled")  # order preserved: a*x is monotone


def set_product(s1: PeriodSet, s2: PeriodSet) -> PeriodSet:
    """{x*y for x in s1, y in s2}, overflow-checked."""
    out = set()
    for x in s1:
        for y in s2:
            v = x * y
            if v > INT64_MAX:
                raise OverflowError("period product exceeds the 64-bit range")
            out.add(v)
    return PeriodSet.of(out, "product")


def set_union(*sets) -> PeriodSet:
    out = set()
    for s in sets:
        out.update(s)
    return PeriodSet.of(out, "union")


def period_set_lower_bound(k: int, q: int) -> PeriodSet:
    """The union over 1 <= i <= k of {p^j : j <= t_i} * D(q^i - 1), with
    t_i the least t such that p^t >= floor(k/i).

    Always contained in the true period set; the containment is an
    equality for k <= 4 and can be strict from k = 5 on.
    """
    if k < 1:
        raise OutOfRange("degree must be >= 1")
    p, _ = split_prime_power(q)
    out = set()
    for i in range(1, k + 1):
        need = k // i
        t, pt = 0, 1
        while pt < need:
            pt *= p
            t += 1
        powers = [p ** j for j in range(t + 1)]
        for d in divisor_list(q ** i - 1):
            for pw in powers:
                v = pw * d
                if v > INT64_MAX:
                    raise OverflowError("period exceeds the 64-bit range")
                out.add(v)
    return PeriodSet.of(out, "bound")


def period_set_closed_form(k: int, q: int) -> PeriodSet:
    """Exact period set for degrees 1-4 over F_q.

    Degree 3 gains {2,4}*D(q-1) in characteristic 2, and degree 4 gains
    p^2*D(q-1) in characteristics 2 and 3, reflecting how high a power of
    p is needed to cover a repeated linear factor.
    """
    p, _ = split_prime_power(q)
    if k == 1:
        vals = divisors(q - 1)
    elif k == 2:
        vals = set_union(divisors(q ** 2 - 1), set_scale(p, divisors(q - 1)))
    elif k == 3:
        base = set_union(divisors(q ** 3 - 1), divisors(q ** 2 - 1))
        if p == 2:
            extra = set_product(PeriodSet((2, 4)), divisors(q - 1))
        else:
            extra = set_scale(p, divisors(q - 1))
        vals = set_union(base, extra)
    elif k == 4:
        vals = set_union(
            divisors(q ** 4 - 1),
            divisors(q ** 3 - 1),
            set_scale(p, divisors(q ** 2 - 1)),
        )
        if p in (2, 3):
            vals = set_union(vals, set_scale(p * p, divisors(q - 1)))
    else:
        raise DegreeOutOfRange(
            f"no closed form for degree {k}; use the bound or brute force"
        )
    return PeriodSet(vals.values, "closed")


def _order_set_chunk(p: int, e: int, modulus, k: int, start: int, stop: int,
                     seed: int) -> frozenset:
    field = make_field(p, e, modulus)
    q = field.q
    out = set()
    for f in _monic_range(field, k, start, stop):
        out.add(poly_order(f, seed=seed).order)
    return frozenset(out)


def _monic_range(field: FieldCtx, degree: int, start: int, stop: int):
    q = field.q
    from .poly import _mk

    for idx in range(start, stop):
        cs = []
        v = idx
        for _ in range(degree):
            v, r = divmod(v, q)
            cs.append(r)
        yield _mk(field, (*cs, 1))


def order_set_bruteforce(field: FieldCtx, k: int, *, budget: int | None = None,
                         jobs: int = 1, seed: int = DEFAULT_SEED) -> PeriodSet:
    """{ord(f) : f monic of degree k over the field}, by enumeration.

    Exact oracle for the closed forms and the lower bound.  Work is
    capped at `budget` polynomials (default 10^6, or PERIOD_LAB_BUDGET).
    """
    if k < 1:
        raise OutOfRange("degree must be >= 1")
    if budget is None:
        budget = default_budget()
    total = field.q ** k
    if total > budget:
        raise BudgetExceeded(f"{total} polynomials exceed the budget {budget}")
    if jobs > 1 and total >= 4096:
        chunk = -(-total // jobs)
        spans = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
        out: set[int] = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_order_set_chunk, field.p, field.e, field.modulus,
                            k, lo, hi, seed)
                for lo, hi in spans
            ]
            for fut in futures:
                out |= fut.result()
        return PeriodSet.of(out, "bruteforce")
    out = set()
    for f in monic_polys(field, k):
        out.add(poly_order(f, seed=seed).order)
    return PeriodSet.of(out, "bruteforce")
