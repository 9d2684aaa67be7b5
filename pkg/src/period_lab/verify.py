"""Built-in verification suite.

Each check recomputes a reference result two independent ways (or against
a frozen known value) and reports expected vs. computed.  Scopes group
the checks: "orders" covers polynomial orders and sequence periods,
"period-sets" the degree-bounded period sets, "rings" the product-ring
and group-algebra results.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .ff import make_field
from .intfactor import is_prime
from .orders import poly_order, poly_order_bruteforce
from .period_sets import (
    divisors,
    order_set_bruteforce,
    period_set_closed_form,
    period_set_lower_bound,
    set_product,
    set_scale,
)
from .poly import Poly
from .rings import (
    GroupAlgebra,
    group_algebra_max_period,
    group_algebra_period,
    make_product_ring,
    max_period_bound,
    period_over_ring,
    period_set_over_ring,
    sample_recurrence,
    verify_field_characterization,
)
from .sequences import (
    Recurrence,
    generate,
    impulse_response_period,
    impulse_state,
    minimal_poly,
    period_bruteforce,
)

SCOPES = ("orders", "period-sets", "rings")


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    claim: str
    expected: str
    computed: str
    passed: bool
    elapsed_ms: float


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _fib(q):
    field = make_field(*_pe(q))
    return Recurrence(field, (1, 1))


def _pe(q):
    from .intfactor import split_prime_power

    return split_prime_power(q)


def _check_fib_mod2():
    rec = _fib(2)
    terms = generate(rec, (0, 1), 8)
    period = period_bruteforce(rec, (0, 1))
    return ([0, 1, 1, 0, 1, 1, 0, 1], 3), (terms, period)


def _check_fib_mod5():
    rec = _fib(5)
    return 20, period_bruteforce(rec, (0, 1))


def _check_fib_general():
    # for p = 2,3 mod 5 the Fibonacci period divides 2(p+1)
    bad = [
        p
        for p in range(2, 50)
        if is_prime(p) and p % 5 in (2, 3)
        and 2 * (p + 1) % impulse_response_period(_fib(p)) != 0
    ]
    return [], bad

def _check_element_order():
    return 4, make_field(5).multiplicative_order(3)


def _check_order_quadratic():
    f = Poly.parse(make_field(2), "x^2+x+1")
    return 3, poly_order(f).order


def _check_order_cubic():
    f = Poly.parse(make_field(2), "x^3+x+1")
    return 7, poly_order(f).order


def _check_order_degree5():
    f = Poly.parse(make_field(2), "x^5+x^4+1")
    pipeline = poly_order(f).order
    brute = poly_order_bruteforce(f)
    impulse = impulse_response_period(Recurrence.from_char_poly(f))
    return (21, 21, 21), (pipeline, brute, impulse)


def _check_order_repeated_root():
    f = Poly.parse(make_field(5), "x^2-x-1")  # (x-3)^2 over F_5
    return 20, poly_order(f).order


def _check_degree5_cycle():
    field = make_field(2)
    rec = Recurrence(field, (1, 0, 0, 0, 1))
    expected = [0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1]
    return expected, generate(rec, (0, 0, 0, 0, 1), 21)


def _check_minimal_poly_degree5():
    field = make_field(2)
    rec = Recurrence(field, (1, 0, 0, 0, 1))
    prefix = generate(rec, impulse_state(rec), 42)
    m = minimal_poly(field, prefix, 5)
    return "x^5+x^4+1", str(m)


def _check_oracle_agreement():
    # every monic polynomial of degree 1..3 over F_2 and F_3
    from .poly import monic_polys

    mismatches = []
    for q in (2, 3):
        field = make_field(q)
        for k in (1, 2, 3):
            for f in monic_polys(field, k):
                if poly_order(f).order != poly_order_bruteforce(f):
                    mismatches.append(str(f))
    return [], mismatches


def _check_divisor_sets():
    expected = ([1, 2, 3, 6], [5, 10, 15, 30], [1, 2, 3, 4, 6, 12])
    computed = (
        list(divisors(6)),
        list(set_scale(5, divisors(6))),
        list(set_product(divisors(2), divisors(6))),
    )
    return expected, computed


def _check_golden_f2():
    expected = (
        [1],
        [1, 2, 3],
        [1, 2, 3, 4, 7],
        [1, 2, 3, 4, 5, 6, 7, 15],
    )
    computed = tuple(list(period_set_closed_form(k, 2)) for k in (1, 2, 3, 4))
    return expected, computed


def _check_closed_vs_bruteforce():
    field_specs = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}
    mismatches = []
    for q, (p, e) in field_specs.items():
        field = make_field(p, e)
        for k in (1, 2, 3, 4):
            if order_set_bruteforce(field, k) != period_set_closed_form(k, q):
                mismatches.append((q, k))
    return [], mismatches


def _check_strictness_degree5():
    field = make_field(2)
    in_bruteforce = 21 in order_set_bruteforce(field, 5)
    in_bound = 21 in period_set_lower_bound(5, 2)
    return (True, False), (in_bruteforce, in_bound)


def _check_ring_example_degree1():
    ring = make_product_ring([2, 3, 5])
    return [1, 2, 4], list(period_set_over_ring(ring, 1))


def _check_ring_example_degree2():
    ring = make_product_ring([2, 3, 5])
    expected = [1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120]
    return expected, list(period_set_over_ring(ring, 2))


def _check_ring_fibonacci():
    ring = make_product_ring([2, 5])
    rec = Recurrence(ring, ((1, 1), (1, 1)))
    s0 = ((0, 0), (1, 1))
    return (60, 60), (period_over_ring(rec, s0), period_over_ring(rec, s0, direct=True))


def _check_lcm_closure_exhaustive():
    # every unit-c0 recurrence and every state over F_2 + F_3, degrees 1..2
    ring = make_product_ring([2, 3])
    reached = {1: set(), 2: set()}
    import itertools as it

    for k in (1, 2):
        for coeffs in it.product(ring.elements(), repeat=k):
            if not ring.is_unit(coeffs[0]):
                continue
            rec = Recurrence(ring, coeffs)
            for s0 in it.product(ring.elements(), repeat=k):
                reached[k].add(period_bruteforce(rec, s0))
    expected = tuple(sorted(reached[k]) for k in (1, 2))
    computed = tuple(list(period_set_over_ring(ring, k)) for k in (1, 2))
    return expected, computed


def _check_max_period_bound():
    ring23 = make_product_ring([2, 3])
    ring235 = make_product_ring([2, 3, 5])
    return (24, 8), (max_period_bound(ring23, 2), max_period_bound(ring235, 1))


def _check_field_characterization():
    rings = ([2], [4], [2, 3], [2, 3, 5])
    rows = []
    for spec in rings:
        ring = make_product_ring(spec)
        for k in (1, 2):
            rows.append(verify_field_characterization(ring, k)["consistent"])
    return [True] * len(rows), rows


def _check_group_algebra_a5():
    ga = GroupAlgebra(2, 5)
    shape = [c.spec() for c in ga.decomposition.components]
    maxp = group_algebra_max_period(ga, 1)
    coeffs = sample_recurrence(ga, 2, seed=7)
    direct = group_algebra_period(ga, coeffs)
    crt = group_algebra_period(ga, coeffs, via_decomposition=True)
    return (["2", "2^4/x^4+x^3+x^2+x+1"], 15, True), (shape, maxp, direct == crt)


def _check_group_algebra_small():
    a2 = group_algebra_max_period(GroupAlgebra(3, 2), 1)
    a3 = group_algebra_max_period(GroupAlgebra(2, 3), 1)
    a4_semisimple = GroupAlgebra(2, 4).semisimple
    return (2, 3, False), (a2, a3, a4_semisimple)


_CHECKS = (
    ("fibonacci-mod-2", "orders",
     "Fibonacci over F_2 from (0,1): terms 0,1,1,0,1,1,0,1 and period 3",
     _check_fib_mod2),
    ("fibonacci-mod-5", "orders",
     "Fibonacci over F_5 from (0,1) has period 20",
     _check_fib_mod5),
    ("fibonacci-2p-plus-2", "orders",
     "for primes p = 2,3 (mod 5) below 50 the Fibonacci period divides 2(p+1)",
     _check_fib_general),
    ("element-order-f5", "orders",
     "3 has multiplicative order 4 in F_5",
     _check_element_order),
    ("order-x2+x+1", "orders",
     "ord(x^2+x+1) = 3 over F_2",
     _check_order_quadratic),
    ("order-x3+x+1", "orders",
     "ord(x^3+x+1) = 7 over F_2",
     _check_order_cubic),
    ("order-x5+x4+1", "orders",
     "ord(x^5+x^4+1) = lcm(3,7) = 21 over F_2, by all three routes",
     _check_order_degree5),
    ("order-repeated-root", "orders",
     "ord(x^2-x-1) = 20 over F_5 (repeated root 3 of order 4, boosted by p)",
     _check_order_repeated_root),
    ("degree5-cycle", "orders",
     "the impulse response of a_{n+5} = a_{n+4} + a_n over F_2 cycles in 21",
     _check_degree5_cycle),
    ("minimal-poly-degree5", "orders",
     "the minimal polynomial of that impulse response is x^5+x^4+1",
     _check_minimal_poly_degree5),
    ("pipeline-vs-bruteforce", "orders",
     "factorization pipeline = brute-force order for all monic f, deg <= 3, F_2/F_3",
     _check_oracle_agreement),
    ("divisor-set-algebra", "period-sets",
     "D(6), 5*D(6), and D(2)*D(6) expand as expected",
     _check_divisor_sets),
    ("period-sets-f2", "period-sets",
     "period sets of degrees 1-4 over F_2",
     _check_golden_f2),
    ("closed-form-equality", "period-sets",
     "closed forms equal brute-force order sets for k <= 4, q in {2,3,4,5}",
     _check_closed_vs_bruteforce),
    ("degree5-strictness", "period-sets",
     "21 is a degree-5 period over F_2 but falls outside the union bound",
     _check_strictness_degree5),
    ("ring-period-set-k1", "rings",
     "degree-1 period set over F_2+F_3+F_5 is {1,2,4}",
     _check_ring_example_degree1),
    ("ring-period-set-k2", "rings",
     "degree-2 period set over F_2+F_3+F_5 is the 16-element set ending 120",
     _check_ring_example_degree2),
    ("ring-fibonacci", "rings",
     "Fibonacci over F_2+F_5 has period lcm(3,20) = 60, both routes",
     _check_ring_fibonacci),
    ("lcm-closure-exhaustive", "rings",
     "lcm-closure equals exhaustive enumeration over F_2+F_3 for k <= 2",
     _check_lcm_closure_exhaustive),
    ("max-period-bound", "rings",
     "prod(q_i^k - 1) bounds: 24 for F_2+F_3 (k=2), 8 for F_2+F_3+F_5 (k=1)",
     _check_max_period_bound),
    ("field-characterization", "rings",
     "max period |R|^k - 1 is achieved exactly for single-field rings",
     _check_field_characterization),
    ("group-algebra-a5", "rings",
     "F_2[t]/<t^5-1> = F_2 + F_16; degree-1 max period 15; CRT route agrees",
     _check_group_algebra_a5),
    ("group-algebra-small", "rings",
     "max periods 2 and 3 for F_3[t]/<t^2-1> and F_2[t]/<t^3-1>; t^4-1 repeats over F_2",
     _check_group_algebra_small),
)


def run_verify(scope: str = "all") -> VerifyReport:
    """Run the verification checks for a scope; deterministic."""
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose all, " + ", ".join(SCOPES))
    results = []
    for name, check_scope, claim, fn in _CHECKS:
        if scope != "all" and check_scope != scope:
            continue
        start = time.perf_counter()
        expected, computed = fn()
        elapsed = (time.perf_counter() - start) * 1000.0
        results.append(
            CheckResult(
                name=name,
                scope=check_scope,
                claim=claim,
                expected=repr(expected),
                computed=repr(computed),
                passed=expected == computed,
                elapsed_ms=elapsed,
            )
        )
    return VerifyReport(tuple(results))
