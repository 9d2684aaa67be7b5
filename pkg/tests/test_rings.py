import itertools
import random

import pytest

from period_lab.errors import (
    BudgetExceeded,
    LengthMismatch,
    NonUnitCoefficient,
    NotPrimePower,
    OutOfRange,
)
from period_lab.ff import make_field
from period_lab.intfactor import lcm64
from period_lab.period_sets import PeriodSet, period_set_closed_form
from period_lab.poly import is_irreducible, parse_poly
from period_lab.rings import (
    component_recurrence,
    group_algebra_max_period,
    group_algebra_period,
    lcm_closure,
    make_group_algebra,
    make_product_ring,
    max_period_bound,
    period_over_ring,
    period_set_over_ring,
    sample_recurrence,
    verify_field_characterization,
)
from period_lab.sequences import Recurrence, generate, period_bruteforce


def test_make_product_ring():
    ring = make_product_ring([2, 3, 5])
    assert ring.size == 30 and ring.r == 3
    assert [c.q for c in ring.components] == [2, 3, 5]
    assert make_product_ring([4]).components[0].q == 4  # prime powers split
    assert make_product_ring(["2^2", make_field(3)]).size == 12
    with pytest.raises(NotPrimePower):
        make_product_ring([6])
    with pytest.raises(OutOfRange):
        make_product_ring([])


def test_ring_arithmetic_and_zero_divisors():
    ring = make_product_ring([2, 2])
    a, b = (1, 0), (0, 1)
    assert ring.mul(a, b) == (0, 0)  # zero divisors
    assert not ring.is_unit(a) and not ring.is_unit(b)
    assert ring.is_unit((1, 1))
    assert ring.add(a, b) == (1, 1)
    assert len(list(ring.elements())) == 4
    assert list(ring.units()) == [(1, 1)]


def test_ring_element_plumbing():
    ring = make_product_ring([2, 3, 5])
    assert ring.element(7) == (1, 1, 2)  # diagonal embedding
    assert ring.element((1, 2, 4)) == (1, 2, 4)
    assert ring.project((1, 2, 4), 1) == 2
    with pytest.raises(LengthMismatch):
        ring.element((1, 2))
    seq = [(0, 1, 2), (1, 2, 3)]
    assert ring.project_sequence(seq, 2) == [2, 3]
    assert ring.parse_element("1|2|4") == (1, 2, 4)
    assert ring.parse_element("7") == (1, 1, 2)
    assert ring.format_element((1, 2, 4)) == "1|2|4"


def test_projected_fibonacci_periods():
    ring = make_product_ring([2, 5])
    rec = Recurrence(ring, (ring.from_int(1), ring.from_int(1)))
    s0 = (ring.element((0, 0)), ring.element((1, 1)))
    for i, expected in ((0, 3), (1, 20)):
        crec = component_recurrence(rec, i)
        assert period_bruteforce(crec, tuple(s[i] for s in s0)) == expected


def test_period_over_ring_fibonacci():
    ring = make_product_ring([2, 5])
    rec = Recurrence(ring, ((1, 1), (1, 1)))
    s0 = ((0, 0), (1, 1))
    # derived: lcm of the component periods, cross-checked by direct walk
    assert period_over_ring(rec, s0) == lcm64(3, 20) == 60
    assert period_over_ring(rec, s0, direct=True) == 60
    assert period_over_ring(rec, ((0, 0), (0, 0))) == 1


def test_period_over_ring_single_component():
    ring = make_product_ring([5])
    rec = Recurrence(ring, ((1,), (1,)))
    assert period_over_ring(rec, ((0,), (1,))) == 20


def test_unit_constraint_over_ring():
    ring = make_product_ring([2, 3])
    with pytest.raises(NonUnitCoefficient):
        Recurrence(ring, ((1, 0), (1, 1)))  # one dead component


def test_lcm_of_component_periods_random():
    rng = random.Random(17)
    specs = ([2, 3], [2, 5], [3, 5], [2, 2], [2, 3, 5], [4, 3])
    done = 0
    while done < 200:
        ring = make_product_ring(rng.choice(specs))
        k = rng.randrange(1, 3)
        if ring.size ** k > 10 ** 4:
            continue
        coeffs = [tuple(rng.randrange(1, c.q) for c in ring.components)]
        coeffs += [
            tuple(rng.randrange(c.q) for c in ring.components) for _ in range(k - 1)
        ]
        rec = Recurrence(ring, tuple(coeffs))
        s0 = tuple(
            tuple(rng.randrange(c.q) for c in ring.components) for _ in range(k)
        )
        assert period_over_ring(rec, s0) == period_over_ring(rec, s0, direct=True)
        done += 1


def test_period_set_over_ring_reference():
    ring = make_product_ring([2, 3, 5])
    assert period_set_over_ring(ring, 1) == {1, 2, 4}
    assert period_set_over_ring(ring, 2) == {
        1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120,
    }
    single = make_product_ring([5])
    assert period_set_over_ring(single, 2) == period_set_closed_form(2, 5)


def test_lcm_closure_matches_exhaustive_enumeration():
    for spec in ([2, 3], [2, 2], [2, 5]):
        ring = make_product_ring(spec)
        for k in (1, 2):
            reached = set()
            for coeffs in itertools.product(ring.elements(), repeat=k):
                if not ring.is_unit(coeffs[0]):
                    continue
                rec = Recurrence(ring, coeffs)
                for s0 in itertools.product(ring.elements(), repeat=k):
                    reached.add(period_bruteforce(rec, s0))
            assert period_set_over_ring(ring, k) == reached, (spec, k)


def test_bound_chain_for_multi_component_rings():
    # max period <= prod(q_i^k - 1) < |R|^k - 1 whenever r >= 2
    for spec in ([2, 3], [2, 2], [2, 5], [2, 3, 5], [4, 3]):
        ring = make_product_ring(spec)
        for k in (1, 2):
            top = max(period_set_over_ring(ring, k))
            assert top <= max_period_bound(ring, k) < ring.size ** k - 1


def test_lcm_closure_helper():
    closure = lcm_closure([PeriodSet.of([1, 2, 3]), PeriodSet.of([1, 4])])
    assert closure == {1, 2, 3, 4, 12}


def test_max_period_bound():
    assert max_period_bound(make_product_ring([2, 3]), 2) == 24
    assert max_period_bound(make_product_ring([2, 3, 5]), 1) == 8
    for q in (2, 5):
        assert max_period_bound(make_product_ring([q]), 3) == q ** 3 - 1
    with pytest.raises(OverflowError):
        max_period_bound(make_product_ring([2 ** 19 - 1] * 4), 4)


def test_field_characterization():
    report = verify_field_characterization(make_product_ring([2, 3]), 2)
    assert report["max_period"] == 24
    assert report["max_possible"] == 35
    assert not report["achieved"] and not report["is_field"] and report["consistent"]
    report = verify_field_characterization(make_product_ring(["2^2"]), 2)
    assert report["max_period"] == 15 == report["max_possible"]
    assert report["achieved"] and report["is_field"] and report["consistent"]
    report = verify_field_characterization(make_product_ring([2, 3, 5]), 1)
    assert report["max_period"] == 4 and report["max_possible"] == 29
    assert report["consistent"]


def test_group_algebra_semisimple_decomposition():
    ga = make_group_algebra(2, 5)
    assert ga.semisimple
    assert [c.q for c in ga.decomposition.components] == [2, 16]
    # the quartic component modulus is the full cyclotomic factor
    quartic = ga.component_moduli[1]
    assert quartic == parse_poly(make_field(2), "t^4+t^3+t^2+t+1")
    assert is_irreducible(quartic)


def test_group_algebra_never_a_field():
    # t^n - 1 always splits off t - 1, so at least two factors (counted
    # with multiplicity) for every p and n >= 2
    for p, n in ((2, 3), (2, 4), (3, 2), (3, 4), (5, 6), (7, 2)):
        ga = make_group_algebra(p, n)
        assert sum(m for _, m in ga.factors) >= 2
        root_of_one = parse_poly(make_field(p), "t-1")
        assert root_of_one in [f for f, _ in ga.factors]
        # semisimple exactly when p does not divide n, i.e. squarefree split
        assert ga.semisimple == (n % p != 0)
        assert ga.semisimple == all(m == 1 for _, m in ga.factors)


def test_group_algebra_arithmetic():
    ga = make_group_algebra(2, 4)
    t = (0, 1, 0, 0)
    t3 = (0, 0, 0, 1)
    assert ga.mul(t, t3) == ga.one  # t^4 wraps to 1
    assert not ga.semisimple
    assert ga.is_unit(t) and not ga.is_unit((1, 1, 0, 0))
    assert ga.element(5) == (1, 0, 0, 0)
    with pytest.raises(LengthMismatch):
        ga.element((1, 0))


def test_group_algebra_projection_is_ring_morphism():
    ga = make_group_algebra(2, 5)
    rng = random.Random(23)
    ring = ga.decomposition
    for _ in range(40):
        a = tuple(rng.randrange(2) for _ in range(5))
        b = tuple(rng.randrange(2) for _ in range(5))
        assert ga.project(ga.mul(a, b)) == ring.mul(ga.project(a), ga.project(b))
        assert ga.project(ga.add(a, b)) == ring.add(ga.project(a), ga.project(b))
    assert ga.project(ga.one) == ring.one


def test_group_algebra_max_periods():
    assert group_algebra_max_period(make_group_algebra(2, 5), 1) == 15
    assert 15 >= 2 ** 4 - 1  # at least the big-component field maximum
    # derived: t^2-1 = (t-1)(t+1) over F_3 gives F_3 + F_3, closure max 2
    assert group_algebra_max_period(make_group_algebra(3, 2), 1) == 2
    # derived: t^3-1 = (t+1)(t^2+t+1) over F_2 gives F_2 + F_4, closure max 3
    assert group_algebra_max_period(make_group_algebra(2, 3), 1) == 3


def test_group_algebra_max_period_strictly_below_field_bound():
    for p, n, k in ((2, 5, 1), (3, 2, 1), (2, 3, 1), (2, 4, 1), (2, 2, 2)):
        ga = make_group_algebra(p, n)
        assert group_algebra_max_period(ga, k) < ga.size ** k - 1


def test_group_algebra_nonsemisimple_bruteforce():
    ga = make_group_algebra(2, 2)  # t^2-1 = (t+1)^2
    assert not ga.semisimple
    # oracle by hand: the unit group is {1, t} and t has order 2
    assert sorted(ga.units()) == [(0, 1), (1, 0)]
    assert group_algebra_max_period(ga, 1) == 2
    with pytest.raises(BudgetExceeded):
        group_algebra_max_period(make_group_algebra(2, 4), 2, budget=100)


def test_group_algebra_crt_period_consistency():
    ga = make_group_algebra(2, 5)
    for seed in range(5):
        coeffs = sample_recurrence(ga, 2, seed=seed)
        assert group_algebra_period(ga, coeffs) == group_algebra_period(
            ga, coeffs, via_decomposition=True
        )
    # and on a non-impulse state
    coeffs = sample_recurrence(ga, 1, seed=3)
    s0 = ((1, 0, 1, 1, 0),)
    assert group_algebra_period(ga, coeffs, s0) == group_algebra_period(
        ga, coeffs, s0, via_decomposition=True
    )


def test_group_algebra_sequences_run_directly():
    # the generic simulator accepts the algebra as a ring context
    ga = make_group_algebra(3, 2)
    rec = Recurrence(ga, (ga.from_int(1), ga.from_int(1)))
    terms = generate(rec, (ga.zero, ga.one), 6)
    assert terms[0] == ga.zero and terms[1] == ga.one
    assert terms[2] == ga.one and terms[3] == ga.add(ga.one, ga.one)
    assert period_bruteforce(rec, (ga.zero, ga.one)) >= 1


def test_group_algebra_validation():
    with pytest.raises(OutOfRange):
        make_group_algebra(2, 1)
    from period_lab.errors import CompositeCharacteristic

    with pytest.raises(CompositeCharacteristic):
        make_group_algebra(4, 3)
