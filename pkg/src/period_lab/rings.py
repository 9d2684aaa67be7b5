"""Products of finite fields and cyclic group algebras.

A ProductRing is F_{q_1} + ... + F_{q_r} with componentwise arithmetic on
r-tuples of encoded field elements; an element is a unit exactly when
every component is nonzero.  Periods over the product are the lcm of the
projected component periods, and the period set of degree k is the
lcm-closure of the component period sets.

A GroupAlgebra is F_p[t]/<t^n - 1> with elements stored as length-n
coefficient tuples and cyclic-convolution multiplication.  When p does
not divide n the defining polynomial is squarefree and the algebra
decomposes into a ProductRing of fields, one per irreducible factor of
t^n - 1 (each component field is built on that factor as its modulus, so
projection is plain polynomial reduction); otherwise only the bounded
direct-simulation path is available.
"""

from __future__ import annotations

import itertools
import random
from math import prod

from .errors import BudgetExceeded, LengthMismatch, OutOfRange
from .ff import FieldCtx, make_field, parse_field_spec
from .intfactor import INT64_MAX, lcm64, split_prime_power
from .period_sets import PeriodSet, default_budget, order_set_bruteforce, period_set_closed_form
from .poly import Poly, _mk, factor, gcd as poly_gcd
from .sequences import Recurrence, impulse_state, period_bruteforce


class ProductRing:
    """An ordered direct sum of finite fields; elements are r-tuples."""

    __slots__ = ("components", "size", "zero", "one")

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise OutOfRange("a product ring needs at least one component")
        self.components = components
        self.size = prod(c.q for c in components)
        self.zero = (0,) * len(components)
        self.one = (1,) * len(components)

    @property
    def r(self) -> int:
        return len(self.components)

    def element(self, parts) -> tuple:
        if isinstance(parts, int):
            return self.from_int(parts)
        parts = tuple(parts)
        if len(parts) != self.r:
            raise LengthMismatch(f"expected {self.r} components, got {len(parts)}")
        return tuple(c.element(v) for c, v in zip(self.components, parts))

    def from_int(self, v: int) -> tuple:
        """Diagonal embedding of an integer (v mod p_i in each component)."""
        return tuple(c.from_int(v) for c in self.components)

    def add(self, a, b):
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def mul(self, a, b):
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def neg(self, a):
        return tuple(c.neg(x) for c, x in zip(self.components, a))

    def is_unit(self, a) -> bool:
        return all(x != 0 for x in a)

    def elements(self):
        return itertools.product(*(range(c.q) for c in self.components))

    def units(self):
        return itertools.product(*(range(1, c.q) for c in self.components))

    def project(self, a, i: int):
        """Component i (0-based) of an element."""
        return a[i]

    def project_sequence(self, seq, i: int) -> list:
        return [a[i] for a in seq]

    def format_element(self, a) -> str:
        return "|".join(c.format_element(x) for c, x in zip(self.components, a))

    def parse_element(self, text: str) -> tuple:
        parts = text.split("|")
        if len(parts) == 1 and self.r > 1:
            return self.from_int(int(text))
        if len(parts) != self.r:
            raise LengthMismatch(f"expected {self.r} '|'-separated parts in {text!r}")
        return tuple(c.parse_element(s) for c, s in zip(self.components, parts))

    def spec(self) -> str:
        return "+".join(c.spec() for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, ProductRing):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"ProductRing({self.spec()!r})"

    def __reduce__(self):
        return (ProductRing, (self.components,))


def make_product_ring(specs) -> ProductRing:
    """Build a product ring from field specs (FieldCtx, prime-power int,
    or field spec text)."""
    components = []
    for s in specs:
        if isinstance(s, FieldCtx):
            components.append(s)
        elif isinstance(s, int):
            p, e = split_prime_power(s)
            components.append(make_field(p, e))
        else:
            components.append(parse_field_spec(str(s)))
    return ProductRing(components)


def component_recurrence(rec: Recurrence, i: int) -> Recurrence:
    """Projection of a product-ring recurrence onto component i."""
    ring = rec.ctx
    return Recurrence(ring.components[i], tuple(c[i] for c in rec.coeffs))


def period_over_ring(rec: Recurrence, s0, *, direct: bool = False) -> int:
    """Period over a product ring: lcm of the projected component periods.

    With direct=True the ring state is walked as-is instead, which serves
    as the independent cross-check of the lcm route.
    """
    ring = rec.ctx
    if not isinstance(ring, ProductRing):
        raise TypeError("period_over_ring needs a product-ring recurrence")
    s0 = tuple(ring.element(s) for s in s0)
    if direct:
        return period_bruteforce(rec, s0)
    out = 1
    for i in range(ring.r):
        crec = component_recurrence(rec, i)
        cs0 = tuple(s[i] for s in s0)
        out = lcm64(out, period_bruteforce(crec, cs0))
    return out


def lcm_closure(sets) -> PeriodSet:
    """{lcm(w_1, ..., w_r) : w_i in sets[i]}."""
    sets = list(sets)
    if not sets:
        raise OutOfRange("lcm closure of no sets")
    closure = set(sets[0])
    for s in sets[1:]:
        closure = {lcm64(a, b) for a in closure for b in s}
    return PeriodSet.of(closure, "lcm")


def period_set_over_ring(ring: ProductRing, k: int, *,
                         budget: int | None = None) -> PeriodSet:
    """Period set of degree k over the product ring, via lcm-closure of
    the component period sets (closed forms for k <= 4, else brute force)."""
    component_sets = [
        component_period_set(c, k, budget=budget) for c in ring.components
    ]
    return lcm_closure(component_sets)


def component_period_set(field: FieldCtx, k: int, *,
                         budget: int | None = None) -> PeriodSet:
    if 1 <= k <= 4:
        return period_set_closed_form(k, field.q)
    return order_set_bruteforce(field, k, budget=budget)


def max_period_bound(ring: ProductRing, k: int) -> int:
    """prod(q_i^k - 1): an upper bound for every degree-k period."""
    out = 1
    for c in ring.components:
        out *= c.q ** k - 1
        if out > INT64_MAX:
            raise OverflowError("period bound exceeds the 64-bit range")
    return out


def verify_field_characterization(ring: ProductRing, k: int, *,
                                  budget: int | None = None) -> dict:
    """Check that the maximum period |R|^k - 1 is hit exactly when the ring
    is a single field; returns the comparison as a report dict."""
    pset = period_set_over_ring(ring, k, budget=budget)
    achieved_max = max(pset)
    possible_max = ring.size ** k - 1
    is_field = ring.r == 1
    return {
        "k": k,
        "components": [c.spec() for c in ring.components],
        "ring_size": ring.size,
        "max_period": achieved_max,
        "max_possible": possible_max,
        "achieved": achieved_max == possible_max,
        "is_field": is_field,
        "consistent": (achieved_max == possible_max) == is_field,
    }


class GroupAlgebra:
    """F_p[t]/<t^n - 1>; elements are length-n coefficient tuples."""

    __slots__ = ("p", "n", "base", "factors", "semisimple", "decomposition",
                 "component_moduli", "size", "zero", "one", "_circulant")

    def __init__(self, p: int, n: int):
        if n < 2:
            raise OutOfRange("group algebras need n >= 2")
        self.p = p
        self.n = n
        self.base = make_field(p)
        circulant = Poly(self.base, (self.base.neg(1),) + (0,) * (n - 1) + (1,))
        self._circulant = circulant
        self.factors = factor(circulant)
        self.semisimple = all(m == 1 for _, m in self.factors)
        self.size = p ** n
        self.zero = (0,) * n
        self.one = (1,) + (0,) * (n - 1)
        if self.semisimple:
            fields = []
            for f, _ in self.factors:
                d = f.degree
                fields.append(make_field(p, d, f.coeffs) if d > 1 else make_field(p))
            self.decomposition = ProductRing(fields)
            self.component_moduli = tuple(f for f, _ in self.factors)
        else:
            self.decomposition = None
            self.component_moduli = ()

    # ring context protocol -------------------------------------------------

    def element(self, coeffs) -> tuple:
        if isinstance(coeffs, int):
            return self.from_int(coeffs)
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.n:
            raise LengthMismatch(f"expected {self.n} coefficients, got {len(coeffs)}")
        return coeffs

    def from_int(self, v: int) -> tuple:
        return (v % self.p,) + (0,) * (self.n - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        # cyclic convolution: t^n wraps to 1
        p, n = self.p, self.n
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        idx = i + j
                        if idx >= n:
                            idx -= n
                        out[idx] = (out[idx] + x * y) % p
        return tuple(out)

    def is_unit(self, a) -> bool:
        apoly = _mk(self.base, _trim_tuple(a))
        if apoly.is_zero:
            return False
        return poly_gcd(apoly, self._circulant).degree == 0

    def elements(self):
        return itertools.product(*(range(self.p) for _ in range(self.n)))

    def units(self):
        return (a for a in self.elements() if self.is_unit(a))

    def to_poly(self, a) -> Poly:
        return _mk(self.base, _trim_tuple(a))

    def project(self, a) -> tuple:
        """CRT image of an element in the decomposition (semisimple only)."""
        if not self.semisimple:
            raise OutOfRange("no field decomposition: t^n - 1 has repeated factors")
        apoly = self.to_poly(a)
        parts = []
        for comp, modulus in zip(self.decomposition.components, self.component_moduli):
            rem = apoly % modulus
            if comp.e == 1:
                parts.append(rem.constant_term)
            else:
                parts.append(comp.from_coeffs(rem.coeffs))
        return tuple(parts)

    def project_recurrence(self, rec: Recurrence) -> Recurrence:
        return Recurrence(self.decomposition,
                          tuple(self.project(c) for c in rec.coeffs))

    def __repr__(self):
        return f"GroupAlgebra(p={self.p}, n={self.n})"

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebra):
            return NotImplemented
        return (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash(("GroupAlgebra", self.p, self.n))


def _trim_tuple(a):
    k = len(a)
    while k and a[k - 1] == 0:
        k -= 1
    return tuple(a[:k])


def make_group_algebra(p: int, n: int) -> GroupAlgebra:
    """F_p[t]/<t^n - 1>, with its field decomposition when p does not
    divide n."""
    base = make_field(p)  # validates primality and range
    del base
    return GroupAlgebra(p, n)


def group_algebra_period(ga: GroupAlgebra, coeffs, s0=None, *,
                         via_decomposition: bool = False) -> int:
    """Period of a recurrence over the algebra, from state s0 (impulse by
    default): direct quotient-ring walk, or the CRT route for comparison."""
    rec = Recurrence(ga, tuple(ga.element(c) for c in coeffs))
    if s0 is None:
        s0 = impulse_state(rec)
    else:
        s0 = tuple(ga.element(s) for s in s0)
    if not via_decomposition:
        return period_bruteforce(rec, s0)
    ring_rec = ga.project_recurrence(rec)
    ring_s0 = tuple(ga.project(s) for s in s0)
    return period_over_ring(ring_rec, ring_s0)


def group_algebra_max_period(ga: GroupAlgebra, k: int, *,
                             budget: int | None = None) -> int:
    """Largest degree-k period over the algebra.

    Semisimple algebras use the lcm-closure of the component period sets;
    otherwise every unit-c_0 recurrence is walked from the impulse state
    (which attains that recurrence's maximum) within the budget.
    """
    if k < 1:
        raise OutOfRange("degree must be >= 1")
    if budget is None:
        budget = default_budget()
    if ga.semisimple:
        return max(period_set_over_ring(ga.decomposition, k, budget=budget))
    if ga.size ** k > budget:
        raise BudgetExceeded(
            f"{ga.size ** k} states exceed the budget {budget}"
        )
    best = 1
    units = list(ga.units())
    for c0 in units:
        for rest in itertools.product(ga.elements(), repeat=k - 1):
            rec = Recurrence(ga, (c0, *rest))
            best = max(best, period_bruteforce(rec, impulse_state(rec)))
    return best


def sample_recurrence(ga: GroupAlgebra, k: int, seed: int = 0) -> tuple:
    """A reproducible pseudorandom unit-c_0 recurrence over the algebra."""
    rng = random.Random(seed)
    units = list(ga.units())
    c0 = units[rng.randrange(len(units))]
    rest = tuple(
        tuple(rng.randrange(ga.p) for _ in range(ga.n)) for _ in range(k - 1)
    )
    return (c0, *rest)
