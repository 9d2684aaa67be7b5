"""Dense univariate polynomials over a FieldCtx, with factorization.

Coefficients are stored little-endian (index i holds the coefficient of
x^i) as encoded field elements with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -1.

Factorization runs squarefree decomposition (with p-th root extraction
when the derivative vanishes), then distinct-degree splitting, then
randomized equal-degree splitting driven by a caller-visible seed, so
results are deterministic and canonically ordered.

Text grammar (CLI-facing):
    poly  := term (('+'|'-') term)*
    term  := coeff | coeff '*' var | coeff '*' var '^' exp | var | var '^' exp
with integer coefficients (reduced mod p) over prime fields and bracketed
little-endian coordinate lists over extension fields; whitespace is
ignored and 't' is accepted as an alias for 'x'.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import (
    ConstantPolynomial,
    MixedContexts,
    OutOfRange,
    ParseError,
    ZeroPolynomial,
)
from .ff import FieldCtx
from .intfactor import factor_integer

DEFAULT_SEED = 1


# -- raw coefficient-tuple arithmetic (hot paths) -----------------------------

def _trim(cs) -> tuple:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _radd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    add = F.add
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return _trim(out)


def _rneg(F, a):
    neg = F.neg
    return tuple(neg(c) for c in a)


def _rsub(F, a, b):
    return _radd(F, a, _rneg(F, b))


def _rscale(F, c, a):
    if c == 0:
        return ()
    mul = F.mul
    return tuple(mul(c, x) for x in a)


def _rmul(F, a, b):
    if not a or not b:
        return ()
    add, mul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return tuple(out)


def _rdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), tuple(a)
    sub, mul = F.sub, F.mul
    inv_lead = F.inv(b[-1])
    rem = list(a)
    quot = [0] * (len(a) - len(b) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        if c:
            c = mul(c, inv_lead)
            quot[i] = c
            for j, bj in enumerate(b):
                if bj:
                    rem[i + j] = sub(rem[i + j], mul(c, bj))
    return _trim(quot), _trim(rem[: len(b) - 1])


def _rmonic(F, a):
    if not a or a[-1] == 1:
        return tuple(a)
    return _rscale(F, F.inv(a[-1]), a)


def _rgcd(F, a, b):
    while b:
        a, b = b, _rdivmod(F, a, b)[1]
    return _rmonic(F, a)


def _rpowmod(F, base, n, mod):
    if not mod:
        raise ZeroDivisionError("polynomial modulus is zero")
    if len(mod) == 1:
        return ()  # unit modulus: everything reduces to zero
    out = (1,)
    base = _rdivmod(F, base, mod)[1]
    while n:
        if n & 1:
            out = _rdivmod(F, _rmul(F, out, base), mod)[1]
        n >>= 1
        if n:
            base = _rdivmod(F, _rmul(F, base, base), mod)[1]
    return out


def _rderiv(F, a):
    if len(a) < 2:
        return ()
    mul = F.mul
    out = []
    for i in range(1, len(a)):
        k = i % F.p
        out.append(mul(a[i], F.from_int(k)) if k != 1 else a[i])
    return _trim(out)


# -- the Poly type -------------------------------------------------------------

class Poly:
    """A polynomial over a fixed FieldCtx."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs=()):
        elem = field.element
        self.field = field
        self.coeffs = _trim([elem(c) for c in coeffs])

    @classmethod
    def zero(cls, field) -> "Poly":
        return _mk(field, ())

    @classmethod
    def one(cls, field) -> "Poly":
        return _mk(field, (1,))

    @classmethod
    def x(cls, field) -> "Poly":
        return _mk(field, (0, 1))

    @classmethod
    def constant(cls, field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def parse(cls, field, text: str) -> "Poly":
        return parse_poly(field, text)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        return _mk(self.field, _rmonic(self.field, self.coeffs))

    def derivative(self) -> "Poly":
        return _mk(self.field, _rderiv(self.field, self.coeffs))

    def scale(self, c) -> "Poly":
        return _mk(self.field, _rscale(self.field, self.field.element(c), self.coeffs))

    def shift(self, r: int) -> "Poly":
        """Multiply by x^r."""
        if not self.coeffs:
            return self
        return _mk(self.field, (0,) * r + self.coeffs)

    def __call__(self, point) -> int:
        """Evaluate at an element of the coefficient field (Horner)."""
        F = self.field
        point = F.element(point)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, point), c)
        return acc

    def _check(self, other) -> "Poly":
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise MixedContexts("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return _mk(self.field, _radd(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        return _mk(self.field, _rsub(self.field, self.coeffs, other.coeffs))

    def __neg__(self):
        return _mk(self.field, _rneg(self.field, self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        return _mk(self.field, _rmul(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        other = self._check(other)
        q, r = _rdivmod(self.field, self.coeffs, other.coeffs)
        return _mk(self.field, q), _mk(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        if n < 0:
            raise OutOfRange("negative polynomial power")
        out = _mk(self.field, (1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.field.spec()!r}, {format_poly(self)!r})"


def _mk(field, coeffs) -> Poly:
    # trusted constructor: coeffs already canonical and trimmed
    p = Poly.__new__(Poly)
    p.field = field
    p.coeffs = tuple(coeffs)
    return p


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._check(g)
    return _mk(f.field, _rgcd(f.field, f.coeffs, g.coeffs))


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, u, v) with d = gcd monic and u*f + v*g = d."""
    f._check(g)
    F = f.field
    r0, r1 = f.coeffs, g.coeffs
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = _rdivmod(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _rsub(F, u0, _rmul(F, q, u1))
        v0, v1 = v1, _rsub(F, v0, _rmul(F, q, v1))
    if r0 and r0[-1] != 1:
        c = F.inv(r0[-1])
        r0, u0, v0 = _rscale(F, c, r0), _rscale(F, c, u0), _rscale(F, c, v0)
    return _mk(F, r0), _mk(F, u0), _mk(F, v0)


def powmod(base: Poly, n: int, mod: Poly) -> Poly:
    """base^n reduced mod `mod`, via square-and-multiply."""
    base._check(mod)
    if n < 0:
        raise OutOfRange("negative exponent")
    if mod.is_zero:
        raise ZeroDivisionError("powmod modulus is zero")
    return _mk(base.field, _rpowmod(base.field, base.coeffs, n, mod.coeffs))


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over the coefficient field.

    Checks x^(q^d) == x (mod f) together with gcd(x^(q^(d/l)) - x, f) = 1
    for every prime l dividing d = deg f.
    """
    d = f.degree
    if d <= 0:
        raise ConstantPolynomial("irreducibility needs degree >= 1")
    F = f.field
    fm = _rmonic(F, f.coeffs)
    q = F.q
    checkpoints = {d // ell for ell, _ in factor_integer(d)} if d > 1 else set()
    x = (0, 1)
    xmod = _rdivmod(F, x, fm)[1]
    h = x
    for i in range(1, d + 1):
        h = _rpowmod(F, h, q, fm)
        if i in checkpoints:
            if _rgcd(F, _rsub(F, h, xmod), fm) != (1,):
                return False
        elif i == d:
            if h != xmod:
                return False
    return True


@dataclass(frozen=True)
class Factorization:
    """unit * product(factor^multiplicity); factors monic irreducible,
    pairwise distinct, sorted by (degree, little-endian coefficients)."""

    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def expand(self, field: FieldCtx | None = None) -> Poly:
        if field is None:
            if not self.factors:
                raise ValueError("expanding a constant needs an explicit field")
            field = self.factors[0][0].field
        out = (self.unit,) if self.unit else ()
        for g, m in self.factors:
            for _ in range(m):
                out = _rmul(field, out, g.coeffs)
        return _mk(field, out)


def _rpth_root(F, a):
    # a has only x^(i*p) terms; invert Frobenius on each coefficient
    k = F.p ** (F.e - 1)
    powf = F.pow
    return tuple(powf(a[i], k) for i in range(0, len(a), F.p))


def _squarefree_parts(F, f):
    """[(monic squarefree part, multiplicity), ...] for monic f, deg >= 1."""
    out = []
    deriv = _rderiv(F, f)
    if not deriv:
        for part, mult in _squarefree_parts(F, _rpth_root(F, f)):
            out.append((part, mult * F.p))
        return out
    c = _rgcd(F, f, deriv)
    w = _rdivmod(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = _rgcd(F, w, c)
        z = _rdivmod(F, w, y)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = _rdivmod(F, c, y)[0]
    if len(c) > 1:
        for part, mult in _squarefree_parts(F, _rpth_root(F, c)):
            out.append((part, mult * F.p))
    return out


def _distinct_degree_parts(F, f):
    """[(product of the degree-d irreducible factors, d), ...] for monic
    squarefree f."""
    out = []
    q = F.q
    g = f
    h = _rdivmod(F, (0, 1), g)[1]
    i = 0
    while len(g) - 1 > 0:
        i += 1
        if 2 * i > len(g) - 1:
            out.append((g, len(g) - 1))
            break
        h = _rpowmod(F, h, q, g)
        xmod = _rdivmod(F, (0, 1), g)[1]
        d = _rgcd(F, _rsub(F, h, xmod), g)
        if len(d) > 1:
            out.append((d, i))
            g = _rdivmod(F, g, d)[0]
            h = _rdivmod(F, h, g)[1]
    return out


def _equal_degree_split(F, f, d, rng):
    """Irreducible factors of monic squarefree f whose factors all have
    degree d (Cantor-Zassenhaus, deterministic given the rng state)."""
    n = len(f) - 1
    if n == d:
        return [f]
    q = F.q
    while True:
        r = _trim([rng.randrange(q) for _ in range(n)])
        if len(r) < 2:
            continue
        if F.p == 2:
            acc = _rdivmod(F, r, f)[1]
            s = acc
            for _ in range(F.e * d - 1):
                s = _rpowmod(F, s, 2, f)
                acc = _radd(F, acc, s)
            g = _rgcd(F, acc, f)
        else:
            s = _rpowmod(F, r, (q ** d - 1) // 2, f)
            g = _rgcd(F, _rsub(F, s, (1,)), f)
        if 1 < len(g) < len(f):
            rest = _rdivmod(F, f, g)[0]
            return _equal_degree_split(F, g, d, rng) + _equal_degree_split(F, rest, d, rng)


def factor(f: Poly, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete factorization into monic irreducibles with multiplicities."""
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    F = f.field
    unit = f.leading
    w = _rmonic(F, f.coeffs)
    if len(w) == 1:
        return Factorization(unit, ())
    rng = random.Random(seed)
    counts: dict[tuple, int] = {}
    for part, mult in _squarefree_parts(F, w):
        for prod, d in _distinct_degree_parts(F, part):
            for irr in _equal_degree_split(F, prod, d, rng):
                counts[irr] = counts.get(irr, 0) + mult
    ordered = sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return Factorization(unit, tuple((_mk(F, cs), m) for cs, m in ordered))


def monic_polys(field: FieldCtx, degree: int):
    """All monic polynomials of the given degree, in little-endian counting
    order on the coefficient vector (constant term varies fastest)."""
    if degree < 0:
        raise OutOfRange("degree must be >= 0")
    q = field.q
    for idx in range(q ** degree):
        cs = []
        v = idx
        for _ in range(degree):
            v, r = divmod(v, q)
            cs.append(r)
        yield _mk(field, (*cs, 1))


# -- text format ----------------------------------------------------------------

_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\[[^\[\]]*\]|\d+)\*?)?(?:(?P<var>[xt])(?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(field: FieldCtx, text: str) -> Poly:
    """Parse the polynomial text grammar over the given field."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial")
    # split into signed terms, ignoring signs inside coordinate brackets
    terms: list[tuple[int, str]] = []
    sign, buf, depth = 1, "", 0
    pending_sign = False
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        if ch in "+-" and depth == 0:
            if buf:
                terms.append((sign, buf))
                buf = ""
            elif terms or pending_sign:
                raise ParseError(f"dangling sign in {text!r}")
            sign = 1 if ch == "+" else -1
            pending_sign = True
            continue
        buf += ch
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    if not buf:
        raise ParseError(f"trailing sign in {text!r}")
    terms.append((sign, buf))

    acc: dict[int, int] = {}
    for sgn, term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ParseError(f"bad term {term!r} in {text!r}")
        coeff_text = m.group("coeff")
        if coeff_text is None:
            c = field.one
        elif coeff_text.startswith("["):
            c = field.parse_element(coeff_text)
        else:
            c = field.from_int(int(coeff_text))
        if m.group("var") is None:
            exp = 0
        else:
            exp = int(m.group("exp")) if m.group("exp") else 1
        if sgn < 0:
            c = field.neg(c)
        acc[exp] = field.add(acc.get(exp, 0), c)
    if not acc:
        return _mk(field, ())
    cs = [0] * (max(acc) + 1)
    for exp, c in acc.items():
        cs[exp] = c
    return _mk(field, _trim(cs))


def format_poly(f: Poly, variable: str = "x") -> str:
    """Canonical text form; reparses to an identical Poly."""
    if f.is_zero:
        return "0"
    field = f.field
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(field.format_element(c))
            continue
        xpow = variable if i == 1 else f"{variable}^{i}"
        if c == field.one:
            parts.append(xpow)
        else:
            parts.append(f"{field.format_element(c)}*{xpow}")
    return "+".join(parts)
