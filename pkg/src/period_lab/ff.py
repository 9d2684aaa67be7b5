"""Finite fields F_{p^e} with integer-encoded elements.

An element with power-basis coordinates (c_0, ..., c_{e-1}) over F_p is
encoded as the integer sum(c_i * p**i), so the elements of F_{p^e} are
exactly the ints in range(q) and equal elements are equal ints.  For
prime fields the encoding is just the residue.

A FieldCtx is immutable once constructed and every operation is a pure
function of its inputs, so contexts can be shared freely across threads
and processes.  Small extension fields get discrete-log tables at
construction time; larger ones fall back to per-operation coordinate
arithmetic.

Text formats (used by the CLI):
  field spec   "p" | "p^e" | "p^e/<poly>"     e.g. 2^3/x^3+x+1
  element      "7" for prime fields, "[c0,c1,...]" little-endian otherwise
"""

from __future__ import annotations

import itertools

from .errors import (
    CompositeCharacteristic,
    DegreeMismatch,
    OutOfRange,
    ParseError,
    ReducibleModulus,
    ZeroElement,
)
from .intfactor import factor_integer, is_prime

MAX_CHARACTERISTIC = 1 << 20
_LOG_TABLE_LIMIT = 4096  # exp/log tables for extension fields up to this order
_ADD_TABLE_LIMIT = 256   # full addition table below this (odd characteristic)


class FieldCtx:
    """The finite field F_{p^e}.  Construct via make_field()."""

    __slots__ = ("p", "e", "q", "modulus", "add", "sub", "neg", "mul", "inv", "pow")

    zero = 0
    one = 1

    def __init__(self, p: int, e: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        if e == 1:
            self._install_prime_ops()
        else:
            self._install_extension_ops()

    # -- construction helpers -------------------------------------------------

    def _install_prime_ops(self):
        p = self.p
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.neg = lambda a: -a % p
        self.mul = lambda a, b: a * b % p

        def inv(a):
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, p - 2, p)

        def powf(a, n):
            if n < 0:
                raise OutOfRange("negative exponent; use inv() explicitly")
            return pow(a, n, p)

        self.inv = inv
        self.pow = powf

    def _install_extension_ops(self):
        p, e, q = self.p, self.e, self.q
        # x^e == sum(red[i] x^i) modulo the (monic) defining polynomial
        red = tuple(-c % p for c in self.modulus[:e])

        def decode(a):
            digits = []
            for _ in range(e):
                a, r = divmod(a, p)
                digits.append(r)
            return digits

        def encode(digits):
            out = 0
            for d in reversed(digits):
                out = out * p + d
            return out

        def raw_add(a, b):
            return encode([(x + y) % p for x, y in zip(decode(a), decode(b))])

        def raw_neg(a):
            return encode([-x % p for x in decode(a)])

        def raw_mul(a, b):
            da, db = decode(a), decode(b)
            prod = [0] * (2 * e - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        if y:
                            prod[i + j] = (prod[i + j] + x * y) % p
            for i in range(2 * e - 2, e - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j, r in enumerate(red):
                        if r:
                            prod[i - e + j] = (prod[i - e + j] + c * r) % p
            return encode(prod[:e])

        def raw_pow(a, n):
            out = 1
            while n:
                if n & 1:
                    out = raw_mul(out, a)
                n >>= 1
                if n:
                    a = raw_mul(a, a)
            return out

        # addition
        if p == 2:
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a
        else:
            neg_t = [raw_neg(a) for a in range(q)]
            if q <= _ADD_TABLE_LIMIT:
                add_t = [raw_add(a, b) for a in range(q) for b in range(q)]
                self.add = lambda a, b: add_t[a * q + b]
                self.sub = lambda a, b: add_t[a * q + neg_t[b]]
            else:
                self.add = raw_add
                self.sub = lambda a, b: raw_add(a, neg_t[b])
            self.neg = lambda a: neg_t[a]

        # multiplication via discrete logs when the field is small enough
        exp_t = None
        if q <= _LOG_TABLE_LIMIT:
            for g in range(2, q):
                chain = []
                cur = 1
                while True:
                    chain.append(cur)
                    cur = raw_mul(cur, g)
                    if cur == 1:
                        break
                if len(chain) == q - 1:
                    exp_t = chain
                    break
        if exp_t is not None:
            log_t = [0] * q
            for i, v in enumerate(exp_t):
                log_t[v] = i
            exp2 = exp_t + exp_t  # doubled so products of logs need no reduction
            self.mul = lambda a, b: exp2[log_t[a] + log_t[b]] if a and b else 0

            def inv(a):
                if a == 0:
                    raise ZeroDivisionError("inverse of zero")
                return exp2[q - 1 - log_t[a]]

            def powf(a, n):
                if n < 0:
                    raise OutOfRange("negative exponent; use inv() explicitly")
                if a == 0:
                    return 1 if n == 0 else 0
                return exp_t[log_t[a] * n % (q - 1)]

            self.inv = inv
            self.pow = powf
        else:
            self.mul = raw_mul

            def inv(a):
                if a == 0:
                    raise ZeroDivisionError("inverse of zero")
                return raw_pow(a, q - 2)

            def powf(a, n):
                if n < 0:
                    raise OutOfRange("negative exponent; use inv() explicitly")
                if a == 0:
                    return 1 if n == 0 else 0
                return raw_pow(a, n % (q - 1)) if n else 1

            self.inv = inv
            self.pow = powf

    # -- element plumbing -----------------------------------------------------

    @property
    def size(self) -> int:
        return self.q

    def element(self, v: int) -> int:
        """Canonicalize an int as an element (residue for prime fields)."""
        if self.e == 1:
            return v % self.p
        if 0 <= v < self.q:
            return v
        raise OutOfRange(f"{v} is not an element encoding of {self.spec()}")

    def from_int(self, v: int) -> int:
        """Embed an integer through the prime subfield (v mod p)."""
        return v % self.p

    def from_coeffs(self, coords) -> int:
        """Element with the given power-basis coordinates (little-endian)."""
        coords = list(coords)
        if len(coords) > self.e:
            raise DegreeMismatch(f"{len(coords)} coordinates for {self.spec()}")
        out = 0
        for c in reversed(coords):
            out = out * self.p + c % self.p
        return out

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Power-basis coordinates of an element, little-endian, length e."""
        digits = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            digits.append(r)
        return tuple(digits)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def is_unit(self, a: int) -> bool:
        return a != 0

    def multiplicative_order(self, a: int) -> int:
        """Smallest n >= 1 with a^n = 1; divides q - 1."""
        if a == 0:
            raise ZeroElement("zero has no multiplicative order")
        n = self.q - 1
        for prime, _ in factor_integer(n):
            while n % prime == 0 and self.pow(a, n // prime) == 1:
                n //= prime
        return n

    # -- text formats ----------------------------------------------------------

    def spec(self) -> str:
        if self.e == 1:
            return str(self.p)
        from .poly import Poly, format_poly

        return f"{self.p}^{self.e}/" + format_poly(
            Poly(make_field(self.p), self.modulus)
        )

    def format_element(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        return "[" + ",".join(str(c) for c in self.coeffs(a)) + "]"

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if text.startswith("["):
            if self.e == 1:
                raise ParseError(f"{self.spec()} elements are plain integers")
            if not text.endswith("]"):
                raise ParseError(f"unterminated coordinate list {text!r}")
            body = text[1:-1].strip()
            parts = [s.strip() for s in body.split(",")] if body else []
            try:
                return self.from_coeffs(int(s) for s in parts)
            except ValueError as exc:
                raise ParseError(f"bad coordinate list {text!r}") from exc
        try:
            return self.from_int(int(text))
        except ValueError as exc:
            raise ParseError(f"bad element {text!r}") from exc

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldCtx({self.spec()!r})"

    def __reduce__(self):
        return (make_field, (self.p, self.e, self.modulus))


def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Candidates are compared on their little-endian coefficient vectors,
    constant term first, which makes the choice reproducible everywhere.
    """
    from .poly import Poly, is_irreducible

    base = make_field(p)
    for tail in itertools.product(range(p), repeat=e):
        f = Poly(base, (*tail, 1))
        if is_irreducible(f):
            return (*tail, 1)
    raise AssertionError("irreducibles of every degree exist")  # pragma: no cover


def make_field(p: int, e: int = 1, modulus=None) -> FieldCtx:
    """Construct F_{p^e}.

    If e > 1 and no modulus is supplied, the lexicographically smallest
    monic irreducible of degree e over F_p is chosen; a supplied modulus
    (little-endian coefficient sequence, or a Poly over F_p) must be
    monic of degree e and irreducible.
    """
    if not isinstance(p, int) or p < 2:
        raise CompositeCharacteristic(f"characteristic must be a prime integer, got {p!r}")
    if p > MAX_CHARACTERISTIC:
        raise OutOfRange(f"characteristic {p} exceeds the {MAX_CHARACTERISTIC} ceiling")
    if not is_prime(p):
        raise CompositeCharacteristic(f"{p} is not prime")
    if not isinstance(e, int) or e < 1:
        raise OutOfRange(f"extension degree must be a positive integer, got {e!r}")
    if e == 1:
        if modulus is not None:
            raise DegreeMismatch("prime fields take no modulus")
        return FieldCtx(p, 1, None)
    if modulus is None:
        return FieldCtx(p, e, _default_modulus(p, e))
    coeffs = tuple(int(c) % p for c in getattr(modulus, "coeffs", modulus))
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if len(coeffs) != e + 1 or coeffs[-1] != 1:
        raise DegreeMismatch(f"modulus must be monic of degree {e}")
    from .poly import Poly, is_irreducible

    if not is_irreducible(Poly(make_field(p), coeffs)):
        raise ReducibleModulus("supplied modulus is reducible over the prime field")
    return FieldCtx(p, e, coeffs)


def parse_field_spec(text: str) -> FieldCtx:
    """Parse "p", "p^e", or "p^e/<poly>" into a field context."""
    text = text.strip()
    head, _, poly_text = text.partition("/")
    try:
        if "^" in head:
            p_text, _, e_text = head.partition("^")
            p, e = int(p_text), int(e_text)
        else:
            p, e = int(head), 1
    except ValueError as exc:
        raise ParseError(f"bad field spec {text!r}") from exc
    if e == 1 and p > 1 and not is_prime(p):
        fac = factor_integer(p)
        if len(fac) == 1:
            base, exp = fac[0]
            raise ParseError(f"{p} is not prime; write {base}^{exp} for the extension field")
    if not poly_text:
        return make_field(p, e)
    from .poly import parse_poly

    base = make_field(p)
    return make_field(p, e, parse_poly(base, poly_text))
