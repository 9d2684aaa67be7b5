import random

import pytest

from period_lab.errors import (
    ConstantPolynomial,
    MixedContexts,
    OutOfRange,
    ParseError,
    ZeroPolynomial,
)
from period_lab.ff import make_field
from period_lab.poly import (
    Factorization,
    Poly,
    factor,
    format_poly,
    gcd,
    is_irreducible,
    monic_polys,
    parse_poly,
    powmod,
    xgcd,
)

F2 = make_field(2)
F3 = make_field(3)
F4 = make_field(2, 2)
F5 = make_field(5)


def all_monic(field, degree):
    return list(monic_polys(field, degree))


def irreducible_by_trial_division(f):
    """Oracle: divide by every monic polynomial of degree 1..deg(f)//2."""
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.field, d):
            if (f % g).is_zero:
                return False
    return True


def test_construction_and_normalization():
    f = Poly(F5, (6, -1, 1, 0, 0))
    assert f.coeffs == (1, 4, 1)
    assert f.degree == 2
    z = Poly(F2, ())
    assert z.is_zero and z.degree == -1 and not z
    assert Poly.one(F2).coeffs == (1,)
    assert Poly.x(F3) == Poly(F3, (0, 1))


def test_arithmetic_reference_products():
    g = parse_poly(F2, "x^2+x+1")
    h = parse_poly(F2, "x^3+x+1")
    assert g * h == parse_poly(F2, "x^5+x^4+1")
    lin = parse_poly(F5, "x-3")
    assert lin * lin == parse_poly(F5, "x^2-x-1")
    assert lin * lin == parse_poly(F5, "x^2+4*x+4")


def test_divmod_identity_random():
    rng = random.Random(5)
    for F in (F2, F3, F4, F5):
        for _ in range(100):
            f = Poly(F, [rng.randrange(F.q) for _ in range(rng.randrange(0, 9))])
            g = Poly(F, [rng.randrange(F.q) for _ in range(rng.randrange(1, 6))])
            if g.is_zero:
                continue
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree


def test_division_errors():
    with pytest.raises(ZeroDivisionError):
        divmod(Poly.one(F2), Poly.zero(F2))
    with pytest.raises(MixedContexts):
        Poly.one(F2) + Poly.one(F3)


def test_gcd_properties():
    assert gcd(parse_poly(F5, "3*x^2+3"), Poly.zero(F5)) == parse_poly(F5, "x^2+1")
    rng = random.Random(9)
    for _ in range(60):
        f = Poly(F3, [rng.randrange(3) for _ in range(rng.randrange(1, 7))])
        g = Poly(F3, [rng.randrange(3) for _ in range(rng.randrange(1, 7))])
        if f.is_zero and g.is_zero:
            continue
        d = gcd(f, g)
        assert (f % d).is_zero and (g % d).is_zero
        dd, u, v = xgcd(f, g)
        assert dd == d
        assert u * f + v * g == d


def test_eval_and_derivative():
    f = parse_poly(F5, "x^3+2*x+1")
    # Horner against the definition
    for a in range(5):
        assert f(a) == (a ** 3 + 2 * a + 1) % 5
    assert f.derivative() == parse_poly(F5, "3*x^2+2")
    # characteristic kills the x^p term
    assert parse_poly(F5, "x^5+x").derivative() == Poly.one(F5)


def test_powmod():
    x = Poly.x(F2)
    mod = parse_poly(F2, "x^2+x+1")
    # derived: (x+1)(x^2+x+1) = x^3+1, so x^3 = 1 modulo the quadratic
    assert parse_poly(F2, "x+1") * mod == parse_poly(F2, "x^3+1")
    assert powmod(x, 3, mod) == Poly.one(F2)
    F7 = make_field(7)
    assert powmod(Poly.x(F7), 1, parse_poly(F7, "x-1")) == Poly.one(F7)
    assert powmod(parse_poly(F2, "x^4+x"), 0, mod) == Poly.one(F2)
    with pytest.raises(ZeroDivisionError):
        powmod(x, 2, Poly.zero(F2))


def test_pow_matches_repeated_multiplication():
    f = parse_poly(F3, "x+2")
    assert f ** 3 == f * f * f
    assert f ** 0 == Poly.one(F3)
    with pytest.raises(OutOfRange):
        f ** -1


def test_is_irreducible_references():
    assert is_irreducible(parse_poly(F2, "x^2+x+1"))
    assert not is_irreducible(parse_poly(F2, "x^2+1"))  # (x+1)^2
    # derived: no roots, not divisible by the unique irreducible quadratic
    quartic = parse_poly(F2, "x^4+x^3+x^2+x+1")
    assert irreducible_by_trial_division(quartic)
    assert is_irreducible(quartic)
    with pytest.raises(ConstantPolynomial):
        is_irreducible(Poly.one(F2))


def test_is_irreducible_matches_trial_division():
    for F, max_deg in ((F2, 6), (F3, 6), (F4, 4), (F5, 4)):
        for d in range(1, max_deg + 1):
            for f in monic_polys(F, d):
                assert is_irreducible(f) == irreducible_by_trial_division(f), str(f)


def test_is_irreducible_matches_trial_division_sampled():
    rng = random.Random(13)
    for F in (F4, F5):
        for d in (5, 6):
            for _ in range(60):
                f = Poly(F, [rng.randrange(F.q) for _ in range(d)] + [1])
                assert is_irreducible(f) == irreducible_by_trial_division(f), str(f)


def test_factor_reference_decompositions():
    fac = factor(parse_poly(F2, "x^5+x^4+1"))
    assert [(str(g), m) for g, m in fac] == [("x^2+x+1", 1), ("x^3+x+1", 1)]
    fac = factor(parse_poly(F2, "t^5+1"))  # t alias; 1 = -1 over F_2
    assert [(str(g), m) for g, m in fac] == [("x+1", 1), ("x^4+x^3+x^2+x+1", 1)]
    assert is_irreducible(parse_poly(F2, "x^4+x^3+x^2+x+1"))
    fac = factor(parse_poly(F5, "x^2-x-1"))
    assert [(str(g), m) for g, m in fac] == [("x+2", 2)]


def test_factor_handles_vanishing_derivative():
    # (x^2+x+1)^2 = x^4+x^2+1 has zero derivative over F_2
    f = parse_poly(F2, "x^4+x^2+1")
    assert f.derivative().is_zero
    assert [(str(g), m) for g, m in factor(f)] == [("x^2+x+1", 2)]
    # same phenomenon over an extension field exercises the Frobenius root
    g = parse_poly(F4, "x+[0,1]")
    f4 = g * g
    assert [(p.coeffs, m) for p, m in factor(f4)] == [(g.coeffs, 1 * 2)]


def test_factor_reconstruction_random():
    rng = random.Random(99)
    for F in (F2, F3, F4, F5):
        for _ in range(60):
            deg = rng.randrange(1, 9)
            cs = [rng.randrange(F.q) for _ in range(deg)] + [rng.randrange(1, F.q)]
            f = Poly(F, cs)
            fac = factor(f)
            assert fac.expand(F) == f
            assert fac.unit == f.leading
            for g, m in fac:
                assert g.is_monic and m >= 1
                assert is_irreducible(g)
            # canonical order: by degree, then little-endian coefficients
            keys = [(g.degree, g.coeffs) for g, _ in fac]
            assert keys == sorted(keys)


def test_factor_determinism_and_seed():
    f = Poly(F5, (1, 0, 0, 0, 0, 0, 1))  # x^6+1 splits into quadratics
    assert factor(f) == factor(f)
    assert factor(f, seed=1234) == factor(f)  # canonical ordering hides the seed


def test_factor_zero_and_constant():
    with pytest.raises(ZeroPolynomial):
        factor(Poly.zero(F2))
    fac = factor(Poly.constant(F5, 3))
    assert fac == Factorization(3, ())
    with pytest.raises(ValueError):
        fac.expand()  # constants need the field spelled out
    assert fac.expand(F5) == Poly.constant(F5, 3)


def test_monic_enumeration_order():
    polys = all_monic(F3, 2)
    assert len(polys) == 9
    assert polys[0] == parse_poly(F3, "x^2")
    assert polys[1] == parse_poly(F3, "x^2+1")  # constant term varies fastest
    assert polys[3] == parse_poly(F3, "x^2+x")
    assert len(set(polys)) == 9


def test_parse_format_roundtrip():
    rng = random.Random(21)
    for F in (F2, F5, F4, make_field(3, 2)):
        for _ in range(80):
            f = Poly(F, [rng.randrange(F.q) for _ in range(rng.randrange(0, 7))])
            assert parse_poly(F, format_poly(f)) == f


def test_parse_grammar():
    assert parse_poly(F5, "x^2 - x - 1") == Poly(F5, (4, 4, 1))
    assert parse_poly(F5, "2*x^3+x") == Poly(F5, (0, 1, 0, 2))
    assert parse_poly(F5, "-x") == Poly(F5, (0, 4))
    assert parse_poly(F5, "7") == Poly(F5, (2,))
    assert parse_poly(F5, "x+x") == Poly(F5, (0, 2))
    assert parse_poly(F2, "t^2+t+1") == parse_poly(F2, "x^2+x+1")
    assert parse_poly(F4, "[1,1]*x^2+[0,1]") == Poly(F4, (2, 0, 3))
    assert parse_poly(F4, "3*x") == Poly(F4, (0, 1))  # bare ints reduce mod p
    assert format_poly(Poly.zero(F2)) == "0"
    assert parse_poly(F2, "0") == Poly.zero(F2)
    for bad in ("", "x+", "+", "--x", "x^", "y+1", "[1,2", "x*2", "2**x"):
        with pytest.raises(ParseError):
            parse_poly(F5 if "[" not in bad else F4, bad)


def test_format_uses_canonical_coefficients():
    f = parse_poly(F5, "x^2-x-1")
    assert format_poly(f) == "x^2+4*x+4"
    g = Poly(F4, (3, 0, 1))
    assert format_poly(g) == "x^2+[1,1]"
