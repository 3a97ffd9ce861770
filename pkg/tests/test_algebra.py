"""Field and Laurent polynomial arithmetic."""

import pytest
from hypothesis import given, strategies as st

from ramforge.algebra import (
    INFINITY,
    FieldSpec,
    LaurentPoly,
    artin_schreier,
    canonical_modulus,
    format_laurent,
    parse_laurent,
    pth_root,
)
from ramforge.errors import FieldMismatch, ParseError

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2)
F5 = FieldSpec(5)


def L(spec, text):
    return parse_laurent(spec, text)


# ---------------------------------------------------------------- field spec

def test_canonical_modulus_f4():
    # t^2 + t + 1 is the only irreducible monic quadratic over F_2
    assert F4.modulus == (1, 1, 1)


def test_canonical_modulus_f8_f9():
    # brute re-derivation: first tuple (constant term first) with no root
    # and no monic divisor of degree <= deg/2
    assert canonical_modulus(2, 3) == (1, 0, 1, 1)  # 1 + t^2 + t^3
    assert canonical_modulus(3, 2) == (1, 0, 1)  # 1 + t^2


def test_canonical_modulus_is_least_irreducible():
    import itertools

    def divides(d, f, p):
        # naive polynomial division check over F_p, low-degree-first tuples
        f = list(f)
        dn = len(d) - 1
        for k in range(len(f) - 1, dn - 1, -1):
            c = f[k]
            if c:
                for i, dc in enumerate(d):
                    f[k - dn + i] = (f[k - dn + i] - c * dc) % p
        return not any(f[: dn])

    p, n = 3, 2
    got = canonical_modulus(p, n)
    for tail in itertools.product(range(p), repeat=n):
        cand = tail + (1,)
        reducible = any(
            divides(t2 + (1,), cand, p)
            for d in range(1, n // 2 + 1)
            for t2 in itertools.product(range(p), repeat=d)
        )
        if not reducible:
            assert cand == got
            break
        assert cand != got


def test_field_spec_rejects_bad_parameters():
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(2, 0)


# ----------------------------------------------------------------- pth roots

def test_pth_root_identity_on_prime_field():
    assert pth_root(F3.scalar(2)) == F3.scalar(2)
    assert pth_root(F2.scalar(1)) == F2.scalar(1)


def test_pth_root_of_generator_f4():
    # oracle: exhaustive search for the square root of omega in F_4
    omega = F4.element([0, 1])
    roots = [a for a in F4.elements() if a * a == omega]
    assert roots == [pth_root(omega)]
    # frozen: omega^2 = omega + 1 has coordinates (1, 1)
    assert pth_root(omega).coords == (1, 1)


@pytest.mark.parametrize("spec", [F2, F3, F4, FieldSpec(2, 3), FieldSpec(3, 2), FieldSpec(5, 2)])
def test_pth_root_bijective_exhaustive(spec):
    p = spec.p
    for a in spec.elements():
        assert pth_root(a) ** p == a
        assert pth_root(a**p) == a


def test_field_inverse_and_axioms_f9():
    F9 = FieldSpec(3, 2)
    elems = list(F9.elements())
    for a in elems:
        if not a.is_zero:
            assert a * a.inverse() == F9.one
    a, b, c = elems[4], elems[7], elems[5]
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        F2.one + F3.one


# ---------------------------------------------------------------- valuations

def test_valuation_examples():
    assert L(F2, "x^-3 + x").valuation == -3
    assert LaurentPoly.zero(F2).valuation is INFINITY
    assert L(FieldSpec(7), "5*x^2").valuation == 2


def test_infinity_ordering():
    assert INFINITY > 10**9
    assert not INFINITY < -5
    assert INFINITY == INFINITY
    assert INFINITY >= INFINITY


def test_characteristic_two_cancellation():
    assert (L(F2, "x^-3") + L(F2, "x^-3")).is_zero
    assert L(F2, "x^-1") * L(F2, "x^-1") == L(F2, "x^-2")


def test_frobenius_freshmans_dream():
    f = L(F2, "x^-1 + x^-2")
    assert f.frobenius() == L(F2, "x^-2 + x^-4")


@st.composite
def laurents(draw, spec, min_exp=-10, max_exp=6):
    exps = draw(st.lists(st.integers(min_exp, max_exp), max_size=5, unique=True))
    coeffs = [draw(st.integers(0, spec.q - 1)) for _ in exps]
    terms = {}
    for e, c in zip(exps, coeffs):
        coords = []
        for _ in range(spec.n):
            coords.append(c % spec.p)
            c //= spec.p
        terms[e] = spec.element(coords)
    return LaurentPoly(spec, terms)


@given(laurents(F3), laurents(F3))
def test_valuation_multiplicative(f, g):
    if f.is_zero or g.is_zero:
        assert (f * g).is_zero
    else:
        assert (f * g).valuation == f.valuation + g.valuation


@given(laurents(F4), laurents(F4))
def test_valuation_ultrametric(f, g):
    s = f + g
    if s.is_zero:
        return
    assert s.valuation >= min(f.valuation, g.valuation)
    if f.valuation != g.valuation:
        assert s.valuation == min(f.valuation, g.valuation)


@given(laurents(F2), laurents(F2))
def test_frobenius_is_additive(f, g):
    assert (f + g).frobenius() == f.frobenius() + g.frobenius()


@given(laurents(F3))
def test_artin_schreier_operator(h):
    assert artin_schreier(h) == h.frobenius() - h


# ------------------------------------------------------------- text grammar

def test_parse_and_format_roundtrip():
    f = L(F3, "x^-7 + 2*x^-3 + x^2")
    assert format_laurent(f) == "x^-7 + 2*x^-3 + x^2"
    assert L(F3, format_laurent(f)) == f


def test_parse_whitespace_insensitive():
    assert L(F3, " x ^-7+ 2 * x^ -3 +x^2 ") == L(F3, "x^-7+2*x^-3+x^2")


def test_parse_extension_coefficients():
    f = L(F4, "[0,1]*x^-3 + [1,1]")
    assert f[-3] == F4.element([0, 1])
    assert f[0] == F4.element([1, 1])
    assert L(F4, format_laurent(f)) == f


def test_parse_bare_and_signed_terms():
    assert L(F3, "x") == LaurentPoly.x_pow(F3, 1)
    assert L(F3, "5") == LaurentPoly.x_pow(F3, 0, 2)
    assert L(F3, "-x^-1") == LaurentPoly.x_pow(F3, -1, 2)
    assert L(F3, "x^-1 - x^-1").is_zero
    assert L(F3, "0").is_zero


def test_parse_duplicate_exponents_accumulate():
    assert L(F3, "x^-1 + 2*x^-1").is_zero


def test_parse_errors():
    for bad in ["", "x^", "y^2", "2*", "[1,2", "x^1.5", "[0,1,1]*x"]:
        with pytest.raises(ParseError):
            L(F4, bad)


def test_format_zero():
    assert format_laurent(LaurentPoly.zero(F2)) == "0"
