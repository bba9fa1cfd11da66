import pytest
from hypothesis import given, strategies as st

from braidkit.errors import InexactDivision, NotInvertible, PolynomialParseError, ZeroPolynomial
from braidkit.polynomial import (
    OneVarLaurent,
    TwoVarLaurent,
    dense_divexact,
    dense_mul,
    format_laurent,
    kron_pack,
    kron_unpack,
    parse_laurent,
    poly_arith,
    substitute,
    v_degrees,
)

coeff = st.integers(-50, 50)
exp = st.integers(-6, 6)
two_var = st.dictionaries(st.tuples(exp, exp), coeff, max_size=6).map(TwoVarLaurent)
one_var = st.dictionaries(exp, coeff, max_size=6).map(OneVarLaurent)


def test_trefoil_format():
    p = TwoVarLaurent({(4, 0): -1, (2, 2): 1, (2, 0): 2})
    assert format_laurent(p) == "-v^4 + v^2*z^2 + 2*v^2"


@pytest.mark.parametrize("text", [
    "-v^4 + v^2*z^2 + 2*v^2",
    "-v*z^-1 + v^-1*z^-1",
    "1",
    "0",
    "7 - 3*v^-2*z",
])
def test_parse_format_examples(text):
    assert format_laurent(parse_laurent(text)) == text


def test_parse_errors():
    with pytest.raises(PolynomialParseError):
        parse_laurent("v^^2")
    with pytest.raises(PolynomialParseError):
        parse_laurent("q^2")


def test_degrees_and_zero():
    p = parse_laurent("v^3*z - v^-5")
    assert v_degrees(p) == (-5, 3)
    with pytest.raises(ZeroPolynomial):
        v_degrees(TwoVarLaurent())


def test_inverse_rules():
    v = TwoVarLaurent({(1, 0): 1})
    assert v ** -2 == TwoVarLaurent({(-2, 0): 1})
    with pytest.raises(NotInvertible):
        (v + 1) ** -1


def test_poly_arith_ops():
    a, b = parse_laurent("v + z"), parse_laurent("v - z")
    assert poly_arith(a, b, "mul") == parse_laurent("v^2 - z^2")
    assert poly_arith(a, b, "sub") == parse_laurent("2*z")


def test_substitute_partial_and_total():
    p = parse_laurent("v^2*z + 3")
    assert substitute(p, {"v": 1, "z": 2}) == 5
    assert format_laurent(substitute(p, {"v": -1})) == "z + 3"


@given(two_var, two_var, two_var)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TwoVarLaurent()


@given(two_var)
def test_format_parse_round_trip(p):
    assert parse_laurent(format_laurent(p)) == p


@given(one_var, one_var, st.sampled_from((1, -1)))
def test_evaluate_is_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(st.lists(st.integers(-10**6, 10**6), max_size=12), st.integers(22, 40))
def test_kron_round_trip(coeffs, bits):
    packed = kron_pack(coeffs, bits)
    out = kron_unpack(packed, bits)
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    assert out == coeffs


@given(st.lists(coeff, min_size=1, max_size=10), st.lists(coeff, min_size=1, max_size=10))
def test_dense_mul_and_divexact(a, b):
    if not any(b) or not any(a):
        return
    while b[-1] == 0:
        b = b[:-1]
    while a[-1] == 0:
        a = a[:-1]
    prod = dense_mul(a, b)
    assert dense_divexact(prod, b) == a


def test_divexact_remainder():
    with pytest.raises(InexactDivision):
        dense_divexact([1, 0, 1], [1, 1])
