from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from pseudoherm.hparser import (
    LexError,
    NegativePowerError,
    NonIntegerExponentError,
    ParseError,
    ParseSyntaxError,
    format,
    format_xfunction,
    parse,
    term_table,
)
from pseudoherm.opalg import (
    CRational,
    Coefficient,
    OperatorPolynomial,
    build_class_hamiltonian,
    derive_metric,
    hermitian_equivalent,
)
from strategies import operators

I = CRational(0, 1)


def test_class_member():
    assert parse("p^2 + 1i*g*x^2*p") == build_class_hamiltonian(2)


def test_ccr():
    assert parse("x*p - p*x") == OperatorPolynomial.const(I)


def test_anticommutator():
    assert parse("{x,p}") == OperatorPolynomial({(1, 1): 2, (0, 0): -I})


def test_symmetrized_via_braces():
    assert parse("p^2 + 1/2i*g*{x^3, p}") == build_class_hamiltonian(3, "symmetrized")


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3/2", OperatorPolynomial.const(Fraction(3, 2))),
        ("-2/3i", OperatorPolynomial.const(CRational(0, Fraction(-2, 3)))),
        ("0.25*x", OperatorPolynomial.x(1, Fraction(1, 4))),
        ("2^3", OperatorPolynomial.const(8)),
        ("x^-2", OperatorPolynomial.x(-2)),
        ("(2*x)^-1", OperatorPolynomial.x(-1, Fraction(1, 2))),
        ("x^(1+2)", OperatorPolynomial.x(3)),
        ("x^0", OperatorPolynomial.const(1)),
        ("x * -p", OperatorPolynomial.term(1, 1, -1)),
        ("  g  *  x ", OperatorPolynomial.x(1, Coefficient.g())),
    ],
)
def test_literals_and_powers(text, expected):
    assert parse(text) == expected


def test_power_binds_tighter_than_product():
    assert parse("2*x^2") == OperatorPolynomial.x(2, 2)


class TestFormat:
    def test_imaginary_unit(self):
        assert format(OperatorPolynomial.const(I)) == "(1i)"

    def test_class_member(self):
        assert format(build_class_hamiltonian(1)) == "p^2 + (1i)g x p"

    def test_zero(self):
        assert format(OperatorPolynomial()) == "0"

    def test_quartic_image(self):
        assert format(hermitian_equivalent(2)) == "p^2 + (1/4)g^2 x^4 - g x"

    def test_negative_leading(self):
        assert format(-OperatorPolynomial.x(2, 3)) == "-3x^2"

    def test_mixed_coefficient(self):
        text = format(OperatorPolynomial.x(-1, CRational(1, -2)))
        assert text == "(1-2i)x^-1"
        assert parse(text) == OperatorPolynomial.x(-1, CRational(1, -2))

    def test_log_metric(self):
        assert format_xfunction(derive_metric(-1)) == "g ln(x)"
        assert format_xfunction(derive_metric(2)) == "(1/3)g x^3"

    def test_term_table(self):
        rows = term_table(build_class_hamiltonian(1))
        assert rows[1] == {"xpow": 1, "ppow": 1, "gpow": 1, "re": "0", "im": "1"}


@settings(max_examples=200, deadline=None)
@given(operators(xmin=-4, xmax=6, pmax=3, max_terms=5, max_gpow=3))
def test_round_trip(A):
    assert parse(format(A)) == A


@pytest.mark.parametrize(
    "text,error,position",
    [
        ("x + ?", LexError, 4),
        ("x + i", LexError, 4),
        ("xp", LexError, 1),
        ("x + é", LexError, 4),
        ("x +", ParseSyntaxError, 3),
        ("(x + p", ParseSyntaxError, 6),
        ("{x p}", ParseSyntaxError, 4),
        ("x )", ParseSyntaxError, 2),
        ("x^1.5", NonIntegerExponentError, 2),
        ("x^(1/2)", NonIntegerExponentError, 2),
        ("x^(g)", NonIntegerExponentError, 2),
        ("p^-1", NegativePowerError, 2),
        ("g^-2", NegativePowerError, 2),
        ("(x+1)^-1", NegativePowerError, 6),
        ("1/0", LexError, 0),
    ],
)
def test_errors_carry_positions(text, error, position):
    with pytest.raises(error) as info:
        parse(text)
    assert isinstance(info.value, ParseError)
    assert info.value.position == position
    assert 0 <= info.value.position <= len(text.encode())
