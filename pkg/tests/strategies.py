from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from pseudoherm.opalg import CRational, Coefficient, OperatorPolynomial, XFunction

small_fraction = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))
crational = st.builds(CRational, small_fraction, small_fraction)


def coefficients(max_gpow=2):
    return st.dictionaries(st.integers(0, max_gpow), crational, min_size=1, max_size=2).map(Coefficient)


def operators(xmin=-2, xmax=3, pmax=2, max_terms=3, max_gpow=2):
    key = st.tuples(st.integers(xmin, xmax), st.integers(0, pmax))
    return st.dictionaries(key, coefficients(max_gpow), max_size=max_terms).map(OperatorPolynomial)


def xfunctions(xmin=-2, xmax=3, with_log=True):
    laurent = st.dictionaries(st.integers(xmin, xmax), coefficients(1), max_size=3)
    log = coefficients(1) if with_log else st.just(Coefficient())
    return st.builds(XFunction, laurent, st.one_of(st.just(Coefficient()), log))
