"""Metric operators for H = p^2 + i g x^eps p and its Hermitian image."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .coeff import CRational, Coefficient
from .operators import (
    OperatorPolynomial,
    XFunction,
    adjoint,
    minus_i_power,
    xfunction_commutator,
)

VARIANTS = ("plain", "symmetrized")


class MetricDerivationError(ValueError):
    """No monomial or logarithmic metric exponent satisfies the identity."""


class BCHResult(NamedTuple):
    operator: OperatorPolynomial
    terminated: bool
    order: int


def conjugate_by_exp(Q: XFunction, A: OperatorPolynomial) -> OperatorPolynomial:
    """Exact e^{-Q} A e^{Q} for pure-x Q.

    Conjugation is an algebra homomorphism fixing x and sending
    p to p - i Q'(x), so each term x^a p^b maps to x^a (p - i Q')^b.
    """
    shifted_p = OperatorPolynomial.p() - Q.derivative().to_operator().scale(CRational(0, 1))
    powers = [OperatorPolynomial.const(1)]
    out = OperatorPolynomial()
    for (a, b), c in A.items():
        while len(powers) <= b:
            powers.append(powers[-1] * shifted_p)
        out = out + (OperatorPolynomial.x(a) * powers[b]).scale(c)
    return out


def bch_conjugate_truncated(Q: XFunction, A: OperatorPolynomial, max_order: int) -> BCHResult:
    """Partial sum of sum_k ad_{-Q}^k(A) / k! up to max_order.

    ``order`` is the index of the last non-vanishing nested commutator;
    ``terminated`` says the series was seen to stop within max_order.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    minus_q = -Q
    term = A
    total = A
    order = 0
    for k in range(1, max_order + 1):
        term = xfunction_commutator(minus_q, term).scale(Fraction(1, k))
        if term.is_zero():
            return BCHResult(total, True, order)
        total = total + term
        order = k
    return BCHResult(total, False, order)


def interaction_term(eps: int, variant: str = "plain") -> OperatorPolynomial:
    """H_I without the coupling: i x^eps p, or (i/2){x^eps, p}."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    xe = OperatorPolynomial.x(eps)
    p = OperatorPolynomial.p()
    if variant == "plain":
        return (xe * p).scale(CRational(0, 1))
    return (xe * p + p * xe).scale(CRational(0, Fraction(1, 2)))


def build_class_hamiltonian(eps: int, variant: str = "plain") -> OperatorPolynomial:
    return OperatorPolynomial.p(2) + interaction_term(eps, variant).scale(Coefficient.g())


def pseudo_hermiticity_residual(Q: XFunction, H: OperatorPolynomial) -> OperatorPolynomial:
    return conjugate_by_exp(Q, H) - adjoint(H)


def _proportionality(target: OperatorPolynomial, basis: OperatorPolynomial):
    """Scalar c with c * basis == target, or None."""
    if basis.is_zero() or set(basis.monomials()) != set(target.monomials()):
        return None
    mono, bc = next(iter(basis.items()))
    ratio = target[mono].scalar() / bc.scalar()
    if basis.scale(ratio) == target:
        return ratio
    return None


def derive_metric(eps: int) -> XFunction:
    """Solve H_I^dagger - H_I = [-Q1, p^2] for Q1 by monomial/log ansatz.

    The candidate Q = g Q1 is accepted only if the full conjugation
    identity e^{-Q} H e^{Q} = H^dagger holds exactly and Q is purely
    first order in g.
    """
    H = build_class_hamiltonian(eps, "plain")
    h_int = interaction_term(eps, "plain")
    lhs = adjoint(h_int) - h_int
    kinetic = OperatorPolynomial.p(2)

    candidates: list[XFunction] = [XFunction.monomial(m, 1) for m in range(min(0, eps + 1), eps + 4) if m != 0]
    candidates.append(XFunction.log(1))

    for shape in candidates:
        rhs = xfunction_commutator(-shape, kinetic)
        c = _proportionality(lhs, rhs)
        if c is None:
            continue
        Q = shape.scale(Coefficient.g(1, c))
        if not pseudo_hermiticity_residual(Q, H).is_zero():
            continue
        if Q.g_powers() != {1}:
            continue
        return Q
    raise MetricDerivationError(f"no monomial or log metric exponent found for eps={eps}")


def hermitian_equivalent(eps: int, variant: str = "plain") -> OperatorPolynomial:
    """h = rho H rho^{-1} with rho = exp(-Q/2); checked to be self-adjoint."""
    Q = derive_metric(eps)
    h = conjugate_by_exp(Q.scale(Fraction(1, 2)), build_class_hamiltonian(eps, variant))
    if adjoint(h) != h:
        raise MetricDerivationError(f"similarity image is not self-adjoint for eps={eps}, {variant}")
    return h


def hermitian_closed_form(eps: int, variant: str = "plain") -> OperatorPolynomial:
    """p^2 + g^2 x^{2 eps}/4 - g eps x^{eps-1}/2 (last term absent when symmetrized)."""
    h = OperatorPolynomial.p(2) + OperatorPolynomial.x(2 * eps, Coefficient.g(2, Fraction(1, 4)))
    if variant == "plain" and eps != 0:
        h = h - OperatorPolynomial.x(eps - 1, Coefficient.g(1, Fraction(eps, 2)))
    return h


def apply_to_exponential(A: OperatorPolynomial, W: XFunction) -> list[tuple[int, Coefficient, XFunction]]:
    """Helper for A e^{-W}: returns (xpow, coeff, P_b) with A e^{-W} = sum c x^a (-i)^b P_b e^{-W}.

    P_0 = 1 and P_{k+1} = P_k' - W' P_k.
    """
    dW = W.derivative()
    chain = [XFunction({0: 1})]
    out = []
    for (a, b), c in A.items():
        while len(chain) <= b:
            prev = chain[-1]
            chain.append(prev.derivative() - dW * prev)
        out.append((a, c * minus_i_power(b), chain[b]))
    return out


def zero_mode_residual(A: OperatorPolynomial, W: XFunction) -> XFunction:
    """e^{W} A e^{-W}, as an x-function; zero iff e^{-W} is annihilated by A."""
    total = XFunction()
    for a, c, poly in apply_to_exponential(A, W):
        total = total + (XFunction.monomial(a, 1) * poly).scale(c)
    return total


__all__ = [
    "BCHResult",
    "MetricDerivationError",
    "VARIANTS",
    "bch_conjugate_truncated",
    "build_class_hamiltonian",
    "conjugate_by_exp",
    "derive_metric",
    "hermitian_closed_form",
    "hermitian_equivalent",
    "interaction_term",
    "pseudo_hermiticity_residual",
    "zero_mode_residual",
    "apply_to_exponential",
]
