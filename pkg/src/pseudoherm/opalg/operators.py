"""Normal-ordered polynomials in x and p with [x, p] = i.

Every operator is stored as a sum of c * x^a p^b with the x-part always
to the left.  Products are re-ordered with

    p^b x^c = sum_k C(b, k) (-i)^k c^(k) x^(c-k) p^(b-k)

where c^(k) is the falling factorial; the rule holds for negative c as
well, which is what lets x have Laurent powers.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Mapping, NamedTuple, Tuple

from .coeff import CRational, Coefficient, Scalar

_MINUS_I_POWERS = (CRational(1), CRational(0, -1), CRational(-1), CRational(0, 1))


def falling_factorial(c: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= c - j
    return out


def minus_i_power(k: int) -> CRational:
    return _MINUS_I_POWERS[k % 4]


class Monomial(NamedTuple):
    xpow: int
    ppow: int


def _mono(xpow: int, ppow: int) -> Monomial:
    if ppow < 0:
        raise ValueError(f"negative power of p: {ppow}")
    return Monomial(int(xpow), int(ppow))


class OperatorPolynomial:
    """Immutable canonical sum of Coefficient * x^a p^b terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Tuple[int, int], Coefficient | Scalar] = None):
        acc: dict[Monomial, Coefficient] = {}
        for key, c in (terms or {}).items():
            mono = _mono(*key)
            c = c if isinstance(c, Coefficient) else Coefficient.const(c)
            acc[mono] = acc[mono] + c if mono in acc else c
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls) -> "OperatorPolynomial":
        return cls()

    @classmethod
    def const(cls, value: Coefficient | Scalar) -> "OperatorPolynomial":
        return cls({(0, 0): value})

    @classmethod
    def x(cls, power: int = 1, coeff: Coefficient | Scalar = 1) -> "OperatorPolynomial":
        return cls({(power, 0): coeff})

    @classmethod
    def p(cls, power: int = 1, coeff: Coefficient | Scalar = 1) -> "OperatorPolynomial":
        return cls({(0, power): coeff})

    @classmethod
    def term(cls, xpow: int, ppow: int, coeff: Coefficient | Scalar = 1) -> "OperatorPolynomial":
        return cls({(xpow, ppow): coeff})

    # container protocol

    def items(self) -> Iterator[Tuple[Monomial, Coefficient]]:
        return iter(self._terms.items())

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def __getitem__(self, mono: Tuple[int, int]) -> Coefficient:
        return self._terms.get(Monomial(*mono), Coefficient())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, OperatorPolynomial):
            return self._terms == other._terms
        try:
            return self == OperatorPolynomial.const(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def p_degree(self) -> int:
        return max((m.ppow for m in self._terms), default=0)

    def is_x_only(self) -> bool:
        return all(m.ppow == 0 for m in self._terms)

    def max_g_power(self) -> int:
        return max((c.max_power() for c in self._terms.values()), default=0)

    def g_component(self, power: int) -> "OperatorPolynomial":
        """The part of the operator proportional to g**power."""
        return OperatorPolynomial({m: Coefficient.const(c[power]) for m, c in self._terms.items()})

    # arithmetic

    @staticmethod
    def _lift(value) -> "OperatorPolynomial":
        if isinstance(value, OperatorPolynomial):
            return value
        return OperatorPolynomial.const(value)

    def __add__(self, other) -> "OperatorPolynomial":
        other = self._lift(other)
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged[m] + c if m in merged else c
        return OperatorPolynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "OperatorPolynomial":
        return OperatorPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "OperatorPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "OperatorPolynomial":
        return self._lift(other) - self

    def scale(self, factor: Coefficient | Scalar) -> "OperatorPolynomial":
        return OperatorPolynomial({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "OperatorPolynomial":
        if isinstance(other, OperatorPolynomial):
            return normal_order_product(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "OperatorPolynomial":
        # scalars commute with everything
        return self.scale(other)

    def __pow__(self, n: int) -> "OperatorPolynomial":
        if n < 0:
            raise ValueError("negative operator powers are not defined")
        out = OperatorPolynomial.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __repr__(self) -> str:
        from ..hparser import format as _format

        return f"OperatorPolynomial({_format(self)!r})"


def normal_order_product(A: OperatorPolynomial, B: OperatorPolynomial) -> OperatorPolynomial:
    """Canonical normal-ordered product A*B."""
    out: dict[Monomial, Coefficient] = {}
    for (a, b), ca in A.items():
        for (c, d), cb in B.items():
            base = ca * cb
            for k in range(b + 1):
                ff = falling_factorial(c, k)
                if ff == 0:
                    break
                factor = minus_i_power(k) * (comb(b, k) * ff)
                mono = Monomial(a + c - k, b + d - k)
                contrib = base * factor
                out[mono] = out[mono] + contrib if mono in out else contrib
    return OperatorPolynomial(out)


def commutator(A: OperatorPolynomial, B: OperatorPolynomial) -> OperatorPolynomial:
    return A * B - B * A


def adjoint(A: OperatorPolynomial) -> OperatorPolynomial:
    """Hermitian adjoint, (c x^a p^b)^dagger = conj(c) p^b x^a, re-normal-ordered.

    x and p are self-adjoint and g is a real parameter.
    """
    out = OperatorPolynomial()
    for (a, b), c in A.items():
        out = out + OperatorPolynomial.p(b, c.conjugate()) * OperatorPolynomial.x(a)
    return out


class XFunction:
    """Laurent polynomial in x plus an optional c * ln(x) term.

    Holds metric exponents (Q, W) and anything else that depends on x
    alone.  Coefficients are exact and may carry powers of g.
    """

    __slots__ = ("laurent", "logcoeff")

    def __init__(self, laurent: Mapping[int, Coefficient | Scalar] = None, logcoeff: Coefficient | Scalar = None):
        terms: dict[int, Coefficient] = {}
        for k, c in (laurent or {}).items():
            c = c if isinstance(c, Coefficient) else Coefficient.const(c)
            terms[int(k)] = terms[int(k)] + c if int(k) in terms else c
        self.laurent = {k: c for k, c in sorted(terms.items()) if c}
        if logcoeff is None:
            logcoeff = Coefficient()
        elif not isinstance(logcoeff, Coefficient):
            logcoeff = Coefficient.const(logcoeff)
        self.logcoeff = logcoeff

    @classmethod
    def monomial(cls, power: int, coeff: Coefficient | Scalar) -> "XFunction":
        return cls({power: coeff})

    @classmethod
    def log(cls, coeff: Coefficient | Scalar) -> "XFunction":
        return cls(logcoeff=coeff)

    @classmethod
    def from_operator(cls, A: OperatorPolynomial) -> "XFunction":
        if not A.is_x_only():
            raise ValueError("operator depends on p")
        return cls({m.xpow: c for m, c in A.items()})

    def is_zero(self) -> bool:
        return not self.laurent and not self.logcoeff

    def has_log(self) -> bool:
        return bool(self.logcoeff)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XFunction):
            return NotImplemented
        return self.laurent == other.laurent and self.logcoeff == other.logcoeff

    def __hash__(self) -> int:
        return hash((tuple(self.laurent.items()), self.logcoeff))

    def __add__(self, other: "XFunction") -> "XFunction":
        merged = dict(self.laurent)
        for k, c in other.laurent.items():
            merged[k] = merged[k] + c if k in merged else c
        return XFunction(merged, self.logcoeff + other.logcoeff)

    def __neg__(self) -> "XFunction":
        return self.scale(-1)

    def __sub__(self, other: "XFunction") -> "XFunction":
        return self + (-other)

    def __mul__(self, other: "XFunction") -> "XFunction":
        if self.has_log() or other.has_log():
            raise ValueError("products involving ln(x) are not representable")
        out: dict[int, Coefficient] = {}
        for a, ca in self.laurent.items():
            for b, cb in other.laurent.items():
                out[a + b] = out[a + b] + ca * cb if a + b in out else ca * cb
        return XFunction(out)

    def scale(self, factor: Coefficient | Scalar) -> "XFunction":
        return XFunction({k: c * factor for k, c in self.laurent.items()}, self.logcoeff * factor)

    def derivative(self) -> "XFunction":
        out = {k - 1: c * k for k, c in self.laurent.items() if k != 0}
        if self.logcoeff:
            out[-1] = out[-1] + self.logcoeff if -1 in out else self.logcoeff
        return XFunction(out)

    def to_operator(self) -> OperatorPolynomial:
        if self.has_log():
            raise ValueError("ln(x) has no Laurent-polynomial operator form")
        return OperatorPolynomial({(k, 0): c for k, c in self.laurent.items()})

    def g_powers(self) -> set[int]:
        powers = {k for c in self.laurent.values() for k in c.powers()}
        return powers | set(self.logcoeff.powers())

    def evaluate(self, x, g: float):
        """Numeric values on an array of nodes (real part when exactly real)."""
        import numpy as np

        x = np.asarray(x, dtype=float)
        total = np.zeros_like(x, dtype=complex)
        for k, c in self.laurent.items():
            total = total + c.evaluate(g) * x**k
        if self.logcoeff:
            total = total + self.logcoeff.evaluate(g) * np.log(x)
        if np.all(total.imag == 0):
            return total.real
        return total

    def __repr__(self) -> str:
        from ..hparser import format_xfunction

        return f"XFunction({format_xfunction(self)!r})"


def xfunction_commutator(f: XFunction, A: OperatorPolynomial) -> OperatorPolynomial:
    """[f(x), A] for a pure-x function f, which may contain ln(x).

    Uses p^b f = sum_k C(b,k) (-i)^k f^(k) p^(b-k); only derivatives of f
    survive, so the ln term never has to be represented as an operator.
    """
    derivs: list[XFunction] = [f]
    out = OperatorPolynomial()
    for (a, b), c in A.items():
        while len(derivs) <= b:
            derivs.append(derivs[-1].derivative())
        for k in range(1, b + 1):
            dk = derivs[k].to_operator()
            if dk.is_zero():
                continue
            piece = OperatorPolynomial.x(a) * dk * OperatorPolynomial.p(b - k)
            out = out - piece.scale(c * (minus_i_power(k) * comb(b, k)))
    return out


X = OperatorPolynomial.x()
P = OperatorPolynomial.p()
G = OperatorPolynomial.const(Coefficient.g())
