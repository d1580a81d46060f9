"""Exact coefficients: polynomials in the coupling g over the Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Tuple, Union


class CRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "CRational":
        if isinstance(value, CRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        if isinstance(value, complex):
            # exact binary expansion of both parts
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, float):
            return cls(Fraction(value))
        raise TypeError(f"cannot interpret {value!r} as a complex rational")

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        try:
            other = CRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other) -> "CRational":
        other = CRational.coerce(other)
        return CRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "CRational":
        other = CRational.coerce(other)
        return CRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "CRational":
        return CRational.coerce(other) - self

    def __neg__(self) -> "CRational":
        return CRational(-self.re, -self.im)

    def __mul__(self, other) -> "CRational":
        other = CRational.coerce(other)
        return CRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CRational":
        other = CRational.coerce(other)
        den = other.re * other.re + other.im * other.im
        if not den:
            raise ZeroDivisionError("complex rational division by zero")
        num = self * other.conjugate()
        return CRational(num.re / den, num.im / den)

    def conjugate(self) -> "CRational":
        return CRational(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"CRational({self.re}, {self.im})"


I = CRational(0, 1)
ONE = CRational(1)

Scalar = Union[int, Fraction, CRational]


class Coefficient:
    """Sum of c_k g^k with exact complex-rational c_k.

    Canonical: zero terms are never stored, so structural equality is
    value equality.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[Tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, CRational] = {}
        for k, c in items:
            if k < 0:
                raise ValueError("negative power of g")
            c = CRational.coerce(c)
            acc[k] = acc[k] + c if k in acc else c
        self._terms = {k: v for k, v in sorted(acc.items()) if v}
        self._hash = None

    @classmethod
    def const(cls, value: Scalar) -> "Coefficient":
        return cls({0: value})

    @classmethod
    def g(cls, power: int = 1, value: Scalar = 1) -> "Coefficient":
        return cls({power: value})

    def items(self) -> Iterator[Tuple[int, CRational]]:
        return iter(self._terms.items())

    def powers(self) -> list[int]:
        return list(self._terms)

    def __getitem__(self, power: int) -> CRational:
        return self._terms.get(power, CRational())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coefficient):
            try:
                other = Coefficient.const(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple((k, v) for k, v in self._terms.items()))
        return self._hash

    @staticmethod
    def _lift(value) -> "Coefficient":
        return value if isinstance(value, Coefficient) else Coefficient.const(value)

    def __add__(self, other) -> "Coefficient":
        other = self._lift(other)
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged[k] + v if k in merged else v
        return Coefficient(merged)

    __radd__ = __add__

    def __neg__(self) -> "Coefficient":
        return Coefficient({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "Coefficient":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Coefficient":
        return self._lift(other) - self

    def __mul__(self, other) -> "Coefficient":
        other = self._lift(other)
        out: dict[int, CRational] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                prod = ca * cb
                out[a + b] = out[a + b] + prod if a + b in out else prod
        return Coefficient(out)

    __rmul__ = __mul__

    def conjugate(self) -> "Coefficient":
        """Complex conjugation with g treated as a real parameter."""
        return Coefficient({k: v.conjugate() for k, v in self._terms.items()})

    def scalar(self) -> CRational:
        """The value of a g-independent coefficient."""
        if any(k for k in self._terms):
            raise ValueError("coefficient depends on g")
        return self[0]

    def max_power(self) -> int:
        return max(self._terms, default=0)

    def evaluate(self, g: float | complex) -> complex:
        return sum(complex(c) * g**k for k, c in self._terms.items()) if self._terms else 0j

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v.re}{'+' if v.im >= 0 else '-'}{abs(v.im)}i" for k, v in self._terms.items())
        return f"Coefficient({{{body}}})"


ZERO_COEFF = Coefficient()
ONE_COEFF = Coefficient.const(1)
