"""Gaussian rationals ``a + b i`` with ``a, b`` in Q, and rational parsing helpers."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction, "Gauss"]


def to_fraction(value) -> Fraction:
    """Parse ``int``, ``Fraction`` or a ``"p/q"`` string into a canonical Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(value) -> str:
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Gauss:
    """An element of Q(i). Immutable; components are canonical Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gauss is immutable")

    @staticmethod
    def coerce(value) -> "Gauss":
        if isinstance(value, Gauss):
            return value
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return Gauss(value[0], value[1])
        if isinstance(value, complex):
            raise TypeError("floating-point complex numbers are not exact")
        return Gauss(value, 0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            o = Gauss.coerce(other)
        except TypeError:
            return NotImplemented
        return Gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Gauss.coerce(other)
        except TypeError:
            return NotImplemented
        return Gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return Gauss.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Gauss(self.re * other, self.im * other)
        try:
            o = Gauss.coerce(other)
        except TypeError:
            return NotImplemented
        return Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return Gauss(self.re / other, self.im / other)
        try:
            o = Gauss.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return Gauss(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return Gauss.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (Gauss(1) / self) ** (-k)
        result, base = Gauss(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Gauss":
        return Gauss(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Gauss):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"Gauss({format_fraction(self.re)!r}, {format_fraction(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return format_fraction(self.re)
        return f"{format_fraction(self.re)}{'+' if self.im >= 0 else '-'}{format_fraction(abs(self.im))}i"

    def to_json(self) -> list[str]:
        return [format_fraction(self.re), format_fraction(self.im)]


I = Gauss(0, 1)


def conj(value):
    """Complex conjugate of an exact scalar; rationals are fixed."""
    if isinstance(value, Gauss):
        return value.conjugate()
    return value


def real_part(value) -> Fraction:
    if isinstance(value, Gauss):
        return value.re
    return to_fraction(value)


def imag_part(value) -> Fraction:
    if isinstance(value, Gauss):
        return value.im
    return Fraction(0)


def i_power(k: int) -> Gauss:
    """``i**k`` for any integer ``k``."""
    return (Gauss(1), Gauss(0, 1), Gauss(-1), Gauss(0, -1))[k % 4]
