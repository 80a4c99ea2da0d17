"""Polynomials in ``x`` that are Laurent in ``s``, with rational coefficients.

The nilpotent-orbit code uses ``s`` for the square root of ``y = Im z``, so
that the half-integral powers ``y**(l/2)`` stay exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .gauss import format_fraction, to_fraction


class LaurentBivar:
    """Finitely supported ``sum c[i, j] x**i s**j`` with ``i >= 0``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0:
                raise ValueError("negative powers of x are not allowed")
            key = (int(i), int(j))
            acc[key] = acc.get(key, Fraction(0)) + to_fraction(c)
        object.__setattr__(self, "_terms", {k: c for k, c in acc.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentBivar is immutable")

    @classmethod
    def constant(cls, c) -> "LaurentBivar":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "LaurentBivar":
        return cls({(1, 0): 1})

    @classmethod
    def s(cls, power: int = 1) -> "LaurentBivar":
        return cls({(0, power): 1})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    @staticmethod
    def _coerce(value) -> "LaurentBivar":
        if isinstance(value, LaurentBivar):
            return value
        if isinstance(value, (int, Fraction)):
            return LaurentBivar.constant(value)
        raise TypeError(f"cannot combine LaurentBivar with {type(value).__name__}")

    def __add__(self, other):
        try:
            o = LaurentBivar._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentBivar(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentBivar({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            o = LaurentBivar._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return LaurentBivar._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentBivar({k: c * other for k, c in self._terms.items()})
        try:
            o = LaurentBivar._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in o._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentBivar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / to_fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = LaurentBivar.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            o = LaurentBivar._coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, x, s) -> Fraction:
        x, s = to_fraction(x), to_fraction(s)
        if s == 0 and any(j < 0 for _, j in self._terms):
            raise ZeroDivisionError("negative power of s at s = 0")
        return sum((c * x**i * s**j for (i, j), c in self._terms.items()), Fraction(0))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            mono = ("x" if i == 1 else f"x^{i}" if i else "") + ("s" if j == 1 else f"s^{j}" if j else "")
            parts.append(f"{format_fraction(c)}{'*' + mono if mono else ''}")
        return " + ".join(parts)
