"""Exact arithmetic in cyclotomic fields, and deformation parameters.

``CycNumber(coeffs, N)`` is the element ``sum_k coeffs[k] * zeta_N**k`` of
``Q(zeta_N)``, stored in canonical form: coefficients on ``1, zeta, ...,
zeta**(phi(N)-1)`` after reduction modulo the N-th cyclotomic polynomial.
Numbers of different orders combine by lifting both to the lcm of the
orders; rationals are the ``N = 1`` case and mix freely with ``int`` and
``Fraction``.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

import sympy


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(n, x), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def totient(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


def _reduce(poly: list, n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_coeffs(n)
    d = len(phi) - 1
    poly = list(poly)
    # phi is monic of degree d
    for top in range(len(poly) - 1, d - 1, -1):
        c = poly[top]
        if c:
            shift = top - d
            for k in range(d):
                poly[shift + k] -= c * phi[k]
            poly[top] = 0
    poly = poly[:d] + [0] * (d - len(poly))
    return tuple(Fraction(c) for c in poly)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _normalized_traces(n: int) -> tuple[Fraction, ...]:
    # Tr(zeta_n**k) / phi(n), a Ramanujan sum over phi(n)
    phi_n = totient(n)
    out = []
    for k in range(phi_n):
        m = n // gcd(k, n)
        out.append(Fraction(_mobius(m), totient(m)))
    return tuple(out)


_CYC_RE = re.compile(r"^\s*\[(.*)\]\s*@\s*(\d+)\s*$")


class CycNumber:
    """An element of the cyclotomic field ``Q(zeta_N)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable = (0,), order: int = 1):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        if isinstance(coeffs, (int, Fraction, str)):
            coeffs = [coeffs]
        self.order = order
        self.coeffs = _reduce([Fraction(c) for c in coeffs], order)

    @classmethod
    def _raw(cls, coeffs: tuple, order: int) -> "CycNumber":
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycNumber":
        """``zeta_order ** power``."""
        power %= order
        return cls([0] * power + [1], order)

    @classmethod
    def coerce(cls, x) -> "CycNumber":
        if isinstance(x, CycNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._raw((Fraction(x),), 1)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")

    @classmethod
    def parse(cls, text: str) -> "CycNumber":
        """Parse ``"p/q"`` or ``"[c0,c1,...]@N"``."""
        m = _CYC_RE.match(text)
        try:
            if m:
                body = m.group(1).strip()
                coeffs = [Fraction(c.strip()) for c in body.split(",")] if body else [0]
                return cls(coeffs, int(m.group(2)))
            return cls._raw((Fraction(text.strip()),), 1)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational or cyclotomic number: {text!r}") from None

    def lift(self, order: int) -> "CycNumber":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} into order {order}")
        step = order // self.order
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return CycNumber._raw(_reduce(poly, order), order)

    def _common(self, other) -> tuple["CycNumber", "CycNumber"]:
        other = CycNumber.coerce(other)
        n = _lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        # normalized trace is independent of the ambient order
        return hash(sum(c * t for c, t in zip(self.coeffs, _normalized_traces(self.order))))

    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return CycNumber._raw(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(tuple(-x for x in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-CycNumber.coerce(other))

    def __rsub__(self, other):
        return CycNumber.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber._raw(tuple(x * other for x in self.coeffs), self.order)
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycNumber._raw(_reduce(prod, a.order), a.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = CycNumber.coerce(other)
        if other.is_rational():
            return self * (1 / other.coeffs[0])
        raise NotImplementedError("division by an irrational cyclotomic number")

    def conjugate(self) -> "CycNumber":
        """Complex conjugate, ``zeta -> zeta**-1``."""
        n = self.order
        poly = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            poly[(-k) % n] += c
        return CycNumber._raw(_reduce(poly, n), n)

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.order)
        return complex(sum(float(c) * z**k for k, c in enumerate(self.coeffs)))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + f"]@{self.order}"

    def __repr__(self):
        return f"CycNumber({str(self)!r})"


@dataclass(frozen=True)
class Parameter:
    """A vector of cyclotomic numbers indexed by the vertices of a quiver.

    All entries are lifted to one common order on construction.
    """

    entries: tuple

    def __post_init__(self):
        values = [CycNumber.coerce(x) for x in self.entries]
        order = 1
        for v in values:
            order = _lcm(order, v.order)
        object.__setattr__(self, "entries", tuple(v.lift(order) for v in values))

    @classmethod
    def of(cls, values) -> "Parameter":
        if isinstance(values, Parameter):
            return values
        return cls(tuple(values))

    @classmethod
    def zeros(cls, n: int) -> "Parameter":
        return cls((0,) * n)

    @property
    def order(self) -> int:
        return self.entries[0].order if self.entries else 1

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @cached_property
    def _constraints(self) -> tuple[tuple[Fraction, ...], ...]:
        # one rational row per basis coordinate of Q(zeta_N)
        width = len(self.entries[0].coeffs) if self.entries else 0
        rows = []
        for k in range(width):
            row = tuple(e.coeffs[k] for e in self.entries)
            if any(row):
                rows.append(row)
        return tuple(rows)

    def dot(self, a: Sequence[int]) -> CycNumber:
        total = CycNumber._raw((Fraction(0),) * totient(self.order), self.order)
        for x, y in zip(self.entries, a):
            if y:
                total = total + x * y
        return total

    def annihilates(self, a: Sequence[int]) -> bool:
        """Exact test of ``self . a == 0``."""
        for row in self._constraints:
            if sum(c * x for c, x in zip(row, a) if x):
                return False
        return True

    def is_rational(self) -> bool:
        return all(e.is_rational() for e in self.entries)

    def to_json(self) -> list[str]:
        return [str(e) for e in self.entries]
