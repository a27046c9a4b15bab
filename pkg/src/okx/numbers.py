"""Exact scalars: rational parsing and a first-order-infinitesimal number type.

Every core computation runs over :class:`fractions.Fraction`.  The limiting
body of a boundary divisor is computed once more over :class:`Eps`, the ring
of polynomials in a positive infinitesimal ``eps`` ordered by their sign for
all sufficiently small ``eps``.  The linear-algebra and LP code only ever
divides by constants, so the same routines run unchanged on both types.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, "Eps"]


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings; reject floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"not an exact rational: {value!r} ({type(value).__name__})")


def to_scalar(value) -> Scalar:
    if isinstance(value, Eps):
        return value.simplify()
    return to_fraction(value)


def as_vector(values: Iterable) -> tuple:
    return tuple(to_scalar(v) for v in values)


def format_rational(q: Fraction) -> str:
    q = to_fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_vector(v) -> str:
    return "(" + ",".join(format_rational(x) if not isinstance(x, Eps) else repr(x) for x in v) + ")"


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1,-1/2,3"`` into a tuple of Fractions."""
    parts = [p for p in text.split(",")]
    if not parts or any(not p.strip() for p in parts):
        raise ValueError(f"malformed rational list: {text!r}")
    return tuple(to_fraction(p) for p in parts)


class Eps:
    """Polynomial ``c0 + c1*eps + c2*eps**2 + ...`` with ``0 < eps << 1``.

    Comparison uses the sign of the lowest-order nonzero coefficient.
    Division is only defined by constants.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = (0,)):
        cs = [to_fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs) if cs else (Fraction(0),)

    @classmethod
    def infinitesimal(cls) -> "Eps":
        return cls((0, 1))

    @staticmethod
    def _lift(other) -> "Eps | None":
        if isinstance(other, Eps):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Eps((other,))
        return None

    def is_constant(self) -> bool:
        return len(self.coeffs) == 1

    def simplify(self) -> Scalar:
        return self.coeffs[0] if self.is_constant() else self

    def at(self, value=0) -> Fraction:
        """Evaluate at ``eps = value`` (``value=0`` gives the limit)."""
        value = to_fraction(value)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def sign(self) -> int:
        for c in self.coeffs:
            if c:
                return 1 if c > 0 else -1
        return 0

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Eps(x + y for x, y in zip(a, b)).simplify()

    __radd__ = __add__

    def __neg__(self):
        return Eps(-c for c in self.coeffs).simplify()

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return Eps(out).simplify()

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.is_constant():
            raise ZeroDivisionError("division by a non-constant infinitesimal expression")
        d = o.coeffs[0]
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return Eps(c / d for c in self.coeffs).simplify()

    def __rtruediv__(self, other):
        if not self.is_constant():
            raise ZeroDivisionError("division by a non-constant infinitesimal expression")
        return other / self.coeffs[0]

    def _cmp(self, other) -> int | None:
        o = self._lift(other)
        if o is None:
            return None
        diff = self - o
        return diff.sign() if isinstance(diff, Eps) else _fsign(diff)

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        if self.is_constant():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and i > 0:
                continue
            terms.append(format_rational(c) + ("" if i == 0 else "*eps" if i == 1 else f"*eps^{i}"))
        return "Eps(" + " + ".join(terms) + ")"


def _fsign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def limit(value) -> Fraction:
    """Value at ``eps -> 0``; identity on Fractions."""
    return value.at(0) if isinstance(value, Eps) else to_fraction(value)


def has_eps(values: Iterable) -> bool:
    return any(isinstance(v, Eps) for v in values)
