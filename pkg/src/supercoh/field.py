"""Exact scalar fields: the rationals and prime fields GF(p) with p >= 5.

Rationals are :class:`fractions.Fraction` values (always in lowest terms
with a positive denominator).  Prime-field elements are :class:`ModP`
instances holding a residue in ``[0, p)``.  Plain ``int`` values coerce
into either field; elements of two different fields never mix.
"""

from __future__ import annotations

from random import Random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Union


class FieldMismatchError(TypeError):
    """Raised when scalars or objects over different fields are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class ModP:
    """A residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine GF({self.p}) with GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Number):
            raise FieldMismatchError(f"cannot combine GF({self.p}) with {type(other).__name__}")
        return None  # not a scalar: let the other operand decide

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "ModP":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else ModP(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        return ModP(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, ModP]


@dataclass(frozen=True)
class Field:
    """A scalar field.  ``characteristic == 0`` means Q."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p in (2, 3):
            raise ValueError(f"characteristic {p} excluded")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        """Coerce ``x`` (int, Fraction, ``"n/d"`` string or own element)."""
        p = self.characteristic
        if type(x) is Fraction and p == 0:
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if p == 0:
            if isinstance(x, ModP):
                raise FieldMismatchError(f"GF({x.p}) element is not rational")
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, ModP):
            if x.p != p:
                raise FieldMismatchError(f"cannot coerce GF({x.p}) element into GF({p})")
            return x
        if isinstance(x, int):
            return ModP(x, p)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has a denominator divisible by {p}")
            return ModP(x.numerator, p) / x.denominator
        raise TypeError(f"cannot coerce {x!r} into GF({p})")

    def contains(self, x) -> bool:
        if self.characteristic == 0:
            return isinstance(x, Fraction)
        return isinstance(x, ModP) and x.p == self.characteristic

    def random(self, rng: Random, nonzero: bool = False, bound: int = 3) -> Scalar:
        """Random element; rationals are drawn as small integers in ``[-bound, bound]``."""
        if self.characteristic == 0:
            lo, hi = -bound, bound
        else:
            lo, hi = 0, self.characteristic - 1
        while True:
            x = self(rng.randint(lo, hi))
            if x or not nonzero:
                return x

    def format(self, x: Scalar) -> str:
        return str(x)

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
