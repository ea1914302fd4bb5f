"""Exact arithmetic on half-integers.

Twist exponents in this calculus live in (1/2)Z.  Floats would make
equality tests flaky and hashing unsound, so a value x is stored as the
integer 2x and all arithmetic stays in Z.
"""

from __future__ import annotations

import functools
import re

_INT_RE = re.compile(r"^[+-]?\d+$")
_HALF_RE = re.compile(r"^([+-]?\d+)/2$")


@functools.total_ordering
class HalfInt:
    """An element of (1/2)Z with exact comparisons and hashing.

    Construct from an int, another HalfInt, or a float that is an exact
    multiple of 1/2.  ``HalfInt.from_twice(n)`` builds n/2 directly.
    """

    __slots__ = ("twice",)

    def __init__(self, value=0):
        if isinstance(value, HalfInt):
            self.twice = value.twice
        elif isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        elif isinstance(value, int):
            self.twice = 2 * value
        elif isinstance(value, float):
            doubled = value * 2
            if doubled != int(doubled):
                raise ValueError(f"{value!r} is not a multiple of 1/2")
            self.twice = int(doubled)
        else:
            raise TypeError(f"cannot build HalfInt from {type(value).__name__}")

    @classmethod
    def from_twice(cls, twice: int) -> "HalfInt":
        if not isinstance(twice, int) or isinstance(twice, bool):
            raise TypeError("from_twice expects an int")
        obj = cls.__new__(cls)
        obj.twice = twice
        return obj

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse "2", "-3" or the halves notation "1/2", "-5/2"."""
        text = text.strip()
        if _INT_RE.match(text):
            return cls(int(text))
        m = _HALF_RE.match(text)
        if m:
            return cls.from_twice(int(m.group(1)))
        raise ValueError(f"not a half-integer literal: {text!r}")

    @staticmethod
    def range_inclusive(lo, hi):
        """Yield lo, lo+1, ... while the value stays <= hi."""
        cur = HalfInt(lo)
        hi = HalfInt(hi)
        while cur <= hi:
            yield cur
            cur = cur + 1

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def _coerce(self, other):
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt.from_twice(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt.from_twice(self.twice - other.twice)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt.from_twice(other.twice - self.twice)

    def __neg__(self):
        return HalfInt.from_twice(-self.twice)

    def __mul__(self, other):
        # scalar multiples by integers only; general products leave (1/2)Z
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt.from_twice(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.twice < other.twice

    def __hash__(self):
        # agrees with hash(int) when the value is integral, so HalfInt(2)
        # and 2 collide as dict keys exactly when they compare equal
        return hash(self.twice / 2)

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"
