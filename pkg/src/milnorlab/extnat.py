"""Natural numbers extended by a top element, used for orders and multiplicities."""

from __future__ import annotations

from functools import total_ordering
from typing import Union

IntLike = Union[int, "ExtNat"]


@total_ordering
class ExtNat:
    """A value in N ∪ {∞}.

    Compares and adds with plain ints; ``n < ∞`` for every finite ``n`` and
    ``n + ∞ = ∞``.
    """

    __slots__ = ("_value",)

    def __init__(self, value: int | None):
        if value is not None:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"ExtNat expects an int or None, got {value!r}")
            if value < 0:
                raise ValueError(f"ExtNat must be nonnegative, got {value}")
        self._value = value

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> int:
        if self._value is None:
            raise ValueError("infinite ExtNat has no integer value")
        return self._value

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    @staticmethod
    def _coerce(other) -> ExtNat | None:
        if isinstance(other, ExtNat):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtNat(other) if other >= 0 else None
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self._value == other
        if isinstance(other, ExtNat):
            return self._value == other._value
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self._value is not None and self._value < other
        if not isinstance(other, ExtNat):
            return NotImplemented
        if self._value is None:
            return False
        return other._value is None or self._value < other._value

    def __hash__(self) -> int:
        return hash(("ExtNat", self._value))

    def __add__(self, other) -> ExtNat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._value is None or o._value is None:
            return INFINITY
        return ExtNat(self._value + o._value)

    __radd__ = __add__

    def __mul__(self, other) -> ExtNat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._value == 0 or o._value == 0:
            return ExtNat(0)
        if self._value is None or o._value is None:
            return INFINITY
        return ExtNat(self._value * o._value)

    __rmul__ = __mul__

    def to_json(self) -> int | str:
        return "infinity" if self._value is None else self._value

    def __str__(self) -> str:
        return "∞" if self._value is None else str(self._value)

    def __repr__(self) -> str:
        return "ExtNat(inf)" if self._value is None else f"ExtNat({self._value})"


INFINITY = ExtNat(None)


def finite(n: int) -> ExtNat:
    return ExtNat(n)
