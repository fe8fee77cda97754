"""Supertropical scalars over the extended max-plus model D(Q).

Values are exact rationals in logarithmic notation: the semiring one is ``0``,
the zero is ``-inf``, ``a * b`` adds values and ``a + b`` takes the larger
value, producing a ghost when two summands share the same value.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

__all__ = [
    "Layer",
    "Element",
    "BOTTOM",
    "ONE",
    "ParseError",
    "as_element",
    "parse_scalar",
    "s_add",
    "s_mul",
    "nu_map",
    "tangible_lift",
    "ghost_surpasses",
    "s_sum",
    "s_prod",
]


class ParseError(ValueError):
    """Malformed scalar or matrix text, with an optional source position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class Layer(enum.Enum):
    TANGIBLE = "tangible"
    GHOST = "ghost"


@dataclass(frozen=True, slots=True)
class Element:
    """A value (``None`` for bottom) together with its layer.

    Bottom is always stored as tangible so the zero has a single representation.
    """

    value: Fraction | None = None
    layer: Layer = Layer.TANGIBLE

    def __post_init__(self):
        v = self.value
        if v is None:
            if self.layer is not Layer.TANGIBLE:
                object.__setattr__(self, "layer", Layer.TANGIBLE)
        elif type(v) is not Fraction:
            if isinstance(v, bool) or not isinstance(v, (Rational, str)):
                raise TypeError(f"element value must be rational, got {v!r}")
            object.__setattr__(self, "value", Fraction(v))

    @classmethod
    def ghost(cls, value) -> Element:
        return cls(value, Layer.GHOST)

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    @property
    def is_ghost(self) -> bool:
        return self.layer is Layer.GHOST

    @property
    def is_tangible(self) -> bool:
        """Tangible and nonzero (an element of T)."""
        return self.value is not None and self.layer is Layer.TANGIBLE

    @property
    def in_ghost_ideal(self) -> bool:
        """Ghost or bottom (an element of G_0)."""
        return self.value is None or self.layer is Layer.GHOST

    def nu(self) -> Element:
        if self.value is None or self.layer is Layer.GHOST:
            return self
        return Element(self.value, Layer.GHOST)

    def lift(self) -> Element:
        if self.layer is Layer.TANGIBLE:
            return self
        return Element(self.value)

    def inverse(self) -> Element:
        if not self.is_tangible:
            raise ZeroDivisionError(f"{self} has no multiplicative inverse")
        return Element(-self.value)

    def nu_key(self):
        """Sort key on nu-values; bottom sorts below everything."""
        return (0, 0) if self.value is None else (1, self.value)

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        a, b = self.value, other.value
        if a is None:
            return other
        if b is None:
            return self
        if a > b:
            return self
        if b > a:
            return other
        if self.layer is Layer.GHOST:
            return self
        if other.layer is Layer.GHOST:
            return other
        return Element(a, Layer.GHOST)

    def __mul__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        a, b = self.value, other.value
        if a is None:
            return self
        if b is None:
            return other
        if self.layer is Layer.GHOST or other.layer is Layer.GHOST:
            return Element(a + b, Layer.GHOST)
        return Element(a + b)

    def __pow__(self, m: int) -> Element:
        if m < 0:
            return self.inverse() ** (-m)
        if m == 0:
            return ONE
        if self.value is None:
            return self
        return Element(self.value * m, self.layer)

    def __str__(self) -> str:
        if self.value is None:
            return "-inf"
        v = self.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return text + "g" if self.layer is Layer.GHOST else text

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


BOTTOM = Element()
ONE = Element(Fraction(0))

_SCALAR = re.compile(r"^(-?\d+(?:/\d+|\.\d+)?)(g?)$")

Scalar = Union[Element, int, Fraction, float, str, None]


def parse_scalar(text: str) -> Element:
    """Parse ``-inf``, ``3``, ``-4/3``, ``2.5`` or any of these with a ``g`` suffix."""
    token = text.strip()
    if token == "-inf":
        return BOTTOM
    m = _SCALAR.match(token)
    if m is None:
        raise ParseError(f"bad scalar {text!r}")
    number, ghost_flag = m.groups()
    try:
        value = Fraction(number)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None
    return Element(value, Layer.GHOST if ghost_flag else Layer.TANGIBLE)


def as_element(x: Scalar) -> Element:
    if isinstance(x, Element):
        return x
    if x is None:
        return BOTTOM
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        if x == float("-inf"):
            return BOTTOM
        if x != x or x == float("inf"):
            raise ValueError(f"{x} is not a supertropical value")
        return Element(Fraction(x))
    return Element(x)


def s_add(a: Element, b: Element) -> Element:
    return a + b


def s_mul(a: Element, b: Element) -> Element:
    return a * b


def nu_map(a: Element) -> Element:
    return a.nu()


def tangible_lift(a: Element) -> Element:
    return a.lift()


def ghost_surpasses(a: Element, b: Element) -> bool:
    """``a = b + ghost``: equal, or ``a`` in G_0 with nu-value at least that of ``b``."""
    if a == b:
        return True
    if not a.in_ghost_ideal:
        return False
    if a.value is None:
        return b.value is None
    return b.value is None or a.value >= b.value


def s_sum(items: Iterable[Element]) -> Element:
    total = BOTTOM
    for x in items:
        total = total + x
    return total


def s_prod(items: Iterable[Element]) -> Element:
    total = ONE
    for x in items:
        total = total * x
    return total
