"""Exact arithmetic in the circle group and its finite subgroups.

A gain is stored as a rational number of turns ``t`` in ``[0, 1)`` and stands
for the unit complex number ``exp(2*pi*i*t)``.  Group multiplication is
addition of turns modulo one, so every identity between gains can be checked
with ``==`` instead of a tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

__all__ = [
    "UnitGain",
    "GroupSpec",
    "IDENTITY",
    "HALF_TURN",
    "mul",
    "inv",
    "to_complex",
    "validate_spec",
    "parse_gain",
    "format_gain",
]

TurnsLike = Union["UnitGain", Fraction, int, str]


@dataclass(frozen=True, slots=True)
class UnitGain:
    """An element of the circle group, ``exp(2*pi*i*turns)``."""

    turns: Fraction

    def __post_init__(self):
        t = self.turns
        if not isinstance(t, Fraction):
            t = Fraction(t)
        t = t % 1
        object.__setattr__(self, "turns", t)

    @classmethod
    def of(cls, value: TurnsLike) -> "UnitGain":
        if isinstance(value, UnitGain):
            return value
        if isinstance(value, str):
            return parse_gain(value)
        return cls(Fraction(value))

    @property
    def order(self) -> int:
        """Multiplicative order; equal to the reduced denominator."""
        return self.turns.denominator

    def __mul__(self, other: "UnitGain") -> "UnitGain":
        return UnitGain(self.turns + other.turns)

    def __invert__(self) -> "UnitGain":
        return UnitGain(-self.turns)

    def __pow__(self, k: int) -> "UnitGain":
        return UnitGain(self.turns * k)

    def __complex__(self) -> complex:
        re, im = to_complex(self)
        return complex(re, im)

    def __str__(self) -> str:
        return format_gain(self)

    def __repr__(self) -> str:
        return f"UnitGain({format_gain(self)!r})"


IDENTITY = UnitGain(Fraction(0))
HALF_TURN = UnitGain(Fraction(1, 2))


def mul(a: UnitGain, b: UnitGain) -> UnitGain:
    return UnitGain(a.turns + b.turns)


def inv(a: UnitGain) -> UnitGain:
    return UnitGain(-a.turns)


# exact values at multiples of a quarter turn keep |z| == 1 to the last bit
_QUARTER_POINTS = {
    Fraction(0): (1.0, 0.0),
    Fraction(1, 4): (0.0, 1.0),
    Fraction(1, 2): (-1.0, 0.0),
    Fraction(3, 4): (0.0, -1.0),
}


def to_complex(a: UnitGain) -> tuple[float, float]:
    """Return ``(cos 2*pi*t, sin 2*pi*t)`` for the gain's turn count ``t``."""
    exact = _QUARTER_POINTS.get(a.turns)
    if exact is not None:
        return exact
    angle = 2.0 * math.pi * float(a.turns)
    return math.cos(angle), math.sin(angle)


@dataclass(frozen=True)
class GroupSpec:
    """A gain group together with its distinguished involution.

    ``family`` is ``"circle"``, ``"mu"`` (the ``order``-th roots of unity) or
    ``"sign"`` (the subgroup ``{+1, -1}``).  The involution is the element
    that links incidence phases to edge gains; it is either the identity or
    the half turn.
    """

    family: str
    involution: UnitGain = HALF_TURN
    order: Optional[int] = None

    @classmethod
    def circle(cls, involution: TurnsLike = HALF_TURN) -> "GroupSpec":
        return cls("circle", UnitGain.of(involution))

    @classmethod
    def mu(cls, order: int, involution: TurnsLike = HALF_TURN) -> "GroupSpec":
        return cls("mu", UnitGain.of(involution), order)

    @classmethod
    def sign(cls, involution: TurnsLike = HALF_TURN) -> "GroupSpec":
        return cls("sign", UnitGain.of(involution))

    def contains(self, g: UnitGain) -> bool:
        if self.family == "circle":
            return True
        if self.family == "sign":
            return g.turns.denominator <= 2
        if self.family == "mu":
            return self.order is not None and self.order % g.turns.denominator == 0
        return False

    def finite_order(self) -> Optional[int]:
        if self.family == "mu":
            return self.order
        if self.family == "sign":
            return 2
        return None

    def __str__(self) -> str:
        if self.family == "mu":
            return f"mu {self.order}"
        return self.family


def validate_spec(spec: GroupSpec) -> Optional[str]:
    """Return ``None`` if ``spec`` is well formed, else the first violated rule."""
    if spec.family not in ("circle", "mu", "sign"):
        return f"unknown group family {spec.family!r}"
    if spec.family == "mu":
        if not isinstance(spec.order, int) or spec.order < 1:
            return f"mu(n) needs a positive integer order, got {spec.order!r}"
    elif spec.order is not None:
        return f"family {spec.family!r} takes no order"
    s = spec.involution
    if mul(s, s) != IDENTITY:
        return f"involution {format_gain(s)} does not square to the identity"
    if not spec.contains(s):
        return f"involution {format_gain(s)} lies outside {spec}"
    return None


def parse_gain(text: str) -> UnitGain:
    """Parse ``"p/q"`` or an integer ``"k"`` into a gain, reducing mod one.

    Raises ``ValueError`` for anything else.
    """
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"bad fraction {text!r}") from None
    if q == 0:
        raise ValueError(f"bad fraction {text!r}: zero denominator")
    return UnitGain(Fraction(p, q))


def format_gain(a: UnitGain) -> str:
    t = a.turns
    if t.denominator == 1:
        return str(t.numerator)
    return f"{t.numerator}/{t.denominator}"
