"""Exact arithmetic on rational angles of the circle under the doubling map.

Angles live in [0, 1) as reduced fractions and double mod 1; chords are
unordered pairs of distinct angles.  Everything here is exact -- no floats --
because pullback denominators grow like 3 * 2**k and float angles would
collide long before interesting depths.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class AngleError(ValueError):
    """Malformed angle text or an invalid angle operation."""


@total_ordering
class Angle:
    """A point of R/Z stored as a reduced fraction in [0, 1)."""

    __slots__ = ("value",)

    def __init__(self, numerator, denominator=None):
        if denominator is None:
            frac = Fraction(numerator)
        else:
            if denominator == 0:
                raise AngleError("zero denominator")
            frac = Fraction(numerator, denominator)
        self.value = frac % 1

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __repr__(self):
        return f"Angle({self.value.numerator}/{self.value.denominator})"

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"

    def __eq__(self, other):
        if isinstance(other, Angle):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == Fraction(other) % 1
        return NotImplemented

    def __lt__(self, other):
        other_value = other.value if isinstance(other, Angle) else Fraction(other)
        return self.value < other_value

    def __hash__(self):
        return hash(self.value)

    def __neg__(self) -> "Angle":
        return Angle(1 - self.value)

    def __float__(self) -> float:
        return float(self.value)

    def double(self) -> "Angle":
        return Angle(2 * self.value)

    def halves(self) -> tuple["Angle", "Angle"]:
        h = self.value / 2
        return Angle(h), Angle(h + Fraction(1, 2))

    def times_pow2(self, k: int) -> "Angle":
        return Angle(self.value * 2**k)


def parse_angle(text: str) -> Angle:
    """Parse "n/d" or an integer string into a normalized Angle."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Angle(int(num), int(den))
        return Angle(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise AngleError(f"malformed angle {text!r}") from exc


def double(theta: Angle) -> Angle:
    return theta.double()


def halves(theta: Angle) -> tuple[Angle, Angle]:
    return theta.halves()


@dataclass(frozen=True)
class PreperiodData:
    """Minimal (l, p) with 2**(l+p) * theta == 2**l * theta mod 1."""

    preperiod: int
    period: int


def preperiod_period(theta: Angle) -> PreperiodData:
    """Exact preperiod and period of a rational angle under doubling.

    Write the reduced denominator as 2**s * q with q odd: the preperiod is s
    and the period is the multiplicative order of 2 mod q.
    """
    d = theta.denominator
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    q = d
    if q == 1:
        period = 1
    else:
        period = 1
        r = 2 % q
        while r != 1:
            r = (2 * r) % q
            period += 1
    return PreperiodData(preperiod=s, period=period)


class Chord:
    """Unordered pair of distinct angles; hashable and order-independent."""

    __slots__ = ("a", "b")

    def __init__(self, a: Angle, b: Angle):
        if a == b:
            raise AngleError("chord endpoints must be distinct")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("Chord is immutable")

    def __eq__(self, other):
        return isinstance(other, Chord) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Chord({self.a}, {self.b})"

    def __iter__(self):
        yield self.a
        yield self.b

    def endpoints(self) -> tuple[Angle, Angle]:
        return self.a, self.b

    def other(self, t: Angle) -> Angle:
        if t == self.a:
            return self.b
        if t == self.b:
            return self.a
        raise AngleError(f"{t} is not an endpoint of {self}")


def in_open_arc(x: Angle, start: Angle, end: Angle) -> bool:
    """True iff x lies strictly inside the counterclockwise arc (start, end)."""
    if start == end:
        return False
    if start < end:
        return start < x < end
    return x > start or x < end


def chords_cross(u: Chord, v: Chord) -> bool:
    """True iff the chords link; chords sharing an endpoint never cross."""
    if {u.a, u.b} & {v.a, v.b}:
        return False
    inside = in_open_arc(v.a, u.a, u.b) + in_open_arc(v.b, u.a, u.b)
    return inside == 1
