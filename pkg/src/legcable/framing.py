"""Framing conversions and the closed-form tb / rotation / Euler-class rules.

Three frames are in play for a ``(p, q)``-cable: the slope frame of the
companion torus, the frame whose infinity is cut out by the cabling annulus,
and the Seifert frame of the cable itself.  The last two differ by ``pq``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from legcable.slopes import Slope, reduce


@dataclass(frozen=True)
class CableParams:
    """``p`` meridional and ``q`` longitudinal windings, ``q >= 1``."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"cable needs q >= 1, got q = {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd({self.p}, {self.q}) != 1")

    @property
    def slope(self) -> Slope:
        """Slope ``q/p`` of the cabling curve on the companion torus."""
        return reduce(self.q, self.p)

    @property
    def ratio(self) -> Fraction:
        """``p/q``, the number compared against the contact width."""
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


class EulerVector(NamedTuple):
    a: int
    b: int

    def __neg__(self) -> EulerVector:
        return EulerVector(-self.a, -self.b)


def twist_to_tb(t: int, c: CableParams) -> int:
    return t + c.p * c.q


def tb_to_twist(tb: int, c: CableParams) -> int:
    return tb - c.p * c.q


def tb_of_divide(c: CableParams) -> int:
    return c.p * c.q


def tb_of_ruling(c: CableParams, gamma: Slope) -> int:
    """tb of a ruling curve when the dividing curves have slope ``gamma``.

    ``gamma`` is measured in the companion's slope frame.
    """
    if gamma == c.slope:
        raise ValueError(f"dividing slope {gamma} equals the cable slope; use tb_of_divide")
    q_, p_ = gamma.num, gamma.den
    return c.p * c.q - abs(c.p * q_ - c.q * p_)


def rotation_of_cable(c: CableParams, r_meridian_disk: int, r_seifert: int) -> int:
    return c.p * r_meridian_disk + c.q * r_seifert


def basic_slice_euler(
    v_front: tuple[int, int], v_back: tuple[int, int]
) -> tuple[EulerVector, EulerVector]:
    """The two possible Poincare duals ``+-(v_back - v_front)`` of a basic slice."""
    (x0, y0), (x1, y1) = v_front, v_back
    for x, y in (v_front, v_back):
        if math.gcd(x, y) != 1:
            raise ValueError(f"({x}, {y}) is not primitive")
    if abs(x0 * y1 - y0 * x1) != 1:
        raise ValueError(f"{v_front} and {v_back} do not span Z^2; not a basic slice")
    e = EulerVector(x1 - x0, y1 - y0)
    return e, -e


Term = Union[Slope, Fraction, int, tuple[int, int]]


def edge_rounding_sum(terms: Iterable[Term]) -> Slope:
    """Exact sum of slope terms; pairs are read as unreduced ``(num, den)``."""
    total = Fraction(0)
    for term in terms:
        if isinstance(term, Slope):
            total += term.as_fraction()
        elif isinstance(term, tuple):
            total += Fraction(*term)
        else:
            total += Fraction(term)
    return reduce(total.numerator, total.denominator)
