"""Slopes of curves on a torus and Farey-graph combinatorics.

A slope ``num/den`` is the curve class of the integer vector ``(den, num)``:
the meridian is ``0/1`` and the longitude is ``inf`` (stored as ``1/0``).
Everything is done with Python ints, so arbitrarily long cabling towers
cannot overflow.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterator, Optional


@total_ordering
@dataclass(frozen=True)
class Slope:
    """A reduced slope ``num/den`` with ``den >= 0``; ``1/0`` is infinity."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 0 or math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not a canonical slope")
        if self.den == 0 and self.num != 1:
            raise ValueError("infinity must be stored as 1/0")

    @classmethod
    def parse(cls, text: str) -> Slope:
        text = text.strip()
        if text.lower() in ("inf", "infinity", "∞"):
            return INF
        num, sep, den = text.partition("/")
        try:
            return reduce(int(num), int(den) if sep else 1)
        except ValueError as exc:
            raise ValueError(f"cannot read slope {text!r}: {exc}") from None

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinite slope has no rational value")
        return Fraction(self.num, self.den)

    def vector(self) -> tuple[int, int]:
        """The primitive vector ``(den, num)`` whose slope this is."""
        return (self.den, self.num)

    def __lt__(self, other: Slope) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        if other.is_infinite:
            return not self.is_infinite
        if self.is_infinite:
            return False
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


INF = Slope(1, 0)
ZERO = Slope(0, 1)


def reduce(p: int, q: int) -> Slope:
    """Canonical slope for the ratio ``p/q``; ``(k, 0)`` maps to infinity."""
    if p == 0 and q == 0:
        raise ValueError("(0, 0) is not a slope")
    if q == 0:
        return INF
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return Slope(p, q)


def from_vector(v: tuple[int, int]) -> Slope:
    x, y = v
    return reduce(y, x)


def det(s: Slope, t: Slope) -> int:
    """``s . t = r t' - t r'``; its absolute value is the intersection number."""
    return s.num * t.den - s.den * t.num


def is_farey_neighbor(s: Slope, t: Slope) -> bool:
    if s == t:
        raise ValueError(f"a slope is not its own Farey neighbour ({s})")
    return abs(det(s, t)) == 1


def mediant(s: Slope, t: Slope) -> Slope:
    return reduce(s.num + t.num, s.den + t.den)


def floor_gap(p: int, q: int) -> int:
    """The integer ``n`` with ``-n-1 < p/q < -n``."""
    if q < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) is not a reduced fraction with q >= 1")
    if p % q == 0:
        raise ValueError(f"{p}/{q} is an integer; there is no strict gap")
    n = (-p) // q
    assert -(n + 1) * q < p < -n * q
    return n


@dataclass(frozen=True)
class TorusMatrix:
    """Integer matrix ``((a, b), (c, d))`` with determinant +1 or -1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if abs(self.det) != 1:
            raise ValueError(f"determinant {self.det} is not +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: TorusMatrix) -> TorusMatrix:
        return TorusMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


IDENTITY = TorusMatrix(1, 0, 0, 1)


def apply_matrix(m: TorusMatrix, v: tuple[int, int]) -> tuple[int, int]:
    x, y = v
    if math.gcd(x, y) != 1:
        raise ValueError(f"{v} is not a primitive vector")
    return (m.a * x + m.b * y, m.c * x + m.d * y)


def apply_to_slope(m: TorusMatrix, s: Slope) -> Slope:
    return from_vector(apply_matrix(m, s.vector()))


# -- shortest paths in the Farey graph ---------------------------------------
#
# Along a geodesic no interior vertex can have a denominator larger than
# both of its path neighbours: a vertex of denominator >= 2 has exactly two
# neighbours of smaller denominator and those two are adjacent, so the detour
# could be shortcut.  Denominators therefore fall and then rise along every
# geodesic, and a shortest path is a descent from each endpoint meeting at a
# common vertex.  Descents are short, so this is cheap for any input size.


def _lower_neighbors(x: Slope) -> tuple[Slope, Slope]:
    """The two Farey neighbours of ``x`` (``den >= 2``) with smaller denominator."""
    b1 = pow(x.num, -1, x.den)
    a1 = (x.num * b1 - 1) // x.den
    return Slope(a1, b1), Slope(x.num - a1, x.den - b1)


def _down_steps(x: Slope, hops: frozenset[int]) -> Iterator[Slope]:
    if x.den >= 2:
        yield from _lower_neighbors(x)
    elif x.den == 1:
        yield INF
        for n in (x.num - 1, x.num + 1):
            if n in hops:
                yield Slope(n, 1)


def _descent(x: Slope, hops: frozenset[int]) -> dict[Slope, tuple[int, Optional[Slope]]]:
    """Breadth-first descent from ``x``: each reached slope maps to its
    distance and the slope it was reached from."""
    seen: dict[Slope, tuple[int, Optional[Slope]]] = {x: (0, None)}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for u in _down_steps(v, hops):
            if u not in seen:
                seen[u] = (seen[v][0] + 1, v)
                queue.append(u)
    return seen


def _integer_hops(s: Slope, t: Slope) -> frozenset[int]:
    # Two integer-to-integer steps in a row can always go through inf
    # instead, so a geodesic only ever steps onto an integer next to the
    # floor or ceiling of an endpoint.
    out: set[int] = set()
    for x in (s, t):
        if not x.is_infinite:
            f = x.num // x.den
            out.update(range(f - 1, f + 3))
    return frozenset(out)


_Tree = dict[Slope, tuple[int, Optional[Slope]]]


def _best_meet(s: Slope, t: Slope) -> tuple[Slope, _Tree, _Tree]:
    hops = _integer_hops(s, t)
    d1, d2 = _descent(s, hops), _descent(t, hops)
    meet = min(d1.keys() & d2.keys(), key=lambda v: (d1[v][0] + d2[v][0], v.den, v.num))
    return meet, d1, d2


def _chain(tree: _Tree, v: Slope) -> list[Slope]:
    out = [v]
    while tree[out[-1]][1] is not None:
        out.append(tree[out[-1]][1])
    return out


def farey_distance(s: Slope, t: Slope) -> int:
    meet, d1, d2 = _best_meet(s, t)
    return d1[meet][0] + d2[meet][0]


def farey_path(s: Slope, t: Slope) -> list[Slope]:
    """A shortest Farey-edge path from ``s`` to ``t``.

    The path descends from ``s`` to a lowest common vertex and climbs back
    up to ``t``; ties go to the meeting slope of smallest denominator, then
    numerator.
    """
    meet, d1, d2 = _best_meet(s, t)
    return _chain(d1, meet)[::-1] + _chain(d2, meet)[1:]
