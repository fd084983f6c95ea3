"""Knot-type expressions, classification records, base cases, connected sums
and mountain ranges."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from legcable.cable23 import StabPresentation
from legcable.framing import CableParams
from legcable.slopes import floor_gap


class NotCovered(Exception):
    """No available classification theorem applies; ``hypothesis`` says why."""

    def __init__(self, hypothesis: str):
        super().__init__(hypothesis)
        self.hypothesis = hypothesis


# -- expressions --------------------------------------------------------------


class KnotExpr:
    def cable(self, p: int, q: int) -> Cable:
        return Cable(self, CableParams(p, q))

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, eq=True)
class Unknot(KnotExpr):
    pass


@dataclass(frozen=True, eq=True)
class Cable(KnotExpr):
    child: KnotExpr
    params: CableParams

    def __post_init__(self) -> None:
        if self.params.q < 2:
            raise ValueError(f"cable {self.params} needs q >= 2")


@dataclass(frozen=True, eq=True)
class ConnSum(KnotExpr):
    left: KnotExpr
    right: KnotExpr


def torus(p: int, q: int) -> Cable:
    return Unknot().cable(p, q)


def to_text(e: KnotExpr) -> str:
    if isinstance(e, Unknot):
        return "U"
    if isinstance(e, Cable):
        p, q = e.params.p, e.params.q
        if isinstance(e.child, Unknot):
            return f"T({p},{q})"
        return f"{to_text(e.child)}.cable({p},{q})"
    if isinstance(e, ConnSum):
        return f"({to_text(e.left)} # {to_text(e.right)})"
    raise TypeError(f"not a knot expression: {e!r}")


# -- classification records ---------------------------------------------------


class Utp(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Simple:
    """Legendrian simple: one class per cell below the peaks."""

    peaks: tuple[int, ...]


@dataclass(frozen=True)
class Branched:
    presentation: StabPresentation


@dataclass(frozen=True)
class Classification:
    tb_bar: int
    width: Optional[Fraction]  # None when only tb_bar <= w <= tb_bar + 1 is known
    utp: Utp
    shape: Union[Simple, Branched]
    peaks_source: str = "theorem"

    def __post_init__(self) -> None:
        if self.width is not None and not self.tb_bar <= self.width <= self.tb_bar + 1:
            raise ValueError(f"width {self.width} outside [{self.tb_bar}, {self.tb_bar + 1}]")
        if self.utp is Utp.YES and self.width != self.tb_bar:
            raise ValueError("a uniformly thick type has width equal to tb_bar")
        cells = self.top_cells()
        if len({(r + tb) % 2 for r, tb in cells}) != 1:
            raise ValueError("rotation and tb parities disagree between classes")
        if isinstance(self.shape, Simple):
            peaks = self.shape.peaks
            if list(peaks) != sorted(set(peaks)):
                raise ValueError("peaks must be sorted and distinct")
            if sorted(-r for r in peaks) != list(peaks):
                raise ValueError("peaks must be symmetric under r -> -r")
        elif self.shape.presentation.tb_bar != self.tb_bar:
            raise ValueError("presentation generators do not reach tb_bar")

    def top_cells(self) -> list[tuple[int, int]]:
        if isinstance(self.shape, Simple):
            return [(r, self.tb_bar) for r in self.shape.peaks]
        return [(g.r, g.tb) for g in self.shape.presentation.generators]

    @property
    def parity(self) -> int:
        """``(r + tb) mod 2``, shared by every Legendrian representative."""
        r, tb = self.top_cells()[0]
        return (r + tb) % 2

    @property
    def width_bounds(self) -> tuple[Fraction, Fraction]:
        if self.width is not None:
            return (self.width, self.width)
        return (Fraction(self.tb_bar), Fraction(self.tb_bar + 1))

    @property
    def peaks(self) -> tuple[int, ...]:
        if not isinstance(self.shape, Simple):
            raise NotCovered("type is not Legendrian simple; it has no plain peak list")
        return self.shape.peaks


class MountainRange:
    """Multiplicities ``mult(r, tb)`` of Legendrian classes, down to ``floor``."""

    def __init__(self, classification: Classification, floor: int):
        if floor > classification.tb_bar:
            raise ValueError(f"floor {floor} lies above tb_bar {classification.tb_bar}")
        self.classification = classification
        self.floor = floor
        self._table: Optional[dict[tuple[int, int], int]] = None
        if isinstance(classification.shape, Branched):
            self._table = classification.shape.presentation.closure(floor).multiplicities()

    def mult(self, r: int, tb: int) -> int:
        if tb < self.floor:
            raise ValueError(f"tb = {tb} is below the enumeration floor {self.floor}")
        if self._table is not None:
            return self._table.get((r, tb), 0)
        c = self.classification
        drop = c.tb_bar - tb
        if drop < 0 or (r + tb) % 2 != c.parity:
            return 0
        return int(any(abs(r - p) <= drop for p in c.shape.peaks))

    def r_span(self) -> tuple[int, int]:
        rs = [r for r, _ in self.classification.top_cells()]
        depth = self.classification.tb_bar - self.floor
        return (min(rs) - depth, max(rs) + depth)

    def row(self, tb: int) -> list[int]:
        lo, hi = self.r_span()
        return [r for r in range(lo, hi + 1) if self.mult(r, tb)]

    def cells(self) -> list[tuple[int, int, int]]:
        """Populated cells ``(r, tb, mult)`` ordered by descending tb, then r."""
        lo, hi = self.r_span()
        out = []
        for tb in range(self.classification.tb_bar, self.floor - 1, -1):
            for r in range(lo, hi + 1):
                m = self.mult(r, tb)
                if m:
                    out.append((r, tb, m))
        return out


def mountain_range(c: Classification, floor: int) -> MountainRange:
    return MountainRange(c, floor)


def valleys(c: Classification) -> list[tuple[int, int, int]]:
    """``(r, tb, depth)`` of the valley floor between each pair of adjacent peaks."""
    out = []
    peaks = c.peaks
    for left, right in zip(peaks, peaks[1:]):
        depth = (right - left) // 2
        out.append(((left + right) // 2, c.tb_bar - depth, depth))
    return out


# -- base cases -----------------------------------------------------------------

UNKNOT = Classification(tb_bar=-1, width=Fraction(0), utp=Utp.NO, shape=Simple((0,)))


def base_negative_torus(p: int, q: int) -> Classification:
    """Negative torus knot with ``p/q < -1``; uniformly thick, tb_bar = width = pq."""
    if not (p * q < 0 and q >= 2):
        raise ValueError(f"({p},{q}) is not a negative torus knot with q >= 2")
    CableParams(p, q)
    if p > -q:
        raise NotCovered(f"-1 < p/q = {p}/{q} < 0: the unknot has no tb = 0 row to cable")
    n = floor_gap(p, q)
    s = -p - q * n
    row = mountain_range(UNKNOT, -n).row(-n)
    peaks = sorted({q * r + e for r in row for e in (s, -s)})
    return Classification(
        tb_bar=p * q, width=Fraction(p * q), utp=Utp.YES, shape=Simple(tuple(peaks))
    )


def base_positive_torus(p: int, q: int) -> Classification:
    if not q > p >= 2:
        raise ValueError(f"({p},{q}) is not a positive torus knot with q > p >= 2")
    CableParams(p, q)
    trefoil = (p, q) == (2, 3)
    return Classification(
        tb_bar=p * q - p - q,
        width=Fraction(1) if trefoil else None,
        utp=Utp.NO if trefoil else Utp.UNKNOWN,
        shape=Simple((0,)),
        peaks_source="theorem" if trefoil else "assumed-EH1",
    )


TREFOIL = base_positive_torus(2, 3)


def torus_knot(p: int, q: int) -> Classification:
    """Classification of the ``(p, q)``-torus knot in any parameter order.

    ``T(p, q)``, ``T(q, p)`` and ``T(-p, -q)`` are the same oriented knot
    type, so inputs are moved to the normal form the base cases expect.
    """
    if q < 0:
        p, q = -p, -q
    CableParams(p, q)
    if abs(p) == 1 or q == 1:
        return UNKNOT
    if p > 0:
        a, b = sorted((p, q))
        return base_positive_torus(a, b)
    if -p < q:
        p, q = -q, -p
    return base_negative_torus(p, q)


def connected_sum(c1: Classification, c2: Classification) -> Classification:
    if c1 == UNKNOT:
        return c2
    if c2 == UNKNOT:
        return c1
    if not (isinstance(c1.shape, Simple) and isinstance(c2.shape, Simple)):
        raise NotCovered("connected sum with a non-Legendrian-simple summand")
    utp = Utp.YES if c1.utp is Utp.YES and c2.utp is Utp.YES else Utp.UNKNOWN
    tb_bar = c1.tb_bar + c2.tb_bar + 1
    peaks = sorted({a + b for a in c1.peaks for b in c2.peaks})
    return Classification(
        tb_bar=tb_bar,
        width=Fraction(tb_bar) if utp is Utp.YES else None,
        utp=utp,
        shape=Simple(tuple(peaks)),
        peaks_source="assumed-EH2",
    )


def classify(e: KnotExpr) -> Classification:
    """Classify a knot expression; raises ``NotCovered`` at a theorem gap."""
    from legcable.cables import classify_cable

    if isinstance(e, Unknot):
        return UNKNOT
    if isinstance(e, ConnSum):
        return connected_sum(classify(e.left), classify(e.right))
    if isinstance(e, Cable):
        return classify_cable(classify(e.child), e.params)
    raise TypeError(f"not a knot expression: {e!r}")
