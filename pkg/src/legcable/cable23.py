"""Non-thickenable tori of the (2,3)-torus knot and the classification of its
(2,3)-cable, plus a generic closure engine for stabilization presentations.

A presentation lists generators at ``(r, tb)``, equalities between
stabilization words, and required inequalities.  Stabilizations commute, so
a word is just a pair of exponents ``S+^a S-^b``.  The engine enumerates
words, closes the equalities under further stabilization with a union-find,
and refuses presentations whose equalities collapse a required inequality.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional

from legcable.slopes import Slope, TorusMatrix

# Coordinate changes from the two core-curve frames to the frame in which
# the trefoil on the splitting torus is (0, 1).
CORE1_CHANGE = TorusMatrix(3, -2, 2, -1)
CORE2_CHANGE = TorusMatrix(-2, 3, -1, 2)

MAX_ORACLE_DEPTH = 12


class InconsistentPresentation(ValueError):
    pass


class Allowed(str, Enum):
    BOTH = "both"
    POS_ONLY = "pos_only"
    NEG_ONLY = "neg_only"


@dataclass(frozen=True)
class Generator:
    name: str
    tb: int
    r: int
    allowed: Allowed = Allowed.BOTH


@dataclass(frozen=True, order=True)
class Word:
    """``S+^plus S-^minus`` applied to generator ``gen``."""

    gen: str
    plus: int = 0
    minus: int = 0

    def shifted(self, plus: int, minus: int) -> Word:
        return Word(self.gen, self.plus + plus, self.minus + minus)

    @property
    def length(self) -> int:
        return self.plus + self.minus

    def __str__(self) -> str:
        parts = []
        for sign, k in (("+", self.plus), ("-", self.minus)):
            if k == 1:
                parts.append(f"S{sign}")
            elif k > 1:
                parts.append(f"S{sign}^{k}")
        inner = "".join(parts)
        return f"{inner}({self.gen})" if inner else self.gen


@dataclass(frozen=True)
class NonIdentification:
    """``left != right``; with a ``step``, also after shifting both by ``k*step``."""

    left: Word
    right: Word
    step: Optional[tuple[int, int]] = None

    @property
    def scope(self) -> str:
        return "single" if self.step is None else "for_all_k"

    def instances(self) -> Iterator[tuple[Word, Word]]:
        yield self.left, self.right
        if self.step is None:
            return
        k = 1
        while True:
            dp, dm = self.step[0] * k, self.step[1] * k
            yield self.left.shifted(dp, dm), self.right.shifted(dp, dm)
            k += 1


@dataclass(frozen=True)
class StabPresentation:
    generators: tuple[Generator, ...]
    identifications: tuple[tuple[Word, Word], ...] = ()
    non_identifications: tuple[NonIdentification, ...] = ()

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        for lhs, rhs in self.identifications:
            if self.cell(lhs) != self.cell(rhs):
                raise ValueError(f"{lhs} = {rhs} relates different (r, tb) cells")
        for ni in self.non_identifications:
            if self.cell(ni.left) != self.cell(ni.right):
                raise ValueError(f"{ni.left} != {ni.right} is vacuous: different cells")

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def cell(self, w: Word) -> tuple[int, int]:
        g = self.generator(w.gen)
        if (g.allowed is Allowed.POS_ONLY and w.minus) or (
            g.allowed is Allowed.NEG_ONLY and w.plus
        ):
            raise ValueError(f"{w} uses a stabilization {g.name} does not allow")
        return (g.r + w.plus - w.minus, g.tb - w.length)

    @property
    def tb_bar(self) -> int:
        return max(g.tb for g in self.generators)

    @property
    def relation_depth(self) -> int:
        return max((max(a.length, b.length) for a, b in self.identifications), default=0)

    def words(self, *, tb_floor: Optional[int] = None, depth: Optional[int] = None) -> list[Word]:
        """All words with ``tb >= tb_floor`` or with at most ``depth`` letters."""
        out = []
        for g in self.generators:
            top = g.tb - tb_floor if tb_floor is not None else depth
            for n in range(top + 1):
                for a in range(n + 1):
                    b = n - a
                    if g.allowed is Allowed.POS_ONLY and b or g.allowed is Allowed.NEG_ONLY and a:
                        continue
                    out.append(Word(g.name, a, b))
        return out

    def closure(self, tb_floor: int) -> ClassTable:
        """Legendrian classes on every cell with ``tb >= tb_floor``.

        Every relation joins words in a single cell, so truncating by tb
        loses nothing above the floor.
        """
        return _close(self, self.words(tb_floor=tb_floor))


class _UnionFind:
    def __init__(self, items: Iterable[Word]):
        self.parent = {x: x for x in items}

    def find(self, x: Word) -> Word:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Word, y: Word) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass
class ClassTable:
    presentation: StabPresentation
    uf: _UnionFind
    cells: dict[Word, tuple[int, int]] = field(default_factory=dict)

    def multiplicities(self) -> dict[tuple[int, int], int]:
        classes: dict[tuple[int, int], set[Word]] = defaultdict(set)
        for w, cell in self.cells.items():
            classes[cell].add(self.uf.find(w))
        return {cell: len(roots) for cell, roots in sorted(classes.items())}

    def same_class(self, a: Word, b: Word) -> bool:
        return self.uf.find(a) == self.uf.find(b)


def _close(pres: StabPresentation, words: list[Word]) -> ClassTable:
    present = set(words)
    uf = _UnionFind(words)
    for lhs, rhs in pres.identifications:
        # Both sides lose tb at the same rate, so a translate leaves the
        # enumerated set exactly when it runs below the floor.
        for a in itertools.count():
            if lhs.shifted(a, 0) not in present or rhs.shifted(a, 0) not in present:
                break
            for b in itertools.count():
                x, y = lhs.shifted(a, b), rhs.shifted(a, b)
                if x not in present or y not in present:
                    break
                uf.union(x, y)
    table = ClassTable(pres, uf, {w: pres.cell(w) for w in words})
    _check_separations(pres, table, present)
    return table


def _check_separations(pres: StabPresentation, table: ClassTable, present: set[Word]) -> None:
    for ni in pres.non_identifications:
        for lhs, rhs in ni.instances():
            if lhs not in present or rhs not in present:
                break
            if table.same_class(lhs, rhs):
                raise InconsistentPresentation(
                    f"identifications force {lhs} = {rhs}, contradicting {ni.left} != {ni.right}"
                )


def stabilization_word_oracle(pres: StabPresentation, depth: int) -> dict[tuple[int, int], int]:
    """Class counts per ``(r, tb)`` over all words of at most ``depth`` letters.

    Counts are complete on cells with ``tb >= tb_bar - depth``; lower cells
    only see the shorter words that reach them.
    """
    if not 0 <= depth <= MAX_ORACLE_DEPTH:
        raise ValueError(f"depth must lie in [0, {MAX_ORACLE_DEPTH}]")
    return _close(pres, pres.words(depth=depth)).multiplicities()


@dataclass(frozen=True)
class TransverseClassification:
    floor: int
    counts: dict[int, int]

    def __getitem__(self, sl: int) -> int:
        return self.counts.get(sl, 0)


def transverse_classes(pres: StabPresentation, floor: int) -> TransverseClassification:
    """Transverse classes, i.e. Legendrian classes modulo negative stabilization.

    A class is reported when it has a member with ``tb >= floor``; its
    self-linking number is ``tb - r``.  Words are enumerated a little below
    the floor so merges that happen just under it are not missed.
    """
    margin = pres.relation_depth + 1
    words = pres.words(tb_floor=floor - margin)
    table = _close(pres, words)
    present = set(words)
    for w in words:
        down = w.shifted(0, 1)
        if down in present:
            table.uf.union(w, down)
    sl_of: dict[Word, int] = {}
    for w, (r, tb) in table.cells.items():
        root = table.uf.find(w)
        sl = tb - r
        if sl_of.setdefault(root, sl) != sl:
            raise InconsistentPresentation(f"class of {w} mixes self-linking numbers")
    seen = {table.uf.find(w) for w, (_, tb) in table.cells.items() if tb >= floor}
    counts: dict[int, int] = defaultdict(int)
    for root in seen:
        counts[sl_of[root]] += 1
    return TransverseClassification(floor, dict(sorted(counts.items(), reverse=True)))


def presentation_from_peaks(peaks: Iterable[int], tb_bar: int) -> StabPresentation:
    """Presentation of a Legendrian simple type with the given peak rotations.

    Neighbouring peaks meet at the bottom of their valley.
    """
    peaks = sorted(peaks)
    gens = tuple(Generator(f"P{i}", tb_bar, r) for i, r in enumerate(peaks))
    rels = []
    for (i, r0), (j, r1) in zip(enumerate(peaks), list(enumerate(peaks))[1:]):
        d = (r1 - r0) // 2
        rels.append((Word(f"P{i}", plus=d), Word(f"P{j}", minus=d)))
    return StabPresentation(gens, tuple(rels))


# -- the (2,3)-torus knot: non-thickenable solid tori ------------------------


def non_thickenable_slope(k: int) -> Slope:
    """Boundary dividing slope ``-(k+1)/(6k+5)`` of the k-th non-thickenable torus."""
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    return Slope(-(k + 1), 6 * k + 5)


def annulus_balance(k: int) -> tuple[int, int]:
    """Twisting deficits ``(m1, m2)`` of the core curves that balance the annulus."""
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    m1, m2 = 2 * k + 1, 3 * k + 1
    assert 3 * m1 + 2 == 2 * m2 + 3 == 6 * k + 5
    return m1, m2


def edge_rounding_terms(k: int) -> list[tuple[int, int]]:
    """The three unreduced slope contributions that round to the k-th torus."""
    m1, m2 = annulus_balance(k)
    return [(-(2 * m1 + 1), 3 * m1 + 2), (m2 + 2, 2 * m2 + 3), (-1, 6 * k + 5)]


def non_thickenable_slopes(max_k: int) -> list[Slope]:
    return [non_thickenable_slope(k) for k in range(max_k + 1)]


# -- the (2,3)-cable of the (2,3)-torus knot ----------------------------------

KPRIME_TB_BAR = 6
KPRIME_WIDTH = 6
# Dividing slopes, in the core-curve cabling frame, of the torus carrying the
# max-tb divides K+- and of the non-thickenable torus carrying L+-.
KPRIME_CABLE_SLOPE = Slope(-3, 16)
L_TORUS_SLOPE = Slope(-2, 11)


def kprime_presentation(merge_at_0_3: bool = False) -> StabPresentation:
    """Generators, relations and separations for the (2,3)-cable of the trefoil.

    The last separation is read as ``S+^2(L-) != S-^2(L+)``, the only form
    that compares knots in the same cell.  ``merge_at_0_3=True`` replaces it
    by the opposite identification; the closure engine then rejects the
    presentation because ``S+^3(L-)`` would fall into the K-branch.
    """
    gens = (
        Generator("K+", 6, 1),
        Generator("K-", 6, -1),
        Generator("L+", 5, 2),
        Generator("L-", 5, -2),
    )
    rels = [
        (Word("K-", plus=1), Word("K+", minus=1)),
        (Word("L-", minus=1), Word("K-", minus=2)),
        (Word("L+", plus=1), Word("K+", plus=2)),
    ]
    seps = [
        NonIdentification(Word("L-", plus=1), Word("K-", plus=1, minus=1), step=(1, 0)),
        NonIdentification(Word("L+", minus=1), Word("K+", plus=1, minus=1), step=(0, 1)),
    ]
    pair = (Word("L-", plus=2), Word("L+", minus=2))
    if merge_at_0_3:
        rels.append(pair)
    else:
        seps.append(NonIdentification(*pair))
    return StabPresentation(gens, tuple(rels), tuple(seps))


def kprime_multiplicity(r: int, tb: int) -> int:
    """Number of Legendrian classes of the trefoil's (2,3)-cable at ``(r, tb)``.

    One class fills everything below ``K+`` and ``K-``; ``L-`` adds a class
    only along its purely positive stabilizations and ``L+`` only along its
    purely negative ones, since any other letter merges into the K-branch.
    """
    if tb > KPRIME_TB_BAR or (r + tb) % 2 == 0:
        return 0
    drop = KPRIME_TB_BAR - tb
    count = 1 if min(abs(r - 1), abs(r + 1)) <= drop else 0
    if tb <= 5:
        k = 5 - tb
        count += (r == -2 + k) + (r == 2 - k)
    return count
