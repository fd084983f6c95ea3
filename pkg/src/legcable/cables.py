"""Classification of cables of Legendrian simple, uniformly thick knot types.

Sufficiently positive cables (``p/q`` above the contact width) keep the
peak rotations scaled by ``q`` and lose ``|w . p/q|`` from ``pq``.
Sufficiently negative cables reach ``tb = pq``, stay uniformly thick, and
get two peaks ``q r +- s`` for every class of the companion at ``tb = -n``.
"""

from __future__ import annotations

from fractions import Fraction

from legcable.atlas import (
    TREFOIL,
    UNKNOT,
    Branched,
    Classification,
    NotCovered,
    Simple,
    Utp,
    mountain_range,
    torus_knot,
)
from legcable.cable23 import KPRIME_TB_BAR, KPRIME_WIDTH, kprime_presentation
from legcable.framing import CableParams
from legcable.slopes import det, floor_gap, reduce


def _require_thick_simple(c: Classification) -> Fraction:
    if not isinstance(c.shape, Simple):
        raise NotCovered("companion is not Legendrian simple")
    if c.utp is not Utp.YES:
        raise NotCovered(f"companion is not known to satisfy the UTP (utp = {c.utp.value})")
    if c.width is None:
        raise NotCovered("contact width of the companion is only known up to an interval")
    return c.width


def _require_cabling(cp: CableParams) -> None:
    if cp.q < 2:
        raise NotCovered(f"a ({cp.p},{cp.q})-cable is the companion itself; need q >= 2")


def classify_positive_cable(c: Classification, cp: CableParams) -> Classification:
    width = _require_thick_simple(c)
    _require_cabling(cp)
    if not cp.ratio > width:
        raise NotCovered(f"p/q = {cp.ratio} is not above the width {width}")
    loss = abs(det(reduce(width.numerator, width.denominator), reduce(cp.p, cp.q)))
    peaks = tuple(cp.q * r for r in c.peaks)
    return Classification(
        tb_bar=cp.p * cp.q - loss, width=None, utp=Utp.UNKNOWN, shape=Simple(peaks)
    )


def classify_negative_cable(c: Classification, cp: CableParams) -> Classification:
    width = _require_thick_simple(c)
    _require_cabling(cp)
    if not cp.ratio < width:
        raise NotCovered(f"p/q = {cp.ratio} is not below the width {width}")
    n = floor_gap(cp.p, cp.q)
    s = -cp.p - cp.q * n
    assert 0 < s < cp.q
    row = mountain_range(c, -n).row(-n)
    if not row:
        raise AssertionError(f"companion has no classes at tb = {-n}")
    peaks = sorted({cp.q * r + e for r in row for e in (s, -s)})
    pq = cp.p * cp.q
    return Classification(tb_bar=pq, width=Fraction(pq), utp=Utp.YES, shape=Simple(tuple(peaks)))


def kprime_classification() -> Classification:
    """The (2,3)-cable of the (2,3)-torus knot: not Legendrian or transversely simple."""
    return Classification(
        tb_bar=KPRIME_TB_BAR,
        width=Fraction(KPRIME_WIDTH),
        utp=Utp.UNKNOWN,
        shape=Branched(kprime_presentation()),
    )


def classify_cable(c: Classification, cp: CableParams) -> Classification:
    if c == UNKNOT:
        return torus_knot(cp.p, cp.q)
    if c == TREFOIL and (cp.p, cp.q) == (2, 3):
        return kprime_classification()
    width = _require_thick_simple(c)
    if cp.ratio == width:
        raise NotCovered(f"p/q = {cp.ratio} equals the contact width; neither cabling theorem applies")
    if cp.ratio > width:
        return classify_positive_cable(c, cp)
    return classify_negative_cable(c, cp)
