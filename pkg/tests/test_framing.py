from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from legcable.framing import (
    CableParams,
    EulerVector,
    basic_slice_euler,
    edge_rounding_sum,
    rotation_of_cable,
    tb_of_divide,
    tb_of_ruling,
    tb_to_twist,
    twist_to_tb,
)
from legcable.slopes import INF, ZERO, Slope, det, reduce


@st.composite
def cable_params(draw):
    q = draw(st.integers(1, 60))
    p = draw(st.integers(-200, 200).filter(lambda p: gcd(p, q) == 1))
    return CableParams(p, q)


TREFOIL_CABLE = CableParams(2, 3)


class TestCableParams:
    @pytest.mark.parametrize("p,q", [(2, 4), (3, 0), (1, -2)])
    def test_rejects(self, p, q):
        with pytest.raises(ValueError):
            CableParams(p, q)

    def test_slope_and_ratio(self):
        c = CableParams(-9, 4)
        assert c.slope == Slope(-4, 9)
        assert c.ratio == Fraction(-9, 4)


class TestTb:
    @pytest.mark.parametrize("t,tb", [(0, 6), (-1, 5), (-5, 1)])
    def test_trefoil_cable_twists(self, t, tb):
        assert twist_to_tb(t, TREFOIL_CABLE) == tb

    @given(st.integers(-10**6, 10**6), cable_params())
    def test_round_trip(self, t, c):
        assert tb_to_twist(twist_to_tb(t, c), c) == t

    @pytest.mark.parametrize("p,q,tb", [(2, 3, 6), (-9, 4, -36), (1, 1, 1)])
    def test_divides(self, p, q, tb):
        assert tb_of_divide(CableParams(p, q)) == tb

    def test_ruling_examples(self):
        assert tb_of_ruling(TREFOIL_CABLE, Slope(2, 1)) == 5
        assert tb_of_ruling(TREFOIL_CABLE, Slope(1, 1)) == 5
        with pytest.raises(ValueError):
            tb_of_ruling(TREFOIL_CABLE, TREFOIL_CABLE.slope)

    @given(cable_params(), st.integers(-500, 500), st.integers(0, 500))
    def test_ruling_below_divide(self, c, num, den):
        if num == 0 and den == 0:
            return
        gamma = reduce(num, den)
        if gamma == c.slope:
            return
        tb = tb_of_ruling(c, gamma)
        assert tb < tb_of_divide(c)
        assert (tb == tb_of_divide(c) - 1) == (abs(det(gamma, c.slope)) == 1)


class TestRotation:
    @pytest.mark.parametrize("rd,rs,want", [(2, -1, 1), (-2, 1, -1), (1, 0, 2), (-1, 0, -2), (0, 0, 0)])
    def test_trefoil_cable(self, rd, rs, want):
        assert rotation_of_cable(TREFOIL_CABLE, rd, rs) == want

    @given(cable_params(), st.integers(-100, 100), st.integers(-100, 100), st.integers(-100, 100))
    def test_linear(self, c, a, b, d):
        assert rotation_of_cable(c, a + d, b) == rotation_of_cable(c, a, b) + rotation_of_cable(c, d, 0)
        assert rotation_of_cable(c, a, b + d) == rotation_of_cable(c, a, b) + rotation_of_cable(c, 0, d)


class TestEuler:
    @pytest.mark.parametrize("n", [0, 1, 5, 40])
    def test_consecutive_integers(self, n):
        assert basic_slice_euler((-(n + 1), 1), (-n, 1)) == (EulerVector(1, 0), EulerVector(-1, 0))

    @pytest.mark.parametrize("s", [-3, 0, 2, 7])
    def test_to_meridian(self, s):
        e, f = basic_slice_euler((-1, s), (0, 1))
        assert e == (1, 1 - s) and f == -e

    def test_last_slice(self):
        assert basic_slice_euler((0, 1), (1, 1))[0] == (1, 0)

    def test_rejects_non_basis(self):
        with pytest.raises(ValueError):
            basic_slice_euler((1, 0), (1, 2))
        with pytest.raises(ValueError):
            basic_slice_euler((2, 2), (1, 1))


class TestEdgeRounding:
    def test_examples(self):
        assert edge_rounding_sum([Slope(-3, 5), Slope(3, 5), Slope(-1, 5)]) == Slope(-1, 5)
        assert edge_rounding_sum([Slope(-7, 11), Slope(6, 11), Slope(-1, 11)]) == Slope(-2, 11)
        assert edge_rounding_sum([ZERO]) == ZERO
        assert edge_rounding_sum([(2, 4), Fraction(1, 2), 1]) == Slope(2, 1)

    def test_infinite_term_rejected(self):
        with pytest.raises(ValueError):
            edge_rounding_sum([INF])
