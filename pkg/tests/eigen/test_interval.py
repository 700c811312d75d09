import math
from fractions import Fraction

import pytest

from eigenshape.eigen import beta_star, interval_eigen_1d, stretch_constant
from eigenshape.errors import InvalidArgumentError
from tests.utils import relative_difference


class TestBetaStar:
    def test_unit_kappa_half_length(self):
        assert beta_star(1.0, 0.5) == pytest.approx(math.pi, abs=1e-12)

    def test_small_kappa_branch(self):
        expected = 4.0 * (math.pi - math.atan(4.0 / 3.0))
        assert beta_star(0.25, 0.5) == pytest.approx(expected, rel=1e-12)
        assert beta_star(0.25, 0.5) == pytest.approx(8.85719, abs=1e-5)

    @pytest.mark.parametrize("c", [0.1, 0.5, 0.9])
    def test_continuous_at_unit_kappa(self, c: float):
        at_one = beta_star(1.0, c)

        assert beta_star(1.0 - 1e-9, c) == pytest.approx(at_one, rel=1e-6)
        assert beta_star(1.0 + 1e-9, c) == pytest.approx(at_one, rel=1e-6)

    @pytest.mark.parametrize(
        "kappa, c",
        [
            pytest.param(0.0, 0.5, id="zero kappa"),
            pytest.param(1.0, 0.0, id="empty set"),
            pytest.param(1.0, 1.0, id="whole interval"),
        ],
    )
    def test_invalid_arguments_raise(self, kappa: float, c: float):
        with pytest.raises(InvalidArgumentError):
            beta_star(kappa, c)


class TestStretchConstant:
    @pytest.mark.parametrize(
        "dimension, expected",
        [
            pytest.param(1, Fraction(1, 4), id="N=1"),
            pytest.param(2, Fraction(3, 4), id="N=2"),
            pytest.param(3, Fraction(11, 12), id="N=3"),
            pytest.param(4, Fraction(1), id="N=4"),
        ],
    )
    def test_exact_values(self, dimension: int, expected: Fraction):
        assert stretch_constant(dimension) == expected

    def test_exceeds_one_from_five_dimensions(self):
        assert stretch_constant(5) > 1

    def test_nonpositive_dimension_raises(self):
        with pytest.raises(InvalidArgumentError):
            stretch_constant(0)


class TestIntervalEigen:
    def test_dirichlet_full_interval_gives_pi_squared(self):
        assert interval_eigen_1d(0.0, 1.0, 1.0, math.inf) == pytest.approx(
            math.pi**2, rel=1e-10
        )

    def test_dirichlet_full_interval_scales_with_kappa(self):
        assert interval_eigen_1d(0.0, 1.0, 4.0, math.inf) == pytest.approx(
            math.pi**2 / 4.0, rel=1e-10
        )

    @pytest.mark.parametrize("beta", [0.0, 1.0, 20.0, math.inf])
    def test_reflection_symmetry(self, beta: float):
        left = interval_eigen_1d(0.1, 0.3, 1.0, beta)
        right = interval_eigen_1d(0.6, 0.3, 1.0, beta)

        assert relative_difference(left, right) < 1e-9

    def test_constant_in_position_at_critical_beta(self):
        c, kappa = 0.5, 1.0
        beta = beta_star(kappa, c)

        values = [interval_eigen_1d(a, c, kappa, beta) for a in [0.0, 0.1, 0.25, 0.5]]

        assert max(values) - min(values) <= 1e-7 * max(values)

    def test_centered_is_best_for_dirichlet(self):
        centered = interval_eigen_1d(0.25, 0.5, 1.0, math.inf)

        assert centered < interval_eigen_1d(0.0, 0.5, 1.0, math.inf)
        assert centered < interval_eigen_1d(0.1, 0.5, 1.0, math.inf)

    def test_boundary_is_best_for_neumann(self):
        boundary = interval_eigen_1d(0.0, 0.3, 1.0, 0.0)

        assert boundary < interval_eigen_1d(0.35, 0.3, 1.0, 0.0)
        assert boundary < interval_eigen_1d(0.1, 0.3, 1.0, 0.0)

    def test_increasing_and_concave_in_beta(self):
        values = [interval_eigen_1d(0.2, 0.4, 1.0, beta) for beta in range(1, 7)]

        for lo, hi in zip(values, values[1:]):
            assert hi > lo
        for lo, mid, hi in zip(values, values[1:], values[2:]):
            assert hi - 2.0 * mid + lo <= 1e-8

        assert values[-1] < interval_eigen_1d(0.2, 0.4, 1.0, math.inf)

    @pytest.mark.parametrize(
        "a, c, kappa, beta",
        [
            pytest.param(0.5, 0.6, 1.0, 1.0, id="set leaves the interval"),
            pytest.param(-0.1, 0.5, 1.0, 1.0, id="negative position"),
            pytest.param(0.0, 0.5, -1.0, 1.0, id="negative kappa"),
            pytest.param(0.0, 0.5, 1.0, -1.0, id="negative beta"),
        ],
    )
    def test_invalid_arguments_raise(self, a, c, kappa, beta):
        with pytest.raises(InvalidArgumentError):
            interval_eigen_1d(a, c, kappa, beta)
