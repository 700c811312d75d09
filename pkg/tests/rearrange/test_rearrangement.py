import math

import numpy as np
import pytest

from eigenshape.errors import InvalidArgumentError, NumericFailureError
from eigenshape.geometry import cap_area
from eigenshape.rearrange import (
    RadialRings,
    cap_radius_from_fraction,
    monotone_two_sided_1d,
    schwarz_radial,
)


class TestMonotoneTwoSided:
    def test_increases_to_the_peak_then_decreases(self):
        values = np.array([3.0, 1.0, 2.0, 5.0, 4.0, 6.0])
        measures = np.array([0.1, 0.2, 0.3, 0.4, 0.5, 0.6])

        rearranged, moved = monotone_two_sided_1d(values, measures, 2)

        assert rearranged.tolist() == [1.0, 2.0, 3.0, 6.0, 5.0, 4.0]
        assert moved.tolist() == [0.2, 0.3, 0.1, 0.6, 0.4, 0.5]

    def test_is_equimeasurable(self):
        rng = np.random.default_rng(11)
        values = rng.uniform(-1.0, 1.0, 40)
        measures = rng.uniform(0.5, 1.5, 40)

        rearranged, moved = monotone_two_sided_1d(values, measures, 17)

        for t in np.linspace(-1.0, 1.0, 21):
            assert moved[rearranged > t].sum() == pytest.approx(
                measures[values > t].sum()
            )
        assert (np.diff(rearranged[:18]) >= 0.0).all()
        assert (np.diff(rearranged[18:]) <= 0.0).all()

    @pytest.mark.parametrize("peak_index", [-1, 5])
    def test_peak_out_of_range_raises(self, peak_index: int):
        with pytest.raises(InvalidArgumentError):
            monotone_two_sided_1d(np.ones(5), np.ones(5), peak_index)


class TestSchwarzRadial:
    @pytest.mark.parametrize("dimension", [1, 2, 3, 4])
    def test_keeps_the_volume(self, dimension: int):
        rings = RadialRings(rings=[(0.2, 0.4), (0.7, 0.9)])

        ball = schwarz_radial(rings, dimension)

        assert ball.rings[0][0] == 0.0
        assert ball.volume(dimension) == pytest.approx(rings.volume(dimension))

    def test_outer_ring_in_the_plane(self):
        ball = schwarz_radial(RadialRings(rings=[(0.5, 1.0)]), 2)

        assert ball.rings == [(0.0, pytest.approx(math.sqrt(0.75)))]

    def test_nonpositive_dimension_raises(self):
        with pytest.raises(InvalidArgumentError):
            schwarz_radial(RadialRings(rings=[(0.0, 0.5)]), 0)


class TestCapRadiusFromFraction:
    @pytest.mark.parametrize(
        "c, r_c",
        [
            pytest.param(0.1, 0.3408, id="c=0.1"),
            pytest.param(0.15, 0.4714, id="c=0.15"),
            pytest.param(0.2, 0.6234, id="c=0.2"),
            pytest.param(0.25, 0.8166, id="c=0.25"),
            pytest.param(0.3, 1.0869, id="c=0.3"),
            pytest.param(0.35, 1.5149, id="c=0.35"),
            pytest.param(0.4, 2.3408, id="c=0.4"),
        ],
    )
    def test_unit_area_disk(self, c: float, r_c: float):
        cap = cap_radius_from_fraction(1.0 / math.sqrt(math.pi), c)

        assert cap.r_c == pytest.approx(r_c, abs=5e-4)

    @pytest.mark.parametrize("c", [0.01, 0.1, 0.25, 0.4, 0.49])
    def test_cap_covers_the_fraction(self, c: float):
        cap = cap_radius_from_fraction(2.0, c, angle=0.5)

        assert cap_area(2.0, cap.r_c) / (4.0 * math.pi) == pytest.approx(c, abs=1e-10)
        assert cap.angle == 0.5
        assert cap.radius == 2.0

    @pytest.mark.parametrize(
        "radius, c",
        [
            pytest.param(1.0, 0.0, id="empty"),
            pytest.param(1.0, 1.0, id="whole disk"),
            pytest.param(1.0, 0.5, id="half disk"),
            pytest.param(1.0, 0.6, id="more than half the disk"),
            pytest.param(1.0, 0.9, id="most of the disk"),
            pytest.param(0.0, 0.5, id="degenerate disk"),
        ],
    )
    def test_invalid_arguments_raise(self, radius: float, c: float):
        with pytest.raises(InvalidArgumentError):
            cap_radius_from_fraction(radius, c)

    def test_missing_bracket_raises(self, monkeypatch):
        monkeypatch.setattr("eigenshape.rearrange.cap.cap_area", lambda R, r_c: 0.0)

        with pytest.raises(NumericFailureError):
            cap_radius_from_fraction(1.0, 0.3)
