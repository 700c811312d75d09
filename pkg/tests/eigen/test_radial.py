import math

import pytest

from eigenshape.assembly import (
    BoundaryCondition,
    assemble_operators,
    weight_from_descriptor,
)
from eigenshape.eigen import principal_eigen, radial_eigen, ring_angular_variance
from eigenshape.errors import InvalidArgumentError
from eigenshape.geometry import RadialRings
from eigenshape.mesh import gen_disk
from tests.utils import relative_difference

FIRST_BESSEL_ZERO_SQUARED = 2.404825557695773**2


class TestRadialEigen:
    @pytest.mark.parametrize(
        "dimension, expected",
        [
            pytest.param(1, math.pi**2 / 4.0, id="N=1"),
            pytest.param(2, FIRST_BESSEL_ZERO_SQUARED, id="N=2"),
            pytest.param(3, math.pi**2, id="N=3"),
        ],
    )
    def test_dirichlet_unit_weight_on_the_unit_ball(self, dimension, expected):
        rings = RadialRings(rings=[(0.0, 1.0)])

        result = radial_eigen(dimension, rings, 1.0, BoundaryCondition.dirichlet(), 400)

        assert relative_difference(result.lambda_, expected) < 1e-4

    @pytest.mark.parametrize(
        "beta",
        [
            pytest.param(0.0, id="Neumann"),
            pytest.param(1.0, id="Robin"),
            pytest.param(10.0, id="stiff Robin"),
        ],
    )
    def test_agrees_with_the_disk_mesh(self, beta: float):
        rings = RadialRings(rings=[(0.0, 0.5)])
        bc = BoundaryCondition.robin(beta)
        mesh = gen_disk(1.0, 32)
        bundle = assemble_operators(mesh)

        planar = principal_eigen(bundle, weight_from_descriptor(mesh, rings, 1.0), bc)
        radial = radial_eigen(2, rings, 1.0, bc, 400)

        assert relative_difference(planar.lambda_, radial.lambda_) < 5e-3

    def test_inner_ball_beats_outer_ring_for_neumann(self):
        bc = BoundaryCondition.neumann()
        inner = RadialRings(rings=[(0.0, 0.5)])
        outer = RadialRings(rings=[(math.sqrt(0.75), 1.0)])

        lam_inner = radial_eigen(2, inner, 1.0, bc, 400).lambda_
        lam_outer = radial_eigen(2, outer, 1.0, bc, 400).lambda_

        assert lam_inner < lam_outer

    def test_nonpositive_dimension_raises(self):
        rings = RadialRings(rings=[(0.0, 0.5)])

        with pytest.raises(InvalidArgumentError):
            radial_eigen(0, rings, 1.0, BoundaryCondition.robin(1.0), 10)


class TestRingAngularVariance:
    @pytest.mark.parametrize(
        "beta",
        [
            pytest.param(0.0, id="Neumann"),
            pytest.param(1.0, id="Robin"),
            pytest.param(10.0, id="stiff Robin"),
        ],
    )
    def test_radial_weight_gives_a_nearly_radial_eigenfunction(self, beta: float):
        n_rings = 16
        mesh = gen_disk(1.0, n_rings)
        bundle = assemble_operators(mesh)
        weight = weight_from_descriptor(mesh, RadialRings(rings=[(0.0, 0.5)]), 1.0)

        result = principal_eigen(bundle, weight, BoundaryCondition.robin(beta))
        variances = ring_angular_variance(mesh, result.phi, n_rings)

        assert len(variances) == n_rings
        assert variances.max() <= 1e-4
