import math

import numpy as np
import pytest

from eigenshape.assembly import BoundaryCondition, Weight, assemble_operators
from eigenshape.dynamics import (
    TimeSeries,
    default_horizon,
    simulate_logistic,
    steady_state_residual,
)
from eigenshape.eigen import principal_eigen
from eigenshape.errors import InstabilityError, InvalidArgumentError
from eigenshape.mesh import gen_disk, gen_interval
from eigenshape.optimize import optimize_threshold
from tests.utils import (
    assert_files_equal,
    interval_weight,
    test_output_dir,
    test_reference_dir,
)


def unit_weight(n_elements: int) -> Weight:
    return Weight(per_element=np.ones(n_elements), kappa=1.0)


class TestSimulateLogistic:
    @pytest.mark.parametrize(
        "factor, persists",
        [
            pytest.param(0.5, False, id="extinction"),
            pytest.param(2.0, True, id="persistence"),
        ],
    )
    def test_growth_scale_decides_the_fate(self, factor: float, persists: bool):
        mesh = gen_interval(64)
        bundle = assemble_operators(mesh)
        bc = BoundaryCondition.robin(1.0)
        weight = interval_weight(mesh, 0.25, 0.5, 1.0)
        lam = principal_eigen(bundle, weight, bc).lambda_
        omega = factor * lam
        t_end = default_horizon(bundle, bc, weight, lam, omega)

        state, series = simulate_logistic(
            mesh, bc, weight, omega, np.ones(mesh.n_vertices), t_end, bundle=bundle
        )

        assert (series.mass[-1] > 1e-3 * series.mass[0]) == persists
        assert state.t == t_end
        assert series.t[-1] == pytest.approx(t_end)
        assert (state.u >= 0.0).all()

    @pytest.mark.parametrize(
        "factor, persists",
        [
            pytest.param(0.5, False, id="extinction"),
            pytest.param(2.0, True, id="persistence"),
        ],
    )
    @pytest.mark.parametrize(
        "mesh",
        [
            pytest.param(gen_interval(64), id="interval"),
            pytest.param(gen_disk(1.0 / math.sqrt(math.pi), 6), id="disk"),
        ],
    )
    def test_optimized_set_decides_the_fate(self, mesh, factor, persists):
        bundle = assemble_operators(mesh)
        bc = BoundaryCondition.robin(1.0)
        trace = optimize_threshold(mesh, bc, 1.0, 0.3, max_iters=20, bundle=bundle)
        lam = trace.eigen.lambda_
        omega = factor * lam
        t_end = default_horizon(bundle, bc, trace.weight, lam, omega)

        state, series = simulate_logistic(
            mesh,
            bc,
            trace.weight,
            omega,
            np.ones(mesh.n_vertices),
            t_end,
            bundle=bundle,
        )

        assert (series.mass[-1] > 1e-3 * series.mass[0]) == persists
        assert (state.u >= 0.0).all()

    def test_linearized_eigenfunction_is_neutral(self):
        mesh = gen_interval(64)
        bundle = assemble_operators(mesh)
        bc = BoundaryCondition.robin(1.0)
        weight = interval_weight(mesh, 0.0, 0.4, 2.0)
        result = principal_eigen(bundle, weight, bc)

        state, series = simulate_logistic(
            mesh,
            bc,
            weight,
            result.lambda_,
            result.phi,
            t_end=1.0,
            linearized=True,
            bundle=bundle,
        )

        assert series.mass[-1] == pytest.approx(series.mass[0], rel=1e-6)
        assert np.allclose(state.u, result.phi, atol=1e-6)

    def test_uniform_density_converges_to_the_carrying_capacity(self):
        mesh = gen_interval(16)
        bundle = assemble_operators(mesh)
        bc = BoundaryCondition.neumann()
        weight = unit_weight(mesh.n_elements)

        state, series = simulate_logistic(
            mesh, bc, weight, 2.0, np.full(mesh.n_vertices, 0.5), t_end=15.0
        )

        assert np.allclose(state.u, 1.0, atol=1e-8)
        assert (np.diff(series.linf) >= -1e-12).all()
        assert steady_state_residual(bundle, bc, weight, 2.0, state.u) < 1e-8

    def test_time_step_divides_the_horizon(self):
        mesh = gen_interval(8)

        state, series = simulate_logistic(
            mesh,
            BoundaryCondition.neumann(),
            unit_weight(mesh.n_elements),
            1.0,
            np.ones(mesh.n_vertices),
            t_end=1.0,
            dt=0.3,
        )

        assert state.dt == pytest.approx(0.25)
        assert len(series.t) == 5

    def test_negative_densities_are_clipped(self):
        mesh = gen_interval(10)
        u0 = np.zeros(mesh.n_vertices)
        u0[5] = 1.0

        state, series = simulate_logistic(
            mesh,
            BoundaryCondition.dirichlet(),
            unit_weight(mesh.n_elements),
            1.0,
            u0,
            t_end=1e-5,
            dt=1e-5,
        )

        assert series.clipped > 0
        assert (state.u >= 0.0).all()

    def test_growth_beyond_the_bound_raises(self):
        mesh = gen_interval(8)

        with pytest.raises(InstabilityError) as error:
            simulate_logistic(
                mesh,
                BoundaryCondition.neumann(),
                unit_weight(mesh.n_elements),
                1.0,
                np.full(mesh.n_vertices, 4.0),
                t_end=10.0,
                dt=1.0,
                linearized=True,
            )

        assert error.value.probe == pytest.approx(3.0)

    @pytest.mark.parametrize(
        "omega, u0, t_end",
        [
            pytest.param(1.0, 0.0, 1.0, id="vanishing density"),
            pytest.param(1.0, -1.0, 1.0, id="negative density"),
            pytest.param(0.0, 1.0, 1.0, id="zero omega"),
            pytest.param(1.0, 1.0, -1.0, id="negative horizon"),
        ],
    )
    def test_invalid_arguments_raise(self, omega: float, u0: float, t_end: float):
        mesh = gen_interval(4)

        with pytest.raises(InvalidArgumentError):
            simulate_logistic(
                mesh,
                BoundaryCondition.neumann(),
                unit_weight(mesh.n_elements),
                omega,
                np.full(mesh.n_vertices, u0),
                t_end,
            )


class TestDefaultHorizon:
    def test_neutral_growth_uses_the_longest_horizon(self):
        mesh = gen_interval(32)
        bundle = assemble_operators(mesh)
        bc = BoundaryCondition.robin(1.0)
        weight = interval_weight(mesh, 0.25, 0.5, 1.0)
        lam = principal_eigen(bundle, weight, bc).lambda_

        assert default_horizon(bundle, bc, weight, lam, lam) == pytest.approx(
            2000.0 / lam
        )

    def test_horizon_is_bounded(self):
        mesh = gen_interval(32)
        bundle = assemble_operators(mesh)
        bc = BoundaryCondition.robin(1.0)
        weight = interval_weight(mesh, 0.25, 0.5, 1.0)
        lam = principal_eigen(bundle, weight, bc).lambda_

        for factor in [0.1, 0.5, 3.0]:
            horizon = default_horizon(bundle, bc, weight, lam, factor * lam)
            assert 50.0 / lam <= horizon <= 2000.0 / lam


def test_write_time_series():
    output_file = test_output_dir / "dynamics" / "timeseries.csv"
    reference_file = test_reference_dir / "dynamics" / "timeseries.csv"
    series = TimeSeries()
    series.append(0.0, 1.0, 0.5)
    series.append(0.25, 0.75, 0.375)

    series.write(output_file)

    assert_files_equal(output_file, reference_file)
