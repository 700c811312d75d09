import math

import numpy as np
import pytest

from eigenshape.assembly import BoundaryCondition, Weight, assemble_operators
from eigenshape.config import settings
from eigenshape.eigen import (
    gamma_eigen,
    interval_eigen_1d,
    mu_from_weight,
    principal_eigen,
    relative_residual,
    spectral_rho,
)
from eigenshape.errors import InvalidArgumentError, NoPositiveEigenvalueError
from eigenshape.mesh import gen_disk, gen_interval, gen_rectangle
from tests.utils import interval_weight, relative_difference


def constant_weight(n_elements: int, kappa: float = 1.0) -> Weight:
    return Weight(per_element=np.full(n_elements, kappa), kappa=kappa)


class TestSpectralRho:
    def test_rho_vanishes_at_the_principal_eigenvalue(self):
        mesh = gen_interval(64)
        bundle = assemble_operators(mesh)
        weight = interval_weight(mesh, 0.25, 0.5, 1.0)
        bc = BoundaryCondition.robin(1.0)
        result = principal_eigen(bundle, weight, bc)
        M = bundle.weighted_mass(weight.per_element)

        below = spectral_rho(bundle, M, bc, 0.5 * result.lambda_).rho
        at = spectral_rho(bundle, M, bc, result.lambda_).rho
        above = spectral_rho(bundle, M, bc, 2.0 * result.lambda_).rho

        assert below > 0.0 > above
        assert abs(at) < 1e-9 * result.lambda_

    def test_eigenvector_is_normalized_with_positive_mean(self):
        mesh = gen_rectangle(1.0, 1.0, 6, 6)
        bundle = assemble_operators(mesh)
        weight = constant_weight(mesh.n_elements)
        bc = BoundaryCondition.dirichlet()

        pair = spectral_rho(bundle, bundle.weighted_mass(weight.per_element), bc, 1.0)

        assert pair.eigvec @ (bundle.M0 @ pair.eigvec) == pytest.approx(1.0)
        assert (bundle.M0 @ pair.eigvec).sum() > 0.0
        assert (pair.eigvec[mesh.boundary_vertices] == 0.0).all()

    def test_sparse_and_dense_solvers_agree(self, monkeypatch):
        mesh = gen_disk(1.0, 6)
        bundle = assemble_operators(mesh)
        weight = Weight.bang_bang(mesh.element_centroids[:, 0] > 0.3, kappa=2.0)
        M = bundle.weighted_mass(weight.per_element)
        bc = BoundaryCondition.robin(0.5)

        dense = spectral_rho(bundle, M, bc, 3.0)
        monkeypatch.setattr(settings, "DENSE_EIGEN_THRESHOLD", 0)
        sparse = spectral_rho(bundle, M, bc, 3.0, m_bound=2.0)

        assert sparse.rho == pytest.approx(dense.rho, rel=1e-9, abs=1e-12)
        assert np.allclose(sparse.eigvec, dense.eigvec, atol=1e-7)


class TestPrincipalEigen:
    def test_dirichlet_unit_weight_gives_pi_squared(self):
        mesh = gen_interval(512)
        bundle = assemble_operators(mesh)

        result = principal_eigen(
            bundle, constant_weight(mesh.n_elements), BoundaryCondition.dirichlet()
        )

        assert relative_difference(result.lambda_, math.pi**2) < 1e-3
        assert result.positivity_margin >= 0.0

    @pytest.mark.parametrize(
        "beta",
        [
            pytest.param(0.0, id="Neumann"),
            pytest.param(1.0, id="Robin"),
            pytest.param(math.inf, id="Dirichlet"),
        ],
    )
    def test_matches_the_transfer_matrix_value(self, beta: float):
        mesh = gen_interval(500)
        bundle = assemble_operators(mesh)
        weight = interval_weight(mesh, 0.2, 0.4, 1.0)

        result = principal_eigen(bundle, weight, BoundaryCondition.from_beta(beta))

        expected = interval_eigen_1d(0.2, 0.4, 1.0, beta)
        assert relative_difference(result.lambda_, expected) < 1e-3

    def test_eigenfunction_is_positive_and_normalized(self):
        mesh = gen_rectangle(1.0, 1.0, 12, 12)
        bundle = assemble_operators(mesh)
        weight = Weight.bang_bang(mesh.element_centroids[:, 0] < 0.3, kappa=0.5)

        result = principal_eigen(bundle, weight, BoundaryCondition.neumann())

        assert result.positivity_margin > 0.0
        assert result.phi @ (bundle.M0 @ result.phi) == pytest.approx(1.0)
        bc = BoundaryCondition.neumann()
        assert relative_residual(bundle, weight, bc, result) < 1e-8

    def test_neumann_with_nonnegative_mean_weight_raises(self):
        mesh = gen_interval(16)
        bundle = assemble_operators(mesh)
        weight = interval_weight(mesh, 0.0, 0.5, 1.0)

        with pytest.raises(NoPositiveEigenvalueError) as error:
            principal_eigen(bundle, weight, BoundaryCondition.neumann())

        assert "requires ∫m < 0" in str(error.value)

    def test_weight_size_mismatch_raises(self):
        bundle = assemble_operators(gen_interval(16))

        with pytest.raises(InvalidArgumentError):
            principal_eigen(bundle, constant_weight(8), BoundaryCondition.robin(1.0))

    def test_warm_start_gives_the_same_eigenvalue(self):
        mesh = gen_interval(128)
        bundle = assemble_operators(mesh)
        weight = interval_weight(mesh, 0.5, 0.25, 2.0)
        bc = BoundaryCondition.robin(2.0)

        cold = principal_eigen(bundle, weight, bc)
        warm = principal_eigen(bundle, weight, bc, lam_start=cold.lambda_ * 1.01)

        assert warm.lambda_ == pytest.approx(cold.lambda_, rel=1e-10)

    def test_small_eigenvalue_is_found_by_shrinking_the_bracket(self):
        mesh = gen_interval(64)
        bundle = assemble_operators(mesh)
        weight = interval_weight(mesh, 0.0, 0.25, 1.0)
        bc = BoundaryCondition.robin(0.01)

        result = principal_eigen(bundle, weight, bc, lam_start=1e3)

        expected = interval_eigen_1d(0.0, 0.25, 1.0, 0.01)
        assert relative_difference(result.lambda_, expected) < 1e-2


class TestRobinCoefficient:
    def test_increasing_concave_and_bounded_by_dirichlet(self):
        mesh = gen_interval(256)
        bundle = assemble_operators(mesh)
        weight = interval_weight(mesh, 0.2, 0.4, 1.0)
        betas = [0.1, 1.0, 10.0, 100.0, 1e4]

        values = [
            principal_eigen(bundle, weight, BoundaryCondition.robin(beta)).lambda_
            for beta in betas
        ]
        dirichlet = principal_eigen(
            bundle, weight, BoundaryCondition.dirichlet()
        ).lambda_

        for lo, hi in zip(values, values[1:]):
            assert hi > lo
        slopes = [
            (values[i + 1] - values[i]) / (betas[i + 1] - betas[i])
            for i in range(len(betas) - 1)
        ]
        for left, right in zip(slopes, slopes[1:]):
            assert right - left <= 1e-8
        assert values[-1] <= dirichlet
        assert relative_difference(values[-1], dirichlet) < 2e-2


class TestComparisonPrinciple:
    def test_larger_weight_has_smaller_eigenvalue(self):
        mesh = gen_rectangle(1.0, 1.0, 6, 6)
        bundle = assemble_operators(mesh)
        bc = BoundaryCondition.robin(1.0)
        rng = np.random.default_rng(7)

        for _ in range(50):
            upper = rng.uniform(-1.0, 1.0, mesh.n_elements)
            lower = np.maximum(upper - rng.uniform(0.0, 0.5, mesh.n_elements), -1.0)
            peak = rng.integers(mesh.n_elements)
            upper[peak] = lower[peak] = 1.0

            lam_upper = principal_eigen(
                bundle, Weight(per_element=upper, kappa=1.0), bc
            ).lambda_
            lam_lower = principal_eigen(
                bundle, Weight(per_element=lower, kappa=1.0), bc
            ).lambda_

            assert lam_lower > lam_upper


class TestGammaEigen:
    @pytest.mark.parametrize("mu", [-2.0, 0.5, 3.0])
    def test_constant_weight_with_neumann_gives_minus_mu(self, mu: float):
        mesh = gen_rectangle(1.0, 1.0, 4, 4)
        bundle = assemble_operators(mesh)

        gamma = gamma_eigen(bundle, np.full(mesh.n_elements, mu), BoundaryCondition())

        assert gamma == pytest.approx(-mu, abs=1e-10)

    @pytest.mark.parametrize(
        "beta",
        [pytest.param(0.0, id="Neumann"), pytest.param(5.0, id="Robin")],
    )
    def test_principal_pair_gives_zero_gamma(self, beta: float):
        mesh = gen_disk(1.0, 8)
        bundle = assemble_operators(mesh)
        weight = Weight.bang_bang(mesh.element_centroids[:, 1] > 0.6, kappa=1.0)
        bc = BoundaryCondition.robin(beta)
        lam = principal_eigen(bundle, weight, bc).lambda_

        mu = mu_from_weight(weight, -lam, lam)

        assert abs(gamma_eigen(bundle, mu, bc)) <= 1e-8 * lam

    def test_swapped_signs_raise(self):
        weight = Weight.bang_bang([True, False], kappa=1.0)

        with pytest.raises(InvalidArgumentError):
            mu_from_weight(weight, 2.0, -1.0)
