import math

import pytest

from eigenshape.errors import InvalidArgumentError
from eigenshape.geometry import c_from_m0, check_admissible, m0_from_c


class TestFractionConversion:
    def test_c_from_m0(self):
        assert c_from_m0(0.7, 0.5) == pytest.approx(0.2)

    def test_conversions_are_inverse(self):
        assert c_from_m0(m0_from_c(0.35, 2.0), 2.0) == pytest.approx(0.35)


class TestCheckAdmissible:
    @pytest.mark.parametrize(
        "beta, kappa, c",
        [
            pytest.param(0.0, 1.0, 0.49, id="Neumann below the mass bound"),
            pytest.param(1.0, 1.0, 0.9, id="Robin, large set"),
            pytest.param(math.inf, 0.5, 0.2, id="Dirichlet"),
        ],
    )
    def test_admissible_triples_pass(self, beta: float, kappa: float, c: float):
        check_admissible(beta, kappa, c)

    @pytest.mark.parametrize(
        "beta, kappa, c, message",
        [
            pytest.param(1.0, 0.0, 0.5, "kappa must be positive", id="kappa zero"),
            pytest.param(1.0, 1.0, 0.0, "c must lie in (0, 1)", id="c zero"),
            pytest.param(1.0, 1.0, 1.0, "c must lie in (0, 1)", id="c one"),
            pytest.param(-1.0, 1.0, 0.5, "beta must be nonnegative", id="beta < 0"),
            pytest.param(math.nan, 1.0, 0.5, "beta must be nonnegative", id="NaN"),
            pytest.param(
                0.0, 1.0, 0.5, "requires c < 1/(kappa+1)", id="Neumann at bound"
            ),
        ],
    )
    def test_inadmissible_triples_raise(
        self, beta: float, kappa: float, c: float, message: str
    ):
        with pytest.raises(InvalidArgumentError) as error:
            check_admissible(beta, kappa, c)

        assert message in str(error.value)

    def test_invalid_argument_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            check_admissible(0.0, 1.0, 0.9)
