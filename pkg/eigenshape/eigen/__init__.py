from .diagnostics import (
    observed_order,
    rayleigh_quotient,
    relative_residual,
    richardson_extrapolate,
    ring_angular_variance,
)
from .interval import beta_star, interval_eigen_1d, stretch_constant
from .models import EigenResult, SpectralProbe
from .radial import radial_eigen
from .serializer import DiagnosticsSerializer
from .solver import gamma_eigen, mu_from_weight, principal_eigen, spectral_rho

__all__ = [
    "EigenResult",
    "SpectralProbe",
    "spectral_rho",
    "principal_eigen",
    "gamma_eigen",
    "mu_from_weight",
    "interval_eigen_1d",
    "beta_star",
    "stretch_constant",
    "radial_eigen",
    "richardson_extrapolate",
    "observed_order",
    "relative_residual",
    "rayleigh_quotient",
    "ring_angular_variance",
    "DiagnosticsSerializer",
]
