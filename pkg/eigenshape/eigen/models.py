from pathlib import Path

import numpy as np
from pydantic import Field, validator

from eigenshape.basemodel import BaseModel, SerializerConfig
from eigenshape.utils import as_float_array

from .serializer import DiagnosticsSerializer


class SpectralProbe(BaseModel):
    """The smallest eigenpair of the pencil (K + βB − lam·M, M0).

    Attributes:
        lam (float): The probe value.
        rho (float): The smallest pencil eigenvalue.
        eigvec (np.ndarray): The M0-normalized eigenvector on all vertices.
    """

    lam: float
    rho: float
    eigvec: np.ndarray

    @validator("eigvec", pre=True)
    def _to_float_array(cls, value):
        return as_float_array(value, 1)


class EigenResult(BaseModel):
    """A principal eigenpair.

    Attributes:
        lambda_ (float): The positive principal eigenvalue (alias "lambda").
        phi (np.ndarray): Vertex values of the eigenfunction with ∫φ² = 1 and
            positive mean.
        residual (float): M0-dual norm of (K + βB − λM)φ.
        iters (int): Number of pencil eigensolves spent.
        positivity_margin (float): Smallest vertex value of φ.
    """

    lambda_: float = Field(..., alias="lambda")
    phi: np.ndarray
    residual: float
    iters: int
    positivity_margin: float

    @validator("phi", pre=True)
    def _to_float_array(cls, value):
        return as_float_array(value, 1)

    def write_diagnostics(
        self, path: Path, config: SerializerConfig = SerializerConfig()
    ) -> None:
        """Write the CSV row `lambda,residual,iters,positivity_margin`."""
        DiagnosticsSerializer.serialize(path, [self], config)
