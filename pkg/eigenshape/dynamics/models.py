from pathlib import Path
from typing import List

import numpy as np
from pydantic import Field, validator

from eigenshape.basemodel import BaseModel, SerializerConfig
from eigenshape.utils import as_float_array

from .serializer import TimeSeriesSerializer


class SimState(BaseModel):
    """A population density at a time instant.

    Attributes:
        u (np.ndarray): Nonnegative vertex values of the density.
        t (float): Time.
        omega (float): Growth scale ω > 0.
        dt (float): Time step.
    """

    u: np.ndarray
    t: float = Field(..., ge=0.0)
    omega: float = Field(..., gt=0.0)
    dt: float = Field(..., gt=0.0)

    @validator("u", pre=True)
    def _to_float_array(cls, value):
        return as_float_array(value, 1)

    @validator("u")
    def _check_nonnegative(cls, value):
        if (value < 0.0).any():
            raise ValueError("Densities must be nonnegative.")
        return value


class TimeSeries(BaseModel):
    """Summaries of a trajectory.

    Attributes:
        t (List[float]): Times, nondecreasing.
        linf (List[float]): max u at every time.
        mass (List[float]): ∫u at every time.
        clipped (int): Total number of negative vertex values set to zero.
    """

    t: List[float] = Field(default_factory=list)
    linf: List[float] = Field(default_factory=list)
    mass: List[float] = Field(default_factory=list)
    clipped: int = 0

    def append(self, t: float, linf: float, mass: float) -> None:
        self.t.append(t)
        self.linf.append(linf)
        self.mass.append(mass)

    def write(self, path: Path, config: SerializerConfig = SerializerConfig()) -> None:
        """Write the CSV `t,linf,mass`."""
        TimeSeriesSerializer.serialize(path, self, config)
