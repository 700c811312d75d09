from pathlib import Path
from typing import List, Tuple

import numpy as np
from pydantic import Field

from eigenshape.assembly import Weight
from eigenshape.basemodel import BaseModel, SerializerConfig
from eigenshape.eigen import EigenResult

from .serializer import SweepSerializer, TraceSerializer


class IterationRecord(BaseModel):
    """One iterate E_k of the thresholding optimizer.

    Attributes:
        k (int): Iteration number, 0 for the initial set.
        lambda_ (float): λ(E_k) (alias "lambda").
        alpha (float): Threshold that produced E_k, NaN for the initial set.
        volume (float): |E_k|.
        set_change (float): |E_k Δ E_{k−1}|, NaN for the initial set.
    """

    k: int
    lambda_: float = Field(..., alias="lambda")
    alpha: float
    volume: float
    set_change: float


class OptimizeTrace(BaseModel):
    """History and outcome of one optimizer run.

    Attributes:
        records (List[IterationRecord]): One record per accepted iterate.
        weight (Weight): The final weight.
        eigen (EigenResult): The eigenpair of the final weight.
        converged (bool): Whether the run reached a fixed point of the
            thresholding or the λ tolerance.
        reason (str): Why the run stopped.
        seed (str): Label of the initial set.
    """

    records: List[IterationRecord]
    weight: Weight
    eigen: EigenResult
    converged: bool
    reason: str
    seed: str = "custom"

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([record.lambda_ for record in self.records])

    def write_trace(
        self, path: Path, config: SerializerConfig = SerializerConfig()
    ) -> None:
        """Write the CSV `iter,lambda,alpha,volume,set_change`."""
        TraceSerializer.serialize(path, self.records, config)


class SweepResult(BaseModel):
    """λ_β(a) sampled over the positions a of the favourable interval.

    Attributes:
        samples (List[Tuple[float, float]]): Pairs (a, λ_β(a)).
        argmin (List[float]): The positions attaining the minimum.
    """

    samples: List[Tuple[float, float]]
    argmin: List[float]

    @property
    def positions(self) -> np.ndarray:
        return np.array([a for a, _ in self.samples])

    @property
    def values(self) -> np.ndarray:
        return np.array([value for _, value in self.samples])

    def write(self, path: Path, config: SerializerConfig = SerializerConfig()) -> None:
        """Write the CSV `a,lambda`."""
        SweepSerializer.serialize(path, self.samples, config)
