from .logistic import default_horizon, simulate_logistic, steady_state_residual
from .models import SimState, TimeSeries
from .serializer import TimeSeriesSerializer

__all__ = [
    "SimState",
    "TimeSeries",
    "simulate_logistic",
    "steady_state_residual",
    "default_horizon",
    "TimeSeriesSerializer",
]
