from .analysis import count_monotonicity_violations, interval_of_weight
from .models import IterationRecord, OptimizeTrace, SweepResult
from .serializer import SweepSerializer, TraceSerializer
from .sweep import classify_interval_minimizer, sweep_intervals_1d
from .threshold import SEEDS, optimize_multi_seed, optimize_threshold, seed_weight

__all__ = [
    "IterationRecord",
    "OptimizeTrace",
    "SweepResult",
    "SEEDS",
    "seed_weight",
    "optimize_threshold",
    "optimize_multi_seed",
    "sweep_intervals_1d",
    "classify_interval_minimizer",
    "interval_of_weight",
    "count_monotonicity_violations",
    "TraceSerializer",
    "SweepSerializer",
]
