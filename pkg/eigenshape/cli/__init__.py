from .commands import (
    COMMANDS,
    cmd_equiv,
    cmd_oned,
    cmd_optimize,
    cmd_simulate,
    cmd_solve,
    cmd_stretch,
    cmd_table,
)
from .models import (
    CommandReport,
    Domain,
    EquivReport,
    OnedReport,
    OptimizeReport,
    OptimizeRow,
    RunConfig,
    SimulateReport,
    SolveReport,
    StretchReport,
    TableReport,
)
from .parser import RunConfigParser
from .serializer import RunConfigSerializer

__all__ = [
    "Domain",
    "RunConfig",
    "RunConfigParser",
    "RunConfigSerializer",
    "CommandReport",
    "SolveReport",
    "OptimizeRow",
    "OptimizeReport",
    "TableReport",
    "OnedReport",
    "StretchReport",
    "SimulateReport",
    "EquivReport",
    "COMMANDS",
    "cmd_solve",
    "cmd_optimize",
    "cmd_table",
    "cmd_oned",
    "cmd_stretch",
    "cmd_simulate",
    "cmd_equiv",
]
