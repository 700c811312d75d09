from pathlib import Path
from typing import Callable, Dict, List, Literal, Optional, Tuple

from pydantic import Field, root_validator

from eigenshape.assembly import BoundaryCondition
from eigenshape.basemodel import BaseModel, ParsableFileModel, SerializerConfig
from eigenshape.geometry import SetDescriptor, c_from_m0, check_admissible
from eigenshape.mesh import Mesh, gen_disk, gen_interval, gen_rectangle
from eigenshape.optimize import SEEDS

from .parser import RunConfigParser
from .serializer import RunConfigSerializer


class Domain(BaseModel):
    """The computational domain.

    Attributes:
        kind (str): "interval" (0, lx), "rectangle" (0, lx) × (0, ly) or "disk"
            B(0, radius).
        lx (float): Length along x.
        ly (float): Length along y, rectangles only.
        radius (float): Radius, disks only.
    """

    kind: Literal["interval", "rectangle", "disk"] = "interval"
    lx: float = Field(1.0, gt=0.0)
    ly: float = Field(1.0, gt=0.0)
    radius: float = Field(1.0, gt=0.0)

    def grid(self, resolution: int) -> Tuple[int, int]:
        """Cells (nx, ny) of the rectangle mesh at the given resolution."""
        return resolution, max(1, round(resolution * self.ly / self.lx))

    def build_mesh(self, resolution: int) -> Mesh:
        """Generate the mesh of this domain.

        Args:
            resolution (int): Cells of an interval, cells along x of a
                rectangle (y gets the same cell size) or rings of a disk.

        Returns:
            Mesh: The generated mesh.
        """
        if self.kind == "interval":
            return gen_interval(resolution, length=self.lx)
        if self.kind == "rectangle":
            return gen_rectangle(self.lx, self.ly, *self.grid(resolution))
        return gen_disk(self.radius, resolution)


class RunConfig(ParsableFileModel):
    """Configuration of an experiment, stored as JSON.

    Exactly one of `c` and `m0` is given in the file; the volume fraction c is
    derived from m0 by c = (1 − m0)/(κ + 1). Command-line options override
    `output_dir`, `seed` and `threads`.

    Attributes:
        domain (Domain): The computational domain.
        resolution (int): Mesh resolution, see `Domain.build_mesh`.
        bc (BoundaryCondition): The boundary condition.
        kappa (float): Upper bound κ of the weight.
        c (Optional[float]): Volume fraction of the favourable set.
        m0 (Optional[float]): Mass parameter, alternative to c.
        weight (Optional[SetDescriptor]): The favourable set for `solve`,
            `simulate` and `stretch`. A centered ball when omitted.
        seeds (List[str]): Initial sets of the optimizer.
        seed (int): Seed of the random initial set.
        threads (Optional[int]): Worker pool size.
        output_dir (Path): Root directory of the outputs.
        c_values (List[float]): Volume fractions swept by `optimize` and `table`.
        betas (List[float]): Robin coefficients swept by `optimize`.
        dimensions (List[int]): Dimensions N of the stretch constants reported by
            `stretch`.
        n_samples (int): Interval positions sampled by `oned`.
        omega_factor (float): ω/λ of `simulate`.
        t_end (Optional[float]): Final time of `simulate`, chosen from the growth
            rate when omitted.
        dt (Optional[float]): Time step of `simulate`, 0.1/ω when omitted.
        refine (bool): Also solve on a mesh of twice the resolution and report
            the Richardson extrapolation.
        max_iters (int): Iteration limit of the optimizer.
        tol (float): Relative λ tolerance of the optimizer.
    """

    domain: Domain = Field(default_factory=Domain)
    resolution: int = Field(64, ge=1)
    bc: BoundaryCondition = Field(default_factory=BoundaryCondition.neumann)
    kappa: float = Field(1.0, gt=0.0)
    c: Optional[float] = None
    m0: Optional[float] = None
    weight: Optional[SetDescriptor] = None
    seeds: List[str] = Field(default_factory=lambda: list(SEEDS[:3]))
    seed: int = Field(0, ge=0)
    threads: Optional[int] = Field(None, ge=1)
    output_dir: Path = Path("output")
    c_values: List[float] = Field(default_factory=list)
    betas: List[float] = Field(default_factory=list)
    dimensions: List[int] = Field(default_factory=lambda: [2, 3, 4])
    n_samples: int = Field(101, ge=3)
    omega_factor: float = Field(2.0, gt=0.0)
    t_end: Optional[float] = Field(None, gt=0.0)
    dt: Optional[float] = Field(None, gt=0.0)
    refine: bool = False
    max_iters: int = Field(100, ge=1)
    tol: float = Field(1e-9, gt=0.0)

    @root_validator(skip_on_failure=True)
    def _derive_fraction(cls, values):
        c, m0, kappa = values["c"], values["m0"], values["kappa"]
        if m0 is not None:
            derived = c_from_m0(m0, kappa)
            if c is not None and abs(c - derived) > 1e-12:
                raise ValueError("Give exactly one of c and m0.")
            values["c"] = derived
        elif c is None:
            if not values["c_values"]:
                raise ValueError("One of c and m0 is required.")
            values["c"] = values["c_values"][0]

        betas = values["betas"] or [values["bc"].beta_value]
        for beta in betas:
            for fraction in [values["c"], *values["c_values"]]:
                check_admissible(beta, kappa, fraction)

        for tag in values["seeds"]:
            if tag not in SEEDS:
                raise ValueError(f"Unknown seed '{tag}', expected one of {SEEDS}.")
        return values

    def dict(self, *args, **kwargs):
        data = super().dict(*args, **kwargs)
        if self.m0 is not None:
            data.pop("c", None)
        return data

    @classmethod
    def _ext(cls) -> str:
        return ".json"

    @classmethod
    def _filename(cls) -> str:
        return "config"

    @classmethod
    def _get_serializer(cls) -> Callable[[Path, Dict, SerializerConfig], None]:
        return RunConfigSerializer.serialize

    @classmethod
    def _get_parser(cls) -> Callable[[Path], Dict]:
        return RunConfigParser.parse


class CommandReport(BaseModel):
    """Outcome of a command.

    Attributes:
        command (str): The command name.
        files (List[Path]): The files written.
    """

    command: str
    files: List[Path] = Field(default_factory=list)


class SolveReport(CommandReport):
    lambda_: float = Field(..., alias="lambda")
    residual: float
    iters: int
    positivity_margin: float
    lambda_refined: Optional[float] = None
    lambda_extrapolated: Optional[float] = None


class OptimizeRow(BaseModel):
    """Best run of one (β, c) case.

    On a rectangle `monotonicity_violations` counts the grid rows and columns
    along which the optimized weight is not monotone, out of
    `monotonicity_lines`. Both are None on other domains.
    """

    beta: float
    c: float
    seed: str
    lambda_: float = Field(..., alias="lambda")
    iterations: int
    reason: str
    monotonicity_violations: Optional[int] = None
    monotonicity_lines: Optional[int] = None


class OptimizeReport(CommandReport):
    rows: List[OptimizeRow]


class TableReport(CommandReport):
    """The favourable disk cap against the optimized set, one column per c."""

    c_values: List[float]
    r_c: List[float]
    lambda_cap: List[float]
    lambda_optimal: List[float]
    lambda_cap_extrapolated: Optional[List[float]] = None


class OnedReport(CommandReport):
    beta_star: float
    classification: Literal["centered", "boundary", "any"]
    argmin: List[float]
    lambda_min: float
    optimizer_intervals: List[Tuple[float, float]]
    lambda_optimizer: float
    agrees: bool


class StretchReport(CommandReport):
    """Eigenvalues of a radial set E and of its stretched set Ê.

    Attributes:
        lambda_radial (float): λ(E) from the radial equation.
        lambda_ball (float): λ(E) on the disk mesh.
        radial_difference (float): Relative difference of the two values of λ(E).
        radial_agrees (bool): Whether they agree within 0.5%.
        lambda_stretched (float): λ(Ê) on the disk mesh.
        ratio (float): λ(Ê)/λ(E) on the disk mesh.
        bound (float): The constant (5N − 4)/(4N) for N = 2.
        constants (Dict[int, str]): The exact constants for every requested N.
    """

    lambda_radial: float
    lambda_ball: float
    radial_difference: float
    radial_agrees: bool
    lambda_stretched: float
    ratio: float
    bound: float
    constants: Dict[int, str]


class SimulateReport(CommandReport):
    lambda_: float = Field(..., alias="lambda")
    omega: float
    t_end: float
    initial_mass: float
    final_mass: float
    final_linf: float
    persists: bool
    last_change: float
    residual: Optional[float] = None
    clipped: int


class EquivReport(CommandReport):
    lambda_: float = Field(..., alias="lambda")
    gamma: float
    tolerance: float
    passed: bool
