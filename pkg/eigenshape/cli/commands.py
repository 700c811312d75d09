"""The experiment commands of the `eigenshape` executable.

Every command takes a validated `RunConfig`, writes its CSV and field files
below `output_dir/<command>` and returns a report.
"""
import csv
import logging
import math
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from eigenshape.assembly import (
    BoundaryCondition,
    Weight,
    assemble_operators,
    weight_from_descriptor,
)
from eigenshape.dynamics import (
    default_horizon,
    simulate_logistic,
    steady_state_residual,
)
from eigenshape.eigen import (
    beta_star,
    gamma_eigen,
    mu_from_weight,
    principal_eigen,
    radial_eigen,
    richardson_extrapolate,
    stretch_constant,
)
from eigenshape.errors import InvalidArgumentError, NumericFailureError
from eigenshape.geometry import CustomSet, RadialRings, check_admissible
from eigenshape.mesh import FieldFileModel, Mesh, gen_interval
from eigenshape.optimize import (
    OptimizeTrace,
    classify_interval_minimizer,
    count_monotonicity_violations,
    interval_of_weight,
    optimize_multi_seed,
    optimize_threshold,
    seed_weight,
    sweep_intervals_1d,
)
from eigenshape.rearrange import cap_radius_from_fraction, stretched_weight
from eigenshape.utils import format_float

from .models import (
    CommandReport,
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

logger = logging.getLogger(__name__)

TABLE_FRACTIONS = (0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4)
EQUIVALENCE_TOLERANCE = 1e-3
EXTINCTION_FRACTION = 1e-3
RADIAL_CELLS_PER_RING = 4
RADIAL_AGREEMENT = 5e-3
ONED_HEADER = [
    "beta",
    "beta_star",
    "classification",
    "a_optimizer",
    "lambda_optimizer",
    "lambda_min",
    "agrees",
]


def _output_dir(config: RunConfig, command: str) -> Path:
    path = config.output_dir / command
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_rows(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> Path:
    """Write a CSV file with floats in their shortest round-trip form."""
    def cell(v) -> str:
        if v is None:
            return ""
        return format_float(v) if isinstance(v, float) else str(v)

    with path.open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([cell(v) for v in row])
    return path


def _write_fields(
    path: Path, mesh: Mesh, weight: Weight, phi: Optional[np.ndarray], name: str
) -> Path:
    model = FieldFileModel(mesh=mesh)
    model.add_field("weight", "element", weight.per_element)
    if phi is not None:
        model.add_field(name, "vertex", phi)
    model.save(path)
    return path


def _weight(config: RunConfig, mesh: Mesh) -> Weight:
    if config.weight is None:
        return seed_weight(mesh, "centered-ball", config.kappa, config.c)
    if isinstance(config.weight, CustomSet):
        raise InvalidArgumentError(
            "A custom set has no membership test; give an interval, rings or a cap."
        )
    return weight_from_descriptor(mesh, config.weight, config.kappa)


def _seeds(config: RunConfig) -> List[str]:
    if config.domain.kind == "disk":
        return list(config.seeds)
    return [tag for tag in config.seeds if tag != "disk-cap"]


def _multi_seed(
    config: RunConfig, mesh: Mesh, bc: BoundaryCondition, c: float
) -> Tuple[OptimizeTrace, List[OptimizeTrace]]:
    return optimize_multi_seed(
        mesh,
        bc,
        config.kappa,
        c,
        seeds=_seeds(config),
        threads=config.threads,
        seed=config.seed,
        max_iters=config.max_iters,
        tol=config.tol,
    )


def cmd_solve(config: RunConfig) -> SolveReport:
    """Principal eigenpair of the configured weight.

    Writes `eigen.csv` and `solution.field` (the weight and φ).
    """
    mesh = config.domain.build_mesh(config.resolution)
    weight = _weight(config, mesh)
    result = principal_eigen(assemble_operators(mesh), weight, config.bc)

    out = _output_dir(config, "solve")
    result.write_diagnostics(out / "eigen.csv")
    files = [
        out / "eigen.csv",
        _write_fields(out / "solution.field", mesh, weight, result.phi, "phi"),
    ]

    refined = extrapolated = None
    if config.refine:
        fine_mesh = config.domain.build_mesh(2 * config.resolution)
        fine = principal_eigen(
            assemble_operators(fine_mesh),
            _weight(config, fine_mesh),
            config.bc,
            lam_start=result.lambda_,
        )
        refined = fine.lambda_
        extrapolated = richardson_extrapolate(result.lambda_, refined)

    return SolveReport(
        command="solve",
        files=files,
        lambda_=result.lambda_,
        residual=result.residual,
        iters=result.iters,
        positivity_margin=result.positivity_margin,
        lambda_refined=refined,
        lambda_extrapolated=extrapolated,
    )


def cmd_optimize(config: RunConfig) -> OptimizeReport:
    """Optimized favourable sets for every (β, c) of the sweep.

    Every case gets a directory `beta_<β>_c_<c>` with the convergence curve of
    the best run (`trace.csv`), the curve of every initial set
    (`trace_<seed>.csv`) and the final set (`set.field`). `summary.csv` lists
    the best run of every case. On a rectangle it also counts the grid lines
    along which the optimized set is not monotone.
    """
    mesh = config.domain.build_mesh(config.resolution)
    out = _output_dir(config, "optimize")
    betas = config.betas or [config.bc.beta_value]
    fractions = config.c_values or [config.c]

    rows: List[OptimizeRow] = []
    files: List[Path] = []
    for beta in betas:
        bc = BoundaryCondition.from_beta(beta) if config.betas else config.bc
        for c in fractions:
            best, traces = _multi_seed(config, mesh, bc, c)
            case = out / f"beta_{format_float(beta)}_c_{format_float(c)}"
            best.write_trace(case / "trace.csv")
            files.append(case / "trace.csv")
            for trace in traces:
                trace.write_trace(case / f"trace_{trace.seed}.csv")
                files.append(case / f"trace_{trace.seed}.csv")
            files.append(
                _write_fields(
                    case / "set.field", mesh, best.weight, best.eigen.phi, "phi"
                )
            )
            violations, lines = None, None
            if config.domain.kind == "rectangle":
                violations, lines = count_monotonicity_violations(
                    mesh, best.weight, *config.domain.grid(config.resolution)
                )
                if violations:
                    logger.warning(
                        f"Optimized set for beta={format_float(beta)}, "
                        f"c={format_float(c)} is not monotone along "
                        f"{violations} of {lines} grid lines."
                    )
            rows.append(
                OptimizeRow(
                    beta=beta,
                    c=c,
                    seed=best.seed,
                    lambda_=best.eigen.lambda_,
                    iterations=len(best.records) - 1,
                    reason=best.reason,
                    monotonicity_violations=violations,
                    monotonicity_lines=lines,
                )
            )

    files.append(
        _write_rows(
            out / "summary.csv",
            [
                "beta",
                "c",
                "seed",
                "lambda",
                "iterations",
                "reason",
                "monotonicity_violations",
                "monotonicity_lines",
            ],
            [
                (
                    r.beta,
                    r.c,
                    r.seed,
                    r.lambda_,
                    r.iterations,
                    r.reason,
                    r.monotonicity_violations,
                    r.monotonicity_lines,
                )
                for r in rows
            ],
        )
    )
    return OptimizeReport(command="optimize", files=files, rows=rows)


def cmd_table(config: RunConfig) -> TableReport:
    """Compare the disk cap E_c of volume fraction c with the optimized set E*.

    The optimizer also starts from E_c itself, so λ(E*) ≤ λ(E_c) on the mesh.
    Writes `table.csv` with one column per c and the rows r_c, λ(E_c) and
    λ(E*), plus the extrapolated λ(E_c) when refining.
    """
    if config.domain.kind != "disk":
        raise InvalidArgumentError("The cap table needs a disk domain.")
    radius = config.domain.radius
    fractions = config.c_values or list(TABLE_FRACTIONS)
    seeds = _seeds(config)
    if "disk-cap" not in seeds:
        seeds.append("disk-cap")

    mesh = config.domain.build_mesh(config.resolution)
    bundle = assemble_operators(mesh)
    fine_mesh = fine_bundle = None
    if config.refine:
        fine_mesh = config.domain.build_mesh(2 * config.resolution)
        fine_bundle = assemble_operators(fine_mesh)

    out = _output_dir(config, "table")
    radii, caps, optima, extrapolated = [], [], [], []
    files: List[Path] = []
    for c in fractions:
        check_admissible(config.bc.beta_value, config.kappa, c)
        cap = cap_radius_from_fraction(radius, c)
        cap_weight = weight_from_descriptor(mesh, cap, config.kappa)
        lam_cap = principal_eigen(bundle, cap_weight, config.bc).lambda_

        best, _ = optimize_multi_seed(
            mesh,
            config.bc,
            config.kappa,
            c,
            seeds=seeds,
            threads=config.threads,
            seed=config.seed,
            max_iters=config.max_iters,
            tol=config.tol,
        )
        from_cap = optimize_threshold(
            mesh,
            config.bc,
            config.kappa,
            c,
            init=cap_weight,
            max_iters=config.max_iters,
            tol=config.tol,
            bundle=bundle,
        )
        if from_cap.eigen.lambda_ < best.eigen.lambda_:
            best = from_cap

        radii.append(cap.r_c)
        caps.append(lam_cap)
        optima.append(best.eigen.lambda_)
        files.append(
            _write_fields(
                out / f"set_c_{format_float(c)}.field",
                mesh,
                best.weight,
                best.eigen.phi,
                "phi",
            )
        )
        if config.refine:
            fine = principal_eigen(
                fine_bundle,
                weight_from_descriptor(fine_mesh, cap, config.kappa),
                config.bc,
                lam_start=lam_cap,
            )
            extrapolated.append(richardson_extrapolate(lam_cap, fine.lambda_))
        logger.info(
            f"c={c}: r_c={cap.r_c}, lambda(E_c)={lam_cap}, "
            f"lambda(E*)={best.eigen.lambda_}"
        )

    rows = [["r_c", *radii], ["lambda_cap", *caps], ["lambda_opt", *optima]]
    if config.refine:
        rows.append(["lambda_cap_extrapolated", *extrapolated])
    files.append(_write_rows(out / "table.csv", ["c", *fractions], rows))
    return TableReport(
        command="table",
        files=files,
        c_values=fractions,
        r_c=radii,
        lambda_cap=caps,
        lambda_optimal=optima,
        lambda_cap_extrapolated=extrapolated if config.refine else None,
    )


def _agrees(
    classification: str, intervals: Sequence, c: float, cell: float
) -> bool:
    """Whether the optimizer's set matches the predicted minimizer within a cell."""
    if classification == "any":
        return True
    if len(intervals) != 1:
        return False
    a = intervals[0][0]
    if classification == "centered":
        return abs(a - 0.5 * (1.0 - c)) <= cell * (1.0 + 1e-9)
    return a <= cell * (1.0 + 1e-9) or a >= 1.0 - c - cell * (1.0 + 1e-9)


def cmd_oned(config: RunConfig) -> OnedReport:
    """Optimal favourable intervals of (0, 1).

    Samples λ_β over the positions of an interval of length c, classifies the
    minimizer by comparing β with β*(κ, c) and cross-checks with the optimizer
    on a mesh of `resolution` cells. Writes `sweep.csv`, `summary.csv` and
    `set.field`.
    """
    if config.domain.kind != "interval" or config.domain.lx != 1.0:
        raise InvalidArgumentError("The 1D study needs the unit interval.")
    beta = config.bc.beta_value
    threshold = beta_star(config.kappa, config.c)
    sweep = sweep_intervals_1d(
        config.kappa, config.c, beta, config.n_samples, threads=config.threads
    )
    classification = classify_interval_minimizer(config.kappa, config.c, beta)

    mesh = gen_interval(config.resolution)
    best, _ = _multi_seed(config, mesh, config.bc, config.c)
    intervals = interval_of_weight(mesh, best.weight)
    agrees = _agrees(classification, intervals, config.c, 1.0 / config.resolution)
    if not agrees:
        logger.warning(
            f"Optimizer interval {intervals} does not match the predicted "
            f"'{classification}' minimizer"
        )

    out = _output_dir(config, "oned")
    sweep.write(out / "sweep.csv")
    a_opt = intervals[0][0] if intervals else math.nan
    files = [
        out / "sweep.csv",
        _write_rows(
            out / "summary.csv",
            ONED_HEADER,
            [
                (
                    beta,
                    threshold,
                    classification,
                    a_opt,
                    best.eigen.lambda_,
                    float(sweep.values.min()),
                    agrees,
                )
            ],
        ),
        _write_fields(out / "set.field", mesh, best.weight, best.eigen.phi, "phi"),
    ]
    return OnedReport(
        command="oned",
        files=files,
        beta_star=threshold,
        classification=classification,
        argmin=sweep.argmin,
        lambda_min=float(sweep.values.min()),
        optimizer_intervals=intervals,
        lambda_optimizer=best.eigen.lambda_,
        agrees=agrees,
    )


def cmd_stretch(config: RunConfig) -> StretchReport:
    """Compare a radial set E of the unit disk with its stretched set Ê.

    E is the configured `RadialRings`, the centered ball of area cπ by default.
    λ(E) is computed from the radial equation and on the disk mesh; λ(Ê) on the
    disk mesh. Writes `stretch.csv`, `constants.csv` and `stretched.field`.
    """
    if config.domain.kind != "disk" or config.domain.radius != 1.0:
        raise InvalidArgumentError("Stretching needs the unit disk.")
    if config.weight is None:
        rings = RadialRings(rings=[(0.0, math.sqrt(config.c))])
    elif isinstance(config.weight, RadialRings):
        rings = config.weight
    else:
        raise InvalidArgumentError("Stretching needs a radial set of rings.")
    check_admissible(config.bc.beta_value, config.kappa, rings.volume(2) / math.pi)

    radial = radial_eigen(
        2, rings, config.kappa, config.bc, RADIAL_CELLS_PER_RING * config.resolution
    )
    mesh = config.domain.build_mesh(config.resolution)
    bundle = assemble_operators(mesh)
    ball = principal_eigen(
        bundle,
        weight_from_descriptor(mesh, rings, config.kappa),
        config.bc,
        lam_start=radial.lambda_,
    )
    radial_difference = abs(ball.lambda_ - radial.lambda_) / radial.lambda_
    if radial_difference > RADIAL_AGREEMENT:
        logger.warning(
            f"lambda(E) on the disk mesh ({ball.lambda_}) differs from the radial "
            f"value ({radial.lambda_}) by {radial_difference:.2%}"
        )
    stretched_w = stretched_weight(mesh, rings, config.kappa)
    stretched = principal_eigen(bundle, stretched_w, config.bc, lam_start=ball.lambda_)

    ratio = stretched.lambda_ / ball.lambda_
    bound = float(stretch_constant(2))
    if ratio >= bound:
        logger.warning(f"lambda ratio {ratio} is not below {bound} on this mesh")
    constants = {n: str(stretch_constant(n)) for n in config.dimensions}

    out = _output_dir(config, "stretch")
    files = [
        _write_rows(
            out / "stretch.csv",
            [
                "lambda_radial",
                "lambda_ball",
                "radial_difference",
                "lambda_stretched",
                "ratio",
                "bound",
            ],
            [
                (
                    radial.lambda_,
                    ball.lambda_,
                    radial_difference,
                    stretched.lambda_,
                    ratio,
                    bound,
                )
            ],
        ),
        _write_rows(
            out / "constants.csv",
            ["dimension", "constant", "value"],
            [(n, constants[n], float(stretch_constant(n))) for n in config.dimensions],
        ),
        _write_fields(
            out / "stretched.field", mesh, stretched_w, stretched.phi, "phi"
        ),
    ]
    return StretchReport(
        command="stretch",
        files=files,
        lambda_radial=radial.lambda_,
        lambda_ball=ball.lambda_,
        radial_difference=radial_difference,
        radial_agrees=radial_difference <= RADIAL_AGREEMENT,
        lambda_stretched=stretched.lambda_,
        ratio=ratio,
        bound=bound,
        constants=constants,
    )


def cmd_simulate(config: RunConfig) -> SimulateReport:
    """Run the logistic equation with ω = omega_factor·λ(m) from u0 ≡ 1.

    The species persists when ∫u at the final time exceeds 1e-3 of its initial
    value. Writes `timeseries.csv` and `final.field` (the weight and u).
    """
    mesh = config.domain.build_mesh(config.resolution)
    bundle = assemble_operators(mesh)
    weight = _weight(config, mesh)
    lam = principal_eigen(bundle, weight, config.bc).lambda_
    omega = config.omega_factor * lam
    t_end = config.t_end or default_horizon(bundle, config.bc, weight, lam, omega)

    state, series = simulate_logistic(
        mesh,
        config.bc,
        weight,
        omega,
        np.ones(mesh.n_vertices),
        t_end,
        dt=config.dt,
        bundle=bundle,
    )
    mass = np.array(series.mass)
    persists = bool(mass[-1] > EXTINCTION_FRACTION * mass[0])
    start = int(np.searchsorted(series.t, 0.9 * t_end))
    last_change = abs(mass[-1] - mass[start]) / mass[start] if mass[start] else 0.0
    residual = None
    if persists:
        residual = steady_state_residual(bundle, config.bc, weight, omega, state.u)

    out = _output_dir(config, "simulate")
    series.write(out / "timeseries.csv")
    files = [
        out / "timeseries.csv",
        _write_fields(out / "final.field", mesh, weight, state.u, "u"),
    ]
    return SimulateReport(
        command="simulate",
        files=files,
        lambda_=lam,
        omega=omega,
        t_end=t_end,
        initial_mass=float(mass[0]),
        final_mass=float(mass[-1]),
        final_linf=series.linf[-1],
        persists=persists,
        last_change=float(last_change),
        residual=residual,
        clipped=series.clipped,
    )


def cmd_equiv(config: RunConfig) -> EquivReport:
    """Check that the optimized set E* with μ₋ = −λ*, μ₊ = κλ* has γ(μ) = 0.

    Writes `equiv.csv`.

    Raises:
        NumericFailureError: When |γ| exceeds 1e-3·λ*.
    """
    mesh = config.domain.build_mesh(config.resolution)
    best, _ = _multi_seed(config, mesh, config.bc, config.c)
    lam = best.eigen.lambda_
    mu = mu_from_weight(best.weight, -lam, config.kappa * lam)
    gamma = gamma_eigen(assemble_operators(mesh), mu, config.bc)
    tolerance = EQUIVALENCE_TOLERANCE * lam
    passed = abs(gamma) <= tolerance

    out = _output_dir(config, "equiv")
    path = _write_rows(
        out / "equiv.csv",
        ["lambda", "gamma", "tolerance", "passed"],
        [(lam, gamma, tolerance, passed)],
    )
    if not passed:
        raise NumericFailureError(
            f"|gamma| = {abs(gamma)} exceeds {tolerance} for lambda* = {lam}.",
            probe=lam,
        )
    return EquivReport(
        command="equiv",
        files=[path],
        lambda_=lam,
        gamma=gamma,
        tolerance=tolerance,
        passed=passed,
    )


COMMANDS: Dict[str, Callable[[RunConfig], CommandReport]] = {
    "solve": cmd_solve,
    "optimize": cmd_optimize,
    "table": cmd_table,
    "oned": cmd_oned,
    "stretch": cmd_stretch,
    "simulate": cmd_simulate,
    "equiv": cmd_equiv,
}
