"""CLI for evaluating, verifying and solving with explicit fractional Laplacians."""

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from enum import Enum
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd
import typer
from rich.console import Console
from rich.table import Table

from fraclap.utils.classical_bases import (
    ROW_DESCRIPTIONS,
    ROW_PARAMETERS,
    BasisFunction,
    EvalPoint,
    RowId,
    basis_eval,
)
from fraclap.utils.config import THREADS_ENV, OutputFormat, RunConfig
from fraclap.utils.errors import (
    BranchError,
    CorrectedFormWarning,
    DomainError,
    FracLapError,
    ParamError,
    ValidityError,
)
from fraclap.utils.explicit_operators import ROW_ALIASES, frac_apply, resolve_row
from fraclap.utils.oracle import OracleConfig
from fraclap.utils.output import eval_frame, read_json, write_grid, write_table
from fraclap.utils.rows import FracResult
from fraclap.utils.spectral_solver import (
    DiskExpansion,
    DiskSolution,
    cubic_gaussian_rhs,
    disk_residual,
    interior_sample_points,
    solve_fractional_disk,
    solve_fractional_interval,
)
from fraclap.utils.verification import DEFAULT_ORDERS, CaseStatus, run_verification

app = typer.Typer(name="fraclap", help="Explicit fractional Laplacians and Riesz potentials of classical bases")
console = Console()

THREADS_HELP = f"Worker threads (capped at the CPU count; env {THREADS_ENV})"


class IntervalRHS(Enum):
    """Built-in right-hand sides for solve-interval."""

    CUBIC_GAUSSIAN = "cubic-gaussian"  # (1-x^2)_+^a x^3 exp(-x^2)
    GAUSSIAN = "gaussian"  # (1-x^2)_+^a exp(-x^2)


def parse_params(values: Optional[list[str]]) -> dict[str, float]:
    """Parse repeated --param k=v flags.

    Raises:
        typer.BadParameter: On a malformed entry.
    """
    params = {}
    for item in values or []:
        key, sep, raw = item.partition("=")
        if not sep or not key.strip():
            raise typer.BadParameter(f"Expected key=value, got: {item}")
        try:
            params[key.strip()] = float(raw)
        except ValueError:
            raise typer.BadParameter(f"Parameter {key.strip()} is not a number: {raw}") from None
    return params


def parse_grid(spec: str) -> tuple[float, float, int]:
    """Parse lo:hi:n.

    Raises:
        typer.BadParameter: On a malformed grid.
    """
    parts = spec.split(":")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except (IndexError, ValueError):
        raise typer.BadParameter(f"Grid must be lo:hi:n, got: {spec}") from None
    if len(parts) != 3 or count < 1 or hi < lo:
        raise typer.BadParameter(f"Grid must be lo:hi:n with lo <= hi and n >= 1, got: {spec}")
    return lo, hi, count


def parse_grid2d(spec: str) -> tuple[int, int, float]:
    """Parse nx:ny:half_width.

    Raises:
        typer.BadParameter: On a malformed grid.
    """
    parts = spec.split(":")
    try:
        nx, ny, half_width = int(parts[0]), int(parts[1]), float(parts[2])
    except (IndexError, ValueError):
        raise typer.BadParameter(f"2D grid must be nx:ny:halfwidth, got: {spec}") from None
    if len(parts) != 3 or nx < 1 or ny < 1 or half_width <= 0:
        raise typer.BadParameter(f"2D grid must be nx:ny:halfwidth with positive entries, got: {spec}")
    return nx, ny, half_width


def parse_floats(spec: str) -> list[float]:
    try:
        return [float(v) for v in spec.split(",") if v.strip()]
    except ValueError:
        raise typer.BadParameter(f"Expected comma-separated numbers, got: {spec}") from None


def _print_validity_error(e: ValidityError) -> None:
    console.print(f"[bold red]Error:[/bold red] {e}")
    for condition in e.failed_conditions:
        console.print(f"  [red]failed:[/red] {condition}")


def _evaluate_point(f: BasisFunction, s: float, point: EvalPoint) -> tuple[float, Optional[FracResult]]:
    """Function value and operator value; None marks an excluded point."""
    try:
        value = basis_eval(f, point)
    except DomainError:
        value = math.nan
    try:
        return value, frac_apply(f, s, point)
    except (BranchError, DomainError):
        return value, None


def _evaluate_all(f: BasisFunction, s: float, points: list[EvalPoint], threads: int):
    if threads > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda p: _evaluate_point(f, s, p), points))
    return [_evaluate_point(f, s, p) for p in points]


def _default_output(stem: str, fmt: OutputFormat) -> Path:
    return Path(f"{stem}.{fmt.value}")


@app.command("eval")
def eval_command(
    row: str = typer.Option(..., "--row", "-r", help="Row id (T1R1..T1R14, HD_A..HD_D) or special alias"),
    param: Optional[list[str]] = typer.Option(None, "--param", "-p", help="Row parameter key=value (repeatable)"),
    s: Optional[float] = typer.Option(None, "--s", help="Order: > 0 fractional Laplacian, < 0 Riesz potential"),
    n: int = typer.Option(0, "--n", help="Polynomial degree", min=0),
    d: int = typer.Option(1, "--d", help="Dimension", min=1),
    ell: int = typer.Option(0, "--l", "--ell", help="Solid-harmonic degree", min=0),
    j: int = typer.Option(0, "--j", help="Fourier sign bit in d = 2", min=0, max=1),
    grid: str = typer.Option("-2:2:401", "--grid", "-g", help="1D grid lo:hi:n along the first axis"),
    grid2d: Optional[str] = typer.Option(None, "--grid2d", help="2D grid nx:ny:halfwidth (d = 2 only)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default eval.<format>)"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", envvar=THREADS_ENV, help=THREADS_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show per-point detail"),
) -> None:
    """Evaluate an explicit fractional Laplacian or Riesz potential on a grid.

    Exit codes: 0 success, 2 inadmissible parameters, 3 output failure.
    """
    try:
        params = parse_params(param)
        config = RunConfig(threads=threads, output_format=fmt, verbose=verbose)
        f, order = resolve_row(row, n=n, params=params, d=d, ell=ell, j=j, s=s)
        if order is None:
            raise ParamError("An order is required. Pass --s")
    except typer.BadParameter as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)
    except (ValueError, FracLapError) as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        console.print(f"[dim]Available rows: {[r.value for r in RowId] + list(ROW_ALIASES)}[/dim]")
        raise typer.Exit(code=2)

    out = out or _default_output("eval", config.output_format)
    console.print(f"[bold blue]Evaluating {row}[/bold blue] (n={f.n}, d={f.d}, s={order})")

    try:
        if grid2d is not None:
            if f.d != 2:
                raise ParamError(f"--grid2d needs d = 2, got d = {f.d}")
            nx, ny, half_width = parse_grid2d(grid2d)
            xs = np.linspace(-half_width, half_width, nx)
            ys = np.linspace(-half_width, half_width, ny)
            points = [EvalPoint.of(float(x), float(y)) for y in ys for x in xs]
        else:
            lo, hi, count = parse_grid(grid)
            xs = np.linspace(lo, hi, count)
            points = [EvalPoint((float(x),) + (0.0,) * (f.d - 1)) for x in xs]
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", CorrectedFormWarning)
            evaluated = _evaluate_all(f, order, points, config.threads)
    except typer.BadParameter as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)
    except ValidityError as e:
        _print_validity_error(e)
        raise typer.Exit(code=2)
    except FracLapError as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)

    results = [r for _, r in evaluated]
    excluded = sum(1 for r in results if r is None)
    near = sum(1 for r in results if r is not None and r.near_pole)
    if verbose:
        for point, (value, result) in zip(points, evaluated):
            if result is None:
                console.print(f"  [dim]{point.coords}: excluded[/dim]")
            else:
                flag = " [yellow]near pole[/yellow]" if result.near_pole else ""
                console.print(
                    f"  {point.coords}: f={value:.6g} result={result.value:.10g} "
                    f"[cyan]{result.branch_used.value}[/cyan]{flag}"
                )

    meta = {"row": row, "n": f.n, "d": f.d, "l": f.ell, "j": f.j, "s": order, "params": dict(f.params)}
    try:
        if grid2d is not None:
            values = np.array([r.value if r is not None else math.nan for r in results]).reshape(len(ys), len(xs))
            write_grid(xs, ys, values, out, config.output_format, name="u", meta=meta)
        else:
            frame = eval_frame(xs, [v for v, _ in evaluated], results)
            write_table(frame, out, config.output_format, meta=meta)
    except OSError as e:
        console.print(f"[bold red]Error:[/bold red] Cannot write {out}: {e}")
        raise typer.Exit(code=3)

    for message in dict.fromkeys(str(w.message) for w in caught if issubclass(w.category, CorrectedFormWarning)):
        console.print(f"[yellow]Note:[/yellow] {message}")
    if excluded:
        console.print(f"[yellow]{excluded} point(s) excluded (formula undefined there)[/yellow]")
    if near:
        console.print(f"[yellow]{near} point(s) used near-pole extrapolation[/yellow]")
    console.print(f"[bold green]Wrote {len(points)} points to {out}[/bold green]")


@app.command()
def verify(
    rows: str = typer.Option("all", "--rows", help="Comma-separated row ids, or 'all'"),
    orders: str = typer.Option(
        ",".join(str(v) for v in DEFAULT_ORDERS), "--s", help="Comma-separated orders (negative for Riesz)"
    ),
    tol: float = typer.Option(1e-6, "--tol", help="Relative tolerance at interior points"),
    quick: bool = typer.Option(False, "--quick", "-q", help="Small matrix and reduced oracle budget"),
    nodes: Optional[int] = typer.Option(None, "--nodes", help="Oracle Gauss nodes per panel", min=4),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", envvar=THREADS_ENV, help=THREADS_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show failing and erroring cases"),
) -> None:
    """Check explicit formulas against the quadrature oracle and the Meijer-G path.

    Exit codes: 0 all within tolerance, 1 any breach or reference failure,
    2 bad arguments.
    """
    try:
        config = RunConfig(threads=threads, tol=tol, verbose=verbose, quick=quick)
        selected = None if rows.strip().lower() == "all" else [r.strip() for r in rows.split(",") if r.strip()]
        order_list = parse_floats(orders)
        cfg = OracleConfig.quick() if quick else OracleConfig()
        if nodes is not None:
            cfg = replace(cfg, gauss_nodes=nodes)
    except (typer.BadParameter, ValueError, FracLapError) as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)

    console.print(f"[bold blue]Verifying[/bold blue] rows={rows} s={order_list} tol={config.tol:g}")
    if config.quick:
        console.print("[dim]Quick mode: reduced matrix and oracle budget[/dim]")

    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", RuntimeWarning)
            report = run_verification(
                rows=selected, orders=order_list, tol=config.tol, quick=config.quick, threads=config.threads, cfg=cfg
            )
    except ValueError as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)

    for w in caught:
        message = str(w.message)
        if message.startswith("Erratum candidate") or verbose:
            console.print(f"[yellow]Warning:[/yellow] {message}")

    if verbose:
        for result in report.results:
            if result.status in (CaseStatus.FAILED, CaseStatus.ERROR):
                case = result.case
                console.print(
                    f"  [red]{result.status.value}[/red] {result.label} n={case.sample.n} s={case.s} x={case.x}: "
                    f"explicit={result.explicit} reference={result.reference_value} {result.message}"
                )

    console.print()
    console.print(report.format_summary())
    console.print()
    console.print(report.create_table())

    if report.passed:
        console.print("[bold green]All checks within tolerance[/bold green]")
        raise typer.Exit(code=0)
    console.print("[bold red]Verification failed[/bold red]")
    raise typer.Exit(code=1)


@app.command("solve-disk")
def solve_disk(
    degree: int = typer.Option(24, "--N", "-N", help="Truncation degree", min=0),
    s: float = typer.Option(1 / 3, "--s", help="Order in (0, 1/2)"),
    coeffs: Optional[Path] = typer.Option(
        None, "--coeffs", "-c", help="Expansion JSON to solve instead of the built-in right-hand side", exists=True
    ),
    out_dir: Path = typer.Option(Path("."), "--out-dir", "-o", help="Directory for the output files"),
    grid2d: str = typer.Option("101:101:2", "--grid2d", help="Solution grid nx:ny:halfwidth"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Grid output format"),
    residual_points: int = typer.Option(12, "--residual-points", help="Interior points for the oracle residual", min=0),
    tol: float = typer.Option(1e-4, "--tol", help="Largest admissible relative residual"),
    quick: bool = typer.Option(False, "--quick", "-q", help="Reduced oracle budget for the residual"),
    threads: Optional[int] = typer.Option(None, "--threads", "-t", envvar=THREADS_ENV, help=THREADS_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show coefficients and per-point residuals"),
) -> None:
    """Solve (-Delta)^s u = f on the plane for f supported on the unit disk.

    Without --coeffs the right-hand side is 20 (1-r^2)^(-1/3) x^3 exp(-r^2)
    and s must be 1/3. Writes f on the disk, u on the grid, the coefficient
    JSON and the residual table.

    Exit codes: 0 success, 1 residual above --tol, 2 bad arguments, 3 output failure.
    """
    try:
        config = RunConfig(threads=threads, tol=tol, output_format=fmt, verbose=verbose, quick=quick)
        nx, ny, half_width = parse_grid2d(grid2d)
        if coeffs is not None:
            expansion = DiskExpansion.from_dict(read_json(coeffs))
            solution = DiskSolution(expansion, s)
            rhs = expansion.synthesize
        else:
            if abs(s - 1 / 3) > 1e-12:
                raise ParamError(f"The built-in right-hand side is weighted for s = 1/3, got {s}. Pass --coeffs")
            console.print(f"[bold blue]Expanding the right-hand side[/bold blue] (N={degree})")
            solution = solve_fractional_disk(cubic_gaussian_rhs, s, degree, config.threads)
            rhs = cubic_gaussian_rhs
    except (typer.BadParameter, ValueError, FracLapError) as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)

    console.print(f"[cyan]Retained modes:[/cyan] {len(solution.terms)} terms in {solution.modes()}")
    if verbose:
        for idx, c in solution.terms:
            console.print(f"  [dim]n={idx.n} l={idx.ell} j={idx.j}[/dim] {c:.17g}")

    ext = config.output_format.value
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        fx = np.linspace(-1.0, 1.0, nx)
        fy = np.linspace(-1.0, 1.0, ny)
        FX, FY = np.meshgrid(fx, fy)
        write_grid(fx, fy, rhs(FX, FY), out_dir / f"rhs.{ext}", config.output_format, name="f", meta={"s": s})
        xs, ys, U = solution.grid(nx, ny, half_width)
        write_grid(xs, ys, U, out_dir / f"solution.{ext}", config.output_format, name="u", meta={"s": s})
        (out_dir / "coefficients.json").write_text(solution.expansion.to_json())
    except OSError as e:
        console.print(f"[bold red]Error:[/bold red] Cannot write to {out_dir}: {e}")
        raise typer.Exit(code=3)

    if residual_points == 0:
        console.print("[dim]Residual check skipped[/dim]")
        console.print(f"[bold green]Wrote rhs, solution and coefficients to {out_dir}[/bold green]")
        raise typer.Exit(code=0)

    console.print(f"[bold blue]Oracle residual[/bold blue] at {residual_points} interior points")
    cfg = OracleConfig.quick() if config.quick else OracleConfig()
    try:
        report = disk_residual(solution, rhs, interior_sample_points(residual_points), cfg)
    except FracLapError as e:
        console.print(f"[bold red]Error:[/bold red] Residual evaluation failed: {e}")
        raise typer.Exit(code=1)

    table = Table(title="Oracle residual |(-Delta)^s u - f| / max|f|")
    table.add_column("x", justify="right")
    table.add_column("y", justify="right")
    table.add_column("Residual", justify="right")
    for (x, y), residual in zip(report.points, report.residuals):
        style = "green" if residual <= config.tol else "bold red"
        table.add_row(f"{x:.4f}", f"{y:.4f}", f"[{style}]{residual:.2e}[/{style}]")
    if verbose:
        console.print(table)

    frame = pd.DataFrame(
        {
            "x": [p[0] for p in report.points],
            "y": [p[1] for p in report.points],
            "lhs": report.lhs,
            "rhs": report.rhs,
            "residual": report.residuals,
        }
    )
    try:
        write_table(frame, out_dir / f"residual.{ext}", config.output_format)
    except OSError as e:
        console.print(f"[bold red]Error:[/bold red] Cannot write residual report: {e}")
        raise typer.Exit(code=3)

    console.print(f"[cyan]Max residual:[/cyan] {report.max_residual:.3e}")
    if report.max_residual > config.tol:
        console.print(f"[bold red]Residual above tolerance {config.tol:g}[/bold red]")
        raise typer.Exit(code=1)
    console.print(f"[bold green]Wrote rhs, solution, coefficients and residual to {out_dir}[/bold green]")


@app.command("solve-interval")
def solve_interval(
    degree: int = typer.Option(16, "--N", "-N", help="Truncation degree", min=0),
    s: float = typer.Option(1 / 3, "--s", help="Order in (0, 1/2)"),
    rhs: IntervalRHS = typer.Option(IntervalRHS.CUBIC_GAUSSIAN, "--rhs", help="Built-in right-hand side"),
    weight: Optional[float] = typer.Option(None, "--weight", help="Basis weight exponent a (default s)"),
    grid: str = typer.Option("-3:3:301", "--grid", "-g", help="Output grid lo:hi:n"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default interval.<format>)"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show coefficients"),
) -> None:
    """Solve (-Delta)^s u = f on the line for f supported on (-1, 1).

    f is the chosen built-in profile times (1-x^2)_+^a. Writes x, f, u.

    Exit codes: 0 success, 2 bad arguments, 3 output failure.
    """
    try:
        config = RunConfig(output_format=fmt, verbose=verbose)
        lo, hi, count = parse_grid(grid)
        a = s if weight is None else weight
        shape = (lambda x: x**3 * np.exp(-x * x)) if rhs == IntervalRHS.CUBIC_GAUSSIAN else (lambda x: np.exp(-x * x))

        def f(x):
            x = np.asarray(x, dtype=float)
            inside = np.abs(x) < 1
            return np.where(inside, np.where(inside, 1 - x * x, 1.0) ** a * shape(x), 0.0)

        solution = solve_fractional_interval(f, s, degree, weight=a)
        xs = np.linspace(lo, hi, count)
        us = [solution(float(x)) for x in xs]
    except typer.BadParameter as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)
    except ValidityError as e:
        _print_validity_error(e)
        raise typer.Exit(code=2)
    except (ValueError, FracLapError) as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        raise typer.Exit(code=2)

    if verbose:
        for k, c in enumerate(solution.coeffs):
            console.print(f"  [dim]n={k}[/dim] {c:.17g}")

    out = out or _default_output("interval", config.output_format)
    frame = pd.DataFrame({"x": xs, "f": f(xs), "u": us})
    try:
        write_table(frame, out, config.output_format, meta={"s": s, "a": a, "N": degree, "rhs": rhs.value})
    except OSError as e:
        console.print(f"[bold red]Error:[/bold red] Cannot write {out}: {e}")
        raise typer.Exit(code=3)
    console.print(f"[bold green]Wrote {count} points to {out}[/bold green]")


@app.command("list-rows")
def list_rows() -> None:
    """List catalog rows, their families and parameters, and the special-case aliases."""
    table = Table(title="Catalog rows")
    table.add_column("Row", style="cyan")
    table.add_column("Function")
    table.add_column("Parameters")
    for row in RowId:
        table.add_row(row.value, ROW_DESCRIPTIONS[row], ", ".join(ROW_PARAMETERS[row]) or "-")
    console.print(table)

    aliases = Table(title="Special-case aliases")
    aliases.add_column("Alias", style="cyan")
    aliases.add_column("Row")
    aliases.add_column("Case")
    for alias, (row, tag) in ROW_ALIASES.items():
        aliases.add_row(alias, row.value, tag)
    console.print(aliases)


if __name__ == "__main__":
    app()
