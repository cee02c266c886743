"""
typeb-fock command-line interface.

Usage:
    # Moments of G(x) by the operator, partition and Jacobi routes
    typeb-fock moments --alpha 0.5 --q 0.3 --order 8

    # Density curve as CSV
    typeb-fock density --alpha -0.4 --q 0 --grid 200

    # Type-B pair partitions with their statistics
    typeb-fock partitions --n 4 --colored

    # Truncated creation norms against the norm theorem
    typeb-fock norms --alpha 0.2 --q 0.5 --trunc 6

    # Cyclic defect of the vacuum state
    typeb-fock trace-defect --alpha 0.5 --q 0

    # Property suites, JSON report
    typeb-fock verify --suite all

Exit codes: 0 ok, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import itertools
import logging
from typing import Any, Dict, List, Optional

import numpy as np
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from typeb_fock.config import get_config
from typeb_fock.errors import CrossCheckError, TypeBFockError
from typeb_fock.operators import (
    creation_norm,
    norm_theorem_case,
    single_vector_moments,
    trace_defect,
    trace_defect_closed_form,
)
from typeb_fock.orthopoly import DensitySpec, JacobiParams, density_curve, moments_from_jacobi
from typeb_fock.partitions import (
    EpsilonPattern,
    enumerate_noncrossing_pairs,
    enumerate_p12_eps,
    enumerate_pair_partitions,
    moment_pair_sum,
    stats,
)
from typeb_fock.partitions.enumeration import colorings
from typeb_fock.processing.serializers import SerializerRegistry
from typeb_fock.runconfig import RunConfig
from typeb_fock.types import OutputFormat, VerifySuite
from typeb_fock.verification import run_suite

logger = logging.getLogger("typeb_fock.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

app = typer.Typer(
    help="Type-B (alpha,q)-Fock space: moments, densities, partitions and checks",
    rich_markup_mode="rich",
    no_args_is_help=True,
)
err_console = Console(stderr=True)

# Shared options
ALPHA = typer.Option(0.0, "--alpha", "-a", help="Deformation parameter alpha")
Q = typer.Option(0.0, "--q", "-q", help="Deformation parameter q")
DIM = typer.Option(2, "--dim", "-d", help="Dimension of H")
INVOLUTION = typer.Option(
    "identity", "--involution", "-j", help="identity | swap:1-2,3-4 | diag:1,-1"
)
TRUNC = typer.Option(4, "--trunc", "-m", help="Truncation degree")
ORDER = typer.Option(8, "--order", "-k", help="Largest moment order")
GRID = typer.Option(200, "--grid", help="Number of density grid points")
FORMAT = typer.Option(None, "--format", "-f", help="Output format (csv, json)")
SEED = typer.Option(None, "--seed", help="Seed for randomized checks")
TOL = typer.Option(None, "--tol", help="Tolerance for cross-route agreement")
VECTOR = typer.Option(None, "--x", help="Vector x as comma-separated reals")
VERBOSE = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr")


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def fail(message: str, code: int = EXIT_USAGE) -> typer.Exit:
    err_console.print(f"[red]Error:[/red] {escape(message)}")
    return typer.Exit(code)


def build_config(**values: Any) -> RunConfig:
    """RunConfig from CLI values; unset options keep their defaults."""
    try:
        return RunConfig(**{k: v for k, v in values.items() if v is not None})
    except ValidationError as exc:
        messages = "; ".join(
            f"{'.'.join(str(p) for p in e['loc']) or 'config'}: {e['msg']}"
            for e in exc.errors()
        )
        raise fail(messages) from exc


def emit(
    rows: List[Dict[str, Any]],
    fmt: Optional[OutputFormat],
    default: OutputFormat,
    meta: Optional[Dict[str, Any]] = None,
    lines: bool = False,
) -> None:
    chosen = fmt or default
    serializer = SerializerRegistry.get(chosen.value)
    typer.echo(serializer.serialize(rows, meta=meta, lines=lines), nl=False)


def run_guarded(action) -> None:
    """Map library errors onto exit codes."""
    try:
        action()
    except CrossCheckError as exc:
        raise fail(str(exc), EXIT_FAILED) from exc
    except TypeBFockError as exc:
        raise fail(str(exc)) from exc


@app.command()
def moments(
    alpha: float = ALPHA,
    q: float = Q,
    dim: int = DIM,
    involution: str = INVOLUTION,
    order: int = ORDER,
    x: Optional[str] = VECTOR,
    fmt: Optional[OutputFormat] = FORMAT,
    tol: Optional[float] = TOL,
    verbose: bool = VERBOSE,
):
    """Moments of G(x) by the operator, pair-partition and Jacobi routes."""
    setup_logging(verbose)
    config = build_config(
        alpha=alpha, q=q, dim=dim, involution=involution, order=order, x=x, tol=tol
    )
    worst = 0.0

    def action() -> None:
        nonlocal worst
        params, space = config.params(), config.space()
        vec = config.vector()
        size = float(np.linalg.norm(vec))
        if size == 0.0:
            raise fail("x must be nonzero")
        c = space.bar_inner(vec, vec).real / size**2
        jacobi = moments_from_jacobi(
            JacobiParams.q_meixner_pollaczek(
                params.alpha, params.q, c, size=config.order // 2 + 1
            ),
            config.order,
        )
        operator = single_vector_moments(vec, config.order, params, space)
        rows = []
        for k in range(config.order + 1):
            pairs = moment_pair_sum([vec] * k, params, space).real if k else 1.0
            reference = float(jacobi[k]) * size**k
            diff = max(
                abs(operator[k] - pairs),
                abs(operator[k] - reference),
                abs(pairs - reference),
            )
            worst = max(worst, diff / max(1.0, abs(reference)))
            rows.append(
                {
                    "k": k,
                    "operator": operator[k],
                    "partition": float(pairs),
                    "jacobi": reference,
                    "max_diff": diff,
                }
            )
        emit(rows, fmt, OutputFormat.CSV, meta=config.meta())

    run_guarded(action)
    if worst > config.tol:
        raise fail(f"moment routes disagree by {worst:.3e} > {config.tol:g}", EXIT_FAILED)


@app.command()
def density(
    alpha: float = ALPHA,
    q: float = Q,
    grid: int = GRID,
    fmt: Optional[OutputFormat] = FORMAT,
    verbose: bool = VERBOSE,
):
    """Closed-form density on an interior grid of the support."""
    setup_logging(verbose)
    config = build_config(alpha=alpha, q=q, grid=grid)
    try:
        spec = DensitySpec(alpha=config.alpha, q=config.q)
    except ValidationError as exc:
        raise fail(exc.errors()[0]["msg"]) from exc

    def action() -> None:
        ts, values = density_curve(spec, config.grid)
        rows = [{"t": float(t), "density": float(v)} for t, v in zip(ts, values)]
        meta = {"alpha": spec.alpha, "q": spec.q, "K": spec.terms}
        emit(rows, fmt, OutputFormat.CSV, meta=meta)

    run_guarded(action)


@app.command()
def partitions(
    n: int = typer.Option(4, "--n", "-n", help="Size of the ground set"),
    eps: Optional[str] = typer.Option(
        None, "--eps", help="Pattern of '*' and '1'; lists P_{1,2;eps}"
    ),
    noncrossing: bool = typer.Option(
        False, "--noncrossing", help="Only noncrossing pair partitions"
    ),
    colored: bool = typer.Option(False, "--colored", help="All +-1 colorings"),
    fmt: Optional[OutputFormat] = FORMAT,
    verbose: bool = VERBOSE,
):
    """Pair partitions (or those compatible with a pattern) with their statistics."""
    setup_logging(verbose)

    def action() -> None:
        if eps is not None:
            try:
                pattern = EpsilonPattern.parse(eps)
            except ValidationError as exc:
                raise fail(exc.errors()[0]["msg"]) from exc
            found = enumerate_p12_eps(pattern)
        elif noncrossing:
            found = enumerate_noncrossing_pairs(n)
        else:
            found = enumerate_pair_partitions(n)
        rows = []
        for partition in found:
            choices = colorings(partition) if colored else [None]
            for coloring in choices:
                row: Dict[str, Any] = {"partition": str(partition)}
                if coloring is not None:
                    row["coloring"] = list(coloring)
                row.update(stats(partition, coloring).model_dump())
                rows.append(row)
        emit(rows, fmt, OutputFormat.JSON, lines=True)
        logger.info(f"Listed {len(rows)} partitions")

    run_guarded(action)


@app.command()
def norms(
    alpha: float = ALPHA,
    q: float = Q,
    dim: int = DIM,
    involution: str = INVOLUTION,
    trunc: int = TRUNC,
    x: Optional[str] = VECTOR,
    m_list: Optional[str] = typer.Option(
        None, "--m-list", help="Comma-separated truncations (default 1..trunc)"
    ),
    fmt: Optional[OutputFormat] = FORMAT,
    verbose: bool = VERBOSE,
):
    """Truncated norms of B*(x) with the bounds of the applicable theorem case."""
    setup_logging(verbose)
    config = build_config(alpha=alpha, q=q, dim=dim, involution=involution, trunc=trunc, x=x)
    try:
        ms = (
            [int(v) for v in m_list.split(",") if v.strip()]
            if m_list
            else list(range(1, config.trunc + 1))
        )
    except ValueError as exc:
        raise fail(f"cannot parse --m-list {m_list!r}") from exc

    def action() -> None:
        params, space = config.params(), config.space()
        vec = config.vector()
        bounds = norm_theorem_case(vec, params, space)
        rows = [
            {
                "m": m,
                "norm": creation_norm(vec, m, params, space),
                "lower": bounds.lower,
                "upper": bounds.upper,
                "case": bounds.case.value,
                "strict_lower": bounds.strict_lower,
            }
            for m in ms
        ]
        emit(rows, fmt, OutputFormat.CSV, meta=config.meta())

    run_guarded(action)


@app.command("trace-defect")
def trace_defect_cmd(
    alpha: float = ALPHA,
    q: float = Q,
    fmt: Optional[OutputFormat] = FORMAT,
    tol: Optional[float] = TOL,
    verbose: bool = VERBOSE,
):
    """Cyclic defect of the vacuum state, measured and by formula, for s, t = +-1."""
    setup_logging(verbose)
    config = build_config(alpha=alpha, q=q, tol=tol)
    worst = 0.0

    def action() -> None:
        nonlocal worst
        params = config.params()
        rows = []
        for s, t in itertools.product((1, -1), repeat=2):
            measured = trace_defect(params, s, t)
            formula = trace_defect_closed_form(params, s, t)
            worst = max(worst, abs(measured - formula) / max(1.0, abs(formula)))
            rows.append({"s": s, "t": t, "measured": measured, "formula": formula})
        emit(rows, fmt, OutputFormat.CSV, meta={"alpha": params.alpha, "q": params.q})

    run_guarded(action)
    if worst > config.tol:
        raise fail(f"trace defect off its formula by {worst:.3e}", EXIT_FAILED)


@app.command()
def verify(
    suite: VerifySuite = typer.Option(VerifySuite.ALL, "--suite", "-s", help="Suite to run"),
    alpha: float = ALPHA,
    q: float = Q,
    dim: int = DIM,
    involution: str = INVOLUTION,
    trunc: int = TRUNC,
    order: int = ORDER,
    seed: Optional[int] = SEED,
    x: Optional[str] = VECTOR,
    fmt: Optional[OutputFormat] = FORMAT,
    verbose: bool = VERBOSE,
):
    """Run the property suites and print a report of residuals and bounds."""
    setup_logging(verbose)
    config = build_config(
        alpha=alpha,
        q=q,
        dim=dim,
        involution=involution,
        trunc=trunc,
        order=order,
        seed=seed,
        x=x,
    )
    report = run_suite(suite, config)
    emit(report.to_rows(), fmt, OutputFormat.JSON, meta=report.summary())
    if not report.passed:
        names = ", ".join(r.name for r in report.failures)
        raise fail(f"failed properties: {names}", EXIT_FAILED)


@app.command("env-template")
def env_template():
    """Print a .env template with the configured caps and tolerances."""
    typer.echo(get_config().to_env_template(), nl=False)


def main() -> None:
    app()


if __name__ == "__main__":
    main()
