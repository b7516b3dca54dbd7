"""Click CLI for eulercert.

Commands:
    numbers   -- Bernoulli, Euler and Genocchi numbers up to a degree.
    poly      -- Coefficient vectors of B_n(x), E_n(x), G_n(x) (and E_{n,χ}(x)).
    chars     -- Enumerate the Dirichlet characters of a modulus.
    twisted   -- E_{n,χ}(0), G_{n,χ}(0) and T_{n,χ} tables for one character.
    fermionic -- Valuation table of the finite-level fermionic sums.
    verify    -- Run verification suites and emit a certificate report.
    history   -- List archived verification runs.
    pipeline  -- Invoke a pypyr pipeline (full_verification / tables).
"""

from __future__ import annotations

import contextlib
import logging
import os
import pathlib

import click
from dotenv import load_dotenv

from eulercert import DEFAULT_DB_PATH
from eulercert.exceptions import PreconditionError

logger = logging.getLogger("eulercert.cli")

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def _resolve_db_path(ctx_db: str | None) -> str:
    """Return the archive path from --db flag, env var, or default."""
    if ctx_db:
        return ctx_db
    env_path = os.environ.get("EULERCERT_DB")
    if env_path:
        return env_path
    return DEFAULT_DB_PATH


@contextlib.contextmanager
def _usage_errors():
    """Turn precondition violations raised during argument checks into usage errors."""
    try:
        yield
    except PreconditionError as exc:
        raise click.UsageError(str(exc)) from exc


def _check_output_path(output: str) -> None:
    if output == "-":
        return
    parent = pathlib.Path(output).expanduser().resolve().parent
    if not parent.is_dir() or not os.access(parent, os.W_OK):
        raise click.UsageError(f"cannot write output file {output!r}: {parent} is not a writable directory")


def _require_even(d: int) -> None:
    if d < 2 or d % 2:
        raise click.UsageError(f"--modulus must be an even integer >= 2, got {d}")


def _emit(document: dict, fmt: str, output: str) -> None:
    from eulercert.reporting.serialize import render, write_output

    try:
        write_output(render(document, fmt), output)
    except OSError as exc:
        logger.error("Writing %s failed: %s", output, exc)
        click.echo(click.style(f"Cannot write {output}: {exc}", fg="red"), err=True)
        raise SystemExit(1)


def _output_options(func):
    func = click.option(
        "--output", "-o",
        default="-",
        show_default=True,
        help="Output file ('-' for stdout).",
    )(func)
    func = click.option(
        "--format", "fmt",
        type=click.Choice(["json", "csv"]),
        default="json",
        show_default=True,
        envvar="EULERCERT_FORMAT",
        help="Output format.",
    )(func)
    return func


@click.group()
@click.option(
    "--db",
    default=None,
    envvar="EULERCERT_DB",
    help="Path to the SQLite certificate archive.",
)
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
    envvar="EULERCERT_LOG_LEVEL",
    help="Logging verbosity.",
)
@click.pass_context
def main(ctx: click.Context, db: str | None, log_level: str) -> None:
    """eulercert: exact Euler/Genocchi arithmetic and certified identity checks."""
    load_dotenv()
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    ctx.ensure_object(dict)
    ctx.obj["db_path"] = _resolve_db_path(db)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@main.command()
@click.option("--max-degree", default=10, show_default=True, type=click.IntRange(min=0),
              help="Highest index n.")
@_output_options
def numbers(max_degree: int, fmt: str, output: str) -> None:
    """Bernoulli, Euler and Genocchi numbers as exact fractions."""
    from eulercert.reporting.tables import numbers_table

    _check_output_path(output)
    _emit(numbers_table(max_degree), fmt, output)


@main.command()
@click.option("--max-degree", default=6, show_default=True, type=click.IntRange(min=0),
              help="Highest degree n.")
@click.option("--modulus", type=int, default=None,
              help="Even modulus; adds E_{n,χ}(x) for the selected character.")
@click.option("--char-index", default=0, show_default=True, type=click.IntRange(min=0),
              help="Character index in enumeration order.")
@_output_options
def poly(max_degree: int, modulus: int | None, char_index: int, fmt: str, output: str) -> None:
    """Coefficient vectors (lowest degree first) of the classical polynomials."""
    from eulercert.dirichlet.characters import get_character
    from eulercert.reporting.tables import poly_table

    _check_output_path(output)
    chi = None
    if modulus is not None:
        _require_even(modulus)
        with _usage_errors():
            chi = get_character(modulus, char_index)
    _emit(poly_table(max_degree, chi), fmt, output)


@main.command()
@click.option("--modulus", required=True, type=click.IntRange(min=1), help="Modulus d.")
@_output_options
def chars(modulus: int, fmt: str, output: str) -> None:
    """Enumerate characters mod d with conductor and parity."""
    from eulercert.reporting.tables import chars_table

    _check_output_path(output)
    _emit(chars_table(modulus), fmt, output)


@main.command()
@click.option("--modulus", required=True, type=int, help="Even modulus d.")
@click.option("--char-index", default=0, show_default=True, type=click.IntRange(min=0),
              help="Character index in enumeration order.")
@click.option("--max-degree", default=8, show_default=True, type=click.IntRange(min=0),
              help="Highest degree n.")
@click.option("--upper", default=None, type=click.IntRange(min=0),
              help="Upper limit of T_{n,χ} (default d - 1).")
@_output_options
def twisted(modulus: int, char_index: int, max_degree: int, upper: int | None, fmt: str, output: str) -> None:
    """Generalized Euler/Genocchi numbers and twisted power sums."""
    from eulercert.dirichlet.characters import get_character
    from eulercert.reporting.tables import twisted_table

    _require_even(modulus)
    _check_output_path(output)
    with _usage_errors():
        chi = get_character(modulus, char_index)
    _emit(twisted_table(chi, max_degree, upper), fmt, output)


@main.command()
@click.option("--p", "primes", multiple=True, type=int, default=(3,), show_default=True,
              help="Odd prime (repeatable).")
@click.option("--max-degree", default=4, show_default=True, type=click.IntRange(min=0),
              help="Highest monomial degree n.")
@click.option("--level", default=3, show_default=True, type=click.IntRange(min=1),
              help="Highest level N.")
@_output_options
def fermionic(primes: tuple[int, ...], max_degree: int, level: int, fmt: str, output: str) -> None:
    """Partial sums, E_n and the p-adic valuation of their difference."""
    from eulercert.fermionic.partial_sums import require_odd_prime
    from eulercert.reporting.tables import fermionic_table

    _check_output_path(output)
    with _usage_errors():
        for p in primes:
            require_odd_prime(p)
    _emit(fermionic_table(list(primes), max_degree, level), fmt, output)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def _suite_choices() -> list[str]:
    from eulercert.identities.grids import SUITE_NAMES

    return list(SUITE_NAMES) + ["all"]


@main.command()
@click.option("--suite", "suites", multiple=True, default=("all",), show_default=True,
              type=click.Choice(_suite_choices()), help="Suite to run (repeatable).")
@click.option("--modulus", "moduli", multiple=True, type=int,
              help="Modulus d (repeatable); replaces the grid's moduli.")
@click.option("--max-degree", type=click.IntRange(min=0), default=None,
              help="Highest degree in the grid.")
@click.option("--p", "primes", multiple=True, type=int, help="Odd prime (repeatable).")
@click.option("--level", type=click.IntRange(min=1), default=None, help="Highest level N.")
@click.option("--weight", "weights", multiple=True, type=int,
              help="Weight used for both w1 and w2 (repeatable).")
@click.option("--x", "points", multiple=True, help="Rational point 'a/b' (repeatable).")
@click.option("--max-shift", type=click.IntRange(min=1), default=None, help="Highest shift for the shift suite.")
@click.option("--order", type=click.IntRange(min=1), default=None, help="Series order for the eq5 suite.")
@click.option("--primitive-only", is_flag=True, default=False,
              help="Restrict character grids to primitive characters.")
@click.option("--include-principal", is_flag=True, default=False,
              help="Include principal characters in the symmetry and theorem5 grids.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True,
              envvar="EULERCERT_JOBS", help="Worker processes for grid execution.")
@click.option("--archive", is_flag=True, default=False, help="Store the run in the archive.")
@_output_options
@click.pass_context
def verify(
    ctx: click.Context,
    suites: tuple[str, ...],
    moduli: tuple[int, ...],
    max_degree: int | None,
    primes: tuple[int, ...],
    level: int | None,
    weights: tuple[int, ...],
    points: tuple[str, ...],
    max_shift: int | None,
    order: int | None,
    primitive_only: bool,
    include_principal: bool,
    jobs: int,
    archive: bool,
    fmt: str,
    output: str,
) -> None:
    """Run verification suites and emit the certificate report."""
    from eulercert.identities.grids import SUITE_NAMES, resolve_grid, run_suites, validate_grid
    from eulercert.reporting.composer import compose_report, report_exit_code

    overrides = {
        "moduli": list(moduli) or None,
        "max_degree": max_degree,
        "primes": list(primes) or None,
        "max_level": level,
        "weights": list(weights) or None,
        "points": list(points) or None,
        "max_shift": max_shift,
        "order": order,
        "primitive_only": True if primitive_only else None,
        "include_principal": True if include_principal else None,
    }
    names = list(SUITE_NAMES) if "all" in suites else list(dict.fromkeys(suites))

    # Reject the whole invocation before any computation starts.
    _check_output_path(output)
    with _usage_errors():
        for name in names:
            validate_grid(name, resolve_grid(name, overrides))

    results = run_suites(names, overrides, jobs)
    report = compose_report(results)
    _emit(report, fmt, output)

    if archive:
        from eulercert.db.manager import get_connection, init_db, save_certificates, save_run

        conn = get_connection(ctx.obj["db_path"])
        init_db(conn)
        run_id = save_run(conn, report)
        for suite in report["suites"]:
            save_certificates(conn, run_id, suite["name"], suite["certificates"])
        conn.close()
        click.echo(f"Archived as run {run_id}.", err=True)

    summary = report["summary"]
    if report_exit_code(report):
        if summary["empty_suites"]:
            click.echo(
                click.style(
                    f"No certificates from: {', '.join(summary['empty_suites'])}.", fg="red"
                ),
                err=True,
            )
        click.echo(
            click.style(
                f"{summary['fail']} failed, {summary['error']} errors "
                f"out of {summary['total']} certificates.",
                fg="red",
            ),
            err=True,
        )
        raise SystemExit(1)
    click.echo(click.style(f"All {summary['total']} certificates passed.", fg="green"), err=True)


@main.command()
@click.option("--limit", default=20, show_default=True, type=click.IntRange(min=1),
              help="Number of runs to list.")
@click.option("--failed", "failed_run", type=int, default=None,
              help="Show the non-passing certificates of this run id.")
@click.pass_context
def history(ctx: click.Context, limit: int, failed_run: int | None) -> None:
    """List archived verification runs."""
    from eulercert.db.manager import get_connection, get_failed_certificates, init_db, list_runs

    conn = get_connection(ctx.obj["db_path"])
    init_db(conn)
    try:
        if failed_run is not None:
            rows = get_failed_certificates(conn, failed_run)
            if not rows:
                click.echo(f"Run {failed_run} has no failing certificates.")
            for row in rows:
                click.echo(
                    f"{row['suite']:<18} {row['theorem']:<22} {row['status']:<6} "
                    f"{row['params']} mismatch={row['first_mismatch']}"
                )
            return

        runs = list_runs(conn, limit)
        if not runs:
            click.echo(click.style("No archived runs.", fg="yellow"))
            return
        for run in runs:
            colour = "green" if run["passed"] == run["total"] else "red"
            click.echo(
                f"{run['id']:>5}  {run['created_at']}  "
                + click.style(f"{run['passed']}/{run['total']} passed", fg=colour)
                + f"  {run['suite']}"
            )
    finally:
        conn.close()


@main.command()
@click.argument("name", type=click.Choice(["full_verification", "tables"]))
@click.option("--set", "assignments", multiple=True, metavar="KEY=VALUE",
              help="Extra pipeline context value (repeatable).")
@click.pass_context
def pipeline(ctx: click.Context, name: str, assignments: tuple[str, ...]) -> None:
    """Run a pypyr pipeline (full_verification or tables)."""
    from pypyr import pipelinerunner

    from eulercert import PACKAGE_DIR

    dict_in = {"db_path": ctx.obj["db_path"]}
    for item in assignments:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise click.UsageError(f"--set expects KEY=VALUE, got {item!r}")
        dict_in[key.strip()] = value

    pipeline_path = str(PACKAGE_DIR / "pipelines" / name)
    click.echo(click.style(f"Running pipeline: {name}", fg="cyan"))

    try:
        context = pipelinerunner.run(pipeline_name=pipeline_path, dict_in=dict_in)
    except Exception as exc:
        logger.error("Pipeline failed: %s", exc)
        click.echo(click.style(f"Pipeline failed: {exc}", fg="red"))
        raise SystemExit(1)

    report = context.get("report") if context is not None else None
    if report is not None and not report["summary"]["all_passed"]:
        click.echo(click.style(f"Pipeline '{name}' finished with failing certificates.", fg="red"))
        raise SystemExit(1)
    click.echo(click.style(f"Pipeline '{name}' completed.", fg="green"))
