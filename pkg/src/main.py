"""Command-line entry point: compute invariants, run verification suites, print genus tables."""
import sys
from typing import Optional

import click
from loguru import logger
from pydantic import ValidationError
from rich.console import Console

from src.config.constants import (
    EXIT_OK,
    EXIT_UNSUPPORTED,
    EXIT_VERIFICATION_FAILED,
    FORMAT_CHOICES,
    GROUP_CHOICES,
    INVARIANT_CHOICES,
    MIN_GENUS,
    SIDE_CHOICES,
    SUITE_CHOICES,
    TABLE_CHOICES,
)
from src.config.settings import Settings
from src.exceptions.custom import (
    CharVarError,
    ConfigurationError,
    UnsupportedCombinationError,
    UnsupportedGroupError,
    UnsupportedKindError,
)
from src.invariants.betti import euler_char, ie_betti
from src.invariants.models import SIDE_DEPENDENT_KINDS, Group, InvariantKind, ModuliSpec, Side
from src.invariants.poincare import ip, p
from src.invariants.registry import compute_invariant
from src.output.formatter import format_result, format_table
from src.utils.helpers import parse_genus_range
from src.utils.logger import setup_logging
from src.verify.golden import load_golden_tables
from src.verify.suites import run_suites

UNSUPPORTED = (UnsupportedCombinationError, UnsupportedKindError, UnsupportedGroupError)


class UnsupportedError(click.ClickException):
    exit_code = EXIT_UNSUPPORTED


class ComputationError(click.ClickException):
    exit_code = EXIT_VERIFICATION_FAILED


def _settings(ctx: click.Context) -> Settings:
    return ctx.obj["settings"]


def _check_genus(settings: Settings, *genera: int) -> None:
    for g in genera:
        if g < MIN_GENUS:
            raise click.UsageError(f"Genus must be at least {MIN_GENUS}, got {g}")
        if g > settings.max_genus:
            raise click.UsageError(f"Genus {g} exceeds the configured maximum {settings.max_genus} (CHARVAR_MAX_GENUS)")


@click.group()
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.pass_context
def cli(ctx: click.Context, debug: bool) -> None:
    """Exact invariants of rank-2 character varieties and Higgs moduli spaces."""
    try:
        settings = Settings()
    except ValidationError as e:
        raise click.UsageError(f"Invalid configuration: {e}") from e
    setup_logging(settings.log_file_path, debug or settings.debug_mode, settings.log_level)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@cli.command()
@click.option("--invariant", "invariant", type=click.Choice(INVARIANT_CHOICES), required=True)
@click.option("--group", type=click.Choice(GROUP_CHOICES), required=True)
@click.option("--side", type=click.Choice(SIDE_CHOICES), default=None, help="Required for ie, e-t and ie-var")
@click.option("--genus", type=int, required=True)
@click.option("--truncate", type=int, default=None, help="Keep terms of total degree at most D")
@click.option("--format", "fmt", type=click.Choice(FORMAT_CHOICES), default="text", show_default=True)
@click.pass_context
def compute(
    ctx: click.Context, invariant: str, group: str, side: Optional[str], genus: int, truncate: Optional[int], fmt: str
) -> None:
    """Compute one invariant and print it."""
    _check_genus(_settings(ctx), genus)
    kind = InvariantKind(invariant)
    if kind in SIDE_DEPENDENT_KINDS and side is None:
        raise click.UsageError(f"--side is required for --invariant {invariant}")
    if truncate is not None and truncate < 0:
        raise click.UsageError("--truncate must be non-negative")

    spec = ModuliSpec(group=Group(group), side=Side(side) if side else None, genus=genus)
    try:
        result = compute_invariant(kind, spec, truncate)
    except UNSUPPORTED as e:
        raise UnsupportedError(str(e)) from e
    except CharVarError as e:
        logger.error(f"Computation failed: {e}")
        raise ComputationError(str(e)) from e
    click.echo(format_result(result, fmt))


@cli.command()
@click.option("--suite", type=click.Choice(SUITE_CHOICES), default="all", show_default=True)
@click.option("--genus-min", type=int, default=MIN_GENUS, show_default=True)
@click.option("--genus-max", type=int, default=5, show_default=True)
@click.pass_context
def verify(ctx: click.Context, suite: str, genus_min: int, genus_max: int) -> None:
    """Recompute identities and printed tables; exit 1 if any check fails."""
    settings = _settings(ctx)
    _check_genus(settings, genus_min, genus_max)
    if genus_min > genus_max:
        raise click.UsageError(f"Empty genus range {genus_min}..{genus_max}")
    try:
        results = run_suites(suite, genus_min, genus_max, settings)
    except ConfigurationError as e:
        raise click.UsageError(str(e)) from e

    for result in results:
        click.echo(result.line())
    failed = [r for r in results if not r.passed]
    console = Console(stderr=True, soft_wrap=True)
    if failed:
        console.print(f"[bold red]{len(failed)} of {len(results)} checks failed[/bold red]")
        ctx.exit(EXIT_VERIFICATION_FAILED)
    console.print(f"[bold green]All {len(results)} checks passed[/bold green]")
    ctx.exit(EXIT_OK)


def _engine_rows(which: str, low: int, high: int, fmt: str) -> list[tuple[int, str]]:
    rows = []
    for g in range(low, high + 1):
        if which == "euler":
            entry = f"sl2={euler_char(Group.SL2, g)}, pgl2={euler_char(Group.PGL2, g)}"
        else:
            if which == "ie-sl2":
                poly = ie_betti(Group.SL2, g).poly
            elif which == "ip-sl2":
                poly = ip(Group.SL2, g).poly
            else:
                poly = ip(Group.SL2, g).poly - p(Group.SL2, g).poly
            entry = poly.to_latex() if fmt == "latex" else poly.to_text()
        rows.append((g, entry))
    return rows


def _printed_rows(which: str, settings: Settings, fmt: str) -> list[tuple[int, str]]:
    golden = load_golden_tables(settings.golden_tables_path)
    if which == "euler":
        sl2, pgl2 = golden.euler["sl2"], golden.euler["pgl2"]
        return [(g, f"sl2={sl2[g]}, pgl2={pgl2[g]}") for g in sorted(sl2)]
    table = golden.table(which)
    rows = []
    for g in table.genera:
        poly = table.row(g)
        entry = poly.to_latex() if fmt == "latex" else poly.to_text()
        if table.truncated_at_middle:
            entry += " + \\cdots" if fmt == "latex" else " + ..."
        rows.append((g, entry))
    return rows


@cli.command()
@click.option("--which", type=click.Choice(TABLE_CHOICES), required=True)
@click.option("--paper", "printed", is_flag=True, help="Print the tables as published")
@click.option("--genus-range", default=None, help="Compute rows for genera A..B")
@click.option("--format", "fmt", type=click.Choice(("text", "latex")), default="text", show_default=True)
@click.pass_context
def table(ctx: click.Context, which: str, printed: bool, genus_range: Optional[str], fmt: str) -> None:
    """Print a genus table, either as published or computed."""
    settings = _settings(ctx)
    if printed == (genus_range is not None):
        raise click.UsageError("Give exactly one of --paper or --genus-range")

    try:
        if printed:
            rows = _printed_rows(which, settings, fmt)
        else:
            assert genus_range is not None
            try:
                low, high = parse_genus_range(genus_range)
            except ValueError as e:
                raise click.UsageError(str(e)) from e
            _check_genus(settings, low, high)
            rows = _engine_rows(which, low, high, fmt)
    except ConfigurationError as e:
        raise click.UsageError(str(e)) from e
    except CharVarError as e:
        logger.error(f"Table computation failed: {e}")
        raise ComputationError(str(e)) from e
    click.echo(format_table(which, rows, fmt))


def main() -> None:
    """Console script entry point."""
    try:
        cli(obj={})
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        sys.exit(130)


if __name__ == "__main__":
    main()
