"""
Command line interface
"""
import logging
from pathlib import Path
from typing import List, NoReturn, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

import config
from cli.parsers import ParseError, parse_matrix, parse_morphism, read_text
from cli.report import ReportFormat, emit_report, format_check_line
from cli.sources import GENERATOR_PREFIX, format_entry, load_entry
from fusion import FusionError, validate_fusion
from models import CheckReport, CorpusEntry, SourceKind, SuiteResult
from scheme import SchemeError, intersection_numbers, validate
from suites import run_checks
from transform import DimObject, DiscreteKernel, FusionKernel, SchemeKernel, is_regular, khat, wiener_membership

logger = logging.getLogger(__name__)

app = typer.Typer(add_completion=False, help="Exact verifier for the graphic Fourier transform.")


def configure_logging(level: str) -> None:
    """Rich log lines on stderr; stdout carries only reports"""
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.callback()
def main(
    log_level: str = typer.Option(config.LOG_LEVEL, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
):
    configure_logging(log_level)


def _error_result(source: str, error: Exception, seed: Optional[int] = None) -> SuiteResult:
    logger.error(f"{source}: {error}")
    return SuiteResult(
        source=source,
        seed=config.DEFAULT_SEED if seed is None else seed,
        reports=[CheckReport.errored("parse" if isinstance(error, ParseError) else "input", str(error))],
    )


def _finish(results: List[SuiteResult], fmt: ReportFormat = ReportFormat.TEXT) -> NoReturn:
    typer.echo(emit_report(results, fmt), nl=False)
    raise typer.Exit(code=max(result.exit_code for result in results))


def _load(source: str, fmt: ReportFormat = ReportFormat.TEXT, seed: Optional[int] = None) -> CorpusEntry:
    try:
        return load_entry(source)
    except ParseError as e:
        _finish([_error_result(source, e, seed)], fmt)


def _kernel(entry: CorpusEntry) -> DiscreteKernel:
    if entry.kind == SourceKind.SCHEME:
        return SchemeKernel(validate(entry.payload))
    return FusionKernel(validate_fusion(entry.payload))


def _parse_vector(raw: str, size: int) -> DimObject:
    try:
        dims = tuple(int(v) for v in raw.split(","))
    except ValueError:
        raise ParseError(f"vector must be comma-separated integers, got {raw!r}") from None
    if len(dims) != size:
        raise ParseError(f"vector has {len(dims)} entries, the kernel has {size} indices")
    if any(d < 0 for d in dims):
        raise ParseError(f"dimensions must be non-negative, got {raw!r}")
    return DimObject(dims)


@app.command("validate")
def validate_command(source: str = typer.Argument(..., help="File or generator spec")):
    """Validate a scheme or fusion ring."""
    entry = _load(source)
    _finish([run_checks(entry, selection=["validate"])])


@app.command("numbers")
def numbers_command(source: str = typer.Argument(..., help="File or generator spec")):
    """Print the nonzero intersection numbers or fusion multiplicities."""
    entry = _load(source)
    try:
        if entry.kind == SourceKind.SCHEME:
            tensor = intersection_numbers(validate(entry.payload))
            names = [str(s) for s in range(tensor.m)]
        else:
            ring = validate_fusion(entry.payload)
            tensor = ring.tensor
            names = list(ring.names)
    except (SchemeError, FusionError) as e:
        _finish([_error_result(source, e)])
    for s, t, r, value in tensor.nonzero():
        typer.echo(f"N {names[s]} {names[t]} {names[r]} {value}")


@app.command("check")
def check_command(
    source: str = typer.Argument(..., help="File or generator spec"),
    only: Optional[str] = typer.Option(None, "--only", help="Comma-separated check names"),
    seed: int = typer.Option(config.DEFAULT_SEED, "--seed", min=0, help="Seed for randomized checks"),
    fmt: ReportFormat = typer.Option(ReportFormat.TEXT, "--format", help="text or structured"),
):
    """Run the verification suite."""
    entry = _load(source, fmt, seed)
    selection = [name.strip() for name in only.split(",") if name.strip()] if only else None
    _finish([run_checks(entry, selection=selection, seed=seed)], fmt)


@app.command("transform")
def transform_command(
    source: str = typer.Argument(..., help="File or generator spec"),
    vector: str = typer.Option(..., "--vector", help="Comma-separated dimensions, one per class or object"),
):
    """Print the dimension grid of the transform of a dimension vector."""
    entry = _load(source)
    try:
        kernel = _kernel(entry)
        image = khat(kernel, _parse_vector(vector, kernel.source_size))
    except ValueError as e:
        _finish([_error_result(source, e)])
    for row in image.tolist():
        typer.echo(" ".join(str(v) for v in row))


@app.command("regular")
def regular_command(
    source: str = typer.Argument(..., help="File or generator spec"),
    morphism: Path = typer.Option(..., "--morphism", help="morphism v1 file"),
    source_vector: Optional[str] = typer.Option(None, "--source-vector", help="f; all ones by default"),
    target_vector: Optional[str] = typer.Option(None, "--target-vector", help="g; all ones by default"),
):
    """Check whether a morphism K^(f) -> K^(g) is regular."""
    entry = _load(source)
    try:
        kernel = _kernel(entry)
        ones = ",".join("1" for _ in range(kernel.source_size))
        f = _parse_vector(source_vector or ones, kernel.source_size)
        g = _parse_vector(target_vector or ones, kernel.source_size)
        alpha = parse_morphism(read_text(morphism), khat(kernel, f), khat(kernel, g))
        report = is_regular(kernel, f, g, alpha)
    except ValueError as e:
        _finish([_error_result(source, e)])
    typer.echo(format_check_line(report))
    raise typer.Exit(code=0 if report.ok else 1)


@app.command("wiener")
def wiener_command(
    source: str = typer.Argument(..., help="File or generator spec"),
    matrix: Path = typer.Option(..., "--matrix", help="matrix v1 file"),
):
    """Decide whether a dimension grid lies in the image of the transform."""
    entry = _load(source)
    try:
        kernel = _kernel(entry)
        result = wiener_membership(kernel, parse_matrix(read_text(matrix)))
    except ValueError as e:
        _finish([_error_result(source, e)])
    if not result.in_image:
        report = CheckReport.failed("wiener", result.witness or {"reason": "not in image"})
        typer.echo(format_check_line(report))
        raise typer.Exit(code=1)
    for member in result.members:
        typer.echo(f"f = {member}")


@app.command("gen")
def gen_command(
    spec: str = typer.Argument(..., help="Generator spec, e.g. gen:hamming:3,2"),
    output: Path = typer.Option(..., "-o", "--output", help="File to write"),
):
    """Write a generated scheme or fusion ring in its text format."""
    entry = _load(spec if spec.startswith(GENERATOR_PREFIX) else GENERATOR_PREFIX + spec)
    output.write_text(format_entry(entry))
    logger.info(f"wrote {spec} to {output}")
