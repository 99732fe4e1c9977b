"""Linear form bases CLI entrypoint."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from typing_extensions import Annotated

from . import builder, density, gadic, lemma, oracle
from .const import (
    DEFAULT_MAX_RADIUS,
    DEFAULT_WORK_CAP,
    EXIT_CERTIFICATE_VIOLATION,
    EXIT_FALSE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_SEARCH_EXHAUSTED,
)
from .exception import LinearFormBasesError, SearchExhaustedError
from .forms import IntSet, LinearForm, bezout_pair, validate_form, validate_mary_form
from .models import RunConfig, parse_coefficients
from .serialization import (
    construction_to_json,
    load_set,
    parse_target,
    parse_zero_set_argument,
    to_json_text,
)

app = typer.Typer()
err_console = Console(stderr=True)

_LOGGER = logging.getLogger(__name__)

FormOption = Annotated[str, typer.Option(help="Comma separated coefficients, e.g. 2,3.")]
OutputOption = Annotated[
    Optional[Path], typer.Option("--output", "-o", help="Write the payload to a file.")
]


class OutputFormat(str, Enum):
    """Density output formats."""

    json = "json"
    csv = "csv"


def _set_log_level(level: str) -> None:
    """Route library logging to stderr."""
    # default INFO
    numeric_level = logging._nameToLevel.get(level.upper(), 20)
    logging.basicConfig(
        level=numeric_level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@app.callback()
def main(
    verbose: Annotated[bool, typer.Option("--verbose", "-v")] = False,
    log_level: Annotated[str, typer.Option()] = "WARNING",
) -> None:
    """Construct and verify sets with a prescribed representation function."""
    _set_log_level("DEBUG" if verbose else log_level)


@contextmanager
def _input_errors() -> Iterator[None]:
    """Turn library errors into exit status 2."""
    try:
        yield
    except SearchExhaustedError:
        raise
    except (LinearFormBasesError, ValueError) as ex:
        err_console.print(f"[red]error:[/red] {escape(str(ex))}")
        raise typer.Exit(EXIT_INPUT_ERROR)


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        typer.echo(text)
    else:
        output.write_text(text + "\n", encoding="utf-8")
        _LOGGER.info("Wrote %s", output)


def _binary_or_mary(coefficients: tuple[int, ...]) -> oracle.AnyForm:
    if len(coefficients) == 2:
        return validate_form(*coefficients, require_eligible=False)
    return validate_mary_form(coefficients)


def _span(values: IntSet, coefficients: tuple[int, ...]) -> tuple[int, int]:
    half = sum(abs(u) for u in coefficients) * values.max_abs
    return -half, half


@app.command()
def construct(
    form: FormOption,
    target: Annotated[str, typer.Option(help="const:V (V integer or inf) or @spec.json.")] = "const:1",
    window: Annotated[int, typer.Option(min=0, help="Serve targets in [-N, N].")] = 5,
    rounds: Annotated[int, typer.Option(min=1, help="Cap K on multiplicities.")] = 1,
    search_radius: Annotated[int, typer.Option(min=1)] = DEFAULT_MAX_RADIUS,
    explain: Annotated[bool, typer.Option(help="Include admissibility reports.")] = False,
    output: OutputOption = None,
) -> None:
    """Build a set A with R_{A,F} = f on a window and certify it."""
    with _input_errors():
        cfg = RunConfig(
            "construct",
            form=parse_coefficients(form),
            target=target,
            radius=window,
            rounds=rounds,
            search_radius=search_radius,
            output=output,
            explain=explain,
        ).validate()
        linear_form = validate_form(*cfg.form)
        spec = parse_target(target)
        try:
            construction = builder.build(
                linear_form, spec, cfg.radius, cfg.rounds, cfg.search_radius
            )
        except SearchExhaustedError as ex:
            err_console.print(f"[red]search exhausted:[/red] {escape(str(ex))}")
            if ex.construction is not None:
                err_console.print(
                    f"partial construction: {len(ex.construction.chain)} steps, "
                    f"{len(ex.construction.final_set)} elements"
                )
            raise typer.Exit(EXIT_SEARCH_EXHAUSTED)
        certificate = builder.certify(construction)
    _emit(to_json_text(construction_to_json(construction, certificate, cfg.explain)), cfg.output)
    if not certificate.clean:
        err_console.print(f"[red]certificate has {len(certificate.violations)} violations[/red]")
        raise typer.Exit(EXIT_CERTIFICATE_VIOLATION)


@app.command()
def repfn(
    set_file: Annotated[Path, typer.Option("--set", help="Set file, lines or JSON.")],
    form: FormOption,
    lo: Annotated[Optional[int], typer.Option(help="Window start, default: span of F(A).")] = None,
    hi: Annotated[Optional[int], typer.Option(help="Window end, default: span of F(A).")] = None,
    output: OutputOption = None,
) -> None:
    """Tabulate the representation function of a set."""
    with _input_errors():
        cfg = RunConfig("repfn", parse_coefficients(form), output=output).validate()
        values = load_set(set_file)
        the_form = _binary_or_mary(cfg.form)
        span_lo, span_hi = _span(values, cfg.form)
        lo = span_lo if lo is None else lo
        hi = span_hi if hi is None else hi
        if isinstance(the_form, LinearForm):
            table = oracle.rep_table(values, the_form, lo, hi)
        else:
            table = oracle.mary_rep_table(values, the_form, lo, hi)
    _emit(to_json_text(table.to_json()), cfg.output)


@app.command()
def sidon(
    set_file: Annotated[Path, typer.Option("--set", help="Set file, lines or JSON.")],
    form: FormOption,
    g: Annotated[int, typer.Option(min=1, help="Bound on R_{A,F}; 1 tests Sidon.")] = 1,
    lo: Annotated[Optional[int], typer.Option()] = None,
    hi: Annotated[Optional[int], typer.Option()] = None,
    work_cap: Annotated[int, typer.Option(min=1)] = DEFAULT_WORK_CAP,
    output: OutputOption = None,
) -> None:
    """Check the B_F[g] property of a set on a window."""
    with _input_errors():
        cfg = RunConfig("sidon", parse_coefficients(form), output=output).validate()
        values = load_set(set_file)
        the_form = _binary_or_mary(cfg.form)
        span_lo, span_hi = _span(values, cfg.form)
        lo = span_lo if lo is None else lo
        hi = span_hi if hi is None else hi
        verdict = oracle.is_b_f_g(values, the_form, g, lo, hi, work_cap)
    _emit(to_json_text({"g": g, "window": [lo, hi], **verdict.to_json()}), cfg.output)
    if not verdict:
        raise typer.Exit(EXIT_FALSE)


@app.command("gadic")
def gadic_command(
    g: Annotated[int, typer.Option(help="Digit base, >= 2.")],
    m: Annotated[int, typer.Option(help="Number of variables, >= 2.")],
    limit: Annotated[int, typer.Option(min=0)] = 100,
    decode: Annotated[Optional[int], typer.Option(min=0, help="Decode one n.")] = None,
    table: Annotated[bool, typer.Option(help="Decode every n in [0, limit].")] = False,
    output: OutputOption = None,
) -> None:
    """Generate the g-adic Sidon basis and decode representations."""
    with _input_errors():
        cfg = RunConfig("gadic", output=output).validate()
        params = gadic.GadicParams(g, m)
        payload = {
            "g": g,
            "m": m,
            "form": list(gadic.gadic_form(params).coefficients),
            "limit": limit,
            "set": gadic.gadic_set(params, limit).to_list(),
        }
        decoded = {}
        if table:
            decoded.update(gadic.gadic_decode_table(params, 0, limit))
        if decode is not None:
            decoded[decode] = gadic.gadic_decode(params, decode)
        if decoded:
            payload["decode"] = {str(n): list(parts) for n, parts in sorted(decoded.items())}
    _emit(to_json_text(payload), cfg.output)


@app.command("density")
def density_command(
    zero_set: Annotated[str, typer.Option(help="empty, squares, powers:K, finite:a,b or @file.")],
    radius: Annotated[list[int], typer.Option(help="Radius x, repeatable.")] = [10, 100, 1000],
    output_format: Annotated[OutputFormat, typer.Option("--format")] = OutputFormat.json,
    output: OutputOption = None,
) -> None:
    """Profile the counting function of a zero set."""
    with _input_errors():
        cfg = RunConfig("density", output=output).validate()
        profile = density.density_profile(parse_zero_set_argument(zero_set), sorted(set(radius)))
    if output_format is OutputFormat.csv:
        _emit(profile.to_csv().rstrip("\n"), cfg.output)
    else:
        _emit(to_json_text(profile.to_json()), cfg.output)


@app.command("explain-t")
def explain_t(
    form: FormOption,
    b: Annotated[int, typer.Option(help="Target integer.")],
    t: Annotated[Optional[int], typer.Option(help="Candidate t; default: search.")] = None,
    set_file: Annotated[Optional[Path], typer.Option("--set", help="A', default empty.")] = None,
    zero_set: Annotated[str, typer.Option()] = "empty",
    scan: Annotated[Optional[int], typer.Option(min=0, help="Admissible fraction over [-R, R].")] = None,
    search_radius: Annotated[int, typer.Option(min=1)] = DEFAULT_MAX_RADIUS,
    output: OutputOption = None,
) -> None:
    """Explain the admissibility of t for one lemma application."""
    with _input_errors():
        cfg = RunConfig(
            "explain-t", parse_coefficients(form), search_radius=search_radius, output=output
        ).validate()
        linear_form = validate_form(*cfg.form)
        bez = bezout_pair(linear_form)
        base = IntSet() if set_file is None else load_set(set_file)
        forbidden = parse_zero_set_argument(zero_set)
        if scan is not None:
            fraction = lemma.admissible_fraction(base, b, forbidden, linear_form, bez, -scan, scan)
            payload = {
                "window": [-scan, scan],
                "fraction": float(fraction),
                "exact": f"{fraction.numerator}/{fraction.denominator}",
            }
            _emit(to_json_text(payload), cfg.output)
            return
        if t is not None:
            aug = lemma.make_augmentation(base, b, t, linear_form, bez)
            report = lemma.check_admissible(base, b, forbidden, aug, linear_form)
        else:
            try:
                _, aug, report = lemma.find_admissible_t(
                    base, b, forbidden, linear_form, bez, cfg.search_radius
                )
            except SearchExhaustedError as ex:
                err_console.print(f"[red]search exhausted:[/red] {escape(str(ex))}")
                raise typer.Exit(EXIT_SEARCH_EXHAUSTED)
    payload = {"b": b, "pair": list(aug.pair), **report.to_json()}
    _emit(to_json_text(payload), cfg.output)
    raise typer.Exit(EXIT_OK if report.admissible else EXIT_FALSE)


if __name__ == "__main__":
    app()
