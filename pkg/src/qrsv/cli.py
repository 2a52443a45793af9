from __future__ import annotations

import json
import logging
from collections.abc import Mapping, Sequence
from enum import Enum
from fractions import Fraction
from importlib.metadata import version
from pathlib import Path
from typing import Any, NoReturn

import click
import typer
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from qrsv.checks import (
    CheckReport,
    CheckStatus,
    UnknownCheck,
    check_ids,
    get_check,
    list_checks,
    run_all,
)
from qrsv.config import (
    OutputFormat,
    QrsvConfig,
    discover_config_path,
    load_config,
    parse_order,
    resolve_check_orders,
    resolve_eval_order,
    resolve_format,
    resolve_jobs,
)
from qrsv.diag.cli_diagnostics import (
    config_load_error,
    engine_error,
    invalid_option,
    invalid_order,
    output_write_error,
    unknown_check,
)
from qrsv.diag.diagnostic import Diagnostic
from qrsv.diag.reporter import DiagnosticReporter
from qrsv.diag.source import SourceText
from qrsv.eval import EvaluationFailure, Evaluator
from qrsv.parse import ParseFailure, parse_expr, parse_nahm_spec
from qrsv.series.core import QSeries
from qrsv.series.dump import dump_series, format_exponent
from qrsv.series.errors import QSeriesError
from qrsv.series.nahm import nahm_sum

app = typer.Typer(
    help="Exact q-series engine and identity checker",
    no_args_is_help=False,
    context_settings={"help_option_names": ["-h", "--help"]},
)

LOGGER = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2


class LogLevel(str, Enum):
    debug = "debug"
    info = "info"
    warning = "warning"
    error = "error"


@app.callback(invoke_without_command=True)
def root_callback(ctx: typer.Context) -> None:
    if ctx.invoked_subcommand is not None:
        return

    console = Console()
    try:
        qrsv_version = version("qrsv")
    except Exception:
        qrsv_version = "unknown"

    console.print(
        Panel(
            (
                f"[bold cyan]Welcome to qrsv v{qrsv_version}[/bold cyan]\n\n"
                "[white]Exact truncated q-series: evaluate expressions, compute partial "
                "Nahm sums and verify the catalogued identities coefficient by coefficient.[/white]"
            ),
            title="[bold green]qrsv CLI[/bold green]",
            border_style="bright_blue",
            expand=False,
        )
    )

    quickstart = Table(
        title="Quick Start", show_header=True, header_style="bold magenta", expand=True
    )
    quickstart.add_column("Workflow", style="bold yellow", ratio=1)
    quickstart.add_column("Command", style="green", ratio=2)
    quickstart.add_row("List identities", "qrsv list")
    quickstart.add_row("Verify one identity", "qrsv check conj1 --order 100")
    quickstart.add_row("Verify everything", "qrsv check-all --jobs 4 --format json")
    quickstart.add_row("Evaluate an expression", 'qrsv eval "Jm(1)*J(2,5)" --order 20')
    quickstart.add_row("Partial Nahm sum", 'qrsv nahm --spec "A=[[2]] B=[0]" --order 30')
    console.print(quickstart)
    console.print("[dim]Use `qrsv --help` for full command documentation.[/dim]")


def _configure_logging(level: LogLevel, *, log_file: Path | None = None) -> None:
    resolved_level = getattr(logging, level.value.upper())

    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    root.setLevel(resolved_level)
    formatter = logging.Formatter("%(asctime)s | %(levelname)s | %(name)s | %(message)s")

    stream_handler = logging.StreamHandler()
    stream_handler.setLevel(resolved_level)
    stream_handler.setFormatter(formatter)
    root.addHandler(stream_handler)

    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(resolved_level)
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)


def _print_diags(
    console: Console, source: SourceText | None, diagnostics: list[Diagnostic]
) -> None:
    if diagnostics:
        DiagnosticReporter(console=console).print(source, diagnostics)


def _fail(
    console: Console, diagnostic: Diagnostic, source: SourceText | None = None
) -> NoReturn:
    _print_diags(console, source, [diagnostic])
    raise typer.Exit(code=EXIT_USAGE)


def _load(console: Console, config: Path | None) -> QrsvConfig:
    path = discover_config_path(explicit_config=config)
    if path is None:
        return QrsvConfig()
    LOGGER.info("Using config file: %s", path)
    try:
        return load_config(path)
    except (OSError, ValueError) as exc:
        _fail(console, config_load_error(path, exc))


def _cli_order(console: Console, raw: str | None) -> Fraction | None:
    if raw is None:
        return None
    try:
        return parse_order(raw, path="--order")
    except ValueError as exc:
        _fail(console, invalid_order(raw, str(exc)))


def _emit(console: Console, payload: str, output: Path | None) -> None:
    if output is None:
        typer.echo(payload, nl=not payload.endswith("\n"))
        return
    try:
        output.write_text(payload if payload.endswith("\n") else payload + "\n", encoding="utf-8")
    except OSError as exc:
        _fail(console, output_write_error(output, exc))
    LOGGER.info("Output written to %s", output)


def _series_payload(
    series: QSeries,
    fmt: OutputFormat,
    header: Mapping[str, str] | None = None,
    **fields: str,
) -> str:
    if fmt is OutputFormat.json:
        body: dict[str, Any] = {**fields, **(header or {})}
        body["terms"] = [[format_exponent(e), c] for e, c in series.terms()]
        body["valid_through"] = format_exponent(series.valid_through)
        return json.dumps(body, indent=2)
    return dump_series(series, header)


def _report_detail(report: CheckReport) -> str:
    if report.mismatch is not None:
        where = f" in `{report.label}`" if report.label else ""
        return (
            f"first mismatch{where} at q^{format_exponent(report.mismatch.exponent)}: "
            f"lhs {report.mismatch.lhs}, rhs {report.mismatch.rhs}"
        )
    return report.message or ""


def _report_text(reports: list[CheckReport]) -> str:
    lines = []
    for report in reports:
        window = "-" if report.window is None else format_exponent(report.window)
        line = (
            f"{report.status.value.upper():5} {report.id} order={format_exponent(report.order)}"
            f" window={window} ({report.millis:.1f} ms)"
        )
        detail = _report_detail(report)
        lines.append(f"{line} {detail}" if detail else line)
    passed = sum(1 for report in reports if report.passed)
    lines.append(f"{passed}/{len(reports)} check(s) passed")
    return "\n".join(lines) + "\n"


def _report_table(reports: list[CheckReport]) -> Table:
    styles = {CheckStatus.PASS: "green", CheckStatus.FAIL: "red", CheckStatus.ERROR: "yellow"}
    table = Table(title="Identity checks")
    table.add_column("ID")
    table.add_column("Status")
    table.add_column("Order")
    table.add_column("Window")
    table.add_column("ms", justify="right")
    table.add_column("Detail")
    for report in reports:
        style = styles[report.status]
        table.add_row(
            report.id,
            f"[{style}]{report.status.value}[/{style}]",
            format_exponent(report.order),
            "-" if report.window is None else format_exponent(report.window),
            f"{report.millis:.1f}",
            escape(_report_detail(report)),
        )
    return table


def _finish_reports(
    console: Console,
    reports: list[CheckReport],
    fmt: OutputFormat,
    output: Path | None,
) -> None:
    if fmt is OutputFormat.json:
        _emit(console, json.dumps([report.to_dict() for report in reports], indent=2), output)
    elif output is not None:
        _emit(console, _report_text(reports), output)
    else:
        console.print(_report_table(reports))
        passed = sum(1 for report in reports if report.passed)
        console.print(f"{passed}/{len(reports)} check(s) passed")
    if any(report.status is CheckStatus.ERROR for report in reports):
        raise typer.Exit(code=EXIT_USAGE)
    if not all(report.passed for report in reports):
        raise typer.Exit(code=EXIT_FAILED)


_ORDER_HELP = "Compare or expand below q^ORDER; an integer or `p/r`."


@app.command("list", help="List the catalogued identity checks.")
def list_cmd(
    config: Path | None = typer.Option(None, "--config", "-c", help="Path to qrsv.toml."),
    output_format: OutputFormat | None = typer.Option(
        None, "--format", "-f", help="Output format: text or json."
    ),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write output to a file."),
    no_color: bool = typer.Option(False, "--no-color", "-n", help="Disable ANSI color output."),
    log_level: LogLevel = typer.Option(
        LogLevel.warning, "--log-level", "-l", help="Set CLI log verbosity."
    ),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also log to this file."),
) -> None:
    console = Console(no_color=no_color)
    err_console = Console(stderr=True, no_color=no_color)
    _configure_logging(log_level, log_file=log_file)
    cfg = _load(err_console, config)
    fmt = resolve_format(config=cfg, cli_format=output_format)

    rows = [
        (check_id, description, anchor, get_check(check_id).default_order)
        for check_id, description, anchor in list_checks()
    ]
    if fmt is OutputFormat.json:
        payload = [
            {
                "id": check_id,
                "description": description,
                "anchor": anchor,
                "default_order": format_exponent(order),
            }
            for check_id, description, anchor, order in rows
        ]
        _emit(err_console, json.dumps(payload, indent=2), output)
        return
    if output is not None:
        text = "\n".join(
            f"{check_id}\t{format_exponent(order)}\t{anchor}\t{description}"
            for check_id, description, anchor, order in rows
        )
        _emit(err_console, text, output)
        return

    table = Table(title="Identity catalogue")
    table.add_column("ID", style="bold")
    table.add_column("Anchor")
    table.add_column("Order", justify="right")
    table.add_column("Description")
    for check_id, description, anchor, order in rows:
        table.add_row(check_id, escape(anchor), format_exponent(order), escape(description))
    console.print(table)


@app.command("check", help="Verify one catalogued identity.")
def check_cmd(
    check_id: str = typer.Argument(..., help="Identity id, see `qrsv list`."),
    order: str | None = typer.Option(None, "--order", help=_ORDER_HELP),
    config: Path | None = typer.Option(None, "--config", "-c", help="Path to qrsv.toml."),
    output_format: OutputFormat | None = typer.Option(
        None, "--format", "-f", help="Output format: text or json."
    ),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write output to a file."),
    no_color: bool = typer.Option(False, "--no-color", "-n", help="Disable ANSI color output."),
    log_level: LogLevel = typer.Option(
        LogLevel.warning, "--log-level", "-l", help="Set CLI log verbosity."
    ),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also log to this file."),
) -> None:
    console = Console(no_color=no_color)
    err_console = Console(stderr=True, no_color=no_color)
    _configure_logging(log_level, log_file=log_file)
    cfg = _load(err_console, config)
    fmt = resolve_format(config=cfg, cli_format=output_format)
    cli_order = _cli_order(err_console, order)
    try:
        global_order, overrides = resolve_check_orders(config=cfg, cli_order=cli_order)
    except ValueError as exc:
        _fail(err_console, invalid_option(str(exc)))
    try:
        reports = run_all(order=global_order, overrides=overrides, only=[check_id])
    except UnknownCheck as exc:
        _fail(err_console, unknown_check(exc.check_id, check_ids()))
    _finish_reports(console, reports, fmt, output)


@app.command("check-all", help="Verify every catalogued identity.")
def check_all_cmd(
    only: list[str] = typer.Option(
        [], "--only", help="Restrict to this identity id; repeatable."
    ),
    jobs: int | None = typer.Option(
        None, "--jobs", "-j", min=1, help="Worker processes for the run."
    ),
    order: str | None = typer.Option(None, "--order", help=_ORDER_HELP),
    config: Path | None = typer.Option(None, "--config", "-c", help="Path to qrsv.toml."),
    output_format: OutputFormat | None = typer.Option(
        None, "--format", "-f", help="Output format: text or json."
    ),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write output to a file."),
    no_color: bool = typer.Option(False, "--no-color", "-n", help="Disable ANSI color output."),
    log_level: LogLevel = typer.Option(
        LogLevel.warning, "--log-level", "-l", help="Set CLI log verbosity."
    ),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also log to this file."),
) -> None:
    console = Console(no_color=no_color)
    err_console = Console(stderr=True, no_color=no_color)
    _configure_logging(log_level, log_file=log_file)
    cfg = _load(err_console, config)
    fmt = resolve_format(config=cfg, cli_format=output_format)
    cli_order = _cli_order(err_console, order)
    try:
        global_order, overrides = resolve_check_orders(config=cfg, cli_order=cli_order)
    except ValueError as exc:
        _fail(err_console, invalid_option(str(exc)))
    try:
        reports = run_all(
            order=global_order,
            overrides=overrides,
            only=only or None,
            jobs=resolve_jobs(config=cfg, cli_jobs=jobs),
        )
    except UnknownCheck as exc:
        _fail(err_console, unknown_check(exc.check_id, check_ids()))
    _finish_reports(console, reports, fmt, output)


@app.command("eval", help="Evaluate an expression and print its series dump.")
def eval_cmd(
    expr: str = typer.Argument(..., help='Expression, e.g. "poch(q; 1; inf)".'),
    order: str | None = typer.Option(None, "--order", help=_ORDER_HELP),
    config: Path | None = typer.Option(None, "--config", "-c", help="Path to qrsv.toml."),
    output_format: OutputFormat | None = typer.Option(
        None, "--format", "-f", help="Output format: text or json."
    ),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write output to a file."),
    no_color: bool = typer.Option(False, "--no-color", "-n", help="Disable ANSI color output."),
    log_level: LogLevel = typer.Option(
        LogLevel.warning, "--log-level", "-l", help="Set CLI log verbosity."
    ),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also log to this file."),
) -> None:
    err_console = Console(stderr=True, no_color=no_color)
    _configure_logging(log_level, log_file=log_file)
    cfg = _load(err_console, config)
    fmt = resolve_format(config=cfg, cli_format=output_format)
    cli_order = _cli_order(err_console, order)
    try:
        target = resolve_eval_order(config=cfg, cli_order=cli_order)
    except ValueError as exc:
        _fail(err_console, invalid_option(str(exc)))

    source = SourceText(expr, "<expr>")
    try:
        series = Evaluator().evaluate(parse_expr(expr, "<expr>"), target)
    except (ParseFailure, EvaluationFailure) as exc:
        _fail(err_console, exc.diagnostic, source)
    payload = _series_payload(series, fmt, expr=expr, order=format_exponent(target))
    _emit(err_console, payload, output)


@app.command("nahm", help="Expand a partial Nahm sum and print its series dump.")
def nahm_cmd(
    spec: str = typer.Option(
        ..., "--spec", "-s", help='Nahm data, e.g. "A=[[2]] B=[0]" or with v=[..] L=[[..]].'
    ),
    order: str | None = typer.Option(None, "--order", help=_ORDER_HELP),
    config: Path | None = typer.Option(None, "--config", "-c", help="Path to qrsv.toml."),
    output_format: OutputFormat | None = typer.Option(
        None, "--format", "-f", help="Output format: text or json."
    ),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write output to a file."),
    no_color: bool = typer.Option(False, "--no-color", "-n", help="Disable ANSI color output."),
    log_level: LogLevel = typer.Option(
        LogLevel.warning, "--log-level", "-l", help="Set CLI log verbosity."
    ),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also log to this file."),
) -> None:
    err_console = Console(stderr=True, no_color=no_color)
    _configure_logging(log_level, log_file=log_file)
    cfg = _load(err_console, config)
    fmt = resolve_format(config=cfg, cli_format=output_format)
    cli_order = _cli_order(err_console, order)
    try:
        target = resolve_eval_order(config=cfg, cli_order=cli_order)
    except ValueError as exc:
        _fail(err_console, invalid_option(str(exc)))

    try:
        nahm = parse_nahm_spec(spec, "<spec>")
    except ParseFailure as exc:
        _fail(err_console, exc.diagnostic, SourceText(spec, "<spec>"))
    try:
        series = nahm_sum(nahm, target)
    except (QSeriesError, ValueError) as exc:
        _fail(err_console, engine_error(exc, "<spec>"))
    payload = _series_payload(
        series, fmt, {"C": format_exponent(nahm.C)}, spec=spec, order=format_exponent(target)
    )
    _emit(err_console, payload, output)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting the interpreter."""
    try:
        result = app(
            args=None if argv is None else list(argv), prog_name="qrsv", standalone_mode=False
        )
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return EXIT_FAILED
    return result if isinstance(result, int) else 0
