from __future__ import annotations

from pathlib import Path

from qrsv.diag.diagnostic import Diagnostic, DiagnosticCode
from qrsv.diag.source import Span


def _cli_span(origin: Path | str | None = None) -> Span:
    filename = "<cli>" if origin is None else str(origin)
    return Span(
        start_offset=0,
        end_offset=1,
        line=1,
        col=1,
        end_line=1,
        end_col=2,
        filename=filename,
    )


def unknown_check(check_id: str, known: list[str]) -> Diagnostic:
    close = [k for k in known if k.startswith(check_id[:2])][:6]
    return Diagnostic(
        code=DiagnosticCode.UNKNOWN_CHECK,
        message=f"unknown check id: {check_id}",
        span=_cli_span(),
        notes=[f"similar ids: {', '.join(close)}"] if close else [],
        help=["Run `qrsv list` to see every catalogued identity."],
    )


def invalid_option(message: str) -> Diagnostic:
    return Diagnostic(
        code=DiagnosticCode.INVALID_OPTION,
        message=message,
        span=_cli_span(),
        help=["Use `qrsv <command> --help` to inspect valid options."],
    )


def invalid_order(raw: str, reason: str) -> Diagnostic:
    return Diagnostic(
        code=DiagnosticCode.INVALID_OPTION,
        message=f"invalid order {raw!r}: {reason}",
        span=_cli_span(),
        help=["Orders are positive integers or rationals written `p/r`, e.g. `75` or `151/2`."],
    )


def config_load_error(path: Path, exc: Exception) -> Diagnostic:
    return Diagnostic(
        code=DiagnosticCode.CONFIG_LOAD,
        message=f"failed to load config TOML: {path}",
        span=_cli_span(path),
        notes=[str(exc)],
        help=["Ensure the config is valid TOML with `schema_version = \"1\"`."],
    )


def output_write_error(path: Path, exc: OSError) -> Diagnostic:
    return Diagnostic(
        code=DiagnosticCode.OUTPUT_WRITE,
        message=f"failed to write output: {path}",
        span=_cli_span(path),
        notes=[str(exc)],
        help=["Verify the parent directory exists and is writable."],
    )


def engine_error(exc: Exception, origin: str | None = None) -> Diagnostic:
    return Diagnostic(
        code=DiagnosticCode.EVALUATION,
        message=str(exc),
        span=_cli_span(origin),
        notes=[f"raised as {type(exc).__name__}"],
        help=["Try a smaller `--order`, or check the arguments for poles and zero bases."],
    )
