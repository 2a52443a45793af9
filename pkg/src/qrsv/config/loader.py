from __future__ import annotations

import os
import tomllib
from collections.abc import Mapping
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import TypeVar, cast

from qrsv.config.types import DefaultsConfig, OutputFormat, QrsvConfig

E = TypeVar("E", bound=Enum)

DEFAULT_CONFIG_NAME = "qrsv.toml"
ORDER_ENV = "QRSV_ORDER"
FALLBACK_ORDER = Fraction(60)


def discover_config_path(*, explicit_config: Path | None, cwd: Path | None = None) -> Path | None:
    """``--config`` wins; otherwise ``qrsv.toml`` in the working directory if present."""
    if explicit_config is not None:
        return explicit_config
    candidate = (cwd or Path.cwd()) / DEFAULT_CONFIG_NAME
    return candidate if candidate.is_file() else None


def load_config(path: str | Path) -> QrsvConfig:
    config_path = Path(path)
    with config_path.open("rb") as f:
        payload = tomllib.load(f)

    if not isinstance(payload, Mapping):
        raise ValueError("config payload must be a TOML table/object")

    root = cast(Mapping[str, object], payload)
    schema_version = _require_str(root, "schema_version")
    if schema_version != "1":
        raise ValueError('`schema_version` must be "1"')

    unknown = sorted(set(root) - {"schema_version", "defaults", "orders"})
    if unknown:
        raise ValueError(f"unknown top-level config keys: {', '.join(unknown)}")

    return QrsvConfig(
        schema_version=schema_version,
        defaults=_parse_defaults(root.get("defaults", {}), path="defaults"),
        orders=_parse_orders(root.get("orders", {}), path="orders"),
    )


def parse_order(raw: object, *, path: str) -> Fraction:
    """A positive rational written as an integer or a ``"p/r"`` string."""
    if isinstance(raw, bool):
        raise ValueError(f"`{path}` must be a positive rational")
    if isinstance(raw, int):
        value = Fraction(raw)
    elif isinstance(raw, str):
        try:
            value = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"`{path}` must be a positive rational") from exc
    else:
        raise ValueError(f"`{path}` must be a positive rational")
    if value <= 0:
        raise ValueError(f"`{path}` must be a positive rational")
    return value


def resolve_eval_order(
    *,
    config: QrsvConfig,
    cli_order: Fraction | None,
    environ: Mapping[str, str] | None = None,
) -> Fraction:
    if cli_order is not None:
        return cli_order
    env_order = _env_order(environ)
    if env_order is not None:
        return env_order
    if config.defaults.order is not None:
        return config.defaults.order
    return FALLBACK_ORDER


def resolve_check_orders(
    *,
    config: QrsvConfig,
    cli_order: Fraction | None,
    environ: Mapping[str, str] | None = None,
) -> tuple[Fraction | None, dict[str, Fraction]]:
    """Global order applied to every check (if any) plus per-check overrides.

    The global order comes from ``--order`` and overrides everything. Without it,
    ``[orders]`` entries come first and ``QRSV_ORDER`` fills in the rest; a
    ``None`` global leaves remaining checks at their catalogue defaults.
    """
    if cli_order is not None:
        return cli_order, {}
    return _env_order(environ), dict(config.orders)


def resolve_format(*, config: QrsvConfig, cli_format: OutputFormat | None) -> OutputFormat:
    if cli_format is not None:
        return cli_format
    if config.defaults.output_format is not None:
        return config.defaults.output_format
    return OutputFormat.text


def resolve_jobs(*, config: QrsvConfig, cli_jobs: int | None) -> int:
    if cli_jobs is not None:
        return cli_jobs
    if config.defaults.jobs is not None:
        return config.defaults.jobs
    return 1


def _env_order(environ: Mapping[str, str] | None) -> Fraction | None:
    env = os.environ if environ is None else environ
    raw = env.get(ORDER_ENV)
    if raw is None or not raw.strip():
        return None
    return parse_order(raw, path=ORDER_ENV)


def _parse_defaults(raw: object, *, path: str) -> DefaultsConfig:
    table = _require_table(raw, path=path)
    unknown = sorted(set(table) - {"order", "format", "jobs"})
    if unknown:
        raise ValueError(f"`{path}` has unknown keys: {', '.join(unknown)}")
    order = table.get("order")
    output_format = table.get("format")
    jobs = table.get("jobs")
    return DefaultsConfig(
        order=None if order is None else parse_order(order, path=f"{path}.order"),
        output_format=(
            None
            if output_format is None
            else _parse_enum(output_format, enum_cls=OutputFormat, path=f"{path}.format")
        ),
        jobs=None if jobs is None else _parse_positive_int(jobs, path=f"{path}.jobs"),
    )


def _parse_orders(raw: object, *, path: str) -> dict[str, Fraction]:
    table = _require_table(raw, path=path)
    orders: dict[str, Fraction] = {}
    for key, value in table.items():
        if not key.strip():
            raise ValueError(f"`{path}` keys must be non-empty strings")
        orders[key] = parse_order(value, path=f"{path}.{key}")
    return orders


def _require_table(raw: object, *, path: str) -> Mapping[str, object]:
    if not isinstance(raw, Mapping):
        raise ValueError(f"`{path}` must be a TOML table/object")
    return cast(Mapping[str, object], raw)


def _require_str(table: Mapping[str, object], key: str) -> str:
    raw = table.get(key)
    if not isinstance(raw, str) or not raw.strip():
        raise ValueError(f"`{key}` must be a non-empty string")
    return raw.strip()


def _parse_positive_int(raw: object, *, path: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int) or raw <= 0:
        raise ValueError(f"`{path}` must be a positive integer")
    return raw


def _parse_enum(raw: object, *, enum_cls: type[E], path: str) -> E:
    if not isinstance(raw, str):
        raise ValueError(f"`{path}` must be a string")
    try:
        return enum_cls(raw)
    except ValueError as exc:
        allowed = ", ".join(member.value for member in enum_cls)
        raise ValueError(f"`{path}` must be one of: {allowed}") from exc
