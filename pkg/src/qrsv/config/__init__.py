from qrsv.config.loader import (
    discover_config_path,
    load_config,
    parse_order,
    resolve_check_orders,
    resolve_eval_order,
    resolve_format,
    resolve_jobs,
)
from qrsv.config.types import DefaultsConfig, OutputFormat, QrsvConfig

__all__ = [
    "DefaultsConfig",
    "OutputFormat",
    "QrsvConfig",
    "discover_config_path",
    "load_config",
    "parse_order",
    "resolve_check_orders",
    "resolve_eval_order",
    "resolve_format",
    "resolve_jobs",
]
