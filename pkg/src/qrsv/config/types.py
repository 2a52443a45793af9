from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


@dataclass(frozen=True, slots=True)
class DefaultsConfig:
    order: Fraction | None = None
    output_format: OutputFormat | None = None
    jobs: int | None = None


@dataclass(frozen=True, slots=True)
class QrsvConfig:
    schema_version: str = "1"
    defaults: DefaultsConfig = field(default_factory=DefaultsConfig)
    orders: dict[str, Fraction] = field(default_factory=dict)
