"""Run configuration shared by the CLI subcommands."""

from __future__ import annotations

from dataclasses import dataclass

from .galois import FIELD_SIZE_CAP
from .hexagons import TABLE_ORDER_CAP
from .lottery import CENSUS_HEX_CAP
from .pastures import ORACLE_ORDER_CAP

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class Caps:
    oracle_order: int = ORACLE_ORDER_CAP
    table_order: int = TABLE_ORDER_CAP
    census_hexagons: int = CENSUS_HEX_CAP
    field_q: int = FIELD_SIZE_CAP
    fetvins_m: int = 2

    def __post_init__(self):
        for name in ("oracle_order", "table_order", "census_hexagons",
                     "field_q", "fetvins_m"):
            if getattr(self, name) < 1:
                raise ValueError(f"cap {name} must be positive")


@dataclass(frozen=True)
class Config:
    caps: Caps = Caps()
    seed: int = 42
    threads: int | None = None
    format: str = "text"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        if self.threads is not None and self.threads < 1:
            raise ValueError("thread count must be at least 1")
