"""Experiment configuration: strict JSON in, the exact same JSON out.

Unknown keys are rejected so that a typo in a physics parameter fails loudly
instead of silently running the defaults.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

MODES = ("entropy-sweep", "efficiency-sweep", "collapse-check", "clicks")
FORMATS = ("csv", "json")
DEFAULT_SEED = 0xC0FFEE


@dataclass
class ExperimentConfig:
    mode: str
    m: float = 1.0
    xi_list: list[float] = field(default_factory=lambda: [0.05])
    v_list: list[float] = field(default_factory=lambda: [0.0, 0.3, 0.5, 0.8])
    overlap_list: list[float] = field(default_factory=lambda: [0.0, 0.3, 0.7])
    quad_order: int = 24
    samples: int = 1_000_000
    seed: int = DEFAULT_SEED
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")
        if not self.m > 0.0:
            raise ValueError(f"mass must be positive, got {self.m!r}")
        self.xi_list = [float(x) for x in self.xi_list]
        self.v_list = [float(v) for v in self.v_list]
        self.overlap_list = [float(c) for c in self.overlap_list]
        if not self.xi_list or any(x <= 0.0 for x in self.xi_list):
            raise ValueError(f"xi_list entries must be positive, got {self.xi_list!r}")
        if not self.v_list or any(abs(v) >= 1.0 for v in self.v_list):
            raise ValueError(f"v_list entries must lie in (-1, 1), got {self.v_list!r}")
        if any(abs(c) > 1.0 for c in self.overlap_list):
            raise ValueError(f"overlap magnitudes must not exceed 1, got {self.overlap_list!r}")
        if self.quad_order < 8:
            raise ValueError(f"quad_order must be at least 8, got {self.quad_order!r}")
        if self.samples < 1:
            raise ValueError(f"samples must be at least 1, got {self.samples!r}")
        self.quad_order = int(self.quad_order)
        self.samples = int(self.samples)
        self.seed = int(self.seed)


def config_from_dict(data: dict) -> ExperimentConfig:
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    if "mode" not in data:
        raise ValueError("config requires a 'mode' key")
    return ExperimentConfig(**data)


def config_to_dict(cfg: ExperimentConfig) -> dict:
    return asdict(cfg)


def emit_config(cfg: ExperimentConfig) -> str:
    return json.dumps(config_to_dict(cfg), indent=2)


def parse_config(text: str) -> ExperimentConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("config must be a JSON object")
    return config_from_dict(data)


def load_config(path: str | Path) -> ExperimentConfig:
    return parse_config(Path(path).read_text())
