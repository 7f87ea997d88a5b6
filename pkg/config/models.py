"""
Configuration models for enumeration guards and CLI runs
"""

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from config.settings import Settings, settings


@dataclass(frozen=True)
class EnumerationBounds:
    """Guards for every exhaustive enumeration in the library"""
    max_d: int = 10
    max_perms: int = 3628800
    max_colorings: int = 10 ** 8
    max_orientation_edges: int = 25
    max_monomial_d: int = 8
    max_monomial_n: int = 8
    max_complex_d: int = 8
    max_iso_vertices: int = 64

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise ValueError(f"bound {name} must be positive, got {value}")

    @classmethod
    def from_settings(cls, source: Optional[Settings] = None) -> "EnumerationBounds":
        source = source or settings
        return cls(
            max_d=source.max_d,
            max_perms=source.max_perms,
            max_colorings=source.max_colorings,
            max_orientation_edges=source.max_orientation_edges,
            max_monomial_d=source.max_monomial_d,
            max_monomial_n=source.max_monomial_n,
            max_complex_d=source.max_complex_d,
            max_iso_vertices=source.max_iso_vertices,
        )

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


_default_bounds: Optional[EnumerationBounds] = None


def default_bounds() -> EnumerationBounds:
    """Bounds derived from the environment-backed settings, built once"""
    global _default_bounds
    if _default_bounds is None:
        _default_bounds = EnumerationBounds.from_settings()
    return _default_bounds


@dataclass
class VerifyConfig:
    """Parameters of the self-verification sweep"""
    exhaustive_d: int = 5
    sample_d: List[int] = field(default_factory=lambda: [5, 6])
    sample_count: int = 200
    seed: int = 2024
    hilbert_max_n: int = 4
    hilbert_max_d: int = 5
    label_pairs: int = 50
    fault: Optional[str] = None

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "VerifyConfig":
        base = cls()
        return cls(
            exhaustive_d=config.get("exhaustive_d", base.exhaustive_d),
            sample_d=list(config.get("sample_d", base.sample_d)),
            sample_count=config.get("sample_count", base.sample_count),
            seed=config.get("seed", base.seed),
            hilbert_max_n=config.get("hilbert_max_n", base.hilbert_max_n),
            hilbert_max_d=config.get("hilbert_max_d", base.hilbert_max_d),
            label_pairs=config.get("label_pairs", base.label_pairs),
            fault=config.get("fault"),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class RunConfig:
    """Everything a CLI invocation needs besides the subcommand itself"""
    input_paths: List[str] = field(default_factory=list)
    output_format: str = "text"
    bounds: EnumerationBounds = field(default_factory=default_bounds)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    verbosity: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format: {self.output_format}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")

    @property
    def seed(self) -> int:
        return self.verify.seed

    @classmethod
    def from_dict(cls, config: Dict[str, Any], bounds: Optional[EnumerationBounds] = None) -> "RunConfig":
        output = config.get("output", {}) or {}
        return cls(
            input_paths=list(config.get("input_paths", [])),
            output_format=output.get("format", "text"),
            bounds=bounds or default_bounds(),
            verify=VerifyConfig.from_dict(config.get("verify", {}) or {}),
            verbosity=config.get("verbosity", 0),
            workers=config.get("workers", settings.workers),
        )

    @classmethod
    def from_yaml(cls, path: Optional[str] = None) -> "RunConfig":
        """Load the YAML defaults; a missing default file yields plain defaults"""
        config_path = Path(path or settings.config_path)
        if not config_path.is_absolute() and not config_path.exists():
            config_path = Path(__file__).resolve().parent.parent / config_path
        if not config_path.exists():
            if path is not None:
                raise FileNotFoundError(f"config file not found: {config_path}")
            return cls.from_dict({"verify": {"seed": settings.seed}})
        with open(config_path, "r") as f:
            data = yaml.safe_load(f) or {}
        return cls.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "input_paths": self.input_paths,
            "output_format": self.output_format,
            "bounds": self.bounds.to_dict(),
            "verify": self.verify.to_dict(),
            "verbosity": self.verbosity,
            "workers": self.workers,
        }
