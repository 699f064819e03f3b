from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .chain import DEFAULT_MAX_STAGE, AutomorphismSpec
from .explog import DEFAULT_TAYLOR_ORDER, LogContext
from .rank import DEFAULT_N_MAX
from .scalar import DEFAULT_PRECISION, make_backend


@dataclass(frozen=True)
class Config:
    taylor_order: int = DEFAULT_TAYLOR_ORDER
    max_stage: int = DEFAULT_MAX_STAGE
    beta: int = 6
    S: frozenset = field(default_factory=frozenset)
    scalar: str = "rational"
    precision: int = DEFAULT_PRECISION
    seed: int = 0
    samples: int = 200
    n_max: int = DEFAULT_N_MAX
    format: str = "text"
    identity_sigma: bool = False
    n: int = 8

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        if self.taylor_order < 1:
            raise ValueError("taylor order must be at least 1")
        if self.max_stage < 1:
            raise ValueError("max stage must be at least 1")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.format not in ("text", "structured"):
            raise ValueError(f"unknown format {self.format!r}")
        # validates S against beta
        AutomorphismSpec(self.beta, self.S)

    @property
    def backend(self):
        return make_backend(self.scalar, self.precision)

    @property
    def spec(self) -> AutomorphismSpec:
        spec = AutomorphismSpec(self.beta, self.S)
        return spec.identity() if self.identity_sigma else spec

    def log_context(self, **overrides) -> LogContext:
        kw = dict(spec=self.spec, taylor_order=self.taylor_order,
                  max_stage=self.max_stage, backend=self.backend,
                  strict=not self.identity_sigma)
        kw.update(overrides)
        return LogContext(**kw)

    @property
    def sample_stage(self) -> int:
        return min(3, self.max_stage)

    def echo(self) -> dict:
        d = asdict(self)
        d["S"] = sorted(self.S)
        return d
