"""Configuration models using Pydantic for validation."""

from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from .coloring import ColoringMethod, ConnectionMode


class SizeCap(BaseModel):
    """Limits and parallelism for the exact solvers."""

    max_elements: int = Field(default=16, ge=1)  # colored elements (n+m, or m for pc)
    unrestricted_max_elements: int = Field(default=10, ge=1)
    workers: int = Field(default=1, ge=1)
    prune: bool = True
    symmetry_breaking: bool = True

    @property
    def effective_max_elements(self) -> int:
        """Enumeration without symmetry breaking has the tighter limit."""
        if self.symmetry_breaking:
            return self.max_elements
        return min(self.max_elements, self.unrestricted_max_elements)


class SearchBudget(BaseModel):
    """Budget for the randomized local search."""

    max_iterations: int = Field(default=200_000, ge=1)
    restarts: int = Field(default=50, ge=1)
    seed: int = Field(default=1, ge=0)
    plateau: int = Field(default=500, ge=1)  # consecutive non-improving moves before restart
    phase_seed: bool = True
    full_scan: bool = False  # try every element and color per move instead of sampling one


class VerifierSettings(BaseModel):
    """Path search limits."""

    max_path_length: int | None = None  # edges; None searches every simple path

    @field_validator("max_path_length")
    @classmethod
    def validate_length(cls, v: int | None) -> int | None:
        if v is not None and v < 1:
            raise ValueError(f"max_path_length must be positive, got {v}")
        return v


class ConstructorSettings(BaseModel):
    """Knobs for constructions that search or repair."""

    repair_rounds: int = Field(default=400, ge=0)
    ear_candidate_cap: int = Field(default=5000, ge=1)
    repair_seed: int = Field(default=0, ge=0)


class CacheSettings(BaseModel):
    """On-disk cache for exact solver results."""

    enabled: bool = True
    directory: str = ".cache/tpconn"
    ttl_minutes: int | None = None  # None keeps entries forever


class Settings(BaseModel):
    """General application settings."""

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    log_file: str | None = "logs/tpconn.log"


class Config(BaseModel):
    """Main configuration model."""

    solver: SizeCap = Field(default_factory=SizeCap)
    verifier: VerifierSettings = Field(default_factory=VerifierSettings)
    search: SearchBudget = Field(default_factory=SearchBudget)
    constructors: ConstructorSettings = Field(default_factory=ConstructorSettings)
    cache: CacheSettings = Field(default_factory=CacheSettings)
    settings: Settings = Field(default_factory=Settings)

    @classmethod
    def load(cls, path: Path | str = "config.json") -> "Config":
        """Load configuration from a JSON file."""
        import json

        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        with open(path) as f:
            data = json.load(f)

        return cls.model_validate(data)

    @classmethod
    def load_or_default(cls, path: Path | str = "config.json") -> "Config":
        """Load configuration or return default if file doesn't exist."""
        try:
            return cls.load(path)
        except FileNotFoundError:
            return cls()


class CliCommand(str, Enum):
    """Subcommands of the ``tpconn`` front end."""

    GEN = "gen"
    COLOR = "color"
    VERIFY = "verify"
    SOLVE = "solve"
    COMPARE = "compare"
    PROFILE = "profile"


class CliConfig(BaseModel):
    """One validated command line invocation."""

    command: CliCommand
    graph_path: Path | None = None
    coloring_path: Path | None = None
    output_path: Path | None = None
    report_path: Path | None = None
    family: str | None = None
    params: tuple[int, ...] = ()
    seed: int | None = None
    method: ColoringMethod | None = None
    mode: ConnectionMode = ConnectionMode.TPC
    strong: bool = False
    cap: int | None = None
    workers: int | None = None
    cache_dir: Path | None = None
    no_cache: bool = False
    refresh: bool = False
    clear_cache: bool = False
    log_file: str | None = None
    verbose: bool = False

    @field_validator("cap", "workers")
    @classmethod
    def validate_positive(cls, v: int | None) -> int | None:
        if v is not None and v < 1:
            raise ValueError(f"caps and worker counts must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def check_inputs(self) -> "CliConfig":
        needs_graph = self.command is not CliCommand.GEN
        if needs_graph and self.graph_path is None:
            raise ValueError(f"'{self.command.value}' needs a graph file (-g)")
        if self.command is CliCommand.GEN and not self.family:
            raise ValueError("'gen' needs --family")
        if self.command is CliCommand.COLOR and not self.method:
            raise ValueError("'color' needs --method")
        if self.command is CliCommand.VERIFY and self.coloring_path is None:
            raise ValueError("'verify' needs a coloring file (-c)")
        if self.strong and self.mode is not ConnectionMode.TPC:
            raise ValueError("--strong only applies to --mode tpc")
        return self

    def apply_to(self, config: Config) -> Config:
        """Return ``config`` with command line overrides applied."""
        solver = config.solver
        updates: dict[str, int] = {}
        if self.cap is not None:
            updates["max_elements"] = self.cap
        if self.workers is not None:
            updates["workers"] = self.workers
        if updates:
            solver = solver.model_copy(update=updates)
        search = config.search
        constructors = config.constructors
        if self.seed is not None and self.command is not CliCommand.GEN:
            search = search.model_copy(update={"seed": self.seed})
            constructors = constructors.model_copy(update={"repair_seed": self.seed})
        cache = config.cache
        if self.no_cache:
            cache = cache.model_copy(update={"enabled": False})
        elif self.cache_dir is not None:
            cache = cache.model_copy(update={"directory": str(self.cache_dir)})
        settings = config.settings
        if self.verbose:
            settings = settings.model_copy(update={"log_level": "DEBUG"})
        if self.log_file is not None:
            settings = settings.model_copy(update={"log_file": self.log_file or None})
        return config.model_copy(
            update={
                "solver": solver,
                "search": search,
                "constructors": constructors,
                "cache": cache,
                "settings": settings,
            }
        )
