"""Result models for verification and exact solving."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .coloring import ConnectionMode, PathWitness, TotalColoring

Pair = tuple[int, int]


class VerificationReport(BaseModel):
    """Outcome of checking every vertex pair of a colored graph."""

    model_config = ConfigDict(frozen=True)

    mode: ConnectionMode = ConnectionMode.TPC
    connected: bool
    witnesses: tuple[PathWitness, ...] = ()
    failing_pair: Pair | None = None
    pairs_checked: int = 0

    @model_validator(mode="after")
    def check_verdict(self) -> "VerificationReport":
        if self.connected == (self.failing_pair is not None):
            raise ValueError("a report is connected exactly when it has no failing pair")
        return self

    def witness_for(self, u: int, v: int) -> PathWitness | None:
        """The stored witness between ``u`` and ``v``, oriented from ``u``."""
        for w in self.witnesses:
            if (w.start, w.end) == (u, v):
                return w
            if (w.start, w.end) == (v, u):
                return w.reversed()
        return None

    @property
    def verdict(self) -> str:
        return "PASS" if self.connected else "FAIL"


class StrongCertificate(BaseModel):
    """Two total proper ``u``-``v`` paths meeting the strong-property conditions."""

    model_config = ConfigDict(frozen=True)

    u: int
    v: int
    first: PathWitness
    second: PathWitness


class StrongPropertyReport(BaseModel):
    """Per-pair certificates for the strong property, or the first pair without one."""

    model_config = ConfigDict(frozen=True)

    holds: bool
    certificates: tuple[StrongCertificate, ...] = ()
    failing_pair: Pair | None = None
    pairs_checked: int = 0

    @model_validator(mode="after")
    def check_verdict(self) -> "StrongPropertyReport":
        if self.holds == (self.failing_pair is not None):
            raise ValueError("the property holds exactly when there is no failing pair")
        return self

    def __bool__(self) -> bool:
        return self.holds

    def certificate_for(self, u: int, v: int) -> StrongCertificate | None:
        for cert in self.certificates:
            if (cert.u, cert.v) == (u, v):
                return cert
        return None


class SolveResult(BaseModel):
    """An exact connection number with an optimal certificate."""

    model_config = ConfigDict(frozen=True)

    mode: ConnectionMode
    value: int = Field(..., ge=0)
    certificate: TotalColoring
    colorings_tested: int = 0
    elapsed_seconds: float = 0.0

    @model_validator(mode="after")
    def check_certificate(self) -> "SolveResult":
        used = self.certificate.mode_color_count(self.mode)
        # A complete graph needs no vertex colors for pvc, but the certificate still colors them.
        if self.mode is ConnectionMode.PVC and self.value == 0:
            return self
        if self.mode is ConnectionMode.PC and self.certificate.host.m == 0:
            return self
        if used != self.value:
            raise ValueError(f"certificate uses {used} colors, expected {self.value}")
        return self


class NumberComparison(BaseModel):
    """tpc, pc and pvc of one graph side by side."""

    model_config = ConfigDict(frozen=True)

    tpc: int
    pc: int
    pvc: int
    lower_bound: int
    tree_bound: int
    tree_bound_exact: bool = True
    colorings_tested: int = 0
    elapsed_seconds: float = 0.0

    @property
    def tpc_minus_pc(self) -> int:
        return self.tpc - self.pc

    @property
    def tpc_minus_pvc(self) -> int:
        return self.tpc - self.pvc

    def as_report(self) -> dict[str, int | str]:
        """Flat key/value view used by the command line ``--report`` file."""
        return {
            "tpc": self.tpc,
            "pc": self.pc,
            "pvc": self.pvc,
            "tpc_minus_pc": self.tpc_minus_pc,
            "tpc_minus_pvc": self.tpc_minus_pvc,
            "lower_bound": self.lower_bound,
            "tree_bound": self.tree_bound,
            "tree_bound_exact": str(self.tree_bound_exact).lower(),
        }
