"""Graph family specifications."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator


class FamilyKind(str, Enum):
    """Named graph families."""

    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    STAR = "star"
    PROP3 = "prop3"
    PROP4 = "prop4"
    RANDOM_CONNECTED = "random_connected"
    RANDOM_2CONNECTED = "random_2connected"
    RANDOM_MIN_DEGREE = "random_min_degree"

    @property
    def is_random(self) -> bool:
        return self.value.startswith("random_")


# Exact parameter count per kind; None means "two or more".
_ARITY: dict[FamilyKind, int | None] = {
    FamilyKind.PATH: 1,
    FamilyKind.CYCLE: 1,
    FamilyKind.COMPLETE: 1,
    FamilyKind.COMPLETE_BIPARTITE: 2,
    FamilyKind.COMPLETE_MULTIPARTITE: None,
    FamilyKind.STAR: 1,
    FamilyKind.PROP3: 1,
    FamilyKind.PROP4: 1,
    FamilyKind.RANDOM_CONNECTED: 2,
    FamilyKind.RANDOM_2CONNECTED: 1,
    FamilyKind.RANDOM_MIN_DEGREE: 2,
}


class FamilySpec(BaseModel):
    """A family name with its integer parameters and, for random kinds, a seed."""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    parameters: tuple[int, ...] = ()
    seed: int | None = None

    @model_validator(mode="after")
    def check_domain(self) -> "FamilySpec":
        kind, p = self.kind, self.parameters
        arity = _ARITY[kind]
        if arity is None:
            if len(p) < 2:
                raise ValueError(f"{kind.value} needs at least two part sizes")
        elif len(p) != arity:
            raise ValueError(f"{kind.value} takes {arity} parameter(s), got {len(p)}")
        if self.seed is not None and not kind.is_random:
            raise ValueError(f"{kind.value} is deterministic and takes no seed")

        if kind in (FamilyKind.PATH, FamilyKind.COMPLETE, FamilyKind.STAR) and p[0] < 1:
            raise ValueError(f"{kind.value} needs n >= 1")
        if kind is FamilyKind.CYCLE and p[0] < 3:
            raise ValueError("cycle needs n >= 3")
        if kind in (FamilyKind.COMPLETE_BIPARTITE, FamilyKind.COMPLETE_MULTIPARTITE) and min(p) < 1:
            raise ValueError("part sizes must be positive")
        if kind is FamilyKind.PROP3 and p[0] < 2:
            raise ValueError("prop3 needs k >= 2")
        if kind is FamilyKind.PROP3 and p[0] > 16:
            raise ValueError("prop3 segments of 2^k edges are limited to k <= 16")
        if kind is FamilyKind.PROP4 and p[0] < 1:
            raise ValueError("prop4 needs t >= 1")
        if kind is FamilyKind.RANDOM_CONNECTED:
            n, m = p
            if n < 1 or not n - 1 <= m <= n * (n - 1) // 2:
                raise ValueError(f"random_connected needs n >= 1 and n-1 <= m <= n(n-1)/2, got n={n}, m={m}")
        if kind is FamilyKind.RANDOM_2CONNECTED and p[0] < 3:
            raise ValueError("random_2connected needs n >= 3")
        if kind is FamilyKind.RANDOM_MIN_DEGREE:
            n, delta = p
            if not 1 <= delta < n:
                raise ValueError(f"random_min_degree needs 1 <= delta < n, got n={n}, delta={delta}")
        return self

    @property
    def effective_seed(self) -> int:
        return 0 if self.seed is None else self.seed
