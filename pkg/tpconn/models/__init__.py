"""Data models for graphs, colorings, reports and configuration."""

from .coloring import ColoringMethod, ConnectionMode, PathWitness, TotalColoring
from .config import (
    CacheSettings,
    CliCommand,
    CliConfig,
    Config,
    ConstructorSettings,
    SearchBudget,
    Settings,
    SizeCap,
    VerifierSettings,
)
from .family import FamilyKind, FamilySpec
from .graph import (
    BlockDecomposition,
    Ear,
    EarDecomposition,
    Graph,
    RootPolicy,
    StructureProfile,
    TreeStrategy,
)
from .reports import (
    NumberComparison,
    SolveResult,
    StrongCertificate,
    StrongPropertyReport,
    VerificationReport,
)

__all__ = [
    "BlockDecomposition",
    "CacheSettings",
    "CliCommand",
    "CliConfig",
    "ColoringMethod",
    "Config",
    "ConnectionMode",
    "ConstructorSettings",
    "Ear",
    "EarDecomposition",
    "FamilyKind",
    "FamilySpec",
    "Graph",
    "NumberComparison",
    "PathWitness",
    "RootPolicy",
    "SearchBudget",
    "Settings",
    "SizeCap",
    "SolveResult",
    "StrongCertificate",
    "StrongPropertyReport",
    "StructureProfile",
    "TotalColoring",
    "TreeStrategy",
    "VerificationReport",
]
