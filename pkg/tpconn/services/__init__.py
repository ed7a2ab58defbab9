"""Graph structure, path search, verification, solving and coloring constructions."""

from .cache import Cache, result_key
from .constructors import construct
from .families import generate, make_spec
from .solver import compare_numbers, exact_number, exact_pc, exact_pvc, exact_tpc
from .verifier import exists_total_proper_path, has_strong_property, is_total_proper_connected

__all__ = [
    "Cache",
    "compare_numbers",
    "construct",
    "exact_number",
    "exact_pc",
    "exact_pvc",
    "exact_tpc",
    "exists_total_proper_path",
    "generate",
    "has_strong_property",
    "is_total_proper_connected",
    "make_spec",
    "result_key",
]
