"""Total proper connection toolkit - constructive colorings, verification and exact solvers."""

__version__ = "0.3.0"
__author__ = "Costel Grigoras"
__email__ = "costel@dropup.studio"
