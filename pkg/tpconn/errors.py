"""Exception types raised by the library.

Library code raises these and never prints; the command line front end maps
every ``TpconnError`` to exit status 2.
"""


class TpconnError(Exception):
    """Base class for all tpconn failures."""


class GraphFormatError(TpconnError, ValueError):
    """A graph file could not be parsed."""


class ColoringFormatError(TpconnError, ValueError):
    """A coloring file could not be parsed or does not match its graph."""


class PathError(TpconnError, ValueError):
    """A vertex sequence is not a path of the host graph."""


class NotConnectedError(TpconnError, ValueError):
    """The operation requires a connected graph."""


class StructureError(TpconnError, ValueError):
    """The graph does not have the structure an operation requires.

    Raised for example when a tree is expected, when 2-connectivity is required,
    or when an argument vertex is out of range.
    """


class SolverCapError(TpconnError):
    """An exact computation is infeasible at this size."""


class ConstructionError(TpconnError):
    """A constructor could not produce a verified coloring."""


class FamilyParameterError(TpconnError, ValueError):
    """Invalid parameters for a graph family."""
