"""Domain errors raised by hofflat.

Every error is a ``HoffmanError``; the class name doubles as the error name
reported by the command line (``Error: FatFatEdge: ...``).
"""

from typing import Any, Iterable, Sequence, Tuple


class HoffmanError(ValueError):
    """Base class for all domain errors"""

    @property
    def name(self) -> str:
        return type(self).__name__


class _VertexError(HoffmanError):
    """Error naming one or more offending vertices"""

    def __init__(self, message: str, vertices: Iterable[str] = ()):
        super().__init__(message)
        self.vertices: Tuple[str, ...] = tuple(vertices)


# graph-core


class FatFatEdge(_VertexError):
    """Two fat vertices are joined by an edge"""


class FatWithoutSlimNeighbor(_VertexError):
    """A fat vertex has no slim neighbor"""


class SelfLoop(_VertexError):
    """An edge joins a vertex to itself"""


class DuplicateVertexName(_VertexError):
    """A vertex name is declared twice"""


class UnknownVertex(_VertexError):
    """A name does not refer to a (slim) vertex of the graph"""


class EmptyAttachment(HoffmanError):
    """A fat vertex was attached to no slim vertex"""


class HgSyntaxError(HoffmanError):
    """Malformed line in a .hg description"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class FileNotFound(HoffmanError):
    """Input file does not exist"""


# spectra


class NoSlimVertex(HoffmanError):
    """Operation needs at least one slim vertex"""


class NoFatVertex(HoffmanError):
    """Operation needs at least one fat vertex"""


class UnknownFatVertex(_VertexError):
    """Name does not refer to a fat vertex"""


class NonPositiveCliqueSize(HoffmanError):
    """Clique size must be at least one"""


class HypothesisViolated(HoffmanError):
    """Input of the clique collapse does not satisfy its hypotheses"""

    def __init__(self, condition: str):
        super().__init__(f"hypothesis violated: {condition}")
        self.condition = condition


# representation


class EigenvalueTooSmall(HoffmanError):
    """Smallest eigenvalue is below the requested bound"""

    def __init__(self, m: Any):
        super().__init__(f"smallest eigenvalue is less than -{m}")
        self.m = m


class NotARepresentation(HoffmanError):
    """A Gram entry disagrees with the prescribed representation"""

    def __init__(self, entry: Sequence[str], expected: Any, actual: Any):
        super().__init__(
            f"Gram entry ({', '.join(entry)}) is {actual}, expected {expected}"
        )
        self.entry = tuple(entry)
        self.expected = expected
        self.actual = actual


class WrongVectorCount(HoffmanError):
    """Number of vectors differs from the number of vertices"""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"expected {expected} vectors, one per vertex, got {actual}")
        self.expected = expected
        self.actual = actual


class UnsupportedDiagonal(HoffmanError):
    """Gram diagonal outside the supported range"""


class UnsupportedOffDiagonal(HoffmanError):
    """Gram off-diagonal entry outside the supported range"""


# decomposition


class NotAPartition(HoffmanError):
    """Vertex sets do not partition the slim vertices"""


class NotASum(_VertexError):
    """Parts cannot be glued into a sum"""


# lattice


class EmptyRepresentation(HoffmanError):
    """Representation has no vectors"""


class NotFat(_VertexError):
    """Some slim vertex has no fat neighbor"""


class NotIndecomposable(HoffmanError):
    """Graph splits as a nontrivial sum"""


# saturation


class TooManySlimVertices(HoffmanError):
    """Slim vertex count exceeds the configured cap"""


class NotME8Graph(HoffmanError):
    """Input is not the maximal E8 graph with its embedding"""


# families


class UnsupportedT(HoffmanError):
    """Number of fat neighbors outside 1..3"""


class BadParameters(HoffmanError):
    """Family parameters violate a constraint"""


# dynkin


class EmptyGraph(HoffmanError):
    """Graph has no vertices"""


class Disconnected(HoffmanError):
    """Graph is not connected"""


# enumeration


class BoundsTooLarge(HoffmanError):
    """Enumeration bounds exceed the hard cap"""
