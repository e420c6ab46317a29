"""Exception types raised across the package.

Every error names the violated precondition or invariant; callers that
want blanket handling can catch :class:`GrmTreesError`.
"""


class GrmTreesError(Exception):
    """Base class for all errors raised by grmtrees."""


class TreeStructureError(GrmTreesError):
    """An edge list does not describe a tree."""


class SelfLoop(TreeStructureError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(TreeStructureError):
    """The same unordered edge appears twice."""


class CycleDetected(TreeStructureError):
    """The edge list contains a cycle."""


class Disconnected(TreeStructureError):
    """The edge list describes more than one component."""


class SingletonTree(GrmTreesError):
    """Operation undefined on the one-vertex tree (no edges, no degrees)."""


class DomainViolation(GrmTreesError):
    """Parameters outside the domain of a constructor or closed form."""


class NotALeaf(GrmTreesError):
    """A leaf-only operation was pointed at an internal vertex."""


class DegreeBoundViolated(GrmTreesError):
    """Input tree or census exceeds the degree bound of the operation."""


class UnsupportedRegime(GrmTreesError):
    """No certified bound exists for the requested (max degree, lambda)."""


class LimitExceeded(GrmTreesError):
    """Enumeration request exceeds the practical order guard."""
