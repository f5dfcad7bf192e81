"""Exception types shared across the package."""


class TrivolError(Exception):
    """Base class for every error this package raises."""


class InvalidBounds(TrivolError):
    """Box bounds violate 0 <= a_i < b_i, or an argument leaves its stated range."""


class DegenerateTetrahedron(TrivolError):
    """Four points that do not span a three-dimensional simplex."""


class DegenerateHull(TrivolError):
    """A point set whose convex hull is not full-dimensional."""


class EmptyPolytope(TrivolError):
    """An operation received an empty vertex list."""


class OmegaViolated(TrivolError):
    """Bounds do not satisfy the ordering condition assumed by the caller."""


class InternalDisagreement(TrivolError):
    """Two redundant exact computation paths produced different values.

    This is a bug detector: it never fires on a correct build, and it is
    never raised for bad user input.
    """
