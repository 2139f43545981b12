"""Named error types shared across the package.

Every operation that can fail raises one of these, so callers (and the CLI)
can distinguish computation errors from bugs.
"""


class LogfanError(Exception):
    """Base class for all named computation errors."""


class InvalidCone(LogfanError):
    """Cone rays are linearly dependent or otherwise not simplicial."""


class CenterNotInFan(LogfanError):
    """Requested subdivision center is not a cone of the fan."""


class RankMismatch(LogfanError):
    """Lattice map shape does not match the ambient ranks."""


class TooFewFactors(LogfanError):
    """Building sets need at least two factors."""


class NoToricModel(LogfanError):
    """The pair has no fan (positive-genus curve)."""


class NotABuildingSetOrder(LogfanError):
    """A prefix of the requested blow-up order is not a building set."""


class EmptyProjection(LogfanError):
    """Projection onto an empty set of factors."""


class AmbiguousDegree(LogfanError):
    """Curve cohomology depends on the bundle, not only on its degree."""


class WedgeOutOfRange(LogfanError):
    """Exterior power index outside 0..rank."""


class UnsupportedComposition(LogfanError):
    """Kernel atom combination with no closed composition rule."""


class UnsupportedHHShape(LogfanError):
    """Hochschild table is richer than the scalar regime."""


class FormalityUnavailable(LogfanError):
    """Tangent inclusion does not split; the formal recipe must not proceed."""
