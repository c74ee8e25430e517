"""Exception types raised across the package.

Every domain failure derives from :class:`TopologyError` so callers (and the
CLI) can separate domain errors from programming errors.
"""


class TopologyError(Exception):
    """Base class for domain errors."""


class MalformedPermutation(TopologyError):
    pass


class FixedPointInTwin(TopologyError):
    pass


class UnknownFace(TopologyError):
    pass


class CoefficientOutOfRange(TopologyError):
    pass


class Unresolvable(TopologyError):
    """A 1-chain that cannot be resolved into an embedded oriented multicurve."""


class NotHomologous(TopologyError):
    pass


class BigonPresent(TopologyError):
    pass


class DegenerateEqual(TopologyError):
    """The two multicurves coincide, so the path is a single vertex."""


class NotSimple(TopologyError):
    pass


class NotDisjoint(TopologyError):
    pass


class NotReducedInput(TopologyError):
    pass


class EmptyResult(TopologyError):
    pass


class LengthMismatch(TopologyError):
    pass


class SelfTouchingRegion(TopologyError):
    pass


class NonSimplePath(TopologyError):
    pass


class OddParameter(TopologyError):
    pass


class TooLarge(TopologyError):
    pass


class Unreachable(TopologyError):
    pass


class InstanceSyntaxError(TopologyError):
    """Instance text is not valid JSON; carries ``line`` and ``column``."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class SemanticError(TopologyError):
    """Instance text parses but describes an invalid map; carries ``field``."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
