"""Exception types raised by the geometry and billiard routines."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateInput(GeometryError):
    pass


class NotInterior(GeometryError):
    pass


class NotTriangle(GeometryError):
    pass


class NotAcute(GeometryError):
    pass


class NotInAcuteRegion(GeometryError):
    pass


class BadAngle(GeometryError):
    pass


class BadParameter(GeometryError):
    pass


class NumericalFailure(RuntimeError):
    """An iterative numeric routine failed to converge."""
