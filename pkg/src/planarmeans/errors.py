"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for every error raised by planarmeans."""


class DegenerateInput(GeometryError):
    pass


class ZeroDirection(GeometryError):
    pass


class SingularMap(GeometryError):
    pass


class OriginNotInterior(GeometryError):
    pass


class EmptyOrDegenerateIntersection(GeometryError):
    pass


class NotCentered(GeometryError):
    """Raised when a body is required to have its Minkowski center at 0."""


class NotContained(GeometryError):
    pass


class GaugeNotSymmetric(GeometryError):
    pass


class OutOfDomain(GeometryError):
    pass


class OutOfRegion(GeometryError):
    pass


class InfeasibleParams(GeometryError):
    pass


class AsymmetryTooSmall(GeometryError):
    pass


class CanonicalizationError(GeometryError):
    """A pipeline step broke one of its guarantees (s kept, tau not decreased)."""


class ParseError(GeometryError):
    pass
