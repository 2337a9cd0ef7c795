"""Exception hierarchy for degenerate geometric input."""


class GeometryError(Exception):
    """Base class for all degeneracies reported by this package."""


class CoincidentPoints(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class DegenerateRay(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class DegenerateP(GeometryError):
    """Pencil shape parameter p = +-1 (the degenerate members)."""


class NonpositiveT(GeometryError):
    pass


class AsymptoticDirection(GeometryError):
    """Focal ray parallel to an asymptote; the radius is unbounded."""


class OnExcludedLine(GeometryError):
    """Point on x = -1/p, which no pencil member reaches."""


class ParabolaMember(GeometryError):
    """Pedal of a parabola about its focus is a line, not a circle."""


class CenterHasNoPolar(GeometryError):
    pass


class LineThroughCenter(GeometryError):
    pass


class CenterNotFocus(GeometryError):
    pass


class FocusOutsideDual(GeometryError):
    """No tried inversion radius put the focus inside the dual circle."""


class AngleOutOfRange(GeometryError):
    pass


class FormulaPole(GeometryError):
    """Closed-form vertex denominator vanishes."""


class NotClosed(GeometryError):
    pass


class AllOppositeSidesParallel(GeometryError):
    pass


class EmptyScene(GeometryError):
    pass
