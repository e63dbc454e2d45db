"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Base class for every mathematical failure raised by cevian_lab."""


class BothZero(GeometryError):
    """A parameter ``num/den`` was given with ``num == den == 0``."""


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class InfinitePoint(GeometryError):
    """An affine quantity was requested for a point at infinity."""


class SingularMap(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    """Triangle vertices are collinear."""


class NotOnSideLine(GeometryError):
    pass


class PairError(GeometryError):
    """A pair of cevians fails to meet in exactly one finite point.

    ``which`` names the point that cannot be built ("P", "Q" or "R") and
    ``pair_class`` is the :class:`~cevian_lab.cevians.PairClass` diagnosis.
    """

    def __init__(self, which, pair_class):
        self.which = which
        self.pair_class = pair_class
        super().__init__(f"cevian pair for {which} is {pair_class.name}")

    @property
    def diagnosis(self):
        return (self.which, self.pair_class)


class DegeneratePair(PairError):
    """Raised while intersecting cevians that are parallel or coincident."""


class RatioUndefined(PairError):
    """Raised by the closed-form ratios when a denominator factor vanishes."""
