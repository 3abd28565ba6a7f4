"""Exception hierarchy.

Every geometric precondition failure derives from :class:`GeometryError`, so
callers that only care about "this configuration is unusable" can catch one
type.  :class:`TheoremViolation` is deliberately *not* a GeometryError: it
means the implementation disagrees with a proven theorem.
"""


class GeometryError(Exception):
    pass


class WrongField(GeometryError):
    pass


class ScalarParseError(GeometryError, ValueError):
    pass


# incidence layer
class EqualPoints(GeometryError):
    pass


class EqualLines(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class TooManyCoincident(GeometryError):
    pass


# conics
class DegeneratePosition(GeometryError):
    pass


class DuplicatePoints(GeometryError):
    pass


class CollinearInput(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class PointNotOnConic(GeometryError):
    pass


class PointNotOnLine(GeometryError):
    pass


class NotCommonPoints(GeometryError):
    pass


class IdenticalConics(GeometryError):
    pass


class TangentialContact(GeometryError):
    pass


# involutions
class OverlappingPairs(GeometryError):
    pass


class NoInvolution(GeometryError):
    pass


class Underdetermined(GeometryError):
    pass


class DegenerateQuadrangle(GeometryError):
    pass


class LineThroughVertex(GeometryError):
    pass


class PointsNotOnConic(GeometryError):
    pass


class FactViolation(AssertionError):
    """Two routes that must agree by a theorem disagreed."""


# correspondences
class PoleInput(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class NotThroughPole(GeometryError):
    pass


class NotRationallyDiagonalizable(GeometryError):
    pass


class RepeatedEigenvalue(GeometryError):
    pass


class CollinearDEF(GeometryError):
    pass


class ZeroSeedEntry(GeometryError):
    pass


class ProportionalSeeds(GeometryError):
    pass


class VertexInput(GeometryError):
    pass


class NotThroughVertex(GeometryError):
    pass


class ThroughTwoVertices(GeometryError):
    pass


# harness
class InvalidScene(GeometryError):
    """Scene violates its construction invariants."""

    def __init__(self, message: str, reason: str = "invalid-scene"):
        super().__init__(message)
        self.reason = reason


class DegenerateScene(GeometryError):
    """Scene is valid but not in general position; regenerate it."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class ExhaustedAttempts(GeometryError):
    pass


class TheoremViolation(Exception):
    """A proven statement failed; carries the certificate built so far."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


# rendering
class NonRationalField(GeometryError):
    pass


class EmptyScene(GeometryError):
    pass
