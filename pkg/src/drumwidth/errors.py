"""Exception hierarchy shared by all modules."""


class DrumWidthError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(DrumWidthError, ValueError):
    pass


class NoSolution(DrumWidthError):
    """A linear system has no solution."""


class MalformedProblem(DrumWidthError, ValueError):
    pass


class NotFullDimensional(DrumWidthError):
    pass


class NotAVertexPermutation(DrumWidthError):
    """A group element does not permute the vertex set it is asked to act on."""


class EmptySkin(DrumWidthError):
    pass


class NonUnitLastCoordinate(DrumWidthError, ValueError):
    pass


class NotSimplicial(DrumWidthError):
    pass


class NonUniqueMinimum(DrumWidthError):
    pass


class NotARidge(DrumWidthError, ValueError):
    pass


class ParamsInvalid(DrumWidthError, ValueError):
    pass


class VertexCountMismatch(DrumWidthError):
    pass


class ClassificationMismatch(DrumWidthError):
    pass


class BoundViolated(DrumWidthError):
    pass


class CertificateInvalid(DrumWidthError):
    """A stage of the width certificate pipeline failed; ``stage`` names it."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
