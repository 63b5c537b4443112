"""Exception hierarchy shared by every layer of the package."""


class ArtifactError(Exception):
    """Base class for all errors raised by this package."""


class NotCoprimeToRamified(ArtifactError, ValueError):
    pass


class NotSplitPrime(ArtifactError, ValueError):
    pass


class BothZero(ArtifactError, ValueError):
    pass


class InvalidCharacterValue(ArtifactError, RuntimeError):
    pass


class NonPositiveArgument(ArtifactError, ValueError):
    pass


class ConductorTooLargeForOracle(ArtifactError, ValueError):
    pass


class DivergentParameter(ArtifactError, ValueError):
    pass


class QuadratureNonConvergence(ArtifactError, RuntimeError):
    pass


class MissingLValues(ArtifactError, LookupError):
    """Raised when an experiment needs central values that are not available.

    ``qmin``/``qmax`` name the conductor range that has to be populated.
    """

    def __init__(self, family: str, qmin: int, qmax: int, missing: int):
        self.family = family
        self.qmin = qmin
        self.qmax = qmax
        self.missing = missing
        super().__init__(
            f"{missing} {family} L-values missing; populate conductors "
            f"{qmin} <= q <= {qmax} (e.g. `artifact lvalues --family {family} --xmax {qmax}`)"
        )


class MissingFamily(ArtifactError, LookupError):
    pass


class EmptyLadder(ArtifactError, ValueError):
    pass


class ZeroCentralValue(ArtifactError, ValueError):
    pass
