"""Exception types shared across the package."""


class MilnorError(ValueError):
    """Base class for invalid input or undecidable requests."""


class NotHomogeneous(MilnorError):
    pass


class DegreeTooSmall(MilnorError):
    pass


class NonIsolatedSingularities(MilnorError):
    """The Milnor algebra did not stabilise: f is not reduced or C has a singular curve."""


class InconclusiveBound(MilnorError):
    """A generator search hit its degree bound; raise the bound and retry."""


class InternalConsistencyError(RuntimeError):
    pass


class UnknownIdentifier(MilnorError):
    pass


class BadParams(MilnorError):
    pass


class OrbitInconsistency(MilnorError):
    pass


class NonPolynomialResult(MilnorError):
    pass
