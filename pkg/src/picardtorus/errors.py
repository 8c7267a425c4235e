"""Exception hierarchy.  CLI exit codes hang off the two base classes."""


class PicardTorusError(Exception):
    """Base class for all package errors."""


class InputError(PicardTorusError):
    """Bad user input (exit code 2)."""


class IndeterminateError(PicardTorusError):
    """A certification could not be completed at the maximum precision (exit code 3)."""


class ReduciblePolynomial(InputError):
    pass


class AmbiguousRoot(IndeterminateError):
    pass


class NoRootNearHint(InputError):
    pass


class FieldMismatch(InputError):
    pass


class SizeGuardExceeded(InputError):
    pass


class DegenerateImaginaryPart(IndeterminateError):
    pass


class NotUnimodular(InputError):
    pass


class SingularRightBlock(PicardTorusError):
    pass


class WrongDimension(InputError):
    pass


class InvalidDescriptor(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class GenerationFailed(PicardTorusError):
    pass


class ConsistencyError(PicardTorusError):
    """A consistency verdict failed: an implementation bug, never a result."""
