from typing import Optional, Tuple


class LeibnizError(Exception):
    """Base exception for the library, carries the CLI exit code."""

    exit_code = 2

    def __init__(self, message: Optional[str] = None, exit_code: Optional[int] = None):
        if exit_code is not None:
            self.exit_code = exit_code
        self.message = message or self.__class__.__name__
        super().__init__(self.message)


class InvalidInputError(LeibnizError):
    """Raised for malformed input: bad scalars, specs, files or preconditions."""


class FieldMismatchError(InvalidInputError):
    """Raised when values from two different fields meet in one operation."""


class DivisionByZeroError(InvalidInputError, ZeroDivisionError):
    """Raised when inverting the zero element of a field."""


class InvalidScalarError(InvalidInputError):
    """Raised when a scalar literal does not follow the text syntax of its field."""


class InvalidFieldError(InvalidInputError):
    """Raised for a field descriptor that is not Q or GF(p) with p prime and below 2**31."""


class SingularMatrixError(InvalidInputError):
    """Raised when a matrix that must be invertible is not."""


class AmbientMismatchError(InvalidInputError):
    """Raised when subspaces or matrices of incompatible shapes are combined."""


class DivisionByZeroPolyError(InvalidInputError, ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""


class BothZeroError(InvalidInputError):
    """Raised when the gcd of two zero polynomials is requested."""


class NotAUnitError(InvalidInputError):
    """Raised when inverting a non-unit of a quotient ring. The gcd with the modulus is the witness."""

    def __init__(self, message: str, gcd=None):
        self.gcd = gcd
        super().__init__(message)


class WrongModulusError(InvalidInputError):
    """Raised when an operation needs the modulus X**n and gets another one."""


class InfiniteFieldError(InvalidInputError):
    """Raised when enumeration is requested over the rationals."""


class AlgebraMismatchError(InvalidInputError):
    """Raised when elements or maps of different algebras are combined."""


class LeibnizIdentityError(InvalidInputError):
    """Raised when a structure-constant table violates the left Leibniz identity."""

    def __init__(self, message: str, triple: Optional[Tuple[int, int, int]] = None):
        self.triple = triple
        super().__init__(message)


class StructureError(InvalidInputError):
    """Raised when a subspace is not the ideal or subalgebra an operation requires."""


class BadSpecError(InvalidInputError):
    """Raised for a malformed cyclic algebra spec."""


class WrongTypeError(InvalidInputError):
    """Raised when an operation is called on a cyclic algebra of the wrong type."""


class SingularOperatorError(InvalidInputError):
    """Raised when the operator of a one-operator action is not invertible."""


class NotClosedUnderCommutatorError(InvalidInputError):
    """Raised when an operator list does not span a Lie subalgebra."""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        self.pair = pair
        super().__init__(message)


class DependentOperatorsError(InvalidInputError):
    """Raised when an operator list is linearly dependent and the bracket table would not be canonical."""


class NotAnEndomorphismError(InvalidInputError):
    """Raised when a linear map that must preserve brackets does not."""


class NotAnAutomorphismError(InvalidInputError):
    """Raised when a linear map that must be a bijective endomorphism is not."""


class NotInDError(InvalidInputError):
    """Raised when an endomorphism of a type II algebra does not fix c."""


class ConfigError(InvalidInputError):
    """Raised for malformed configuration values."""


class UnknownSuiteError(InvalidInputError):
    """Raised for a verification suite id that does not exist."""


class GuardExceededError(LeibnizError):
    """Raised when an exhaustive search would exceed the configured candidate limit."""

    exit_code = 3

    def __init__(self, size: int, limit: int, message: Optional[str] = None):
        self.size = size
        self.limit = limit
        super().__init__(message or f"Candidate space of {size} exceeds the guard of {limit}")


class VerificationError(LeibnizError):
    """Raised when an internal consistency check fails."""

    exit_code = 1


class IdealNotPreservedError(VerificationError):
    """Raised when an automorphism does not preserve an ideal it must preserve."""
