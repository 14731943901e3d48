"""Exception hierarchy.

``DomainError`` subclasses map to CLI exit code 2 (a precondition or
mathematical-domain failure); ``FormatError`` and I/O problems map to exit
code 1.
"""


class QuivexError(Exception):
    """Base class for all library errors."""


class DomainError(QuivexError):
    """A precondition or mathematical-domain violation."""


class FormatError(QuivexError):
    """Malformed input file or JSON payload."""


class DimensionError(DomainError):
    """Matrix or block shapes do not conform."""


class QuiverMismatchError(DomainError):
    """Two objects live over different quivers."""


class NotFlatError(DomainError):
    """The moment map does not vanish where flatness is required."""


class UnsupportedZetaError(DomainError):
    """Stability parameter outside the sign-definite regime."""


class BadPathError(DomainError):
    """A path whose consecutive arrows do not compose."""


class InconsistentSystemError(DomainError):
    """An exact linear system with no solution."""


class InvalidCartanError(DomainError):
    """A matrix that is not a symmetric generalized Cartan matrix."""


class CutoffError(DomainError):
    """A root-system height cutoff too small for the requested weight."""


class DependentClassesError(DomainError):
    """Extension classes that are dependent modulo the coboundaries."""


class WrongSetupError(DomainError):
    """A representation handed to a routine reserved for a named setup."""


class UnknownExampleError(DomainError):
    """Request for an example generator that does not exist."""
