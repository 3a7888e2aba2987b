class CocentralizerSpectraError(Exception):
    """Base exception for the cocentralizer spectra toolkit."""


class InvalidGroupSpecError(CocentralizerSpectraError):
    """Raised when a group family or its parameters are out of range."""


class FieldDegreeOutOfRangeError(CocentralizerSpectraError):
    """Raised when a GF(2^k) degree falls outside the supported range."""


class FieldDivisionByZeroError(CocentralizerSpectraError):
    """Raised when the zero field element is inverted."""


class NoProperCentralizersError(CocentralizerSpectraError):
    """Raised when an abelian group is asked for its proper centralizers."""


class DisconnectedGraphError(CocentralizerSpectraError):
    """Raised when distances are requested on a disconnected graph."""


class UseNullityPathError(CocentralizerSpectraError):
    """Raised when a matrix is above the exact characteristic polynomial cap."""


class ComplexRootsError(CocentralizerSpectraError):
    """Raised when a quadratic factor has a negative discriminant."""


class MalformedSpectrumError(CocentralizerSpectraError):
    """Raised when a claimed spectrum cannot be turned into an integer polynomial."""


class NonSymmetricMatrixError(CocentralizerSpectraError):
    """Raised when a symmetric eigensolver receives a non-symmetric matrix."""


class EigenSolverDidNotConvergeError(CocentralizerSpectraError):
    """Raised when Jacobi sweeps exhaust their budget."""


class MultiplicityTotalMismatchError(CocentralizerSpectraError):
    """Raised when a numeric spectrum and a claimed spectrum differ in length."""


class DegenerateSpecError(CocentralizerSpectraError):
    """Raised when closed forms are requested for a degenerate or unsupported parameter."""


class MissingSettingError(CocentralizerSpectraError):
    """Raised when a mandatory setting is absent."""


class InvalidSettingError(CocentralizerSpectraError):
    """Raised when a setting value cannot be parsed."""
