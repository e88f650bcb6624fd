"""Exception types shared across the library."""


class RoughPathsError(Exception):
    """Base class for every library-specific error."""


class DimensionMismatchError(RoughPathsError):
    """Two objects disagree in state dimension or truncation depth."""


class ParameterError(RoughPathsError):
    """A regularity/integrability parameter violates its admissible range."""


class GridMismatchError(RoughPathsError):
    """Two paths do not share a common time grid."""


class NonUniformGridError(RoughPathsError):
    """An operation that needs a uniform mesh was given a non-uniform grid."""


class PartitionSizeError(RoughPathsError):
    """Brute-force partition enumeration was asked for too many grid points."""


class BlowUpError(RoughPathsError):
    """A solution left the vector field's validity box.

    Attributes:
        exit_time: first grid time at which the box was violated.
    """

    def __init__(self, exit_time: float, message: str | None = None):
        self.exit_time = exit_time
        super().__init__(message or f"solution left the validity box at t={exit_time}")


class CsvFormatError(RoughPathsError):
    """A path CSV file could not be parsed.

    Attributes:
        line: 1-based line number of the offending row (0 for structural issues).
    """

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
