"""Exception types raised by trajboot."""


class TrajbootError(Exception):
    """Base class for all trajboot errors."""


class DataError(TrajbootError):
    """Base class for dataset construction/ingestion errors."""


class RaggedData(DataError):
    """A subject is missing one or more time points of the shared grid."""


class DuplicateCell(DataError):
    """The same (subject, time) cell appears more than once."""


class NonNumeric(DataError):
    """A value failed to parse as a finite real number."""


class IndexOutOfRange(DataError):
    """A resampling index falls outside [0, N)."""


class DegreeTooHigh(TrajbootError):
    """Polynomial degree would saturate the time grid (degree + 1 > T)."""


class AllRestartsDegenerate(TrajbootError):
    """Every EM restart collapsed (tiny mixing proportion or variance).

    Signals that this number of groups is not supportable on the data;
    callers treat the K as unavailable rather than aborting a whole scan.
    """


class NoModelAvailable(TrajbootError):
    """Every candidate number of groups was degenerate in a scan."""


class DegenerateMixing(TrajbootError):
    """An odds-of-correct-classification was requested for pi outside (0, 1)."""
