"""Typed exceptions shared across the package."""


class PartitionGFError(Exception):
    """Base class for all errors raised by this package."""


class OrderTooLarge(PartitionGFError):
    """A series was asked for coefficients beyond its guaranteed order."""


class InvalidExponent(PartitionGFError):
    """A q-exponent that must be positive was zero or negative."""


class NonUnitDivisor(PartitionGFError):
    """Series division requires the divisor's constant term to be +1 or -1."""


class ExactDivisionError(PartitionGFError):
    """Polynomial long division hit a non-exact coefficient step."""


class InternalError(PartitionGFError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class InvalidDifference(PartitionGFError):
    """The largest-smallest difference t is outside the operation's domain."""


class InvalidDistance(PartitionGFError):
    """A distance vector entry was < 1."""


class OutOfRange(PartitionGFError):
    """Arguments violate a theorem hypothesis (e.g. t <= 1 or t <= k)."""


class CutoffTooSmall(PartitionGFError):
    """A term cutoff omits terms that still contribute below the order."""


class InsufficientSamples(PartitionGFError):
    """A residue class has fewer sample points than degree + 1."""


class InconsistentSamples(PartitionGFError):
    """Extra sample points contradict the interpolated polynomial."""


class NonConstantLeading(PartitionGFError):
    """Residue classes disagree on the top-degree coefficient."""


class InternalMismatch(PartitionGFError):
    """Two formulas that must agree evaluated to different values."""


class NotFound(PartitionGFError):
    """A requested fixture file does not exist."""


class ParseError(PartitionGFError):
    """Malformed b-file content."""


class NetworkError(PartitionGFError):
    """A remote fetch failed."""


class CalibrationError(PartitionGFError):
    """No index offset aligns a fixture with its reference values."""


class EmptyOverlap(PartitionGFError):
    """A cross-check had no indices in common with the computed values."""
