"""Exception types raised by the library.

Every error is a subclass of GsslabError so callers (and the CLI) can catch
the whole family at once. Names mirror the failed check.
"""


class GsslabError(Exception):
    """Base class for all library errors."""


class PolynomialParseError(GsslabError):
    """Polynomial text is not valid symbolic ("x^5+x^2+1") or hex ("0x25") form."""


class DegreeOutOfRange(GsslabError):
    """Polynomial degree outside the configured cap."""


class NotIrreducible(GsslabError):
    """Polynomial factors over GF(2)."""


class NotPrimitive(GsslabError):
    """Polynomial is irreducible but x does not generate the full multiplicative group."""


class FieldMismatch(GsslabError):
    """Operands belong to different fields."""


class ZeroInverse(GsslabError):
    """Multiplicative inverse of zero requested."""


class ZeroLog(GsslabError):
    """Discrete logarithm of zero requested."""


class ShiftOutOfRange(GsslabError):
    """Shift outside 0 .. 2^L - 2."""


class SingularSystem(GsslabError):
    """GF(2) linear system has no unique solution; indicates an internal bug."""


class NoPartner(GsslabError):
    """Index has no complement partner (the null index and shift 0)."""


class BadPeriodLength(GsslabError):
    """Input length is not of the form 2^L - 1."""


class OddLength(GsslabError):
    """Even-length input required."""


class LengthMismatch(GsslabError):
    """Sequences of equal length required."""
