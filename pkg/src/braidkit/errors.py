"""Exception hierarchy shared by every braidkit module."""


class BraidkitError(Exception):
    """Base class for all errors raised by braidkit."""


# braid words
class MalformedWord(BraidkitError, ValueError):
    pass


class StrandMismatch(BraidkitError, ValueError):
    pass


class NotPositive(BraidkitError, ValueError):
    pass


class NotAKnot(BraidkitError, ValueError):
    pass


class ParityViolation(BraidkitError, ArithmeticError):
    """ell - strands came out even for a positive knot word; indicates a bug."""


# polynomials
class ZeroPolynomial(BraidkitError, ValueError):
    pass


class PolynomialParseError(BraidkitError, ValueError):
    pass


class NotInvertible(BraidkitError, ArithmeticError):
    pass


class InexactDivision(BraidkitError, ArithmeticError):
    pass


# homfly / mfw
class ResourceLimit(BraidkitError, RuntimeError):
    """A HOMFLY computation exceeded its basis, memory or wall-clock cap."""

    def __init__(self, reason, *, letters_done=None, basis_size=None):
        super().__init__(reason)
        self.reason = reason
        self.letters_done = letters_done
        self.basis_size = basis_size


class OddSpread(BraidkitError, ValueError):
    pass


# alexander
class OddSExponent(BraidkitError, ValueError):
    pass


class NotLSpaceForm(BraidkitError, ValueError):
    pass


# graph manifolds
class ParseError(BraidkitError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NormalizationError(BraidkitError, ValueError):
    pass


class DeterminantError(BraidkitError, ValueError):
    pass


# datasets
class SchemaError(BraidkitError, ValueError):
    pass


class InvariantError(BraidkitError, ValueError):
    def __init__(self, record, field, message):
        super().__init__(f"record {record!r}, field {field!r}: {message}")
        self.record = record
        self.field = field
