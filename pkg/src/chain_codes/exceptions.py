"""
    chain_codes.exceptions
    ~~~~~~~~~~~~~~~~~~~~~~

    The error hierarchy. Every error carries a machine readable name (its
    class name) which the command line reports together with the message.
"""
from .utils import Location


def _plain(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


class ChainCodesError(Exception):
    """Base class of all errors raised by the library."""

    def __init__(self, message='', **details):
        super().__init__(message)
        self.message = message
        self.details = details

    @property
    def name(self):
        return type(self).__name__

    def to_json(self):
        ret = {'error': self.name, 'message': self.message}
        if self.details:
            ret['details'] = {k: _plain(v) for k, v in sorted(self.details.items())}
        return ret

    def __str__(self):
        return self.name+": "+self.message


class LocatedError(ChainCodesError):
    def __init__(self, message, src=None, location=None):
        if isinstance(location, Location):
            self.loc = location
        elif isinstance(location, int):
            if src is None:
                self.loc = Location(pos=location)
            else:
                self.loc = Location.location_from_pos(src, location)
        else:
            self.loc = Location(src or '')
        super().__init__(message, line=self.loc.line, column=self.loc.column)
        self.context_lines = 2

    def __str__(self):
        lines = []
        lines.append(self.name+" at "+str(self.loc)+": "+self.message)
        lines.extend(self.loc.context(num_ctx_lines=self.context_lines))
        return "\n".join(lines)


class PayloadSyntaxError(LocatedError):
    """A text payload (matrix, set, polynomial, multi-index) could not be parsed."""


class MalformedPayload(ChainCodesError):
    """A JSON payload does not match the expected schema."""


# chain rings

class RingError(ChainCodesError):
    """A general chain ring error."""


class NotPrime(RingError):
    """The characteristic prime is not a prime."""


class ReducibleModulus(RingError):
    """The residue image of the modulus is reducible."""


class DegreeMismatch(RingError):
    """The modulus is not monic of the requested degree."""


class InvalidRingParameters(RingError):
    """Degrees and nilpotency index must be positive."""


class RingMismatch(RingError):
    """The operands live in different rings."""


class NonUnit(RingError):
    """The element is not invertible."""


class NotTeichmuller(RingError):
    """A θ-adic coordinate is not in the Teichmüller set."""


class NotDivisible(RingError):
    """Exact division by a power of θ is not possible."""


class MalformedElement(RingError):
    """A coefficient sequence does not fit the ring."""


# extensions

class ExtensionError(ChainCodesError):
    """A general extension error."""


class SizeGuardExceeded(ChainCodesError):
    """An enumeration would exceed the configured size guard."""


class OrderUnavailable(ExtensionError):
    """The requested root order does not divide the unit group order of the residue field."""


class NotCoprime(ExtensionError):
    """The length is not coprime to the residue field size."""


class InvalidSubgroup(ExtensionError):
    """The subgroup exponent does not divide the extension degree."""


class NotInBaseRing(ExtensionError):
    """The element does not lie in the embedded base ring."""


# matrices

class LinAlgError(ChainCodesError):
    """A general matrix error."""


class NonUnitDeterminant(LinAlgError):
    """The matrix is not invertible."""


class NotRsfInput(LinAlgError):
    """The matrix is not in row standard form."""


class ShapeMismatch(LinAlgError):
    """The matrix dimensions do not fit the operation."""


# codes

class CodeError(ChainCodesError):
    """A general code error."""


class LengthMismatch(CodeError):
    """The generators do not share a common length."""


class Mismatch(CodeError):
    """The codes live over different towers or have different lengths."""


class HermitianRequiresEvenDegree(CodeError):
    """The Hermitian form needs an even extension degree."""


class NotSubcode(CodeError):
    """The second code is not contained in the first one."""


# cyclic codes

class CyclicError(ChainCodesError):
    """A general cyclic code error."""


class UnknownRepresentative(CyclicError):
    """The index is not a coset representative."""


class EmptyDefiningSet(CyclicError):
    """The defining set must not be empty."""


class InvalidDefiningSet(CyclicError):
    """A defining set member is out of range."""


class InvalidMultiIndex(CyclicError):
    """The multi-index does not assign a level to every representative."""


class InvalidLevel(CyclicError):
    """A θ-exponent lies outside ``0..s``."""


class NotQInvariant(CyclicError):
    """The defining set is not q-invariant."""


class NotAnInterval(CyclicError):
    """The defining set contains no interval."""


class NotCyclic(CyclicError):
    """The code is not closed under the cyclic shift."""


class ZeroCode(CyclicError):
    """The minimum weight of the zero code is undefined."""


# internal consistency

class InternalError(ChainCodesError):
    """An identity which must hold failed; indicates a bug."""


class SingularGram(InternalError):
    """The trace Gram matrix is not invertible."""


class OracleFailure(InternalError):
    """Two independent computations of the same object disagree."""


# command line usage

class UsageError(ChainCodesError):
    """The command line was used incorrectly."""


class UnknownSuite(UsageError):
    """No verification suite of that name is registered."""


class UnknownFixture(UsageError):
    """No ring fixture of that name is registered."""


class MissingPayload(UsageError):
    """The command needs a payload which was not given."""
