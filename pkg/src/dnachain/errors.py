"""Exception hierarchy shared by the library and the CLI."""


class DnaChainError(Exception):
    """Base class for all errors raised by dnachain."""


class DomainError(DnaChainError, ValueError):
    """An argument lies outside the physically meaningful domain."""


class SequenceParseError(DnaChainError, ValueError):
    """A base sequence or FASTA document could not be parsed."""

    def __init__(self, message, position=None, char=None):
        super().__init__(message)
        self.position = position
        self.char = char


class InstabilityError(DnaChainError, ArithmeticError):
    """A squared mode frequency is not positive: the harmonic chain is unstable.

    ``value`` is the offending squared frequency (in PHz^2) and ``index`` its
    position in the ascending spectrum, when known.
    """

    def __init__(self, message, value=None, index=None):
        super().__init__(message)
        self.value = value
        self.index = index
