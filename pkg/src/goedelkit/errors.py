"""Exception hierarchy shared across the package."""


class GoedelkitError(Exception):
    """Base class for all library errors."""


class UnmappedSymbolError(GoedelkitError):
    """A symbol has no code under the active symbol table."""


class NotASequenceError(GoedelkitError):
    """A sequence operation was applied to a non-sequence number."""


class IndexOutOfRangeError(GoedelkitError):
    """Component index at or beyond the sequence length."""


class NotACodeError(GoedelkitError):
    """The number does not encode any expression or sequence."""


class CapExceededError(GoedelkitError):
    """Materialized value would exceed the decimal digit cap."""


class TooLargeError(GoedelkitError):
    """Input integer too large to factorize under the digit cap."""


class EmptySequenceError(GoedelkitError):
    """Sequence encodings require at least one element."""


class FormulaSyntaxError(GoedelkitError):
    """Surface-syntax parse failure with position information."""

    def __init__(self, position, expected, found=None):
        self.position = position
        self.expected = expected
        self.found = found
        shown = f", found {found!r}" if found is not None else ""
        super().__init__(f"at position {position}: expected {expected}{shown}")


class ArityError(GoedelkitError):
    """A letter was applied to the wrong number of arguments."""


class ProofSyntaxError(GoedelkitError):
    """Proof-script parse failure with line information."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class BadJustificationRefError(ProofSyntaxError):
    """A justification cites a line at or after the current one."""


class EmptyProofError(GoedelkitError):
    """Proof scripts must contain at least one line."""


class DerivationError(GoedelkitError):
    """A proof-construction step was rejected."""
