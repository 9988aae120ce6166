"""Exception hierarchy shared by the library and the command line."""


class HankelError(Exception):
    """Base class for all library errors."""


class ParseError(HankelError, ValueError):
    """Malformed polynomial or rational text."""

    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class PreconditionError(HankelError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class NotAPowerSeriesError(PreconditionError):
    def __init__(self, message="not a power series: denominator vanishes at 0"):
        super().__init__(message)


class InsufficientQuotientsError(PreconditionError):
    def __init__(self, message="need more quotient steps"):
        super().__init__(message)


class SingularHankelError(PreconditionError):
    pass


class EndpointRootError(PreconditionError):
    pass


class NotSquarefreeError(PreconditionError):
    """Raised when gcd(f, f') is nontrivial; ``witness`` holds that gcd."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"polynomial is not squarefree: gcd(f, f') = {witness}")


class OrderedFieldRequired(HankelError, TypeError):
    def __init__(self, message="ordered field required"):
        super().__init__(message)


class OracleMismatchError(HankelError):
    pass
