"""Exception hierarchy shared across the package."""


class DiorientError(Exception):
    """Base class for all package-specific errors."""


class BridgeError(DiorientError):
    """The graph has a bridge (or is disconnected), so no strong orientation exists."""


class RangeError(DiorientError):
    """A construction parameter lies outside the family's valid range."""


class ArgumentError(DiorientError):
    """An argument violates an operation's precondition."""


class PreconditionError(DiorientError):
    """Input fails the order/size/bridgeless hypothesis of the bounded orienter."""


class VerificationError(DiorientError):
    """A constructed orientation failed its independent BFS diameter check."""

    def __init__(self, message, pair=None, distance=None):
        super().__init__(message)
        self.pair = pair
        self.distance = distance


class ConflictError(DiorientError):
    """The case machinery demanded both directions of a single edge."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class ExhaustionError(DiorientError):
    """Every orientation strategy failed within its retry caps."""


class CapError(DiorientError):
    """Instance exceeds an enumeration or canonicalization cap."""


class SamplingError(DiorientError):
    """Rejection sampling failed to produce a valid graph within its retry budget."""


class InternalError(DiorientError):
    """An internal consistency assumption was violated; indicates a bug upstream."""


class ParseError(DiorientError):
    """A document failed to parse; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
