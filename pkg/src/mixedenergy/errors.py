"""Exception types shared across modules."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class MixedGraphFormatError(ValueError):
    """Malformed mixed-graph JSON."""


class InvalidSwitchingError(ValueError):
    """A switching function changes sign across an undirected edge."""


class CriterionNotApplicable(ValueError):
    """The 4-cycle optimality criterion is outside its admissible domain."""


class ConvergenceError(ArithmeticError):
    """The Jacobi sweep budget ran out before the off-diagonal norm dropped below tolerance."""


class VerificationError(AssertionError):
    """A reproduced result did not match its expected value."""


class SpectrumError(ArithmeticError):
    """A computed spectrum failed a consistency check (pairing or moment identities)."""
