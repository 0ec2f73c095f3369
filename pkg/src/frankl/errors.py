"""Exception hierarchy.

The CLI maps these onto exit codes: ``FamilyError`` -> 2,
``PreconditionError`` -> 3, ``InternalCheckError`` -> 4.
"""


class FamilyError(ValueError):
    """Malformed family input (bad JSON, unused labels, empty member list)."""


class DomainError(ValueError):
    """An argument lies outside the family it is interpreted in."""


class SizeOverflowError(RuntimeError):
    """A closure grew past the configured member cap."""


class PreconditionError(ValueError):
    """A hypothesis of the construction being run does not hold.

    ``hypothesis`` names the violated condition, e.g. ``"separating"``.
    """

    def __init__(self, message, hypothesis=None, witness=None):
        super().__init__(message)
        self.hypothesis = hypothesis
        self.witness = witness


class NotAbundantError(PreconditionError):
    """No injection F_x^c -> F_x exists because |F_x^c| > |F_x|."""


class InternalCheckError(AssertionError):
    """A constructed object failed its own verification.

    Raised when a witness is not injective or lands outside F_x, or when a
    step guaranteed by a theorem does not hold.  Never expected to fire.
    """
