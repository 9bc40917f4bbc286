"""Error types shared across the package.

Every failure mode that callers are expected to catch gets its own class;
anything else is a plain assertion (an internal invariant, not an API).
"""


class ZeroPolynomial(Exception):
    """Leading term requested of the zero polynomial."""


class InvalidRule(Exception):
    """A rewrite rule or system violates a construction invariant."""


class MalformedElement(Exception):
    """A tensor element's chain part is not a chain of the claimed degree."""


class NotInKernel(Exception):
    """split() was handed an element outside the kernel of the previous map."""


class NonTerminating(Exception):
    """The elimination loop failed to make progress (broken basis)."""


class TruncationExceeded(Exception):
    """A computation needs words longer than the configured degree cap."""


class ConditionViolated(Exception):
    """The fast differential disagrees with the generic engine."""


class FormulaMismatch(Exception):
    """A closed-form differential disagrees with the generic engine."""


class InvalidGraph(Exception):
    """Graph input references unknown vertices or repeats names."""


class HomotopyFailure(Exception):
    """The contracting homotopy identity failed on some chain."""

    def __init__(self, degree, failures):
        self.degree = degree
        self.failures = list(failures)
        super().__init__(
            f"homotopy identity failed in degree {degree} "
            f"on {len(self.failures)} chain(s)"
        )


class GraphDocumentError(Exception):
    """Graph document text failed to parse; carries a line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
