"""Exception types shared across the package.

Domain errors (bad arguments such as a non-positive denominator) raise
plain ValueError; the classes below mark operation-level failures that
callers, notably the CLI, dispatch on.
"""


class MachinError(Exception):
    """Base class for operation failures."""


class GenerationCutoffError(MachinError):
    """A term denominator exceeded the digit budget and partial mode is off."""


class PrecisionUnachievableError(MachinError):
    """A partial formula is too short to bound the tail at the requested precision."""


class FoldError(MachinError):
    """Arctangent folding hit a zero denominator (tangent passing through pi/2)."""


class IncompleteFormulaError(MachinError):
    """The operation needs a complete formula but got a partial one."""
