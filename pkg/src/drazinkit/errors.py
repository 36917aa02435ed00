"""Exception types shared across the package."""


class DrazinError(Exception):
    """Base class for errors raised by drazinkit."""


class ShapeError(DrazinError, ValueError):
    """Operands are not conformable."""


class SingularMatrixError(DrazinError, ValueError):
    """An ordinary inverse was requested for a singular matrix."""


class InvariantViolation(DrazinError, RuntimeError):
    """An internal construction broke an invariant that valid input cannot break."""


class HypothesisViolated(DrazinError):
    """A representation formula was applied outside its hypotheses.

    ``report`` is the :class:`~drazinkit.additive.HypothesisReport` whose
    failing conditions carry the nonzero product as witness.
    """

    def __init__(self, report):
        self.report = report
        failed = ", ".join(report.failed())
        super().__init__(f"{report.formula}: condition(s) {failed} do not hold")


class SeriesNotValidated(DrazinError, RuntimeError):
    """A truncated series result failed the Drazin axioms."""


class GenerationExhausted(DrazinError, RuntimeError):
    """The instance generator ran out of retries for a case."""
