"""Exception types shared across the package."""


class NotAdmissible(ValueError):
    """The polynomial has no representation of the requested kind."""


class NotAchievable(ValueError):
    """The Hilbert function is not realizable inside the given free module."""


class PreconditionViolated(ValueError):
    """An operation was invoked outside its stated hypotheses."""


class InvariantViolated(RuntimeError):
    """A cross-check that must hold for valid inputs failed; indicates a bug."""


class NotStable(ValueError):
    """The monomial ideal is not stable."""


class ZeroModule(ValueError):
    """The operation is undefined for the zero module."""


class RankMismatch(ValueError):
    """The polynomial's leading term is inconsistent with the claimed rank."""


class NonIntegralChern(ValueError):
    """Extracted Chern classes are not integers."""


class BudgetExceeded(RuntimeError):
    """A configurable work limit was hit before the computation finished."""
