"""Exception hierarchy shared by every module of the package."""


class SneddonError(ValueError):
    """Base class for all domain errors raised by the package."""


class PoleProximity(SneddonError):
    """An argument sits too close to a pole or an excluded integer."""


class OrderOutOfRange(SneddonError):
    pass


class DivergentAtOne(SneddonError):
    """A hypergeometric series was requested at t = 1 outside Gauss summability."""


class SlowConvergence(SneddonError):
    pass


class ConvergenceFailure(SneddonError):
    pass


class IndexOutOfRange(SneddonError, IndexError):
    pass


class ZeroConstantTerm(SneddonError, ZeroDivisionError):
    pass


class DivergentParameters(SneddonError):
    """Series parameters violate the absolute-convergence condition."""


class BoundaryNotAllowed(DivergentParameters):
    pass


class TruncationBudgetExceeded(SneddonError):
    pass


class UnsupportedLimitCase(SneddonError):
    pass


class GrowthConditionViolated(SneddonError):
    pass


class NumericDifferentiationUnstable(SneddonError):
    pass


class ParameterConditionViolated(SneddonError):
    pass


class IntegerOrderUnsupported(SneddonError):
    pass


class FitIllConditioned(SneddonError):
    pass


class QuadratureFailure(SneddonError):
    pass
