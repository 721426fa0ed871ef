"""Exception hierarchy shared by every module."""


class MatherLiftError(Exception):
    """Base class for all errors raised by matherlift."""


class VariableContextError(MatherLiftError, ValueError):
    """Operands live in polynomial rings with different variable lists."""


class HomogeneityError(MatherLiftError, ValueError):
    pass


class SaturationLimitError(MatherLiftError, RuntimeError):
    pass


class IndeterminateOrderError(MatherLiftError, ArithmeticError):
    """A truncated series is zero up to its truncation; re-run with a larger one."""


class DimensionMismatchError(MatherLiftError, ValueError):
    pass


class GenericityError(MatherLiftError, RuntimeError):
    """Seeded random choices kept landing on a special position."""


class BadFlagError(GenericityError):
    pass


class NonUniqueLiftError(MatherLiftError, ArithmeticError):
    """The pairing system of a codimension-one lift is singular."""


class PropertyViolation(MatherLiftError, AssertionError):
    pass


class ScenarioFailure(MatherLiftError, AssertionError):
    def __init__(self, quantity, expected, got):
        self.quantity = quantity
        self.expected = expected
        self.got = got
        super().__init__(f"{quantity}: expected {expected}, got {got}")
