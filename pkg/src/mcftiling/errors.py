"""Exception hierarchy shared by every module.

Everything raised on purpose derives from :class:`MCFError` so the command
line front end can map domain failures to exit status 1.
"""


class MCFError(Exception):
    """Base class for domain errors."""


class ZeroDenominator(MCFError, ZeroDivisionError):
    """A convergent or nested fraction has a vanishing denominator."""


class NumericInstability(MCFError, ArithmeticError):
    """Floating expansion produced a magnitude beyond the zero tolerance."""


class MixedModeRequired(MCFError, ValueError):
    """A plain tiling count was asked for conditions with negative entries."""


class InvalidMixedConditions(MCFError, ValueError):
    """Signed height conditions break the mixed-tiling side conditions.

    ``cell`` is the offending position and ``rule`` the side condition that
    failed, e.g. ``"b<0, c>=0 requires a>|b|"``.
    """

    def __init__(self, message, cell=None, rule=None):
        super().__init__(message)
        self.cell = cell
        self.rule = rule


class InstanceTooLarge(MCFError, ValueError):
    """The brute-force enumerator refused an instance above its budget."""

    def __init__(self, message, estimate=None, budget=None):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget
