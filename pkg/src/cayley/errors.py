"""Exception hierarchy.

Every error raised for a mathematical reason (a table that is not a group,
a subgroup that is not normal, a prime that does not divide the order, ...)
derives from :class:`GroupTheoryError`; the CLI maps those to exit status 2.
"""

from __future__ import annotations


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + " ".join(_fmt(y) for y in x) + ")"
    return str(x)


class GroupTheoryError(Exception):
    """Base class for mathematical failures."""


class MembershipError(GroupTheoryError, KeyError):
    def __init__(self, x, where: str = "group"):
        super().__init__(x)
        self.element = x
        self.where = where

    def __str__(self) -> str:
        return f"{_fmt(self.element)} is not a member of the {self.where}"


class NotAGroupError(GroupTheoryError):
    """A raw table failed validation; ``report`` carries the counterexamples."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class NotSublistError(GroupTheoryError):
    def __init__(self, x):
        self.element = x
        super().__init__(f"element {_fmt(x)} of the candidate subgroup is not in the group")


class NotSubgroupError(GroupTheoryError):
    """The two operations disagree on ``counterexample``."""

    def __init__(self, counterexample):
        self.counterexample = counterexample
        super().__init__(f"operations disagree on {' '.join(map(_fmt, counterexample))}")


class IdentityNotFirstError(GroupTheoryError):
    pass


class NotClosedError(GroupTheoryError):
    def __init__(self, counterexample):
        self.counterexample = counterexample
        x, y = counterexample
        super().__init__(f"not closed: product of {_fmt(x)} and {_fmt(y)} falls outside")


class NotNormalError(GroupTheoryError):
    def __init__(self, counterexample):
        self.counterexample = counterexample
        x, y = counterexample
        super().__init__(f"not normal: conjugate of {_fmt(x)} by {_fmt(y)} leaves the subgroup")


class GuardError(GroupTheoryError):
    pass


class ObligationError(GroupTheoryError):
    """A family construction violated one of its build obligations."""

    def __init__(self, obligation: str, counterexample: tuple):
        self.obligation = obligation
        self.counterexample = counterexample
        super().__init__(f"obligation {obligation!r} fails at {' '.join(map(_fmt, counterexample))}")


class ResourceLimitError(Exception):
    """A construction would exceed the configured size limit."""


class NotConjugateError(GroupTheoryError):
    pass


class PreconditionError(GroupTheoryError):
    pass
