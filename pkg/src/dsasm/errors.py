"""Exceptions and the check-report record shared across the package."""

from dataclasses import dataclass


@dataclass
class CheckReport:
    """Outcome of one machine check of an identity/property/conjecture.

    ``ok`` is None for checks that merely record a verdict on a conjecture
    rather than pass/fail a proven statement.
    """

    name: str
    ok: bool
    detail: str = ""

    def __bool__(self):
        return bool(self.ok)

    def __str__(self):
        tag = "PASS" if self.ok else ("FAIL" if self.ok is not None else "INFO")
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


class DivisionError(ArithmeticError):
    """An exact division had a nonzero remainder.

    Divisions in this package are guaranteed exact by polynomial identities,
    so a nonzero remainder signals a broken identity upstream, not bad input.
    """


class NotASeriesError(ValueError):
    """A rational function has no power-series expansion at the origin."""


class TruncationError(IndexError):
    """A series coefficient beyond the truncation order was requested."""


class ParityError(ValueError):
    """A Pfaffian was requested for an odd-sized array."""


class SingularParamError(ZeroDivisionError):
    """A parameter hit a zero denominator of a weight or formula."""


class ResourceLimit(RuntimeError):
    """An enumeration or computation exceeded its configured guard."""


class InternalIdentityError(AssertionError):
    """Two formulas that must agree (by a proven identity) disagreed."""


class IdentityFailure(AssertionError):
    """A non-conjectural cross-check between two routes failed."""


class BijectionError(ValueError):
    """An ill-formed six-vertex configuration was supplied."""


class EmptyClassError(ValueError):
    """A count was requested for an n at which the class is empty."""


class RegimeError(ValueError):
    """An asymptotic expansion was evaluated outside its regime guard."""


class FitError(RuntimeError):
    """The asymptotic fit is ill-conditioned or under-determined."""
