"""Exception types raised by lensbound.

Input problems subclass :class:`LensboundError` (a ``ValueError``);
:class:`TheoremViolation` signals an internal invariant failure and is
deliberately not a ``ValueError``.
"""


class LensboundError(ValueError):
    """Base class for rejected inputs."""


class NotAUnit(LensboundError):
    pass


class ModulusMismatch(LensboundError):
    pass


class InvalidWitness(LensboundError):
    pass


class BudgetExceeded(LensboundError):
    pass


class NotPrime(LensboundError):
    pass


class PrimeTooSmall(LensboundError):
    pass


class UnsupportedOrder(LensboundError):
    pass


class NonDivisible(LensboundError):
    pass


class InvalidLedger(LensboundError):
    pass


class IncompatibleTwist(LensboundError):
    pass


class EvenDegree(LensboundError):
    pass


class NonIsolated(LensboundError):
    pass


class TheoremViolation(RuntimeError):
    """A computed result contradicts a proven equivalence; always a bug."""
