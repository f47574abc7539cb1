"""Exception types raised on invalid inputs and guarded computations."""


class KnormalError(Exception):
    """Base class for every library-specific error."""


class NotPrimePower(KnormalError):
    """A value required to be p**m for a single prime p is not."""


class NotCoprime(KnormalError):
    """Two values required to be coprime share a factor."""


class NotCoprimeCase(KnormalError):
    """The coprime-only counting formula was applied with gcd(n, q) > 1."""


class InputTooLarge(KnormalError):
    """A structural input (extension degree) exceeds the documented bound."""


class KOutOfRange(KnormalError):
    """A normality defect k outside 0..n was requested."""


class EnumerationTooLarge(KnormalError):
    """The reference tuple enumeration would exceed its size guard."""


class InstanceTooLarge(KnormalError):
    """A brute-force field sweep over q**n elements exceeds its guard."""


class InternalInconsistency(KnormalError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class BothZero(KnormalError):
    """gcd(0, 0) was requested."""
