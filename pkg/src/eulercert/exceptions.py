"""Exception types raised by the eulercert library.

Library functions raise; the verifiers in :mod:`eulercert.identities`
catch :class:`PreconditionError` at their boundary and turn it into an
``error`` certificate instead.
"""


class EulerCertError(Exception):
    """Base class for all eulercert errors."""


class PreconditionError(EulerCertError, ValueError):
    """An argument violates an operation's precondition (odd modulus, even p, ...)."""


class NonCancellingPoleError(EulerCertError, ArithmeticError):
    """A series quotient whose numerator vanishes to lower order than its denominator."""


class TruncationError(EulerCertError, IndexError):
    """A coefficient was requested at or beyond a truncated series' order."""
