"""Exceptions shared across the package."""


class ExtcalcError(Exception):
    """Base class for all package errors."""


class InvalidParams(ExtcalcError, ValueError):
    """Raised when arguments violate an operation's preconditions."""


class UnsupportedPair(ExtcalcError):
    """Raised for a functor pair with no known closed form.

    The pairs (S, Gamma), (Lambda, Gamma) and (S, Lambda) have no simple
    description, so they are refused instead of answered with 0.
    """

    def __init__(self, src_kind, tgt_kind, reason=None):
        self.src_kind = src_kind
        self.tgt_kind = tgt_kind
        self.reason = reason or f"no closed form for Ext({src_kind}, {tgt_kind})"
        super().__init__(self.reason)
