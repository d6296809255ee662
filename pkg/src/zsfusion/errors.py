"""Exception types shared across the package."""

from __future__ import annotations


class ZSFusionError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeError(ZSFusionError):
    pass


class FormatError(ZSFusionError):
    pass


class ValidationError(ZSFusionError):
    pass


class ContainmentError(ZSFusionError):
    pass


class FactorizationError(ZSFusionError):
    pass


class AxiomError(ZSFusionError):
    pass


class DomainError(ZSFusionError):
    pass


class NumericError(ZSFusionError):
    pass


class SplittingError(NumericError):
    pass


class RigidityError(ZSFusionError):
    pass


class SubringError(ZSFusionError):
    pass


class ConsistencyError(ZSFusionError):
    pass


class SearchTimeout(ZSFusionError):
    """The isomorphism search gave up; the question is undecided."""
