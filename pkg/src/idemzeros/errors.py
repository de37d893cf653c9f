"""Domain error hierarchy shared by all modules and surfaced by the CLI."""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all domain errors; carries a stable machine-readable code."""

    code = "domain-error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidDivisorError(DomainError):
    code = "invalid-divisor"


class NonPrimePowerError(DomainError):
    code = "non-prime-power"


class ModulusMismatchError(DomainError):
    code = "modulus-mismatch"


class GuardExceededError(DomainError):
    code = "guard-exceeded"


class PreconditionError(DomainError):
    code = "precondition-violated"


class DigitChoiceError(DomainError):
    code = "invalid-digit-choice"
