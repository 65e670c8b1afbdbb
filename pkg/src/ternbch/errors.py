"""Exception types shared across the package.

The CLI maps these onto its exit codes: parameter problems exit 2,
capacity problems exit 3, verification mismatches exit 4.
"""


class TernbchError(Exception):
    exit_code = 1


class DomainError(TernbchError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    exit_code = 2


class UsageError(TernbchError, ValueError):
    """Arguments are individually valid but combined incorrectly."""

    exit_code = 2


class CapacityError(TernbchError):
    """The request exceeds a table or enumeration budget."""

    exit_code = 3


class VerificationError(TernbchError):
    exit_code = 4
