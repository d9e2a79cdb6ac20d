"""Exception types shared across the package.

Exit-code mapping for the CLI: InputError -> 1, ConfigError -> 2.
"""


class CondensekitError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(CondensekitError):
    """Bad or unreadable input data (corpus files, fact files, log-prob files)."""

    exit_code = 1


class ConfigError(CondensekitError):
    """Invalid configuration value or unknown configuration key."""

    exit_code = 2


class OracleError(CondensekitError):
    """An entailment oracle failed; surfaced explicitly, never as a silent zero."""

    exit_code = 1
