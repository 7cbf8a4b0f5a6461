"""Exception taxonomy shared across the toolkit.

The CLI maps these onto distinct exit codes: configuration problems (2),
data problems (3), everything else (4).
"""


class YuemtError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(YuemtError):
    """Invalid configuration: bad pattern rule, unknown key, bad value."""


class DataError(YuemtError):
    """Problem with input data (parse, integrity, size)."""


class ParseError(DataError):
    """Malformed record in a data file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IntegrityError(DataError):
    """Corpus-level consistency violation, e.g. duplicate ids."""


class SizeError(DataError):
    """Requested sizes exceed what the data can provide."""


class ContractError(YuemtError):
    """Caller violated an operation precondition (direction or length mismatch)."""


class DescriptorError(YuemtError):
    """Model descriptor is unknown, unparsable, or not found in the registry."""


class DependencyError(YuemtError):
    """A required upstream artifact (e.g. a registered generator model) is missing."""


class BackendError(YuemtError):
    """A translation backend failed; the underlying cause is chained."""


class AdapterUnavailableError(YuemtError):
    """An external metric adapter could not be reached; scores degrade to n/a."""


class ExperimentError(YuemtError):
    """A training run aborted; partial learning curve has been persisted."""
