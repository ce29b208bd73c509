"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code raises the
most specific type that applies instead of bare ValueError wherever the
condition is one a caller can meaningfully dispatch on.
"""


class GraphFormatError(ValueError):
    """Malformed graph input: bad header, self-loop, duplicate edge, bad vertex."""


class DisconnectedGraphError(ValueError):
    """An operation that requires a connected graph received a disconnected one."""


class SizeCapExceededError(ValueError):
    """Instance exceeds a configured size or search cap."""


class UnrecognizedClassError(ValueError):
    """Graph does not match any class with a closed-form construction."""
