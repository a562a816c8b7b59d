"""Exception taxonomy shared across the package.

Anything that is the caller's fault (bad schema, bad config, mismatched
shapes, empty inputs) raises :class:`ValidationError`; numerical blow-ups
during optimization raise :class:`NumericalError`.  Plain I/O failures are
left to the builtin ``OSError`` family.
"""


class LidlabError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(LidlabError):
    """Invalid input, schema, configuration, or shape."""


class NumericalError(LidlabError):
    """Non-finite loss/gradient/objective encountered; run aborted."""
