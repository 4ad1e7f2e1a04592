class InvalidInputError(ValueError):
    """A value violates a documented precondition (bad sizes, labels, formats)."""


class ResourceLimitError(RuntimeError):
    """An exact algorithm was asked to run beyond its configured size limit."""
