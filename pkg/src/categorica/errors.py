class CategoricaError(Exception):
    """Base class for the package's own errors."""


class MalformedError(CategoricaError, ValueError):
    """A statement or premise pair does not have the required shape."""


class OutOfDomain(CategoricaError, ValueError):
    """The query is meaningless for this input (e.g. canonicalizing a PCP with no conclusion)."""


class CapabilityError(CategoricaError, RuntimeError):
    """The requested method cannot decide the query at this size."""
