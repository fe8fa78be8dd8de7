"""Shared exception types."""


class SizeBoundError(RuntimeError):
    """A configured resource bound (crossings, raw states) was exceeded."""


class InternalCheckError(RuntimeError):
    """An identity that holds by construction failed; indicates a bug."""
