"""Exception hierarchy shared across the package."""


class TriscopeError(Exception):
    """Base class for every error raised by triscope."""


class UnknownIdError(TriscopeError):
    """An element id lies outside the addressed axis."""


class UnknownLabelError(TriscopeError):
    """A label does not occur on the addressed axis."""


class NotIncidentError(TriscopeError):
    """A generator pair/triple is not part of the incidence relation."""


class EmptySetError(TriscopeError):
    """A density was requested over an empty extent, intent or modus."""


class InvalidAxisError(TriscopeError):
    """An axis or plane selector is not one of the defined choices."""


class EmptyStoreError(TriscopeError):
    """An operation needs at least one tricluster in the store."""


class CapExceededError(TriscopeError):
    """A brute-force enumeration cap was exceeded.

    Exhaustive concept listings are deliberately desk-scale; for larger
    contexts use the tricluster relaxation (`triscope.mining`) instead.
    """


class MalformedLineError(TriscopeError):
    """A triple file line could not be parsed; carries the line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class GenerationCapError(TriscopeError):
    """A synthetic context would exceed the configured cell cap."""
