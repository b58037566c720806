"""Exception types shared across the library."""

from __future__ import annotations


class VlseriesError(Exception):
    """Base class for all library errors."""


class ModelMismatch(VlseriesError):
    """Two elements live on different index sets."""


class BadGrid(VlseriesError):
    """Modulus grid size below the minimum of 4."""


class NegativeInput(VlseriesError):
    """A positive element was required."""


class NotInvertible(VlseriesError):
    """Inversion failed; carries the vanishing points."""

    def __init__(self, points: tuple[str, ...]):
        self.points = points
        super().__init__(f"not invertible, vanishes at {list(points)}")


class NotDecreasing(VlseriesError):
    """A sequence required to be decreasing is not."""


class Unbounded(VlseriesError):
    """A sequence is not order bounded; carries the offending coordinates."""

    def __init__(self, points: tuple[str, ...]):
        self.points = points
        super().__init__(f"not order bounded at {list(points)}")


class EmptySet(VlseriesError):
    """An operation over a set of elements received the empty set."""


class NotStrictlyDominated(VlseriesError):
    """|a| << e fails; carries the coordinates where the modulus reaches 1."""

    def __init__(self, points: tuple[str, ...]):
        self.points = points
        super().__init__(f"|a| << e fails at {list(points)}")


class NotClosedForm(VlseriesError):
    """Exact analysis was requested for a black-box sequence."""


class NotWeakOrderUnit(VlseriesError):
    """An element required to be a weak order unit is not."""


class SeriesDiverges(VlseriesError):
    """A series that must converge in order does not."""


class HypothesisFailed(VlseriesError):
    """An Abel approach-sequence hypothesis fails; ``which`` is 'i', 'ii' or 'iii'."""

    def __init__(self, which: str, detail: str = ""):
        self.which = which
        super().__init__(f"hypothesis ({which}) failed" + (f": {detail}" if detail else ""))
