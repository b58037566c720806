"""Active tolerance configuration for approximate-mode comparisons.

Exact-mode (rational) arithmetic never consults tolerances.  Whenever a
float is involved, comparisons use the active :class:`ToleranceConfig`,
held in a context variable so that library code never threads an extra
argument through every call (the same pattern as :mod:`decimal` contexts).
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar
from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    """Comparison / convergence tolerances and the default modulus grid size.

    eps_cmp   relative tolerance for scalar comparisons (scale = max(1, |lhs|, |rhs|))
    eps_conv  tolerance for convergence detection and certified sums
    grid_K    default grid size for the supremum form of the modulus
    """

    eps_cmp: float = 1e-12
    eps_conv: float = 1e-10
    grid_K: int = 2048

    def __post_init__(self):
        if not (self.eps_cmp > 0 and self.eps_conv > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.grid_K < 4:
            raise ValueError("grid_K must be at least 4")


_active: ContextVar[ToleranceConfig] = ContextVar("vlseries_tolerance", default=ToleranceConfig())


def active_tolerance() -> ToleranceConfig:
    """The tolerance configuration in effect for the current context."""
    return _active.get()


def set_tolerance(config: ToleranceConfig) -> None:
    """Install ``config`` as the active tolerance configuration."""
    _active.set(config)


@contextlib.contextmanager
def tolerance(config: ToleranceConfig):
    """Run a block under ``config``, restoring the previous configuration after."""
    token = _active.set(config)
    try:
        yield config
    finally:
        _active.reset(token)
