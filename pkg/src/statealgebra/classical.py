"""States as nonnegative densities on a position-momentum grid.

A state stores the density coefficients rho[i, j] against implicit
delta-normalized cell indicators, sampled at cell midpoints. Magnitude is
the midpoint Riemann sum of the density and is linear under combination
and resize; note that it is a plain integral, not the vector norm (the
norm would add contributions quadratically).
"""

from dataclasses import dataclass
from math import isfinite
from typing import Callable

import numpy as np

from .errors import GridMismatchError

# Round-off from density constructors may dip this far below zero; anything
# lower is rejected as not being a density.
NEGATIVE_DENSITY_TOL = 1e-15


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """Uniform grid over [x_min, x_max] x [p_min, p_max] with nx * np cells."""

    x_min: float
    x_max: float
    p_min: float
    p_max: float
    nx: int
    np: int

    def __post_init__(self) -> None:
        for name in ("x_min", "x_max", "p_min", "p_max"):
            if not isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.x_max > self.x_min:
            raise ValueError("x_max must exceed x_min")
        if not self.p_max > self.p_min:
            raise ValueError("p_max must exceed p_min")
        if self.nx < 1 or self.np < 1:
            raise ValueError("nx and np must be positive")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.nx

    @property
    def dp(self) -> float:
        return (self.p_max - self.p_min) / self.np

    @property
    def cell(self) -> float:
        """Integration measure dx * dp of one grid cell."""
        return self.dx * self.dp

    @property
    def x_points(self) -> np.ndarray:
        return self.x_min + (np.arange(self.nx) + 0.5) * self.dx

    @property
    def p_points(self) -> np.ndarray:
        return self.p_min + (np.arange(self.np) + 0.5) * self.dp


@dataclass(frozen=True, eq=False)
class ClassicalState:
    """Immutable nonnegative density rho of shape (nx, np) on a grid."""

    grid: PhaseSpaceGrid
    rho: np.ndarray

    def __post_init__(self) -> None:
        rho = np.array(self.rho, dtype=np.float64, copy=True)
        if rho.shape != (self.grid.nx, self.grid.np):
            raise ValueError(
                f"rho must have shape {(self.grid.nx, self.grid.np)}, got {rho.shape}"
            )
        if not np.all(np.isfinite(rho)):
            raise ValueError("density entries must be finite")
        if np.any(rho < 0.0):
            raise ValueError("density entries must be nonnegative")
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)


def _require_same_grid(s1: ClassicalState, s2: ClassicalState) -> None:
    if s1.grid != s2.grid:
        raise GridMismatchError("states live on different phase-space grids")


def magnitude(s: ClassicalState) -> float:
    """Total size of the state: the midpoint sum of rho over all cells."""
    return float(s.rho.sum() * s.grid.cell)


def resize(a: float, s: ClassicalState) -> ClassicalState:
    """Scale the state's size by a >= 0; magnitude scales linearly with a."""
    if not (isfinite(a) and a >= 0.0):
        raise ValueError(f"resize factor must be finite and nonnegative, got {a!r}")
    return ClassicalState(s.grid, a * s.rho)


def combine(s1: ClassicalState, s2: ClassicalState) -> ClassicalState:
    """Pointwise density sum; magnitudes add exactly."""
    _require_same_grid(s1, s2)
    return ClassicalState(s1.grid, s1.rho + s2.rho)


def group(s1: ClassicalState, s2: ClassicalState) -> ClassicalState:
    """Put two states together as one.

    Because every part of a density can be tracked on its own, grouping two
    systems carries exactly the same information as combining them, so this
    is the same pointwise sum as :func:`combine`.
    """
    return combine(s1, s2)


def density_at(s: ClassicalState, i: int, j: int) -> float:
    """Density coefficient at cell (i, j), i indexing x and j indexing p."""
    if not (0 <= i < s.grid.nx and 0 <= j < s.grid.np):
        raise IndexError(
            f"cell ({i}, {j}) outside grid of {s.grid.nx} x {s.grid.np} cells"
        )
    return float(s.rho[i, j])


def marginal_position(s: ClassicalState) -> np.ndarray:
    """Position density: momentum integrated out, entry i = sum_j rho[i, j] * dp."""
    return s.rho.sum(axis=1) * s.grid.dp


def from_fn(grid: PhaseSpaceGrid, f: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> ClassicalState:
    """Sample a density function f(x, p) at cell midpoints.

    f must broadcast over numpy arrays. Values below -NEGATIVE_DENSITY_TOL are
    rejected; tiny round-off negatives above it are clipped to zero.
    """
    xg, pg = np.meshgrid(grid.x_points, grid.p_points, indexing="ij")
    values = np.asarray(f(xg, pg), dtype=np.float64)
    if values.shape != (grid.nx, grid.np):
        values = np.broadcast_to(values, (grid.nx, grid.np)).copy()
    if not np.all(np.isfinite(values)):
        raise ValueError("density function produced non-finite values")
    if np.any(values < -NEGATIVE_DENSITY_TOL):
        raise ValueError("density function is negative beyond round-off; not a density")
    return ClassicalState(grid, np.maximum(values, 0.0))
