"""States as complex amplitude vectors over one coordinate at a time.

Amplitudes are sampled at cell midpoints and carry density normalization:
inner products and magnitudes are weighted by the cell measure, so a state
concentrated on a single cell with amplitude 1/sqrt(dx) has magnitude 1.
Magnitude here is the squared norm, which makes the square root of the
magnitude the linear quantity: combining two states adds amplitudes, and
the resulting magnitude picks up the interference cross term
2*sqrt(M1*M2)*Corr with Corr the normalized real part of the inner product.

A state is expressed in a single basis, position or momentum. The change of
basis is the unitary centered discrete Fourier transform (hbar = 1)

    phi[k] = dx / sqrt(2*pi) * sum_j psi[j] * exp(-i * p_k * x_j)

with p_k = 2*pi*(k - n/2) / (n * dx), so p covers [-pi/dx, pi/dx) with the
same number of cells. Using the actual x_j values (not just the offsets
j*dx) keeps grids that are not centered at zero transforming correctly.
The direct O(n^2) matrix form is exact up to rounding and fast enough for
desk-scale n; it is also O(n^2) memory, so keep n at a few thousand.
"""

import warnings
from dataclasses import dataclass
from math import isfinite, pi, sqrt

import numpy as np

from .algebra import corr_to_angle
from .errors import BasisError, GridMismatchError

POSITION = "position"
MOMENTUM = "momentum"


@dataclass(frozen=True)
class Grid1D:
    """Uniform 1-D grid of n cells over [lo, hi], sampled at midpoints."""

    lo: float
    hi: float
    n: int

    def __post_init__(self) -> None:
        if not (isfinite(self.lo) and isfinite(self.hi)):
            raise ValueError("grid bounds must be finite")
        if not self.hi > self.lo:
            raise ValueError("hi must exceed lo")
        if self.n < 2:
            raise ValueError("grid needs at least 2 cells")

    @property
    def step(self) -> float:
        """Cell width, which is also the integration measure per cell."""
        return (self.hi - self.lo) / self.n

    @property
    def points(self) -> np.ndarray:
        return self.lo + (np.arange(self.n) + 0.5) * self.step


@dataclass(frozen=True)
class ProductGrid:
    """Composite lattice of two grids; cells are pairs with measure dx1 * dx2."""

    first: Grid1D
    second: Grid1D

    @property
    def n(self) -> int:
        return self.first.n * self.second.n

    @property
    def step(self) -> float:
        return self.first.step * self.second.step


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Immutable complex amplitude vector tagged with its basis.

    Momentum-basis states remember the position grid they came from
    (source_grid) so the inverse transform can rebuild the original
    coordinates; they only arise through :func:`to_momentum_basis`.
    Two-system states built by :func:`group` live on a ProductGrid and
    carry the pair of their factors' basis tags.
    """

    grid: "Grid1D | ProductGrid"
    amplitudes: np.ndarray
    basis: "str | tuple[str, str]" = POSITION
    source_grid: "Grid1D | None" = None

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=np.complex128, copy=True)
        if amps.shape != (self.grid.n,):
            raise ValueError(f"amplitudes must have shape ({self.grid.n},), got {amps.shape}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        if isinstance(self.grid, ProductGrid):
            if not (isinstance(self.basis, tuple) and len(self.basis) == 2):
                raise ValueError("two-system states need a pair of basis tags")
        elif self.basis not in (POSITION, MOMENTUM):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        elif self.basis == MOMENTUM and self.source_grid is None:
            raise ValueError("momentum-basis states must carry their source position grid")
        elif self.basis == POSITION and self.source_grid is not None:
            raise ValueError("position-basis states carry no source grid")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)


def _require_compatible(s1: QuantumState, s2: QuantumState) -> None:
    if s1.grid != s2.grid or s1.basis != s2.basis or s1.source_grid != s2.source_grid:
        raise GridMismatchError("states live on different grids or bases")


def magnitude(s: QuantumState) -> float:
    """Squared norm: sum of |amplitude|^2 times the cell measure."""
    return float(np.sum(np.abs(s.amplitudes) ** 2) * s.grid.step)


def inner(s1: QuantumState, s2: QuantumState) -> complex:
    """Measure-weighted inner product, conjugate-linear in the first slot."""
    _require_compatible(s1, s2)
    return complex(np.vdot(s1.amplitudes, s2.amplitudes) * s1.grid.step)


def combine(s1: QuantumState, s2: QuantumState) -> QuantumState:
    """Pointwise amplitude sum; magnitudes interfere through the cross term."""
    _require_compatible(s1, s2)
    return QuantumState(s1.grid, s1.amplitudes + s2.amplitudes, s1.basis, s1.source_grid)


def group(s1: QuantumState, s2: QuantumState) -> QuantumState:
    """Two-system state with amplitudes psi1[i] * psi2[j] on the product lattice.

    Magnitude is multiplicative, M(group) = M(s1) * M(s2); that follows from
    the inner product on the composite lattice. Only one tensor level is
    supported: grouping an already grouped state raises.
    """
    if isinstance(s1.grid, ProductGrid) or isinstance(s2.grid, ProductGrid):
        raise ValueError("grouping supports a single tensor level")
    amps = np.kron(s1.amplitudes, s2.amplitudes)
    return QuantumState(ProductGrid(s1.grid, s2.grid), amps, (s1.basis, s2.basis))


def resize(a: float, s: QuantumState) -> QuantumState:
    """Scale the state's size by a >= 0: amplitudes pick up sqrt(a)."""
    if not (isfinite(a) and a >= 0.0):
        raise ValueError(f"resize factor must be finite and nonnegative, got {a!r}")
    return QuantumState(s.grid, sqrt(a) * s.amplitudes, s.basis, s.source_grid)


def apply_phase(b: float, s: QuantumState) -> QuantumState:
    """Multiply all amplitudes by exp(i*b).

    The magnitude is unchanged; what changes is the correlation between this
    state and every other state, which is how relative phase enters the
    combination law.
    """
    if not isfinite(b):
        raise ValueError(f"phase must be finite, got {b!r}")
    return QuantumState(s.grid, np.exp(1j * b) * s.amplitudes, s.basis, s.source_grid)


def correlation(s1: QuantumState, s2: QuantumState) -> float:
    """Correlation in [-1, 1]: Re<s1|s2> / sqrt(M(s1) * M(s2)).

    This is the unique scalar that makes the combination law an identity for
    amplitude addition. Cauchy-Schwarz bounds it by 1 up to rounding; the
    result is clamped. Undefined for zero-magnitude states.
    """
    m1 = magnitude(s1)
    m2 = magnitude(s2)
    if m1 == 0.0 or m2 == 0.0:
        raise ValueError("correlation is undefined for zero-magnitude states")
    c = inner(s1, s2).real / sqrt(m1 * m2)
    return min(1.0, max(-1.0, c))


def correlation_angle(s1: QuantumState, s2: QuantumState) -> float:
    """Angle in [0, pi] whose cosine is the correlation of the two states."""
    return corr_to_angle(correlation(s1, s2))


def _momentum_coordinates(grid: Grid1D) -> np.ndarray:
    # p_k = 2*pi*(k - n/2) / (n*dx); both transform directions must use the
    # exact same array for the finite sums to invert each other.
    return 2.0 * pi * (np.arange(grid.n) - grid.n / 2) / (grid.n * grid.step)


def to_momentum_basis(s: QuantumState) -> QuantumState:
    """Re-express a position-basis state over momentum.

    Applies the unitary centered transform described in the module docstring.
    The result is tagged momentum, lives on p in [-pi/dx, pi/dx) with the
    same cell count, and preserves the magnitude (Parseval).
    """
    if s.basis != POSITION:
        raise BasisError("to_momentum_basis needs a position-basis state")
    g = s.grid
    p = _momentum_coordinates(g)
    dp = 2.0 * pi / (g.n * g.step)
    fwd = np.exp(-1j * np.outer(p, g.points)) * (g.step / sqrt(2.0 * pi))
    phi = fwd @ s.amplitudes
    p_grid = Grid1D(p[0] - dp / 2.0, p[-1] + dp / 2.0, g.n)
    return QuantumState(p_grid, phi, MOMENTUM, source_grid=g)


def to_position_basis(s: QuantumState) -> QuantumState:
    """Invert :func:`to_momentum_basis`, restoring the original grid."""
    if s.basis != MOMENTUM:
        raise BasisError("to_position_basis needs a momentum-basis state")
    g = s.source_grid
    p = _momentum_coordinates(g)
    dp = 2.0 * pi / (g.n * g.step)
    inv = np.exp(+1j * np.outer(g.points, p)) * (dp / sqrt(2.0 * pi))
    return QuantumState(g, inv @ s.amplitudes, POSITION)


def normalize(s: QuantumState) -> QuantumState:
    """Rescale to unit magnitude, the convention for physical states."""
    m = magnitude(s)
    if m == 0.0:
        raise ValueError("cannot normalize a zero-magnitude state")
    return resize(1.0 / m, s)


def gaussian_wavepacket(grid: Grid1D, x0: float, p0: float, sigma: float) -> QuantumState:
    """Normalized Gaussian packet centered at x0 with mean momentum p0.

    Amplitudes follow exp(-(x - x0)^2 / (4*sigma^2)) * exp(i*p0*x) before
    numeric normalization, so |psi|^2 has position spread sigma. Warns when
    the 5-sigma support spills past the grid bounds.
    """
    if not sigma > 0.0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    if x0 - 5.0 * sigma < grid.lo or x0 + 5.0 * sigma > grid.hi:
        warnings.warn(
            f"wavepacket support [{x0 - 5 * sigma:g}, {x0 + 5 * sigma:g}] is not "
            f"contained in the grid [{grid.lo:g}, {grid.hi:g}]",
            stacklevel=2,
        )
    x = grid.points
    amps = np.exp(-((x - x0) ** 2) / (4.0 * sigma**2)) * np.exp(1j * p0 * x)
    return normalize(QuantumState(grid, amps, POSITION))


def basis_stddev(s: QuantumState) -> float:
    """Standard deviation of the current basis coordinate under |psi|^2.

    For a minimal Gaussian packet the position and momentum spreads multiply
    to 1/2 (hbar = 1); no state sharpens both below that floor.
    """
    if isinstance(s.grid, ProductGrid):
        raise ValueError("basis_stddev needs a single-coordinate state")
    m = magnitude(s)
    if m == 0.0:
        raise ValueError("basis spread is undefined for zero-magnitude states")
    weights = (np.abs(s.amplitudes) ** 2) * s.grid.step / m
    coords = s.grid.points
    mean = float(np.sum(weights * coords))
    var = float(np.sum(weights * (coords - mean) ** 2))
    return sqrt(var)
