"""Named desk-scale experiments contrasting the two state realizations.

Each scenario resolves a :class:`ScenarioConfig` into a deterministic
:class:`ScenarioReport`: fixed column names, rows of plain floats, and the
full configuration echoed as metadata so the emitted CSV is self-describing.
Identical configs produce byte-identical CSV.

Scenarios:
    interference      position density of two combined packets, quantum vs
                      classical (matched marginals, sigma_x = sigma and
                      sigma_p = 1/(2*sigma))
    correlation-sweep measured vs predicted combined magnitude as a relative
                      phase sweeps [0, 2*pi)
    uncertainty       position/momentum spreads and their product across
                      packet widths sigma/2, sigma, 2*sigma
    basis-roundtrip   magnitude conservation and round-trip error of the
                      basis change for n = 64, 256, 1024
    group-demo        magnitude multiplicativity of two-system states on
                      seeded random inputs
"""

import math
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from . import classical, quantum
from .algebra import combined_magnitude

SCENARIOS = (
    "interference",
    "correlation-sweep",
    "uncertainty",
    "basis-roundtrip",
    "group-demo",
)

ROUNDTRIP_SIZES = (64, 256, 1024)
GROUP_DEMO_ROWS = 6


@dataclass
class ScenarioConfig:
    """Resolved parameters of one scenario run.

    nx and np default to n so quantum and classical position cells coincide.
    The output and plot destinations are not part of the scenario itself and
    are not echoed into report metadata.
    """

    scenario: str
    n: int = 512
    nx: "int | None" = None
    np: "int | None" = None
    xmin: float = -10.0
    xmax: float = 10.0
    pmin: float = -10.0
    pmax: float = 10.0
    sigma: float = 1.0
    d: float = 4.0
    p0: float = 0.0
    b: float = 0.0
    step: float = math.pi / 32
    seed: int = 0
    out: "str | None" = None
    plot: "str | None" = None

    def resolved(self) -> "ScenarioConfig":
        cfg = ScenarioConfig(**vars(self))
        if cfg.nx is None:
            cfg.nx = cfg.n
        if cfg.np is None:
            cfg.np = cfg.n
        if cfg.scenario not in SCENARIOS:
            raise ValueError(f"unknown scenario {cfg.scenario!r}; choose from {', '.join(SCENARIOS)}")
        if cfg.step <= 0.0:
            raise ValueError("step must be positive")
        if cfg.sigma <= 0.0:
            raise ValueError("sigma must be positive")
        return cfg


@dataclass
class ScenarioReport:
    """Column names, data rows, and the key/value metadata echo."""

    scenario: str
    columns: "list[str]"
    rows: "list[tuple[float, ...]]" = field(default_factory=list)
    metadata: "list[tuple[str, str]]" = field(default_factory=list)

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("every row must match the declared columns")


def format_real(v: float) -> str:
    """17 significant digits: lossless round trip for doubles, '1' for 1.0."""
    return "%.17g" % float(v)


def _metadata(cfg: ScenarioConfig) -> "list[tuple[str, str]]":
    meta = [("scenario", cfg.scenario)]
    for key in ("n", "nx", "np", "seed"):
        meta.append((key, str(getattr(cfg, key))))
    for key in ("xmin", "xmax", "pmin", "pmax", "sigma", "d", "p0", "b", "step"):
        meta.append((key, format_real(getattr(cfg, key))))
    return meta


def _interference(cfg: ScenarioConfig) -> ScenarioReport:
    """Position density of two displaced packets: amplitudes add on the
    quantum side, densities add on the classical side."""
    if cfg.nx != cfg.n:
        raise ValueError("interference needs nx == n so both columns share x cells")
    grid = quantum.Grid1D(cfg.xmin, cfg.xmax, cfg.n)
    s1 = quantum.gaussian_wavepacket(grid, -cfg.d / 2.0, cfg.p0, cfg.sigma)
    s2 = quantum.apply_phase(cfg.b, quantum.gaussian_wavepacket(grid, +cfg.d / 2.0, cfg.p0, cfg.sigma))
    q_density = np.abs(quantum.combine(s1, s2).amplitudes) ** 2

    cgrid = classical.PhaseSpaceGrid(cfg.xmin, cfg.xmax, cfg.pmin, cfg.pmax, cfg.nx, cfg.np)
    sigma_p = 1.0 / (2.0 * cfg.sigma)

    def packet(x0: float):
        norm = 1.0 / (2.0 * math.pi * cfg.sigma * sigma_p)
        return lambda x, p: norm * np.exp(
            -((x - x0) ** 2) / (2.0 * cfg.sigma**2) - ((p - cfg.p0) ** 2) / (2.0 * sigma_p**2)
        )

    rho = classical.combine(
        classical.from_fn(cgrid, packet(-cfg.d / 2.0)),
        classical.from_fn(cgrid, packet(+cfg.d / 2.0)),
    )
    c_density = classical.marginal_position(rho)

    rows = [
        (float(x), float(q), float(c))
        for x, q, c in zip(grid.points, q_density, c_density)
    ]
    return ScenarioReport(cfg.scenario, ["x", "quantum_density", "classical_density"], rows, _metadata(cfg))


def _correlation_sweep(cfg: ScenarioConfig) -> ScenarioReport:
    """Sweep a relative phase and compare the measured combined magnitude
    against the scalar combination law."""
    grid = quantum.Grid1D(cfg.xmin, cfg.xmax, cfg.n)
    s = quantum.gaussian_wavepacket(grid, 0.0, cfg.p0, cfg.sigma)
    m1 = quantum.magnitude(s)
    rows = []
    for b in np.arange(0.0, 2.0 * math.pi, cfg.step):
        t = quantum.apply_phase(float(b), s)
        corr = quantum.correlation(s, t)
        measured = quantum.magnitude(quantum.combine(s, t))
        predicted = combined_magnitude(m1, quantum.magnitude(t), corr)
        rows.append((float(b), corr, measured, predicted, abs(measured - predicted)))
    columns = ["b", "corr", "magnitude_measured", "magnitude_predicted", "abs_error"]
    return ScenarioReport(cfg.scenario, columns, rows, _metadata(cfg))


def _uncertainty(cfg: ScenarioConfig) -> ScenarioReport:
    """Position and momentum spreads of minimal packets; their product stays
    pinned at 1/2 regardless of sigma."""
    rows = []
    for sigma in (cfg.sigma / 2.0, cfg.sigma, 2.0 * cfg.sigma):
        grid = quantum.Grid1D(-10.0 * sigma, 10.0 * sigma, cfg.n)
        s = quantum.gaussian_wavepacket(grid, 0.0, cfg.p0, sigma)
        sx = quantum.basis_stddev(s)
        sp = quantum.basis_stddev(quantum.to_momentum_basis(s))
        rows.append((sigma, sx, sp, sx * sp))
    return ScenarioReport(cfg.scenario, ["sigma", "sigma_x", "sigma_p", "product"], rows, _metadata(cfg))


def _basis_roundtrip(cfg: ScenarioConfig) -> ScenarioReport:
    """Parseval and round-trip errors of the basis change at several sizes."""
    rows = []
    for n in ROUNDTRIP_SIZES:
        grid = quantum.Grid1D(cfg.xmin, cfg.xmax, n)
        s = quantum.gaussian_wavepacket(grid, 0.0, cfg.p0, cfg.sigma)
        phi = quantum.to_momentum_basis(s)
        back = quantum.to_position_basis(phi)
        parseval = abs(quantum.magnitude(phi) - quantum.magnitude(s))
        roundtrip = float(np.max(np.abs(back.amplitudes - s.amplitudes)))
        rows.append((float(n), parseval, roundtrip))
    columns = ["n", "parseval_error", "roundtrip_max_abs_error"]
    return ScenarioReport(cfg.scenario, columns, rows, _metadata(cfg))


def _group_demo(cfg: ScenarioConfig) -> ScenarioReport:
    """Magnitudes of two-system states versus the product of the parts."""
    rng = np.random.default_rng(cfg.seed)
    g1 = quantum.Grid1D(-5.0, 5.0, 16)
    g2 = quantum.Grid1D(-3.0, 3.0, 24)
    rows = []
    for _ in range(GROUP_DEMO_ROWS):
        s1 = _random_state(rng, g1)
        s2 = _random_state(rng, g2)
        m1 = quantum.magnitude(s1)
        m2 = quantum.magnitude(s2)
        mg = quantum.magnitude(quantum.group(s1, s2))
        rows.append((m1, m2, mg, abs(mg - m1 * m2)))
    return ScenarioReport(cfg.scenario, ["M1", "M2", "M_group", "product_error"], rows, _metadata(cfg))


def _random_state(rng: np.random.Generator, grid: quantum.Grid1D) -> quantum.QuantumState:
    amps = rng.standard_normal(grid.n) + 1j * rng.standard_normal(grid.n)
    return quantum.QuantumState(grid, rng.uniform(0.2, 2.0) * amps, quantum.POSITION)


_RUNNERS = {
    "interference": _interference,
    "correlation-sweep": _correlation_sweep,
    "uncertainty": _uncertainty,
    "basis-roundtrip": _basis_roundtrip,
    "group-demo": _group_demo,
}


def run_scenario(config: ScenarioConfig) -> ScenarioReport:
    """Resolve the config, run the named scenario, and return its report."""
    cfg = config.resolved()
    return _RUNNERS[cfg.scenario](cfg)


def emit_csv(report: ScenarioReport, destination: IO[str]) -> None:
    """Write '#'-prefixed metadata, a header row, then comma-separated rows.

    Reals are rendered with 17 significant digits so parsing the file back
    reproduces the exact doubles; output is deterministic for a fixed report.
    """
    for key, value in report.metadata:
        destination.write(f"# {key} = {value}\n")
    destination.write(",".join(report.columns) + "\n")
    for row in report.rows:
        destination.write(",".join(format_real(v) for v in row) + "\n")
