import dataclasses
import math

import numpy as np
import pytest

from statealgebra import classical
from statealgebra.classical import ClassicalState, PhaseSpaceGrid
from statealgebra.errors import GridMismatchError

GRID = PhaseSpaceGrid(-1.0, 2.0, 0.0, 2.0, 6, 8)  # area 6


def uniform(value=1.0, grid=GRID):
    return ClassicalState(grid, np.full((grid.nx, grid.np), value))


def zero(grid=GRID):
    return ClassicalState(grid, np.zeros((grid.nx, grid.np)))


def gaussian_grid():
    return PhaseSpaceGrid(-8.0, 8.0, -8.0, 8.0, 128, 128)


def normalized_gaussian(x, p):
    return np.exp(-(x**2 + p**2) / 2.0) / (2.0 * math.pi)


def test_grid_validation():
    with pytest.raises(ValueError):
        PhaseSpaceGrid(1.0, 1.0, 0.0, 1.0, 4, 4)
    with pytest.raises(ValueError):
        PhaseSpaceGrid(0.0, 1.0, 2.0, 1.0, 4, 4)
    with pytest.raises(ValueError):
        PhaseSpaceGrid(0.0, 1.0, 0.0, 1.0, 0, 4)
    with pytest.raises(ValueError):
        PhaseSpaceGrid(0.0, math.inf, 0.0, 1.0, 4, 4)


def test_state_validation():
    with pytest.raises(ValueError):
        ClassicalState(GRID, np.zeros((3, 3)))
    bad = np.zeros((GRID.nx, GRID.np))
    bad[0, 0] = -0.5
    with pytest.raises(ValueError):
        ClassicalState(GRID, bad)
    bad[0, 0] = math.nan
    with pytest.raises(ValueError):
        ClassicalState(GRID, bad)


def test_states_are_immutable():
    s = uniform()
    with pytest.raises(ValueError):
        s.rho[0, 0] = 3.0
    with pytest.raises(dataclasses.FrozenInstanceError):
        s.grid = GRID


def test_magnitude_uniform_density_is_area():
    assert classical.magnitude(uniform(1.0)) == pytest.approx(6.0, rel=1e-12)
    assert classical.magnitude(zero()) == 0.0


def test_magnitude_of_normalized_gaussian():
    s = classical.from_fn(gaussian_grid(), normalized_gaussian)
    assert classical.magnitude(s) == pytest.approx(1.0, abs=1e-6)


def test_resize_identity_zero_and_scaling():
    s = uniform(0.5)
    np.testing.assert_array_equal(classical.resize(1.0, s).rho, s.rho)
    assert classical.magnitude(classical.resize(0.0, s)) == 0.0
    m = classical.magnitude(s)
    assert classical.magnitude(classical.resize(2.0, s)) == pytest.approx(2.0 * m, rel=1e-12)
    with pytest.raises(ValueError):
        classical.resize(-0.1, s)


def test_combine_identity_and_additivity():
    s = uniform(0.7)
    combined = classical.combine(s, zero())
    np.testing.assert_array_equal(combined.rho, s.rho)
    one = classical.resize(1.0 / classical.magnitude(s), s)
    two = classical.combine(one, one)
    assert classical.magnitude(two) == pytest.approx(2.0, rel=1e-12)


def test_combine_reassembles_halves():
    rng = np.random.default_rng(7)
    s = ClassicalState(GRID, rng.random((GRID.nx, GRID.np)))
    halves = classical.combine(classical.resize(0.5, s), classical.resize(0.5, s))
    np.testing.assert_allclose(halves.rho, s.rho, rtol=1e-12, atol=0)


def test_combine_rejects_mismatched_grids():
    other = PhaseSpaceGrid(-1.0, 2.0, 0.0, 2.0, 6, 9)
    with pytest.raises(GridMismatchError):
        classical.combine(uniform(), uniform(grid=other))


def test_group_is_combine():
    s1, s2 = uniform(0.3), uniform(0.4)
    np.testing.assert_array_equal(
        classical.group(s1, s2).rho, classical.combine(s1, s2).rho
    )


def test_density_at_indicator_cell():
    rho = np.zeros((GRID.nx, GRID.np))
    rho[2, 5] = 3.25
    s = ClassicalState(GRID, rho)
    assert classical.density_at(s, 2, 5) == 3.25
    assert classical.density_at(s, 0, 0) == 0.0
    assert classical.density_at(zero(), 3, 3) == 0.0


def test_density_at_gaussian_center_is_max():
    s = classical.from_fn(gaussian_grid(), normalized_gaussian)
    i, j = np.unravel_index(np.argmax(s.rho), s.rho.shape)
    assert classical.density_at(s, int(i), int(j)) == s.rho.max()


def test_density_at_bounds():
    s = uniform()
    for i, j in [(-1, 0), (GRID.nx, 0), (0, -1), (0, GRID.np)]:
        with pytest.raises(IndexError):
            classical.density_at(s, i, j)


def test_marginal_position_zero_and_uniform():
    assert np.all(classical.marginal_position(zero()) == 0.0)
    marg = classical.marginal_position(uniform(1.0))
    np.testing.assert_allclose(marg, 2.0, rtol=1e-12)  # p_max - p_min


def test_marginal_position_of_gaussian():
    grid = gaussian_grid()
    s = classical.from_fn(grid, normalized_gaussian)
    expected = np.exp(-grid.x_points**2 / 2.0) / math.sqrt(2.0 * math.pi)
    np.testing.assert_allclose(classical.marginal_position(s), expected, atol=1e-8)


def test_marginal_sums_back_to_magnitude():
    rng = np.random.default_rng(11)
    s = ClassicalState(GRID, rng.random((GRID.nx, GRID.np)))
    total = classical.marginal_position(s).sum() * GRID.dx
    assert total == pytest.approx(classical.magnitude(s), rel=1e-12)


def test_from_fn_constant_and_zero():
    s = classical.from_fn(GRID, lambda x, p: 0.0 * x)
    assert classical.magnitude(s) == 0.0
    s = classical.from_fn(GRID, lambda x, p: 2.5 + 0.0 * x)
    assert classical.magnitude(s) == pytest.approx(2.5 * 6.0, rel=1e-12)


def test_from_fn_clips_roundoff_but_rejects_negative():
    s = classical.from_fn(GRID, lambda x, p: np.full_like(x, -1e-16))
    assert np.all(s.rho == 0.0)
    with pytest.raises(ValueError):
        classical.from_fn(GRID, lambda x, p: np.full_like(x, -1e-3))
    with pytest.raises(ValueError):
        classical.from_fn(GRID, lambda x, p: np.full_like(x, math.inf))


def test_additivity_and_homogeneity_on_random_states():
    rng = np.random.default_rng(42)
    for _ in range(50):
        s1 = ClassicalState(GRID, rng.random((GRID.nx, GRID.np)))
        s2 = ClassicalState(GRID, rng.random((GRID.nx, GRID.np)))
        m1, m2 = classical.magnitude(s1), classical.magnitude(s2)
        assert abs(classical.magnitude(classical.combine(s1, s2)) - (m1 + m2)) <= 1e-12 * (m1 + m2 + 1.0)
        a = rng.uniform(0.0, 10.0)
        assert classical.magnitude(classical.resize(a, s1)) == pytest.approx(a * m1, rel=1e-12, abs=0)


def test_combine_commutes_and_associates_pointwise():
    rng = np.random.default_rng(3)
    states = [ClassicalState(GRID, rng.random((GRID.nx, GRID.np))) for _ in range(3)]
    s1, s2, s3 = states
    np.testing.assert_allclose(
        classical.combine(s1, s2).rho, classical.combine(s2, s1).rho, atol=1e-13
    )
    left = classical.combine(classical.combine(s1, s2), s3)
    right = classical.combine(s1, classical.combine(s2, s3))
    np.testing.assert_allclose(left.rho, right.rho, atol=1e-13)


def test_nonnegativity_closure():
    rng = np.random.default_rng(5)
    s1 = ClassicalState(GRID, rng.random((GRID.nx, GRID.np)))
    s2 = ClassicalState(GRID, rng.random((GRID.nx, GRID.np)))
    assert np.all(classical.combine(s1, s2).rho >= 0.0)
    assert np.all(classical.resize(rng.uniform(0, 10), s1).rho >= 0.0)
