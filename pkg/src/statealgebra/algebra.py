"""Scalar kernels for the magnitude combination law.

Both state realizations reduce their combination behaviour to the same
scalar law: two sizes m1, m2 and a correlation c in [-1, 1] merge into
m1 + m2 + 2*sqrt(m1*m2)*c. The equivalent factored form multiplies the
square roots of the sizes with opposite unit phases exp(-i*theta) and
exp(+i*theta), where theta = arccos(c).
"""

import cmath
import math

# Inner products may overshoot +-1 by a few ulps; anything larger is a bug.
CORR_CLAMP_TOL = 1e-12


def _check_magnitude(name: str, m: float) -> None:
    if not (math.isfinite(m) and m >= 0.0):
        raise ValueError(f"{name} must be a finite nonnegative magnitude, got {m!r}")


def combined_magnitude(m1: float, m2: float, c: float) -> float:
    """Magnitude of the combination of two states with correlation c.

    Returns m1 + m2 + 2*sqrt(m1*m2)*c. At c = 0 the sizes simply add
    (uncorrelated parts do not interfere); c = +1 and c = -1 give the
    fully constructive (sqrt(m1)+sqrt(m2))**2 and fully destructive
    (sqrt(m1)-sqrt(m2))**2 extremes.
    """
    _check_magnitude("m1", m1)
    _check_magnitude("m2", m2)
    if not (-1.0 <= c <= 1.0):
        raise ValueError(f"correlation must lie in [-1, 1], got {c!r}")
    result = m1 + m2 + 2.0 * math.sqrt(m1 * m2) * c
    # Nonnegative by construction; clip the odd ulp of rounding noise.
    return max(result, 0.0)


def combined_magnitude_factored(m1: float, m2: float, theta: float) -> float:
    """Combination law evaluated in its factored complex form.

    Computes (sqrt(m1) + exp(-i*theta)*sqrt(m2)) * (sqrt(m1) + exp(+i*theta)*sqrt(m2))
    with theta in [0, pi]. The product is real up to rounding; a residual
    imaginary part above 1e-12*(m1+m2+1) indicates an implementation bug
    and raises instead of being discarded silently.
    """
    _check_magnitude("m1", m1)
    _check_magnitude("m2", m2)
    if not (0.0 <= theta <= math.pi):
        raise ValueError(f"correlation angle must lie in [0, pi], got {theta!r}")
    r1 = math.sqrt(m1)
    r2 = math.sqrt(m2)
    z = (r1 + cmath.exp(-1j * theta) * r2) * (r1 + cmath.exp(+1j * theta) * r2)
    if abs(z.imag) > 1e-12 * (m1 + m2 + 1.0):
        raise ArithmeticError(
            f"imaginary residue {z.imag!r} exceeds tolerance; factored product should be real"
        )
    return max(z.real, 0.0)


def corr_to_angle(c: float) -> float:
    """Angle in [0, pi] whose cosine is the correlation c.

    Values within CORR_CLAMP_TOL of +-1 are clamped before arccos; larger
    violations are rejected as genuine range errors.
    """
    if not (-1.0 - CORR_CLAMP_TOL <= c <= 1.0 + CORR_CLAMP_TOL):
        raise ValueError(f"correlation must lie in [-1, 1] (tolerance {CORR_CLAMP_TOL}), got {c!r}")
    return math.acos(min(1.0, max(-1.0, c)))


def angle_to_corr(theta: float) -> float:
    """Correlation cos(theta) for an angle in [0, pi]."""
    if not (0.0 <= theta <= math.pi):
        raise ValueError(f"correlation angle must lie in [0, pi], got {theta!r}")
    return math.cos(theta)
