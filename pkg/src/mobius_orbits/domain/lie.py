"""Generators of the orbit and their exponentials.

The orbit T_τ of M has two derivatives at τ = 0:

* the tangent transformation T′₀ = Q(i cos φ_ζ, sin φ_ζ e^{i arg ω}), a
  Möbius transformation defined up to scale;
* the so(3) generator d[T̂_τ]/dτ at 0, which is the hat matrix of the axis.

The generator exponentiates (Rodrigues) back to the rotation matrices of
the orbit. Conjugating T′₀ by σ does not give the generator: the matrix
assembled from σ⁻¹∘T′₀∘σ on the basis vectors is not even skew
(:func:`counterexample_report`).
"""

from __future__ import annotations

import math
from typing import Self

import numpy as np
from pydantic import BaseModel, Field, model_validator

from mobius_orbits.domain.exceptions import DegenerateOrbitError
from mobius_orbits.domain.extplane import INFINITY, ExtComplex, stereo_inv
from mobius_orbits.domain.mobius import (
    GeneralMobius,
    QuatMobius,
    as_general,
    evaluate,
    induced_rotation,
)
from mobius_orbits.domain.models import Rotation3, SkewMatrix3
from mobius_orbits.domain.orbits import t_orbit
from mobius_orbits.domain.polar import PolarData, extract_polar

# Below this axis norm a skew matrix is treated as zero in the exponential
ROTATION_EPS = 1e-15


class TangentMobius(GeneralMobius):
    """Projective derivative of an orbit, normalized to determinant 1."""

    @model_validator(mode="after")
    def _unit_determinant(self) -> Self:
        if abs(self.determinant - 1) > 1e-10:
            msg = f"Tangent coefficients need ad − bc = 1, got {self.determinant}"
            raise ValueError(msg)
        return self


# ──────────────────────────────────────────────────────────────────────────────
# so(3) helpers
# ──────────────────────────────────────────────────────────────────────────────


def hat(v: np.ndarray | list[float]) -> SkewMatrix3:
    """Skew matrix K with K·x = v × x."""
    x, y, z = (float(c) for c in v)
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]], dtype=np.float64)


def vee(a: SkewMatrix3) -> np.ndarray:
    """Inverse of :func:`hat`, reading the lower-triangle entries."""
    return np.array([a[2, 1], a[0, 2], a[1, 0]], dtype=np.float64)


def is_skew(a: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(a + a.T)) <= tol)


def _polar_or_raise(q: QuatMobius) -> PolarData:
    data = extract_polar(q)
    if data.degenerate == "identity":
        msg = "The identity has a trivial orbit and no generator"
        raise DegenerateOrbitError(msg)
    return data


# ──────────────────────────────────────────────────────────────────────────────
# Generators
# ──────────────────────────────────────────────────────────────────────────────


def t_prime_zero(q: QuatMobius) -> TangentMobius:
    """Tangent transformation T′₀ of the orbit of q.

    The derivative of the orbit coefficients at τ = 0 is ½·(i cos φ,
    −sin φ e^{iλ}; sin φ e^{−iλ}, −i cos φ); the factor ½ is dropped since
    scaled coefficients give the same map. For rotations about ±i₃ this is
    the diagonal limit (±i, 0; 0, ∓i).

    Raises:
        DegenerateOrbitError: If q is the identity.

    Example:
        >>> x_rot = QuatMobius.of(0.5**0.5, -1j * 0.5**0.5)
        >>> image = evaluate(t_prime_zero(x_rot), ExtComplex.finite(2))
        >>> abs(image.value - 0.5) < 1e-12
        True
    """
    data = _polar_or_raise(q)
    cos_phi, sin_phi = math.cos(data.phi), math.sin(data.phi)
    rot = complex(math.cos(data.lam), math.sin(data.lam))
    return TangentMobius(
        a=1j * cos_phi,
        b=-sin_phi * rot,
        c=sin_phi * rot.conjugate(),
        d=-1j * cos_phi,
    )


def so3_generator(q: QuatMobius) -> SkewMatrix3:
    """Generator d[T̂_τ]/dτ at τ = 0 of the orbit of q.

    With φ = φ_ζ and λ = arg ω::

        [[0,                −cos φ,          sin φ cos λ],
         [cos φ,             0,              sin φ sin λ],
         [−sin φ cos λ,     −sin φ sin λ,    0          ]]

    which is ``hat(axis)``.

    Raises:
        DegenerateOrbitError: If q is the identity.
    """
    data = _polar_or_raise(q)
    cos_phi, sin_phi = math.cos(data.phi), math.sin(data.phi)
    cos_lam, sin_lam = math.cos(data.lam), math.sin(data.lam)
    return np.array(
        [
            [0.0, -cos_phi, sin_phi * cos_lam],
            [cos_phi, 0.0, sin_phi * sin_lam],
            [-sin_phi * cos_lam, -sin_phi * sin_lam, 0.0],
        ],
        dtype=np.float64,
    )


def expm_so3(a: SkewMatrix3, tau: float) -> Rotation3:
    """exp(τA) for skew A by the Rodrigues formula.

    With A = θK, K the unit-axis hat matrix,
    exp(τA) = I + sin(τθ)K + (1 − cos(τθ))K².

    Raises:
        ValueError: If ``a`` is not skew-symmetric.
    """
    if not is_skew(a, tol=1e-9):
        msg = "Rodrigues exponential needs a skew-symmetric matrix"
        raise ValueError(msg)
    theta = float(np.linalg.norm(vee(a)))
    if theta < ROTATION_EPS:
        return np.eye(3) + tau * a
    k = a / theta
    angle = tau * theta
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def expm_series(a: np.ndarray, tau: float, terms: int = 30) -> np.ndarray:
    """Truncated power series Σ_{k<terms} (τA)^k / k!."""
    step = tau * a
    term = np.eye(a.shape[0])
    total = term.copy()
    for k in range(1, terms):
        term = term @ step / k
        total = total + term
    return total


def generator_finite_difference(q: QuatMobius, h: float = 1e-6) -> np.ndarray:
    """Central difference of τ ↦ induced_rotation(T_τ) at τ = 0."""
    forward = induced_rotation(t_orbit(q, h))
    backward = induced_rotation(t_orbit(q, -h))
    return (forward - backward) / (2 * h)


def tangent_finite_difference(q: QuatMobius, h: float = 1e-6) -> np.ndarray:
    """Twice the central difference of the orbit coefficients at τ = 0.

    Comparable entrywise with ``t_prime_zero(q).as_matrix()``.
    """
    forward = as_general(t_orbit(q, h)).as_matrix()
    backward = as_general(t_orbit(q, -h)).as_matrix()
    return (forward - backward) / h


# ──────────────────────────────────────────────────────────────────────────────
# σ-conjugation does not commute with differentiation
# ──────────────────────────────────────────────────────────────────────────────


class CounterexampleReport(BaseModel, frozen=True, arbitrary_types_allowed=True):
    """Generator vs. the basis-assembled tangent map for an x-axis rotation."""

    tau: float
    m_hat: np.ndarray = Field(..., description="Induced rotation of the fixture")
    generator: np.ndarray = Field(..., description="so(3) generator of its orbit")
    tangent: TangentMobius
    plane_images: list[ExtComplex] = Field(
        ..., description="T′₀ applied to σ(e₁), σ(e₂), σ(e₃) = 1, i, ∞"
    )
    sphere_images: np.ndarray = Field(
        ..., description="Matrix whose columns are σ⁻¹ of the plane images"
    )
    mismatch: float = Field(..., description="Max-abs(assembled − generator)")
    assembled_is_skew: bool
    third_column_nonzero: bool
    not_in_so3: bool = Field(..., description="True when mismatch ≥ the margin")


def counterexample_report(
    tau: float = math.pi / 3, margin: float = 0.5
) -> CounterexampleReport:
    """Compare d[M̂]/dτ with the matrix assembled from σ⁻¹∘T′₀∘σ.

    Uses M = Q(cos(τ/2), −i sin(τ/2)), the rotation by τ about i₁, whose
    tangent transformation is z ↦ 1/z. The assembled matrix is
    diag(1, −1, −1), which is not skew, while the generator is.

    Args:
        tau: Rotation angle of the fixture, not a multiple of 2π.
        margin: Mismatch that counts as a clear failure.
    """
    fixture = QuatMobius.of(math.cos(tau / 2), -1j * math.sin(tau / 2))
    generator = so3_generator(fixture)
    tangent = t_prime_zero(fixture)
    basis = (ExtComplex.finite(1), ExtComplex.finite(1j), INFINITY)
    images = [evaluate(tangent, z) for z in basis]
    assembled = np.column_stack([stereo_inv(z).as_array() for z in images])
    mismatch = float(np.max(np.abs(assembled - generator)))
    return CounterexampleReport(
        tau=tau,
        m_hat=induced_rotation(fixture),
        generator=generator,
        tangent=tangent,
        plane_images=images,
        sphere_images=assembled,
        mismatch=mismatch,
        assembled_is_skew=is_skew(assembled, tol=1e-9),
        third_column_nonzero=bool(np.max(np.abs(assembled[:, 2])) > 1e-12),
        not_in_so3=mismatch >= margin,
    )
