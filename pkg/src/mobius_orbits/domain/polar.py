"""Axis-angle data and the polar decomposition M = W ∘ D ∘ W*.

For a quaternionic transformation Q(ζ, ω) the rotation axis is

    u = (−Im ω, Re ω, Im ζ)/√(1 − Re ζ²)

with rotation angle τ = 2·atan2(√(1 − Re ζ²), Re ζ), declination
φ = atan2(|ω|, Im ζ) from the north pole and longitude arg(iω). D is the
rotation by τ about the polar axis and W the rotation about the horizontal
direction w = (Re ω, Im ω, 0)/|ω| that carries the north pole onto u.
"""

from __future__ import annotations

import cmath
import math
from typing import TYPE_CHECKING, Literal

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from mobius_orbits.domain.extplane import chordal_distance
from mobius_orbits.domain.mobius import (
    DEGENERATE_EPS,
    REFERENCE_POINTS,
    QuatMobius,
    evaluate,
    qcompose,
    qstar,
)
from mobius_orbits.domain.quaternion import I3, UnitPureQuaternion

if TYPE_CHECKING:
    from numpy.typing import NDArray

Degeneracy = Literal["none", "identity", "polar_axis"]


class PolarData(BaseModel, frozen=True):
    """Axis, angles and adapted directions of a quaternionic transformation.

    ``lam`` is arg(ω); the longitude of the axis is ``lam + π/2``.
    """

    axis: UnitPureQuaternion = Field(..., description="Rotation axis u")
    tau: float = Field(..., ge=0, le=2 * math.pi, description="Rotation angle")
    phi: float = Field(..., ge=0, le=math.pi, description="Axis declination")
    lam: float = Field(..., description="arg(ω) in (−π, π]")
    w_axis: UnitPureQuaternion | None = Field(
        default=None,
        description="Horizontal direction w, absent on the polar axis",
    )
    v_axis: UnitPureQuaternion | None = Field(
        default=None,
        description="v = w × u, absent on the polar axis",
    )
    degenerate: Degeneracy = "none"

    @property
    def longitude(self) -> float:
        """Longitude arg(iω) of the axis, wrapped to (−π, π]."""
        return math.remainder(self.lam + math.pi / 2, 2 * math.pi)

    @property
    def axis_vector(self) -> NDArray[np.float64]:
        return self.axis.vector


class Decomposition(BaseModel, frozen=True):
    """The factors of M = W ∘ D ∘ W*."""

    W: QuatMobius
    D: QuatMobius
    Wstar: QuatMobius

    def compose(self) -> QuatMobius:
        """Reassemble W ∘ D ∘ W*."""
        return qcompose(self.W, qcompose(self.D, self.Wstar))


def extract_polar(q: QuatMobius) -> PolarData:
    """Compute axis, angle, declination and longitude of a transformation.

    Degenerate inputs are flagged rather than rejected: the identity gets
    ``tau = 0`` and axis i₃; a rotation about ±i₃ gets ``phi`` in {0, π},
    ``lam = 0`` and no w/v directions.

    Args:
        q: Canonical quaternionic transformation.

    Returns:
        The polar data of q.

    Example:
        >>> import cmath
        >>> p = extract_polar(QuatMobius.of(0.5 + 0.5j, 1 / cmath.sqrt(2)))
        >>> round(p.tau / cmath.pi, 12)
        0.666666666667
    """
    zeta, omega = q.zeta, q.omega
    abs_omega = abs(omega)
    # √(1 − Re ζ²) without cancellation
    radius = math.hypot(zeta.imag, abs_omega)
    if abs_omega < DEGENERATE_EPS and abs(zeta.imag) < DEGENERATE_EPS:
        logger.debug("Identity transformation: axis defaults to i₃")
        return PolarData(axis=I3, tau=0.0, phi=0.0, lam=0.0, degenerate="identity")

    tau = (2 * math.atan2(radius, zeta.real)) % (2 * math.pi)
    if abs_omega < DEGENERATE_EPS:
        logger.debug("Rotation about the polar axis: w and v are undefined")
        upward = zeta.imag > 0
        return PolarData(
            axis=I3 if upward else -I3,
            tau=tau,
            phi=0.0 if upward else math.pi,
            lam=0.0,
            degenerate="polar_axis",
        )

    axis = UnitPureQuaternion(
        q1=-omega.imag / radius,
        q2=omega.real / radius,
        q3=zeta.imag / radius,
    )
    w_axis = UnitPureQuaternion(q1=omega.real / abs_omega, q2=omega.imag / abs_omega)
    scale = abs_omega * radius
    v_axis = UnitPureQuaternion(
        q1=zeta.imag * omega.imag / scale,
        q2=-zeta.imag * omega.real / scale,
        q3=abs_omega * abs_omega / scale,
    )
    return PolarData(
        axis=axis,
        tau=tau,
        phi=math.atan2(abs_omega, zeta.imag),
        lam=cmath.phase(omega),
        w_axis=w_axis,
        v_axis=v_axis,
    )


def angles_to_params(tau: float, phi: float, lam: float) -> QuatMobius:
    """Transformation rotating by ``tau`` about the axis (phi, lam).

    ζ = cos(τ/2) + i sin(τ/2) cos φ,  ω = sin(τ/2) sin φ e^{iλ}

    Args:
        tau: Rotation angle in radians.
        phi: Axis declination from the north pole.
        lam: arg(ω); the axis longitude is lam + π/2.
    """
    half_sin = math.sin(tau / 2)
    zeta = complex(math.cos(tau / 2), half_sin * math.cos(phi))
    omega = half_sin * math.sin(phi) * cmath.exp(1j * lam)
    return QuatMobius.of(zeta, omega)


def pole_aligner(phi: float, lam: float) -> QuatMobius:
    """Rotation by ``phi`` about −(cos λ, sin λ, 0).

    Q(cos(φ/2), sin(φ/2)·i·e^{iλ}) carries the north pole to declination φ at
    longitude λ + π/2. At (φ_ζ, arg ω) this is the W factor of the polar
    decomposition.
    """
    return QuatMobius.of(
        math.cos(phi / 2),
        math.sin(phi / 2) * 1j * cmath.exp(1j * lam),
    )


def decompose(q: QuatMobius) -> Decomposition:
    """Split q into W ∘ D ∘ W* with D a rotation about the polar axis.

    Rotations about ±i₃ (including the identity) are already diagonal:
    W is the identity and D is q itself.
    """
    data = extract_polar(q)
    if data.degenerate != "none":
        identity = QuatMobius.identity()
        return Decomposition(W=identity, D=q, Wstar=identity)
    w = pole_aligner(data.phi, data.lam)
    d = QuatMobius.of(cmath.exp(0.5j * data.tau), 0)
    return Decomposition(W=w, D=d, Wstar=qstar(w))


def reconstruction_error(q: QuatMobius, decomposition: Decomposition) -> float:
    """Max chordal distance between q and W ∘ D ∘ W* over the reference points."""
    rebuilt = decomposition.compose()
    return max(
        chordal_distance(evaluate(rebuilt, z), evaluate(q, z)) for z in REFERENCE_POINTS
    )
