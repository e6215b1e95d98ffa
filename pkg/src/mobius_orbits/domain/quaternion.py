"""Quaternion algebra ℍ.

Quaternions are written h = h0 + h1·i₁ + h2·i₂ + h3·i₃ with
i₁² = i₂² = i₃² = i₁i₂i₃ = −1. A unit quaternion q = cos θ + u sin θ acts on
pure vectors by conjugation h ↦ q h q⁻¹, rotating them about u by 2θ.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field, model_validator

from mobius_orbits.domain.exceptions import (
    PolarAxisDegenerateError,
    ZeroQuaternionError,
)

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from mobius_orbits.domain.models import Rotation3

# Below this horizontal extent an axis counts as the polar axis ±i₃
AXIS_EPS = 1e-12


class Quaternion(BaseModel, frozen=True):
    """Element of ℍ in the basis {1, i₁, i₂, i₃}."""

    q0: float = Field(default=0.0, allow_inf_nan=False, description="Real part")
    q1: float = Field(default=0.0, allow_inf_nan=False, description="i₁ coordinate")
    q2: float = Field(default=0.0, allow_inf_nan=False, description="i₂ coordinate")
    q3: float = Field(default=0.0, allow_inf_nan=False, description="i₃ coordinate")

    @classmethod
    def from_array(cls, coords: NDArray[np.float64] | list[float]) -> Quaternion:
        q0, q1, q2, q3 = (float(c) for c in coords)
        return cls(q0=q0, q1=q1, q2=q2, q3=q3)

    @classmethod
    def pure(cls, vector: NDArray[np.float64] | list[float]) -> Quaternion:
        """Pure quaternion with the given vector part."""
        x, y, z = (float(c) for c in vector)
        return cls(q1=x, q2=y, q3=z)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.q0, self.q1, self.q2, self.q3], dtype=np.float64)

    @property
    def real(self) -> float:
        return self.q0

    @property
    def vector(self) -> NDArray[np.float64]:
        return np.array([self.q1, self.q2, self.q3], dtype=np.float64)

    def __mul__(self, other: Quaternion) -> Quaternion:
        return qmul(self, other)

    def __neg__(self) -> Quaternion:
        return Quaternion(q0=-self.q0, q1=-self.q1, q2=-self.q2, q3=-self.q3)


class UnitPureQuaternion(Quaternion):
    """A pure quaternion of norm one, i.e. a point of the unit 2-sphere in Vec(ℍ).

    The constructor renormalizes the vector part and sets the real part to
    exactly zero; a real part above 1e-9 is rejected.
    """

    @model_validator(mode="before")
    @classmethod
    def _unit_pure(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        real = float(data.get("q0", 0.0))
        if abs(real) > 1e-9:
            msg = f"Unit pure quaternion needs zero real part, got {real}"
            raise ValueError(msg)
        x = float(data.get("q1", 0.0))
        y = float(data.get("q2", 0.0))
        z = float(data.get("q3", 0.0))
        length = math.hypot(x, y, z)
        if length == 0.0 or not math.isfinite(length):
            msg = "Unit pure quaternion needs a nonzero finite vector part"
            raise ValueError(msg)
        return {"q0": 0.0, "q1": x / length, "q2": y / length, "q3": z / length}

    @classmethod
    def from_vector(
        cls, vector: NDArray[np.float64] | list[float]
    ) -> UnitPureQuaternion:
        x, y, z = (float(c) for c in vector)
        return cls(q1=x, q2=y, q3=z)

    def __neg__(self) -> UnitPureQuaternion:
        return UnitPureQuaternion(q1=-self.q1, q2=-self.q2, q3=-self.q3)


ONE = Quaternion(q0=1.0)
I1 = UnitPureQuaternion(q1=1.0)
I2 = UnitPureQuaternion(q2=1.0)
I3 = UnitPureQuaternion(q3=1.0)


class PolarForm(BaseModel, frozen=True):
    """Polar form q = norm·(cos θ + axis·sin θ)."""

    norm: float = Field(..., ge=0, description="Quaternion norm ‖q‖")
    theta: float = Field(..., ge=0, le=math.pi, description="Polar angle in radians")
    axis: UnitPureQuaternion = Field(..., description="Unit pure axis u")
    degenerate: bool = Field(
        default=False,
        description="True when Vec(q) = 0 and the axis is the conventional i₃",
    )

    def reconstruct(self) -> Quaternion:
        """Return norm·e^{axis·θ}."""
        return Quaternion.from_array(self.norm * qexp(self.axis, self.theta).as_array())


# ──────────────────────────────────────────────────────────────────────────────
# Products and norms
# ──────────────────────────────────────────────────────────────────────────────


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product pq.

    Example:
        >>> qmul(I1, I2) == Quaternion(q3=1.0)
        True
    """
    return Quaternion(
        q0=p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
        q1=p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
        q2=p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
        q3=p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0,
    )


def conj(q: Quaternion) -> Quaternion:
    """Quaternion conjugate q* = Re(q) − Vec(q)."""
    return Quaternion(q0=q.q0, q1=-q.q1, q2=-q.q2, q3=-q.q3)


def inner(h: Quaternion, q: Quaternion) -> float:
    """Euclidean inner product on ℝ⁴, equal to Re(h q*)."""
    return h.q0 * q.q0 + h.q1 * q.q1 + h.q2 * q.q2 + h.q3 * q.q3


def norm(q: Quaternion) -> float:
    return math.sqrt(inner(q, q))


def square(q: Quaternion) -> Quaternion:
    return qmul(q, q)


def is_unit_pure(q: Quaternion, tol: float = 1e-10) -> bool:
    """Membership test for unit pure vectors: u² = −1."""
    s = square(q)
    return bool(np.max(np.abs(s.as_array() - np.array([-1.0, 0.0, 0.0, 0.0]))) <= tol)


def normalized(q: Quaternion) -> Quaternion:
    """Return q/‖q‖.

    Raises:
        ZeroQuaternionError: If q = 0.
    """
    n = norm(q)
    if n == 0.0:
        msg = "Cannot normalize the zero quaternion"
        raise ZeroQuaternionError(msg)
    return Quaternion.from_array(q.as_array() / n)


# ──────────────────────────────────────────────────────────────────────────────
# Polar form and exponential
# ──────────────────────────────────────────────────────────────────────────────


def to_polar(q: Quaternion) -> PolarForm:
    """Decompose q as ‖q‖(cos θ + u sin θ) with θ = atan2(‖Vec q‖, Re q).

    Args:
        q: Nonzero quaternion.

    Returns:
        Polar form; when Vec(q) = 0 the axis is i₃ and ``degenerate`` is set.

    Raises:
        ZeroQuaternionError: If q = 0.
    """
    n = norm(q)
    if n == 0.0:
        msg = "The zero quaternion has no polar form"
        raise ZeroQuaternionError(msg)
    vec = q.vector
    vec_norm = math.hypot(q.q1, q.q2, q.q3)
    theta = math.atan2(vec_norm, q.q0)
    if vec_norm == 0.0:
        return PolarForm(norm=n, theta=theta, axis=I3, degenerate=True)
    return PolarForm(norm=n, theta=theta, axis=UnitPureQuaternion.from_vector(vec))


def qexp(u: UnitPureQuaternion, theta: float) -> Quaternion:
    """e^{uθ} = cos θ + u sin θ."""
    s = math.sin(theta)
    return Quaternion(q0=math.cos(theta), q1=u.q1 * s, q2=u.q2 * s, q3=u.q3 * s)


# ──────────────────────────────────────────────────────────────────────────────
# Conjugation Γ_q and its matrices
# ──────────────────────────────────────────────────────────────────────────────


def conjugate_by(q: Quaternion, h: Quaternion) -> Quaternion:
    """Γ_q(h) = q h q⁻¹.

    Raises:
        ZeroQuaternionError: If q = 0.
    """
    n2 = inner(q, q)
    if n2 == 0.0:
        msg = "Cannot conjugate by the zero quaternion"
        raise ZeroQuaternionError(msg)
    q_inv = Quaternion.from_array(conj(q).as_array() / n2)
    return qmul(qmul(q, h), q_inv)


def left_matrix(p: Quaternion) -> NDArray[np.float64]:
    """Matrix of h ↦ p h acting on coordinates (h0, h1, h2, h3)."""
    p0, p1, p2, p3 = p.q0, p.q1, p.q2, p.q3
    return np.array(
        [
            [p0, -p1, -p2, -p3],
            [p1, p0, -p3, p2],
            [p2, p3, p0, -p1],
            [p3, -p2, p1, p0],
        ],
        dtype=np.float64,
    )


def right_matrix(q: Quaternion) -> NDArray[np.float64]:
    """Matrix of h ↦ h q acting on coordinates (h0, h1, h2, h3)."""
    q0, q1, q2, q3 = q.q0, q.q1, q.q2, q.q3
    return np.array(
        [
            [q0, -q1, -q2, -q3],
            [q1, q0, q3, -q2],
            [q2, -q3, q0, q1],
            [q3, q2, -q1, q0],
        ],
        dtype=np.float64,
    )


def rotation_matrix_cq(q: Quaternion) -> Rotation3:
    """Rotation matrix [C_q] of Γ_q on Vec(ℍ) ≅ ℝ³.

    The input is renormalized, so ±q and any positive multiple give the same
    matrix.

    Raises:
        ZeroQuaternionError: If q = 0.
    """
    n = norm(q)
    if n == 0.0:
        msg = "The zero quaternion induces no rotation"
        raise ZeroQuaternionError(msg)
    if abs(n - 1.0) > 1e-9:
        logger.debug(f"Renormalizing quaternion of norm {n:.3e} for [C_q]")
    q0, q1, q2, q3 = q.as_array() / n
    return np.array(
        [
            [
                q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3,
                2 * (q1 * q2 - q0 * q3),
                2 * (q0 * q2 + q1 * q3),
            ],
            [
                2 * (q0 * q3 + q1 * q2),
                q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3,
                2 * (q2 * q3 - q0 * q1),
            ],
            [
                2 * (q1 * q3 - q0 * q2),
                2 * (q0 * q1 + q2 * q3),
                q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3,
            ],
        ],
        dtype=np.float64,
    )


def adapted_frame(
    u: UnitPureQuaternion,
) -> tuple[UnitPureQuaternion, UnitPureQuaternion, UnitPureQuaternion]:
    """Right-handed frame (u, v, w) with w horizontal.

    w is the normalized cross product u × e₃ and v = w × u, so that uv = w and
    uvw = −1.

    Args:
        u: Axis off the polar axis.

    Returns:
        The triple (u, v, w).

    Raises:
        PolarAxisDegenerateError: If u ≈ ±i₃.

    Example:
        >>> _, v, w = adapted_frame(I1)
        >>> v == I3, w == -I2
        (True, True)
    """
    u1, u2, u3 = u.q1, u.q2, u.q3
    horizontal = math.hypot(u1, u2)
    if horizontal <= AXIS_EPS:
        msg = f"Axis ({u1}, {u2}, {u3}) lies on the polar axis"
        raise PolarAxisDegenerateError(msg)
    w = UnitPureQuaternion(q1=u2 / horizontal, q2=-u1 / horizontal, q3=0.0)
    v = UnitPureQuaternion(
        q1=-u1 * u3 / horizontal,
        q2=-u2 * u3 / horizontal,
        q3=horizontal,
    )
    return u, v, w
