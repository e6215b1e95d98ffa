"""General and quaternionic Möbius transformations.

A Möbius transformation z ↦ (az + b)/(cz + d) is stored as its coefficients
(:class:`GeneralMobius`). Quaternionic ones have the coefficient pattern
(ζ, −ω, ω̄, ζ̄) with |ζ|² + |ω|² = 1 and are stored as the pair (ζ, ω)
(:class:`QuatMobius`). They are exactly the rotations of the Riemann sphere;
:func:`induced_rotation` gives the 3×3 matrix.

Since (ζ, ω) and (−ζ, −ω) define the same map, map-level equality is decided
at a fixed set of reference points (:data:`REFERENCE_POINTS`) with the chordal metric.
"""

from __future__ import annotations

import cmath
import math
from typing import TYPE_CHECKING, Any, Self, TypeAlias

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field, model_validator

from mobius_orbits.domain.exceptions import (
    IdentityTransformError,
    NotQuaternionicError,
)
from mobius_orbits.domain.extplane import (
    INFINITY,
    ExtComplex,
    SpherePoint,
    chordal_distance,
    stereo,
    stereo_inv,
)

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from mobius_orbits.domain.models import Rotation3

# Coefficient matrices with |ad − bc| at or below this are singular
SINGULAR_EPS = 1e-14
# cz + d counts as zero relative to the size of its terms
POLE_RTOL = 1e-14
# Tolerance of the (ζ, −ω, ω̄, ζ̄) pattern after det-1 normalization
PATTERN_TOL = 1e-9
# |ω| below this means the axis is ±i₃
DEGENERATE_EPS = 1e-12
# Above this modulus evaluation works with 1/z
HUGE_MODULUS = 1e150


def _finite_complex(value: Any, name: str) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        msg = f"Coefficient {name} must be finite, got {z}"
        raise ValueError(msg)
    return z


class GeneralMobius(BaseModel, frozen=True):
    """Coefficients (a, b, c, d) of z ↦ (az + b)/(cz + d) with ad − bc ≠ 0."""

    a: complex
    b: complex
    c: complex
    d: complex

    @model_validator(mode="after")
    def _nonsingular(self) -> Self:
        for name in ("a", "b", "c", "d"):
            _finite_complex(getattr(self, name), name)
        det = self.a * self.d - self.b * self.c
        if abs(det) <= SINGULAR_EPS:
            msg = f"Singular Möbius coefficients: ad − bc = {det}"
            raise ValueError(msg)
        return self

    @classmethod
    def normalized(cls, a: complex, b: complex, c: complex, d: complex) -> Self:
        """Build the transformation rescaled so that ad − bc = 1."""
        det = complex(a) * complex(d) - complex(b) * complex(c)
        if abs(det) <= SINGULAR_EPS:
            msg = f"Singular Möbius coefficients: ad − bc = {det}"
            raise ValueError(msg)
        k = cmath.sqrt(det)
        return cls(a=a / k, b=b / k, c=c / k, d=d / k)

    @classmethod
    def identity(cls) -> Self:
        return cls(a=1 + 0j, b=0j, c=0j, d=1 + 0j)

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def as_matrix(self) -> NDArray[np.complex128]:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.complex128)


class QuatMobius(BaseModel, frozen=True):
    """Quaternionic Möbius transformation z ↦ (ζz − ω)/(ω̄z + ζ̄).

    The constructor renormalizes to |ζ|² + |ω|² = 1 and picks the sign
    representative with Re ζ > 0, breaking ties by Im ζ > 0, then Re ω > 0,
    then Im ω > 0. So ``QuatMobius.of(z, w) == QuatMobius.of(-z, -w)``.

    Example:
        >>> QuatMobius.of(-1, 0) == QuatMobius.of(1, 0)
        True
    """

    zeta: complex = Field(..., description="Diagonal parameter ζ")
    omega: complex = Field(..., description="Off-diagonal parameter ω")

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        zeta = _finite_complex(data.get("zeta", 0), "zeta")
        omega = _finite_complex(data.get("omega", 0), "omega")
        length = math.hypot(abs(zeta), abs(omega))
        if length == 0.0:
            msg = "QuatMobius needs a nonzero (ζ, ω) pair"
            raise ValueError(msg)
        zeta, omega = zeta / length, omega / length
        if _canonical_sign(zeta, omega) < 0:
            zeta, omega = -zeta, -omega
        return {"zeta": zeta, "omega": omega}

    @classmethod
    def of(cls, zeta: complex, omega: complex) -> QuatMobius:
        return cls(zeta=zeta, omega=omega)

    @classmethod
    def identity(cls) -> QuatMobius:
        return cls(zeta=1 + 0j, omega=0j)

    @property
    def coefficients(self) -> GeneralMobius:
        """The det-1 coefficients (ζ, −ω, ω̄, ζ̄)."""
        return GeneralMobius(
            a=self.zeta,
            b=-self.omega,
            c=self.omega.conjugate(),
            d=self.zeta.conjugate(),
        )


def _canonical_sign(zeta: complex, omega: complex) -> int:
    for value in (zeta.real, zeta.imag, omega.real, omega.imag):
        if value > 0.0:
            return 1
        if value < 0.0:
            return -1
    return 1


MobiusLike: TypeAlias = GeneralMobius | QuatMobius


def as_general(m: MobiusLike) -> GeneralMobius:
    return m.coefficients if isinstance(m, QuatMobius) else m


# ──────────────────────────────────────────────────────────────────────────────
# Evaluation and group operations
# ──────────────────────────────────────────────────────────────────────────────


def evaluate(m: MobiusLike, z: ExtComplex) -> ExtComplex:
    """Apply the transformation to a point of Ĉ.

    Uses M(∞) = a/c for c ≠ 0, M(∞) = ∞ for c = 0, and M(−d/c) = ∞.
    Results that overflow are ∞.

    Args:
        m: Möbius transformation.
        z: Point of the extended plane.

    Returns:
        M(z).
    """
    g = as_general(m)
    if z.is_infinity:
        if g.c == 0:
            return INFINITY
        return ExtComplex.from_complex(g.a / g.c)
    w = z.value
    if abs(w) > HUGE_MODULUS:
        # divide through by z so that cz cannot overflow
        inv = 1 / w
        num = g.a + g.b * inv
        dz = g.d * inv
        den = g.c + dz
        scale = abs(g.c) + abs(dz)
    else:
        cz = g.c * w
        num = g.a * w + g.b
        den = cz + g.d
        scale = abs(cz) + abs(g.d)
    if abs(den) <= POLE_RTOL * scale or not cmath.isfinite(num):
        return INFINITY
    return ExtComplex.from_complex(num / den)


def compose(m2: MobiusLike, m1: MobiusLike) -> GeneralMobius:
    """Coefficients of m2 ∘ m1, normalized to determinant 1."""
    product = as_general(m2).as_matrix() @ as_general(m1).as_matrix()
    (a, b), (c, d) = product.tolist()
    return GeneralMobius.normalized(a, b, c, d)


def qcompose(q2: QuatMobius, q1: QuatMobius) -> QuatMobius:
    """Quaternionic composition q2 ∘ q1 via the parameter product.

    Q(ζ₂, ω₂) ∘ Q(ζ₁, ω₁) = Q(ζ₂ζ₁ − ω₂ω̄₁, ζ₂ω₁ + ω₂ζ̄₁).
    """
    return QuatMobius.of(
        q2.zeta * q1.zeta - q2.omega * q1.omega.conjugate(),
        q2.zeta * q1.omega + q2.omega * q1.zeta.conjugate(),
    )


def inverse(m: MobiusLike) -> MobiusLike:
    """M⁻¹ = (d, −b, −c, a); for quaternionic input Q(ζ̄, −ω)."""
    if isinstance(m, QuatMobius):
        return QuatMobius.of(m.zeta.conjugate(), -m.omega)
    return GeneralMobius(a=m.d, b=-m.b, c=-m.c, d=m.a)


def star(m: MobiusLike) -> MobiusLike:
    """Transformation-conjugate M* = (ā, c̄, b̄, d̄); equals M⁻¹ when quaternionic."""
    if isinstance(m, QuatMobius):
        return QuatMobius.of(m.zeta.conjugate(), -m.omega)
    return GeneralMobius(
        a=m.a.conjugate(),
        b=m.c.conjugate(),
        c=m.b.conjugate(),
        d=m.d.conjugate(),
    )


def qstar(q: QuatMobius) -> QuatMobius:
    """Typed shortcut for :func:`star` on quaternionic input."""
    return QuatMobius.of(q.zeta.conjugate(), -q.omega)


def as_quat_mobius(m: GeneralMobius) -> QuatMobius:
    """Recognize a quaternionic transformation from its coefficients.

    Raises:
        NotQuaternionicError: If, after det-1 normalization, d ≠ ā or c ≠ −b̄.
    """
    g = GeneralMobius.normalized(m.a, m.b, m.c, m.d)
    d_err = abs(g.d - g.a.conjugate())
    c_err = abs(g.c + g.b.conjugate())
    if max(d_err, c_err) > PATTERN_TOL:
        msg = (
            f"Coefficients are not quaternionic: |d − ā| = {d_err:.3e}, "
            f"|c + b̄| = {c_err:.3e}"
        )
        raise NotQuaternionicError(msg)
    return QuatMobius.of(g.a, -g.b)


# ──────────────────────────────────────────────────────────────────────────────
# Sphere action
# ──────────────────────────────────────────────────────────────────────────────


def induced_rotation(q: QuatMobius) -> Rotation3:
    """Matrix of σ⁻¹ ∘ q ∘ σ, a proper rotation of the Riemann sphere.

    Example:
        >>> induced_rotation(QuatMobius.identity()).tolist()
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    """
    zeta, omega = q.zeta, q.omega
    zz = zeta * zeta
    ww = omega * omega
    zw = zeta * omega
    zwc = zeta * omega.conjugate()
    return np.array(
        [
            [(zz - ww).real, -(zz + ww).imag, 2 * zw.real],
            [(zz - ww).imag, (zz + ww).real, 2 * zw.imag],
            [-2 * zwc.real, 2 * zwc.imag, abs(zeta) ** 2 - abs(omega) ** 2],
        ],
        dtype=np.float64,
    )


def induced_sphere_map(m: MobiusLike, p: SpherePoint) -> SpherePoint:
    """Pointwise σ⁻¹ ∘ M ∘ σ for any Möbius transformation."""
    return stereo_inv(evaluate(m, stereo(p)))


def is_proper_rotation(r: Rotation3, tol: float = 1e-10) -> bool:
    """RᵀR = I and det R = +1 within ``tol``."""
    orthogonal = np.max(np.abs(r.T @ r - np.eye(3))) <= tol
    return bool(orthogonal and abs(np.linalg.det(r) - 1.0) <= tol)


def fixed_points(q: QuatMobius) -> tuple[ExtComplex, ExtComplex]:
    """Solve M(z) = z, i.e. ω̄z² + (ζ̄ − ζ)z + ω = 0.

    Args:
        q: Non-identity transformation.

    Returns:
        The two fixed points; (0, ∞) when ω = 0.

    Raises:
        IdentityTransformError: If q is the identity.
    """
    zeta, omega = q.zeta, q.omega
    if abs(omega) < DEGENERATE_EPS:
        if abs(zeta.imag) < DEGENERATE_EPS:
            msg = "The identity fixes every point"
            raise IdentityTransformError(msg)
        return ExtComplex.finite(0.0), INFINITY
    a = omega.conjugate()
    b = zeta.conjugate() - zeta
    c = omega
    root = cmath.sqrt(b * b - 4 * a * c)
    # pick the sign that adds magnitudes in b ± √disc
    if (b.conjugate() * root).real < 0:
        root = -root
    half = -(b + root) / 2
    return ExtComplex.from_complex(half / a), ExtComplex.from_complex(c / half)


# ──────────────────────────────────────────────────────────────────────────────
# Map-level equality
# ──────────────────────────────────────────────────────────────────────────────

REFERENCE_POINTS: tuple[ExtComplex, ...] = (
    ExtComplex.finite(0),
    ExtComplex.finite(1),
    ExtComplex.finite(-1),
    ExtComplex.finite(1j),
    ExtComplex.finite(-1j),
    ExtComplex.finite(2 + 1j),
    INFINITY,
    ExtComplex.finite(1 / 3),
)


def pointwise_distance(m1: MobiusLike, m2: MobiusLike) -> float:
    """Largest chordal distance between m1(z) and m2(z) over the reference points."""
    return max(
        chordal_distance(evaluate(m1, z), evaluate(m2, z)) for z in REFERENCE_POINTS
    )


def maps_equal(m1: MobiusLike, m2: MobiusLike, tol: float = 1e-9) -> bool:
    """Map-level equality at the reference points."""
    distance = pointwise_distance(m1, m2)
    if distance > tol:
        logger.debug(f"Maps differ by {distance:.3e} at the reference points")
    return distance <= tol
