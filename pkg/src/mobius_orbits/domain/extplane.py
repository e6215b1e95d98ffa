"""Extended complex plane Ĉ = ℂ ∪ {∞} and the Riemann sphere.

Points of Ĉ are :class:`ExtComplex` values with a single unsigned infinity.
Stereographic projection from the north pole links them to unit vectors
(:class:`SpherePoint`):

    σ(η) = (η1 + iη2)/(1 − η3),    σ⁻¹(z) = (2x, 2y, |z|² − 1)/(|z|² + 1)

Distances near ∞ are measured with the chordal metric, the Euclidean distance
between sphere preimages.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any, Self

import numpy as np
from pydantic import BaseModel, Field, model_validator

from mobius_orbits.domain.exceptions import IndeterminateFormError

if TYPE_CHECKING:
    from numpy.typing import NDArray


class ExtComplex(BaseModel, frozen=True):
    """A point of the extended complex plane.

    Either a finite complex number or the point at infinity. Infinity carries
    zero components so that there is exactly one representation of it.

    Example:
        >>> ExtComplex.finite(1 + 2j).value
        (1+2j)
        >>> ExtComplex.infinity().is_infinity
        True
    """

    re: float = Field(default=0.0, allow_inf_nan=False, description="Real part")
    im: float = Field(default=0.0, allow_inf_nan=False, description="Imaginary part")
    is_infinity: bool = Field(default=False, description="True for the point ∞")

    @model_validator(mode="after")
    def _single_infinity(self) -> Self:
        if self.is_infinity and (self.re != 0.0 or self.im != 0.0):
            msg = "The point at infinity carries no finite components"
            raise ValueError(msg)
        return self

    @classmethod
    def finite(cls, z: complex) -> ExtComplex:
        """Wrap a finite complex number."""
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    @classmethod
    def infinity(cls) -> ExtComplex:
        """Return the point at infinity."""
        return cls(is_infinity=True)

    @classmethod
    def from_complex(cls, z: complex) -> ExtComplex:
        """Wrap a computed complex number, mapping overflow to ∞.

        Args:
            z: Result of a floating-point computation.

        Raises:
            IndeterminateFormError: If ``z`` has a NaN component.
        """
        z = complex(z)
        if math.isnan(z.real) or math.isnan(z.imag):
            msg = f"Computation produced NaN: {z}"
            raise IndeterminateFormError(msg)
        if math.isinf(z.real) or math.isinf(z.imag):
            return cls.infinity()
        return cls(re=z.real, im=z.imag)

    @property
    def value(self) -> complex:
        """The finite value; raises ``ValueError`` for ∞."""
        if self.is_infinity:
            msg = "The point at infinity has no complex value"
            raise ValueError(msg)
        return complex(self.re, self.im)

    def is_zero(self) -> bool:
        return not self.is_infinity and self.re == 0.0 and self.im == 0.0

    # ──────────────────────────────────────────────────────────────────────────
    # Arithmetic with the Möbius conventions
    # ──────────────────────────────────────────────────────────────────────────

    def __neg__(self) -> ExtComplex:
        if self.is_infinity:
            return self
        return ExtComplex.finite(-self.value)

    def __add__(self, other: ExtComplex) -> ExtComplex:
        if self.is_infinity and other.is_infinity:
            msg = "∞ + ∞ is indeterminate on the extended plane"
            raise IndeterminateFormError(msg)
        if self.is_infinity or other.is_infinity:
            return ExtComplex.infinity()
        return ExtComplex.from_complex(self.value + other.value)

    def __sub__(self, other: ExtComplex) -> ExtComplex:
        if self.is_infinity and other.is_infinity:
            msg = "∞ − ∞ is indeterminate"
            raise IndeterminateFormError(msg)
        return self + (-other)

    def __mul__(self, other: ExtComplex) -> ExtComplex:
        if self.is_infinity or other.is_infinity:
            if self.is_zero() or other.is_zero():
                msg = "0 · ∞ is indeterminate"
                raise IndeterminateFormError(msg)
            return ExtComplex.infinity()
        return ExtComplex.from_complex(self.value * other.value)

    def __truediv__(self, other: ExtComplex) -> ExtComplex:
        if self.is_infinity and other.is_infinity:
            msg = "∞ / ∞ is indeterminate"
            raise IndeterminateFormError(msg)
        if other.is_zero():
            if self.is_zero():
                msg = "0 / 0 is indeterminate"
                raise IndeterminateFormError(msg)
            return ExtComplex.infinity()
        if self.is_infinity:
            return self
        if other.is_infinity:
            return ExtComplex.finite(0.0)
        return ExtComplex.from_complex(self.value / other.value)


INFINITY = ExtComplex.infinity()


class SpherePoint(BaseModel, frozen=True):
    """A unit vector on the Riemann sphere S².

    The constructor renormalizes its input, so any nonzero vector is accepted.
    """

    eta1: float = Field(allow_inf_nan=False)
    eta2: float = Field(allow_inf_nan=False)
    eta3: float = Field(allow_inf_nan=False)

    @model_validator(mode="before")
    @classmethod
    def _renormalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        x = float(data.get("eta1", 0.0))
        y = float(data.get("eta2", 0.0))
        z = float(data.get("eta3", 0.0))
        length = math.hypot(x, y, z)
        if length == 0.0 or not math.isfinite(length):
            msg = f"Cannot normalize sphere vector ({x}, {y}, {z})"
            raise ValueError(msg)
        return {"eta1": x / length, "eta2": y / length, "eta3": z / length}

    @classmethod
    def from_vector(cls, vector: NDArray[np.float64] | list[float]) -> SpherePoint:
        """Build a point from any nonzero 3-vector."""
        x, y, z = (float(v) for v in vector)
        return cls(eta1=x, eta2=y, eta3=z)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.eta1, self.eta2, self.eta3], dtype=np.float64)


NORTH_POLE = SpherePoint(eta1=0.0, eta2=0.0, eta3=1.0)


def stereo(p: SpherePoint) -> ExtComplex:
    """Project a sphere point to Ĉ from the north pole.

    Example:
        >>> stereo(SpherePoint(eta1=0.0, eta2=0.0, eta3=-1.0)).value
        0j
    """
    if p.eta3 > 0.0:
        if p.eta1 == 0.0 and p.eta2 == 0.0:
            return INFINITY
        # (1 + η3)/(η1 − iη2) avoids cancellation in 1 − η3
        return ExtComplex.from_complex((1.0 + p.eta3) / complex(p.eta1, -p.eta2))
    return ExtComplex.finite(complex(p.eta1, p.eta2) / (1.0 - p.eta3))


def stereo_inv(z: ExtComplex) -> SpherePoint:
    """Lift a point of Ĉ to the Riemann sphere.

    Example:
        >>> stereo_inv(ExtComplex.finite(1j)).as_array().round(12).tolist()
        [0.0, 1.0, 0.0]
    """
    if z.is_infinity:
        return NORTH_POLE
    x, y = z.re, z.im
    r = math.hypot(x, y)
    if r <= 1.0:
        denom = r * r + 1.0
        return SpherePoint(
            eta1=2 * x / denom, eta2=2 * y / denom, eta3=(r * r - 1.0) / denom
        )
    # Large |z|: divide through by r to keep r² from overflowing
    inv_r = 1.0 / r
    denom = r + inv_r
    return SpherePoint(
        eta1=2 * (x * inv_r) / denom,
        eta2=2 * (y * inv_r) / denom,
        eta3=(r - inv_r) / denom,
    )


def chordal_distance(a: ExtComplex, b: ExtComplex) -> float:
    """Euclidean distance between the sphere preimages of ``a`` and ``b``."""
    if a.is_infinity and b.is_infinity:
        return 0.0
    return float(np.linalg.norm(stereo_inv(a).as_array() - stereo_inv(b).as_array()))


def ext_eq(a: ExtComplex, b: ExtComplex, tol: float) -> bool:
    """Tolerance equality on Ĉ.

    Finite pairs match when ``|a − b| ≤ tol``. Near ∞, that is when either
    point is ∞ or has modulus above ``1 / tol``, the comparison switches to
    the chordal metric, where absolute differences stop being meaningful.

    Args:
        a: First point.
        b: Second point.
        tol: Positive tolerance.

    Returns:
        True if the points agree within ``tol``.

    Example:
        >>> ext_eq(ExtComplex.finite(1000), ExtComplex.finite(1001), 1e-5)
        False
        >>> ext_eq(ExtComplex.finite(1e12), INFINITY, 1e-9)
        True
    """
    if tol <= 0:
        msg = f"Tolerance must be positive, got {tol}"
        raise ValueError(msg)
    if a.is_infinity and b.is_infinity:
        return True
    if _near_infinity(a, tol) or _near_infinity(b, tol):
        return chordal_distance(a, b) <= tol
    return abs(a.value - b.value) <= tol


def _near_infinity(z: ExtComplex, tol: float) -> bool:
    return z.is_infinity or abs(z.value) * tol > 1.0
