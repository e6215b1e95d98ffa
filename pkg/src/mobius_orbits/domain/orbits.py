"""One-parameter and multi-parameter families of rotations through M.

Given M with polar data (τ_ζ, φ_ζ, λ = arg ω):

* ``d_tau``: rotations z ↦ e^{iτ}z about the polar axis.
* ``w_phi``: rotations carrying the pole to declination φ at longitude
  λ + π/2; a subgroup in φ at fixed λ.
* ``u_phi_lambda``: the same family in the literal longitude convention,
  which sends the pole to longitude λ + π.
* ``t_orbit``: the orbit T_τ = W ∘ D^τ ∘ W*, all rotations about M's axis.
* ``phi_family`` / ``lambda_family``: rotations by τ_ζ about axes swept in
  declination or longitude.
* ``g_family``: every rotation, indexed by (φ, λ, τ).

All family functions take λ as arg ω and shift by :data:`LONGITUDE_OFFSET`
where the literal convention is needed.
"""

from __future__ import annotations

import cmath
import math
from typing import Literal

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.optimize import minimize_scalar

from mobius_orbits.domain.extplane import ExtComplex, SpherePoint, stereo_inv
from mobius_orbits.domain.mobius import (
    QuatMobius,
    evaluate,
    pointwise_distance,
    qcompose,
    qstar,
)
from mobius_orbits.domain.polar import angles_to_params, extract_polar, pole_aligner

# u_phi_lambda(φ, λ + LONGITUDE_OFFSET) = w_phi(φ, λ) for λ = arg ω
LONGITUDE_OFFSET = -math.pi / 2

Family = Literal["phi", "lambda"]


class OrbitSample(BaseModel, frozen=True):
    """One point of a sampled family."""

    parameter: float = Field(..., description="τ, φ or λ in radians")
    transform: QuatMobius
    image_of_start: ExtComplex | None = None
    sphere_image: SpherePoint | None = None


class ClosureWitness(BaseModel, frozen=True):
    """Two family parameters whose composition leaves the family."""

    family: Family
    first: float
    second: float
    defect: float = Field(..., ge=0, description="Pointwise distance to the family")


# ──────────────────────────────────────────────────────────────────────────────
# Elementary families
# ──────────────────────────────────────────────────────────────────────────────


def d_tau(tau: float) -> QuatMobius:
    """Q(e^{iτ/2}, 0), i.e. z ↦ e^{iτ}z."""
    return QuatMobius.of(cmath.exp(0.5j * tau), 0)


def u_phi_lambda(phi: float, lam: float) -> QuatMobius:
    """Q(cos(φ/2), −sin(φ/2)·e^{iλ}).

    Carries the north pole to declination φ at longitude λ + π.
    """
    return QuatMobius.of(math.cos(phi / 2), -math.sin(phi / 2) * cmath.exp(1j * lam))


def w_phi(phi: float, lam: float) -> QuatMobius:
    """Aligning rotation by φ for axes of longitude λ + π/2.

    ``w_phi(ψ, λ) ∘ w_phi(φ, λ) = w_phi(ψ + φ, λ)``.
    """
    return u_phi_lambda(phi, lam + LONGITUDE_OFFSET)


def t_orbit(q: QuatMobius, tau: float) -> QuatMobius:
    """Member T_τ of the orbit of q, from the closed form.

    T_τ = Q(cos(τ/2) + i sin(τ/2) cos φ_ζ, sin(τ/2) sin φ_ζ e^{i arg ω}), so
    T_{τ_ζ} = q. For the identity the orbit is ``d_tau``; rotations about −i₃
    use φ_ζ = π.

    Args:
        q: Transformation fixing the orbit's axis.
        tau: Orbit parameter in radians.
    """
    data = extract_polar(q)
    return angles_to_params(tau, data.phi, data.lam)


def phi_family(q: QuatMobius, phi: float) -> QuatMobius:
    """Φ_φ = W^φ ∘ D ∘ W^{−φ}: rotation by τ_ζ about the axis at declination φ.

    ``phi_family(q, φ_ζ)`` is q and ``phi_family(q, 0)`` is D.
    """
    data = extract_polar(q)
    aligner = w_phi(phi, data.lam)
    return qcompose(aligner, qcompose(d_tau(data.tau), qstar(aligner)))


def lambda_family(q: QuatMobius, lam: float) -> QuatMobius:
    """Λ_λ = L_λ ∘ D ∘ L_λ*: rotation by τ_ζ about the axis at declination φ_ζ.

    λ is in the arg ω convention, so ``lambda_family(q, arg ω)`` is q. The
    family is 2π-periodic in λ but not closed under composition.
    """
    data = extract_polar(q)
    aligner = u_phi_lambda(data.phi, lam + LONGITUDE_OFFSET)
    return qcompose(aligner, qcompose(d_tau(data.tau), qstar(aligner)))


def g_family(phi: float, lam: float, tau: float) -> QuatMobius:
    """G_{φ,λ,τ} = U ∘ D^τ ∘ U*, the rotation by τ about the axis (φ, λ).

    Every quaternionic transformation q equals ``g_family(φ_ζ, arg ω, τ_ζ)``.
    """
    aligner = u_phi_lambda(phi, lam + LONGITUDE_OFFSET)
    return qcompose(aligner, qcompose(d_tau(tau), qstar(aligner)))


# ──────────────────────────────────────────────────────────────────────────────
# Invariant curves
# ──────────────────────────────────────────────────────────────────────────────


def sample_invariant_curve(
    q: QuatMobius, z0: ExtComplex, n: int
) -> list[OrbitSample]:
    """Trace z0 under the orbit of q at ``n`` uniform τ in [0, 2π).

    Args:
        q: Transformation whose orbit is sampled.
        z0: Starting point on Ĉ.
        n: Number of samples, at least 2.

    Returns:
        Samples ordered by τ, with the image in Ĉ and on the sphere.

    Raises:
        ValueError: If ``n < 2``.
    """
    if n < 2:
        msg = f"Need at least 2 samples, got {n}"
        raise ValueError(msg)
    data = extract_polar(q)
    samples = []
    for tau in np.arange(n) * (2 * math.pi / n):
        member = angles_to_params(float(tau), data.phi, data.lam)
        image = evaluate(member, z0)
        samples.append(
            OrbitSample(
                parameter=float(tau),
                transform=member,
                image_of_start=image,
                sphere_image=stereo_inv(image),
            )
        )
    return samples


# ──────────────────────────────────────────────────────────────────────────────
# Non-closure of the declination and longitude families
# ──────────────────────────────────────────────────────────────────────────────


def _member(q: QuatMobius, family: Family, parameter: float) -> QuatMobius:
    if family == "phi":
        return phi_family(q, parameter)
    return lambda_family(q, parameter)


def membership_defect(
    candidate: QuatMobius, q: QuatMobius, family: Family, grid: int = 64
) -> float:
    """Smallest pointwise distance from ``candidate`` to a member of q's family.

    A coarse grid over [0, 2π) locates the nearest member, and a bounded
    scalar minimization refines it.

    Args:
        candidate: Transformation to test.
        q: Transformation defining the family.
        family: ``"phi"`` for {Φ_φ}, ``"lambda"`` for {Λ_λ}.
        grid: Number of coarse grid points.

    Returns:
        Zero (up to rounding) for members, positive otherwise.
    """
    step = 2 * math.pi / grid

    def distance(t: float) -> float:
        return pointwise_distance(candidate, _member(q, family, t))

    coarse = [distance(k * step) for k in range(grid)]
    best = int(np.argmin(coarse))
    centre = best * step
    result = minimize_scalar(
        distance,
        bounds=(centre - step, centre + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(min(coarse[best], result.fun))


def find_closure_witness(
    q: QuatMobius,
    family: Family,
    rng: np.random.Generator,
    threshold: float = 1e-3,
    attempts: int = 50,
) -> ClosureWitness | None:
    """Search for two members whose composition is not in the family.

    Args:
        q: Transformation defining the family.
        family: ``"phi"`` or ``"lambda"``.
        rng: Random generator for the parameter pairs.
        threshold: Minimum defect that counts as a witness.
        attempts: Number of random pairs to try.

    Returns:
        The first witness found, or None.
    """
    for attempt in range(attempts):
        first, second = (float(t) for t in rng.uniform(0.0, 2 * math.pi, size=2))
        product = qcompose(_member(q, family, first), _member(q, family, second))
        defect = membership_defect(product, q, family)
        if defect > threshold:
            logger.debug(
                f"Closure witness for {family} family after {attempt + 1} "
                f"attempts: defect {defect:.3e}"
            )
            return ClosureWitness(
                family=family, first=first, second=second, defect=defect
            )
    logger.debug(f"No closure witness for {family} family in {attempts} attempts")
    return None
