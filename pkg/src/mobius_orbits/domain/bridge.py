"""The γ bijection between quaternions and Möbius parameters.

γ(q) = (q0 + i·q3, q2 − i·q1) is an ℝ-linear bijection ℝ⁴ → ℂ². On unit
quaternions it induces the double cover q ↦ Q(γ(q)) onto the quaternionic
Möbius transformations, under which [C_q] coincides with the induced sphere
rotation and quaternion products become parameter products.
"""

import numpy as np
from pydantic import BaseModel, Field

from mobius_orbits.domain.exceptions import ZeroQuaternionError
from mobius_orbits.domain.mobius import QuatMobius, induced_rotation
from mobius_orbits.domain.quaternion import Quaternion, norm, qmul, rotation_matrix_cq


class ParamPair(BaseModel, frozen=True):
    """Raw (ζ, ω) parameters; the sign is kept, nothing is normalized."""

    zeta: complex = Field(..., description="ζ = q0 + i·q3")
    omega: complex = Field(..., description="ω = q2 − i·q1")

    def to_quat_mobius(self) -> QuatMobius:
        """The (normalized, sign-canonical) transformation Q(ζ, ω)."""
        return QuatMobius.of(self.zeta, self.omega)


def gamma(q: Quaternion) -> ParamPair:
    """γ(q) = (q0 + i·q3, q2 − i·q1)."""
    return ParamPair(zeta=complex(q.q0, q.q3), omega=complex(q.q2, -q.q1))


def gamma_inv(p: ParamPair) -> Quaternion:
    """γ⁻¹(ζ, ω) = Re ζ − Im ω·i₁ + Re ω·i₂ + Im ζ·i₃."""
    return Quaternion(
        q0=p.zeta.real,
        q1=-p.omega.imag,
        q2=p.omega.real,
        q3=p.zeta.imag,
    )


def quaternion_of(q: QuatMobius) -> Quaternion:
    """Unit quaternion for a transformation (one of the two preimages)."""
    return gamma_inv(ParamPair(zeta=q.zeta, omega=q.omega))


def check_cq_equals_mhat(q: Quaternion) -> float:
    """Max-abs difference between [C_q] and the rotation induced by Q(γ(q)).

    Raises:
        ZeroQuaternionError: If q = 0.
    """
    if norm(q) == 0.0:
        msg = "The zero quaternion has no rotation"
        raise ZeroQuaternionError(msg)
    cq = rotation_matrix_cq(q)
    mhat = induced_rotation(gamma(q).to_quat_mobius())
    return float(np.max(np.abs(cq - mhat)))


def check_homomorphism(p: Quaternion, q: Quaternion) -> float:
    """Largest deviation of γ(pq) from the parameter product of γ(p), γ(q).

    The identities checked are

        ζ_pq = ζ_p ζ_q − ω_p ω̄_q,    ω_pq = ζ_p ω_q + ω_p ζ̄_q.
    """
    gp, gq = gamma(p), gamma(q)
    gpq = gamma(qmul(p, q))
    zeta_rhs = gp.zeta * gq.zeta - gp.omega * gq.omega.conjugate()
    omega_rhs = gp.zeta * gq.omega + gp.omega * gq.zeta.conjugate()
    return max(abs(gpq.zeta - zeta_rhs), abs(gpq.omega - omega_rhs))
