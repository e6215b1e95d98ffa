"""Domain models for mobius-orbits: matrix aliases and settings."""

from typing import TypeAlias

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, Field

# 3×3 real matrices acting on sphere coordinates
Rotation3: TypeAlias = NDArray[np.float64]
SkewMatrix3: TypeAlias = NDArray[np.float64]


class ToleranceSettings(BaseModel, frozen=True):
    """Contract tolerances used by the invariant suite.

    Each value is an upper bound on a worst-case error except
    ``counterexample_margin``, which is a lower bound on a mismatch.
    """

    isomorphism: float = Field(
        default=1e-11,
        gt=0,
        description="Max-abs difference between [C_q] and the induced rotation",
    )
    homomorphism: float = Field(
        default=1e-12,
        gt=0,
        description="Parameter product identity error, relative to ‖p‖‖q‖",
    )
    pointwise: float = Field(
        default=1e-9,
        gt=0,
        description="Chordal error at the reference points for map equality",
    )
    column_oracle: float = Field(
        default=1e-9,
        gt=0,
        description="Induced rotation vs. σ⁻¹∘M∘σ on the basis vectors",
    )
    fixed_points: float = Field(
        default=1e-8,
        gt=0,
        description="Chordal error between fixed points and σ(±axis)",
    )
    generator: float = Field(
        default=1e-8,
        gt=0,
        description="so(3) generator vs. central finite difference",
    )
    exponential: float = Field(
        default=1e-9,
        gt=0,
        description="Rodrigues exponential vs. induced rotation of the orbit",
    )
    tangent: float = Field(
        default=1e-9,
        gt=0,
        description="Tangent transformation vs. finite difference of the orbit",
    )
    counterexample_margin: float = Field(
        default=0.5,
        gt=0,
        description="Minimum mismatch between generator and assembled tangent map",
    )

    def scaled(self, factor: float) -> "ToleranceSettings":
        """Return a copy with every error bound multiplied by ``factor``.

        Args:
            factor: Positive scale factor.

        Returns:
            New settings; ``counterexample_margin`` is left unchanged.
        """
        if factor <= 0:
            msg = f"Tolerance scale must be positive, got {factor}"
            raise ValueError(msg)
        bounds = self.model_dump(exclude={"counterexample_margin"})
        return self.model_copy(
            update={name: value * factor for name, value in bounds.items()}
        )


class OrbitSettings(BaseModel, frozen=True):
    """Settings for invariant-curve sampling."""

    n_samples: int = Field(
        default=16,
        ge=2,
        description="Number of uniform τ samples on [0, 2π)",
    )


class LieSettings(BaseModel, frozen=True):
    """Settings for generator checks."""

    fd_step: float = Field(
        default=1e-6,
        gt=0,
        lt=0.1,
        description="Central finite-difference step in radians",
    )
    series_terms: int = Field(
        default=30,
        ge=2,
        description="Terms of the truncated exponential power series",
    )


class CheckSettings(BaseModel, frozen=True):
    """Settings for the seeded invariant suite."""

    seed: int = Field(default=0, description="Seed for numpy's default_rng")
    n_iters: int = Field(
        default=200,
        ge=1,
        description="Random samples per invariant",
    )
