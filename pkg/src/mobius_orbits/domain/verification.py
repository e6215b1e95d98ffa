"""Seeded invariant suite over random rotations.

Each invariant draws ``n_iters`` random samples from one
``numpy.random.default_rng(seed)`` stream, records the worst error and
compares it with its tolerance. Runs with the same seed and sample count
give identical reports.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.linalg import expm

from mobius_orbits.domain.bridge import (
    check_cq_equals_mhat,
    check_homomorphism,
    gamma,
)
from mobius_orbits.domain.extplane import (
    INFINITY,
    ExtComplex,
    SpherePoint,
    chordal_distance,
    stereo,
    stereo_inv,
)
from mobius_orbits.domain.lie import (
    counterexample_report,
    expm_so3,
    generator_finite_difference,
    so3_generator,
    t_prime_zero,
    tangent_finite_difference,
)
from mobius_orbits.domain.mobius import (
    QuatMobius,
    evaluate,
    fixed_points,
    induced_rotation,
    pointwise_distance,
    qcompose,
)
from mobius_orbits.domain.models import ToleranceSettings
from mobius_orbits.domain.orbits import d_tau, t_orbit
from mobius_orbits.domain.polar import (
    Decomposition,
    decompose,
    extract_polar,
    reconstruction_error,
)
from mobius_orbits.domain.quaternion import Quaternion, rotation_matrix_cq

_BASIS = np.eye(3)


# ──────────────────────────────────────────────────────────────────────────────
# Random samples
# ──────────────────────────────────────────────────────────────────────────────


def random_unit_quaternion(rng: np.random.Generator) -> Quaternion:
    """Uniformly distributed unit quaternion (normalized Gaussian 4-vector)."""
    coords = rng.standard_normal(4)
    return Quaternion.from_array(coords / np.linalg.norm(coords))


def random_quat_mobius(rng: np.random.Generator) -> QuatMobius:
    """Uniformly distributed rotation of the Riemann sphere."""
    return gamma(random_unit_quaternion(rng)).to_quat_mobius()


def random_ext_complex(
    rng: np.random.Generator, p_infinity: float = 0.05, scale: float = 2.0
) -> ExtComplex:
    """Gaussian point of ℂ, or ∞ with probability ``p_infinity``."""
    if rng.random() < p_infinity:
        return INFINITY
    re, im = rng.normal(0.0, scale, size=2)
    return ExtComplex.finite(complex(re, im))


def random_sphere_point(rng: np.random.Generator) -> SpherePoint:
    return SpherePoint.from_vector(rng.standard_normal(3))


# ──────────────────────────────────────────────────────────────────────────────
# Reports
# ──────────────────────────────────────────────────────────────────────────────


class InvariantResult(BaseModel, frozen=True):
    """Outcome of one invariant over all its samples."""

    name: str
    worst_error: float = Field(..., ge=0)
    tolerance: float = Field(..., gt=0)
    samples: int = Field(..., ge=0)
    passed: bool


class SuiteReport(BaseModel, frozen=True):
    """All invariant results of one seeded run."""

    seed: int
    n_iters: int
    results: list[InvariantResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[InvariantResult]:
        return [r for r in self.results if not r.passed]


def _upper_bound(name: str, errors: list[float], tolerance: float) -> InvariantResult:
    worst = max(errors, default=0.0)
    return InvariantResult(
        name=name,
        worst_error=worst,
        tolerance=tolerance,
        samples=len(errors),
        passed=worst <= tolerance,
    )


# ──────────────────────────────────────────────────────────────────────────────
# Per-sample error measures
# ──────────────────────────────────────────────────────────────────────────────


def _isomorphism_error(q: Quaternion, perturbation: float) -> float:
    if perturbation == 0.0:
        return check_cq_equals_mhat(q)
    # negative control: compare [C_q'] for a nudged q' against M̂ of q
    nudged = Quaternion.from_array(q.as_array() + [0.0, perturbation, 0.0, 0.0])
    mhat = induced_rotation(gamma(q).to_quat_mobius())
    return float(np.max(np.abs(rotation_matrix_cq(nudged) - mhat)))


def _decomposition_error(q: QuatMobius, perturbation: float) -> float:
    parts = decompose(q)
    if perturbation != 0.0:
        shifted = qcompose(d_tau(perturbation), parts.D)
        parts = Decomposition(W=parts.W, D=shifted, Wstar=parts.Wstar)
    return reconstruction_error(q, parts)


def _column_oracle_error(q: QuatMobius) -> float:
    matrix = induced_rotation(q)
    columns = [
        stereo_inv(evaluate(q, stereo(SpherePoint.from_vector(e)))).as_array()
        for e in _BASIS
    ]
    return float(np.max(np.abs(matrix - np.column_stack(columns))))


def _orbit_law_error(q: QuatMobius, tau: float, nu: float) -> float:
    data = extract_polar(q)
    group = pointwise_distance(
        qcompose(t_orbit(q, tau), t_orbit(q, nu)), t_orbit(q, tau + nu)
    )
    period = pointwise_distance(t_orbit(q, tau + 2 * math.pi), t_orbit(q, tau))
    recovers = pointwise_distance(t_orbit(q, data.tau), q)
    return max(group, period, recovers)


def _fixed_point_error(q: QuatMobius) -> float | None:
    data = extract_polar(q)
    if data.degenerate != "none":
        return None
    found = fixed_points(q)
    up = stereo(SpherePoint.from_vector(data.axis.vector))
    down = stereo(SpherePoint.from_vector(-data.axis.vector))
    direct = max(chordal_distance(found[0], up), chordal_distance(found[1], down))
    swapped = max(chordal_distance(found[0], down), chordal_distance(found[1], up))
    return min(direct, swapped)


def _exponential_error(q: QuatMobius, tau: float) -> float:
    generator = so3_generator(q)
    rodrigues = expm_so3(generator, tau)
    orbit = induced_rotation(t_orbit(q, tau))
    oracle = expm(tau * generator)
    return float(
        max(np.max(np.abs(rodrigues - orbit)), np.max(np.abs(rodrigues - oracle)))
    )


def _tangent_error(q: QuatMobius, h: float) -> float:
    analytic = t_prime_zero(q).as_matrix()
    return float(np.max(np.abs(analytic - tangent_finite_difference(q, h))))


def _generator_error(q: QuatMobius, h: float) -> float:
    fd = generator_finite_difference(q, h)
    return float(np.max(np.abs(so3_generator(q) - fd)))


def _collect(n: int, measure: Callable[[], float | None]) -> list[float]:
    errors = []
    for _ in range(n):
        value = measure()
        if value is not None:
            errors.append(value)
    return errors


# ──────────────────────────────────────────────────────────────────────────────
# Suite
# ──────────────────────────────────────────────────────────────────────────────


def run_invariant_suite(
    seed: int = 0,
    n_iters: int = 200,
    tolerances: ToleranceSettings | None = None,
    perturbation: float = 0.0,
    fd_step: float = 1e-6,
) -> SuiteReport:
    """Check every algebraic invariant on seeded random samples.

    Args:
        seed: Seed for ``numpy.random.default_rng``.
        n_iters: Samples per invariant.
        tolerances: Error bounds; defaults to :class:`ToleranceSettings`.
        perturbation: Nonzero values corrupt the isomorphism and
            decomposition checks so that the suite must fail.
        fd_step: Step for the finite-difference checks.

    Returns:
        Report with one :class:`InvariantResult` per invariant.
    """
    tol = tolerances or ToleranceSettings()
    rng = np.random.default_rng(seed)
    logger.info(f"Running invariant suite: seed={seed}, n_iters={n_iters}")
    if perturbation != 0.0:
        logger.warning(f"Perturbation {perturbation:.3e} injected into the suite")

    def angle() -> float:
        return float(rng.uniform(-math.pi, math.pi))

    def pair_error() -> float:
        p, q = random_unit_quaternion(rng), random_unit_quaternion(rng)
        return check_homomorphism(p, q)

    results = [
        _upper_bound(
            "isomorphism",
            _collect(
                n_iters,
                lambda: _isomorphism_error(random_unit_quaternion(rng), perturbation),
            ),
            tol.isomorphism,
        ),
        _upper_bound(
            "homomorphism", _collect(n_iters, pair_error), tol.homomorphism
        ),
        _upper_bound(
            "polar_decomposition",
            _collect(
                n_iters,
                lambda: _decomposition_error(random_quat_mobius(rng), perturbation),
            ),
            tol.pointwise,
        ),
        _upper_bound(
            "column_oracle",
            _collect(n_iters, lambda: _column_oracle_error(random_quat_mobius(rng))),
            tol.column_oracle,
        ),
        _upper_bound(
            "orbit_laws",
            _collect(
                n_iters,
                lambda: _orbit_law_error(random_quat_mobius(rng), angle(), angle()),
            ),
            tol.pointwise,
        ),
        _upper_bound(
            "fixed_points",
            _collect(n_iters, lambda: _fixed_point_error(random_quat_mobius(rng))),
            tol.fixed_points,
        ),
        _upper_bound(
            "generator",
            _collect(
                n_iters, lambda: _generator_error(random_quat_mobius(rng), fd_step)
            ),
            tol.generator,
        ),
        _upper_bound(
            "exponential",
            _collect(
                n_iters, lambda: _exponential_error(random_quat_mobius(rng), angle())
            ),
            tol.exponential,
        ),
        _upper_bound(
            "tangent",
            _collect(
                n_iters, lambda: _tangent_error(random_quat_mobius(rng), fd_step)
            ),
            tol.tangent,
        ),
    ]
    report = counterexample_report(margin=tol.counterexample_margin)
    results.append(
        InvariantResult(
            name="counterexample",
            worst_error=report.mismatch,
            tolerance=tol.counterexample_margin,
            samples=1,
            passed=report.not_in_so3,
        )
    )
    suite = SuiteReport(seed=seed, n_iters=n_iters, results=results)
    for failure in suite.failures():
        logger.error(
            f"Invariant {failure.name} failed: worst error "
            f"{failure.worst_error:.3e} > {failure.tolerance:.3e}"
        )
    return suite
