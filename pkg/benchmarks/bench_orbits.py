"""Performance benchmarks for orbit sampling and the invariant suite.

Run benchmarks with:
    uv run pytest benchmarks/ --benchmark-only

Compare against baseline:
    uv run pytest benchmarks/ --benchmark-compare
"""

import numpy as np
import pytest

from mobius_orbits.domain.extplane import ExtComplex
from mobius_orbits.domain.lie import expm_so3, so3_generator
from mobius_orbits.domain.mobius import QuatMobius, induced_rotation
from mobius_orbits.domain.orbits import membership_defect, sample_invariant_curve
from mobius_orbits.domain.polar import decompose, extract_polar
from mobius_orbits.domain.verification import run_invariant_suite


@pytest.mark.benchmark(group="transformations")
class TestTransformationBenchmarks:
    """Benchmarks for single-transformation operations."""

    def test_extract_polar(
        self, benchmark: pytest.fixture, oblique_rotation: QuatMobius
    ) -> None:
        result = benchmark(extract_polar, oblique_rotation)
        assert result.degenerate == "none"

    def test_decompose(
        self, benchmark: pytest.fixture, oblique_rotation: QuatMobius
    ) -> None:
        result = benchmark(decompose, oblique_rotation)
        assert result.D.omega == 0

    def test_induced_rotation(
        self, benchmark: pytest.fixture, oblique_rotation: QuatMobius
    ) -> None:
        result = benchmark(induced_rotation, oblique_rotation)
        assert result.shape == (3, 3)

    def test_rodrigues(
        self, benchmark: pytest.fixture, oblique_rotation: QuatMobius
    ) -> None:
        generator = so3_generator(oblique_rotation)
        result = benchmark(expm_so3, generator, 1.0)
        assert np.allclose(result.T @ result, np.eye(3))


@pytest.mark.benchmark(group="orbits")
class TestOrbitBenchmarks:
    """Benchmarks for sampling and closure searches."""

    def test_sample_invariant_curve(
        self, benchmark: pytest.fixture, x_rotation: QuatMobius
    ) -> None:
        """Sample 256 points of an invariant curve."""
        result = benchmark(
            sample_invariant_curve, x_rotation, ExtComplex.finite(0.5j), 256
        )
        assert len(result) == 256

    def test_membership_defect(
        self, benchmark: pytest.fixture, closure_fixture: QuatMobius
    ) -> None:
        """Grid search plus bounded refinement over the Φ family."""
        result = benchmark(membership_defect, closure_fixture, closure_fixture, "phi")
        assert result < 1e-6


@pytest.mark.benchmark(group="suite")
class TestSuiteBenchmarks:
    """Benchmarks for the seeded invariant suite."""

    def test_invariant_suite(self, benchmark: pytest.fixture) -> None:
        """One pass of every invariant with 20 samples each."""
        result = benchmark(run_invariant_suite, 0, 20)
        assert result.passed
