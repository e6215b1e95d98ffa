"""Shared pytest fixtures for mobius-orbits tests.

Session-scoped fixtures hold the fixed transformations used across modules;
function-scoped fixtures provide fresh random generators and settings.
"""

import math
import os

import numpy as np
import pytest

from mobius_orbits.config.settings import MobiusOrbitsSettings
from mobius_orbits.domain.mobius import QuatMobius
from mobius_orbits.domain.models import ToleranceSettings
from mobius_orbits.domain.polar import angles_to_params

# ─────────────────────────────────────────────────────────────────────────────
# Session-scoped fixtures (fixed transformations)
# ─────────────────────────────────────────────────────────────────────────────


@pytest.fixture(scope="session")
def x_rotation() -> QuatMobius:
    """Rotation by π/2 about i₁: Q(cos(π/4), −i sin(π/4))."""
    return QuatMobius.of(math.cos(math.pi / 4), -1j * math.sin(math.pi / 4))


@pytest.fixture(scope="session")
def z_rotation() -> QuatMobius:
    """Rotation by π/2 about i₃: z ↦ iz."""
    return QuatMobius.of(complex(math.cos(math.pi / 4), math.sin(math.pi / 4)), 0)


@pytest.fixture(scope="session")
def oblique_rotation() -> QuatMobius:
    """ζ = 1/2 + i/2, ω = 1/√2: rotation by 2π/3 about (0, √(2/3), 1/√3)."""
    return QuatMobius.of(0.5 + 0.5j, 1 / math.sqrt(2))


@pytest.fixture(scope="session")
def identity() -> QuatMobius:
    return QuatMobius.identity()


@pytest.fixture(scope="session")
def closure_fixture() -> QuatMobius:
    """Rotation by π/2 about the axis at declination π/3, arg ω = 0.4."""
    return angles_to_params(math.pi / 2, math.pi / 3, 0.4)


# ─────────────────────────────────────────────────────────────────────────────
# Function-scoped fixtures (for test isolation)
# ─────────────────────────────────────────────────────────────────────────────


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator, fresh for every test."""
    return np.random.default_rng(20240607)


@pytest.fixture
def tolerances() -> ToleranceSettings:
    return ToleranceSettings()


@pytest.fixture
def clean_env(
    monkeypatch: pytest.MonkeyPatch, tmp_path_factory: pytest.TempPathFactory
) -> None:
    """Remove MOBIUS_ORBITS_* variables and run away from any .env file."""
    for key in list(os.environ):
        if key.startswith("MOBIUS_ORBITS_"):
            monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path_factory.mktemp("no_dotenv"))


@pytest.fixture
def settings(clean_env: None) -> MobiusOrbitsSettings:
    """Default settings isolated from the environment."""
    return MobiusOrbitsSettings()
