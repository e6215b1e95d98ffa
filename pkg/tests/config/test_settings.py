"""Tests for MobiusOrbitsSettings sources and priorities."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from mobius_orbits.config.settings import MobiusOrbitsSettings
from mobius_orbits.domain.models import CheckSettings, ToleranceSettings


class TestDefaults:
    """Tests for default values."""

    def test_defaults(self, settings: MobiusOrbitsSettings) -> None:
        assert settings.seed == 0
        assert settings.n_iters == 200
        assert settings.output_format == "json"
        assert settings.log_level == "WARNING"
        assert settings.tolerances == ToleranceSettings()
        assert settings.orbit.n_samples == 16
        assert settings.lie.fd_step == 1e-6

    def test_check_view(self, settings: MobiusOrbitsSettings) -> None:
        """check bundles seed and sample count."""
        assert settings.check == CheckSettings(seed=0, n_iters=200)


@pytest.mark.usefixtures("clean_env")
class TestSources:
    """Tests for environment, keyword and .env sources."""

    def test_keyword_arguments(self) -> None:
        s = MobiusOrbitsSettings(seed=3, output_format="csv")
        assert s.seed == 3
        assert s.output_format == "csv"

    def test_environment_variable(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MOBIUS_ORBITS_N_ITERS", "50")
        assert MobiusOrbitsSettings().n_iters == 50

    def test_environment_beats_keywords(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """MOBIUS_ORBITS_SEED wins over a seed given on the command line."""
        monkeypatch.setenv("MOBIUS_ORBITS_SEED", "9")
        assert MobiusOrbitsSettings(seed=3).seed == 9

    def test_nested_delimiter(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Nested values use a double underscore."""
        monkeypatch.setenv("MOBIUS_ORBITS_TOLERANCES__POINTWISE", "1e-6")
        monkeypatch.setenv("MOBIUS_ORBITS_ORBIT__N_SAMPLES", "32")
        s = MobiusOrbitsSettings()
        assert s.tolerances.pointwise == 1e-6
        assert s.tolerances.isomorphism == ToleranceSettings().isomorphism
        assert s.orbit.n_samples == 32

    def test_dotenv_file(self) -> None:
        """A .env file in the working directory is read."""
        Path(".env").write_text("MOBIUS_ORBITS_SEED=11\n", encoding="utf-8")
        assert MobiusOrbitsSettings().seed == 11

    def test_keywords_beat_dotenv(self) -> None:
        Path(".env").write_text("MOBIUS_ORBITS_SEED=11\n", encoding="utf-8")
        assert MobiusOrbitsSettings(seed=4).seed == 4

    def test_unknown_variables_ignored(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MOBIUS_ORBITS_COLOUR", "blue")
        assert MobiusOrbitsSettings().seed == 0


@pytest.mark.usefixtures("clean_env")
class TestValidation:
    """Tests for rejected values."""

    def test_rejects_zero_iterations(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MOBIUS_ORBITS_N_ITERS", "0")
        with pytest.raises(ValidationError):
            MobiusOrbitsSettings()

    def test_rejects_unknown_format(self) -> None:
        with pytest.raises(ValidationError):
            MobiusOrbitsSettings(output_format="xml")  # type: ignore[arg-type]

    def test_rejects_unknown_log_level(self) -> None:
        with pytest.raises(ValidationError):
            MobiusOrbitsSettings(log_level="LOUD")  # type: ignore[arg-type]

    def test_rejects_one_sample_orbit(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MOBIUS_ORBITS_ORBIT__N_SAMPLES", "1")
        with pytest.raises(ValidationError):
            MobiusOrbitsSettings()
