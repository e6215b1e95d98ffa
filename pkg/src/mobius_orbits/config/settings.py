"""Application settings using Pydantic Settings."""

from typing import Literal

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from mobius_orbits.domain.models import (
    CheckSettings,
    LieSettings,
    OrbitSettings,
    ToleranceSettings,
)

LogLevel = Literal["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR"]


class MobiusOrbitsSettings(BaseSettings):
    """Main application settings with environment/file support.

    Loads configuration from, highest priority first:
    1. Environment variables (prefixed with MOBIUS_ORBITS_, nested with ``__``)
    2. Keyword arguments, i.e. values given on the command line
    3. .env file (if present)
    4. Default values from domain models

    Environment first means ``MOBIUS_ORBITS_SEED`` overrides ``--seed``.
    """

    model_config = SettingsConfigDict(
        env_prefix="MOBIUS_ORBITS_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    seed: int = Field(default=0, description="Seed of the invariant suite")
    n_iters: int = Field(default=200, ge=1, description="Samples per invariant")
    output_format: Literal["json", "csv"] = Field(
        default="json",
        description="Format of orbit tables",
    )
    log_level: LogLevel = Field(default="WARNING", description="stderr log level")

    # Nested configuration (use default factories)
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    orbit: OrbitSettings = Field(default_factory=OrbitSettings)
    lie: LieSettings = Field(default_factory=LieSettings)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return env_settings, init_settings, dotenv_settings, file_secret_settings

    @property
    def check(self) -> CheckSettings:
        """Seed and sample count as a :class:`CheckSettings`."""
        return CheckSettings(seed=self.seed, n_iters=self.n_iters)
