"""Configuration layer: Pydantic settings and environment management."""

from mobius_orbits.config.settings import MobiusOrbitsSettings

__all__ = ["MobiusOrbitsSettings"]
