"""mobius-orbits - Quaternionic Möbius transformations and their orbits."""

from mobius_orbits import adapters, config, domain
from mobius_orbits._version import __version__

__all__ = [
    "__version__",
    "adapters",
    "config",
    "domain",
]
