"""Exception types shared across the package."""


class M2mecError(Exception):
    """Base class for all package errors."""


class ConfigError(M2mecError):
    """Invalid configuration value, unknown key, or inconsistent parameters."""


class InfeasibleSlotError(M2mecError):
    """A remote placement or transmission was requested with zero link rate."""


class DegenerateUpdateError(M2mecError):
    """Bayes update hit a zero normalizer (observation impossible under the prior)."""


class OracleSizeError(M2mecError):
    """Instance too large for exact enumeration."""
