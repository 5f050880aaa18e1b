# common/settings.py

import os
from dataclasses import dataclass

from .errors import ConfigError


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from e
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class ResourceCaps:
    """
    Feasibility caps for factorial-size computations.

    Each cap can be overridden through the environment:
    - MATINV_MAX_IDEAL_DEGREE: largest m for the ideal J(n, m) of QS_m
    - MATINV_MAX_NILPOTENCY_DEGREE: largest N for Nagata-Higman membership
    - MATINV_MAX_SEMANTIC_DEGREE: largest m for symbolic trace-identity evaluation
    - MATINV_GROUP_CAP: default closure cap for finite matrix groups
    """
    max_ideal_degree: int = 7
    max_nilpotency_degree: int = 7
    max_semantic_degree: int = 6
    group_cap: int = 10000


def load_caps() -> ResourceCaps:
    defaults = ResourceCaps()
    return ResourceCaps(
        max_ideal_degree=_env_int("MATINV_MAX_IDEAL_DEGREE", defaults.max_ideal_degree),
        max_nilpotency_degree=_env_int("MATINV_MAX_NILPOTENCY_DEGREE", defaults.max_nilpotency_degree),
        max_semantic_degree=_env_int("MATINV_MAX_SEMANTIC_DEGREE", defaults.max_semantic_degree),
        group_cap=_env_int("MATINV_GROUP_CAP", defaults.group_cap),
    )
