"""
Configuration for the QEC erasure toolkit

Settings are read once from ``QEC_*`` environment variables and validated
with pydantic. Every numerical tolerance used by the library lives here so a
batch run can tighten or relax them without touching code.
"""

import os
import logging
from functools import lru_cache
from typing import Dict, Optional

from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "QEC_"


class Settings(BaseModel):
    """Library-wide tolerances, size caps and field tables"""

    # equality of states, norms and inner products
    state_tolerance: float = Field(default=1e-10, gt=0)
    # Knill-Laflamme expectation gaps and off-diagonals
    condition_tolerance: float = Field(default=1e-9, gt=0)
    # smallest eigenvalue accepted for a density matrix
    psd_tolerance: float = Field(default=1e-9, gt=0)
    # a trial fails when fidelity < 1 - fidelity_failure_threshold
    fidelity_failure_threshold: float = Field(default=1e-8, gt=0)
    max_dense_qubits: int = Field(default=12, ge=1, le=16)
    max_bruteforce_dimension: int = Field(default=20, ge=1, le=26)
    max_enumerated_logical_qubits: int = Field(default=16, ge=0, le=24)
    # extension degree m -> primitive polynomial bit mask (bit i = coeff of x^i)
    primitive_polynomials: Dict[int, int] = Field(default_factory=dict)
    log_level: str = "INFO"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {value}")
        return value

    @field_validator("primitive_polynomials")
    @classmethod
    def _degree_matches(cls, value: Dict[int, int]) -> Dict[int, int]:
        for m, poly in value.items():
            if poly.bit_length() - 1 != m:
                raise ValueError(f"Primitive polynomial {poly:#b} does not have degree {m}")
        return value


def _parse_polynomial_overrides(raw: str) -> Dict[int, int]:
    """Parse ``"5:0b100101,6:67"`` into ``{5: 37, 6: 67}``"""
    overrides: Dict[int, int] = {}
    for item in filter(None, (part.strip() for part in raw.split(","))):
        degree, _, poly = item.partition(":")
        overrides[int(degree)] = int(poly, 0)
    return overrides


def settings_from_env(environ: Optional[Dict[str, str]] = None) -> Settings:
    """Build settings from ``QEC_*`` variables, falling back to defaults"""
    environ = dict(os.environ if environ is None else environ)
    values: Dict[str, object] = {}
    for name in Settings.model_fields:
        key = ENV_PREFIX + name.upper()
        if key not in environ:
            continue
        if name == "primitive_polynomials":
            values[name] = _parse_polynomial_overrides(environ[key])
        else:
            values[name] = environ[key]
    return Settings(**values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    settings = settings_from_env()
    logger.debug(f"Loaded settings: {settings.model_dump()}")
    return settings


def reset_settings() -> None:
    """Forget cached settings so the next call re-reads the environment"""
    get_settings.cache_clear()
