import logging

from pydantic import model_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Enumeration caps
    enumeration_cap: int = 24  # vertices, perfect-matching enumeration
    shore_cap: int = 26  # vertices, odd-shore enumeration
    generation_cap: int = 14  # a + b, canonical graph enumeration
    cor1_cap: int = 16  # vertices, neighbourhood corollary subset sweep

    # Witness search
    witness_max_n: int = 8

    # Census
    census_jobs: int = 1

    # Logging
    log_level: str = "WARNING"

    # Test-suite switch for the slow part-size-5 sweeps
    run_long_census: bool = False

    @model_validator(mode="before")
    @classmethod
    def validate_caps(cls, values):
        """Caps must lie in 1..64 (bitset width); log level must be a stdlib level name."""
        cap_fields = [
            "enumeration_cap",
            "shore_cap",
            "generation_cap",
            "cor1_cap",
            "witness_max_n",
        ]

        for field in cap_fields:
            value = values.get(field)
            if value is None or value == "":
                continue
            try:
                number = int(value)
            except (TypeError, ValueError):
                raise ValueError(f"{field}: must be an integer. Got: '{value}'")
            if not 1 <= number <= 64:
                raise ValueError(f"{field}: must be between 1 and 64. Got: {number}")

        level = values.get("log_level")
        if isinstance(level, str) and level:
            if not isinstance(logging.getLevelName(level.upper()), int):
                raise ValueError(f"log_level: unknown level '{level}'")
            values["log_level"] = level.upper()

        return values

    model_config = {"env_file": ".env", "env_prefix": "THINBRACE_", "extra": "ignore"}


settings = Settings()
