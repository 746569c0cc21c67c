"""
Application settings and logging configuration
"""

import logging
import sys

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load .env file first, before class definition
load_dotenv()


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env", case_sensitive=True, extra="ignore"
    )

    # General
    DEBUG: bool = False
    PROJECT_NAME: str = "Quantum Number Theory Toolkit"

    # Numerical tolerances
    QNT_TOL: float = Field(default=1e-10, gt=0)  # identity residual threshold
    HERMITIAN_RTOL: float = Field(default=1e-12, gt=0)
    STATE_TOL: float = Field(default=1e-12, gt=0)  # trace, weights, PSD
    ENTROPY_ZERO_CUTOFF: float = Field(default=1e-14, ge=0)

    # Emission
    CSV_DIGITS: int = Field(default=17, ge=1, le=17)

    # Suites
    DEFAULT_DIM_MAX: int = Field(default=15, ge=2)


def configure_logging(debug: bool | None = None) -> None:
    """Send log records to stderr; stdout is reserved for emitted artifacts"""
    debug = settings.DEBUG if debug is None else debug
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if debug else logging.WARNING,
        format="[%(levelname)s] %(name)s: %(message)s",
        force=True,
    )


# Create settings instance
settings = Settings()
