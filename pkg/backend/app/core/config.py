import os
import logging
from dotenv import load_dotenv

from pathlib import Path
from sympy import isprime

from app.core.exceptions import ConfigurationError

# Try to find .env in multiple locations
# 1. Current directory (for running from project root)
# 2. Parent of backend folder (project root)
# 3. Backend folder itself
possible_env_paths = [
    Path(".").resolve() / ".env",  # Current directory
    Path(__file__).resolve().parent.parent.parent.parent / ".env",  # Project root (backend/../)
    Path(__file__).resolve().parent.parent.parent / ".env",  # Backend folder
]

env_loaded = False
for env_path in possible_env_paths:
    if env_path.exists():
        load_dotenv(dotenv_path=env_path)
        env_loaded = True
        break

if not env_loaded:
    # Try loading without explicit path (uses cwd)
    load_dotenv()

logger = logging.getLogger("polystab")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got '{raw}'")


class Settings:
    """Process-wide settings, read from the environment on construction."""

    def __init__(self):
        # ── Application ───────────────────────────────────────────────────
        self.ENVIRONMENT = os.getenv("ENVIRONMENT", "development")
        self.PROJECT_NAME = "Matroidal Stability Engine"
        self.VERSION = "1.0.0"
        self.REPORT_SCHEMA_VERSION = 1
        self.LOG_LEVEL = os.getenv("LOG_LEVEL", "")

        # ── Resource caps ─────────────────────────────────────────────────
        self.MAX_ASS_VARIABLES = _int_env("MAX_ASS_VARIABLES", 14)
        self.EXACT_DEPTH_MAX_GENERATORS = _int_env("EXACT_DEPTH_MAX_GENERATORS", 25)
        self.EXACT_DEPTH_MAX_LATTICE = _int_env("EXACT_DEPTH_MAX_LATTICE", 20000)
        self.DECOMPOSITION_MAX_COMPONENTS = _int_env("DECOMPOSITION_MAX_COMPONENTS", 20000)
        self.GRAPHIC_MAX_EDGES = _int_env("GRAPHIC_MAX_EDGES", 16)
        self.EXPONENT_LIMIT = _int_env("EXPONENT_LIMIT", 2**31 - 1)

        # ── Random instances ──────────────────────────────────────────────
        self.RANDOM_MAX_RETRIES = _int_env("RANDOM_MAX_RETRIES", 50)
        self.RANDOM_MAX_VARIABLES = _int_env("RANDOM_MAX_VARIABLES", 10)
        self.RANDOM_MAX_GENERATORS = _int_env("RANDOM_MAX_GENERATORS", 200)

        # ── Betti coefficients ────────────────────────────────────────────
        self.FIELD_PRIME = _int_env("FIELD_PRIME", 32003)
        self.SECOND_FIELD_PRIME = _int_env("SECOND_FIELD_PRIME", 0)

        # ── Execution ─────────────────────────────────────────────────────
        self.WORKERS = _int_env("WORKERS", 1)
        self.DEFAULT_KMAX = _int_env("DEFAULT_KMAX", 3)
        self.DEFAULT_SEED = _int_env("DEFAULT_SEED", 20240601)


def validate_settings(cfg: Settings) -> None:
    """Fail loudly on values the engine cannot run with."""
    positive = {
        "MAX_ASS_VARIABLES": cfg.MAX_ASS_VARIABLES,
        "EXACT_DEPTH_MAX_GENERATORS": cfg.EXACT_DEPTH_MAX_GENERATORS,
        "EXACT_DEPTH_MAX_LATTICE": cfg.EXACT_DEPTH_MAX_LATTICE,
        "DECOMPOSITION_MAX_COMPONENTS": cfg.DECOMPOSITION_MAX_COMPONENTS,
        "GRAPHIC_MAX_EDGES": cfg.GRAPHIC_MAX_EDGES,
        "RANDOM_MAX_RETRIES": cfg.RANDOM_MAX_RETRIES,
        "WORKERS": cfg.WORKERS,
        "DEFAULT_KMAX": cfg.DEFAULT_KMAX,
        "EXPONENT_LIMIT": cfg.EXPONENT_LIMIT,
    }
    bad = [k for k, v in positive.items() if v < 1]
    if bad:
        raise ConfigurationError(
            f"FATAL: settings must be positive: {', '.join(sorted(bad))}"
        )

    if not isprime(cfg.FIELD_PRIME):
        raise ConfigurationError(f"FATAL: FIELD_PRIME={cfg.FIELD_PRIME} is not prime")
    if cfg.SECOND_FIELD_PRIME and not isprime(cfg.SECOND_FIELD_PRIME):
        raise ConfigurationError(
            f"FATAL: SECOND_FIELD_PRIME={cfg.SECOND_FIELD_PRIME} is not prime"
        )
    if cfg.SECOND_FIELD_PRIME == cfg.FIELD_PRIME:
        logger.warning(
            "SECOND_FIELD_PRIME equals FIELD_PRIME; the discrepancy check is a no-op"
        )

    if cfg.FIELD_PRIME < 100:
        logger.warning(
            "FIELD_PRIME=%d is small; homology over small fields may differ from characteristic 0",
            cfg.FIELD_PRIME,
        )
    if cfg.MAX_ASS_VARIABLES > 20:
        logger.warning(
            "MAX_ASS_VARIABLES=%d allows prime sweeps over 2^%d subsets",
            cfg.MAX_ASS_VARIABLES,
            cfg.MAX_ASS_VARIABLES,
        )


settings = Settings()
validate_settings(settings)
