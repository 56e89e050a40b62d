"""
Runtime configuration read from the environment (and an optional .env file)
"""
import os
from pydantic import BaseModel, Field, ValidationError
from dotenv import load_dotenv
from utils.errors import ConfigError

load_dotenv()

_INT_VARS = {
    "gen_limit": ("SIMISCALC_GEN_LIMIT", 100_000),
    "cover_bound": ("SIMISCALC_COVER_BOUND", 20),
    "max_degree": ("SIMISCALC_MAX_DEGREE", 4),
    "fuzz_workers": ("SIMISCALC_FUZZ_WORKERS", 1),
}


class Settings(BaseModel):
    """Tunable limits and defaults for a simiscalc run"""

    gen_limit: int = Field(default=100_000, ge=1)
    cover_bound: int = Field(default=20, ge=1)
    max_degree: int = Field(default=4, ge=1)
    fuzz_workers: int = Field(default=1, ge=1)
    dump_dir: str = "./fuzz_failures"
    verbose: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings from SIMISCALC_* environment variables

        Returns:
            Settings with environment overrides applied

        Raises:
            ConfigError: a variable is not an integer or is below its minimum
        """
        values = {}
        for field, (name, default) in _INT_VARS.items():
            raw = os.getenv(name)
            if raw is None:
                values[field] = default
                continue
            try:
                values[field] = int(raw.strip())
            except ValueError:
                raise ConfigError(name, raw, "expected an integer") from None
        values["dump_dir"] = os.getenv("SIMISCALC_DUMP_DIR", "./fuzz_failures")
        values["verbose"] = os.getenv("SIMISCALC_VERBOSE", "0").lower() in ("1", "true", "yes")
        try:
            return cls(**values)
        except ValidationError as e:
            field = e.errors()[0]["loc"][0]
            name = _INT_VARS[field][0]
            raise ConfigError(name, os.getenv(name, ""), e.errors()[0]["msg"]) from None


def get_settings() -> Settings:
    """Current settings; the environment is re-read on every call"""
    return Settings.from_env()
