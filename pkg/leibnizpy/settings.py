import logging
import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import Field

from .exceptions import ConfigError, GuardExceededError
from .models import _Base

log = logging.getLogger("leibniz.settings")

ENV_PREFIX = "LEIBNIZ_"


class Settings(_Base):
    """Runtime knobs, read from the environment (and a .env file) by `from_env`."""

    guard_bits: int = Field(24, ge=1, le=62, description="Oracles refuse more than 2**guard_bits candidates")
    forced_guard_bits: int = Field(28, ge=1, le=62, description="Ceiling used with force=True")
    workers: int = Field(1, ge=1, description="Worker processes for partitioned enumeration")
    log_level: str = Field("WARNING", description="Level for the 'leibniz' logger tree")

    @classmethod
    def from_env(cls) -> "Settings":
        load_dotenv()
        values = {}
        for name in ("guard_bits", "forced_guard_bits", "workers"):
            raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
            if raw is None:
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise ConfigError(f"{ENV_PREFIX}{name.upper()} must be an integer, got {raw!r}")
        level = os.getenv(f"{ENV_PREFIX}LOG_LEVEL")
        if level:
            if not isinstance(logging.getLevelName(level.upper()), int):
                raise ConfigError(f"Unknown log level {level!r}")
            values["log_level"] = level.upper()
        try:
            return cls.model_validate(values)
        except ValueError as e:
            raise ConfigError(str(e))

    def guard_limit(self, force: bool = False) -> int:
        return 2 ** (self.forced_guard_bits if force else self.guard_bits)


@lru_cache(maxsize=None)
def default_settings() -> Settings:
    return Settings.from_env()


def check_guard(size: int, force: bool = False, settings: Optional[Settings] = None) -> None:
    """
    Refuses exhaustive searches over more than the configured number of candidates.

    Raises:
        GuardExceededError: when size is above the limit.
    """
    settings = settings or default_settings()
    limit = settings.guard_limit(force)
    if size > limit:
        log.info("Guard tripped: %s candidates, limit %s (force=%s)", size, limit, force)
        raise GuardExceededError(size, limit)
    log.debug("Guard ok: %s candidates, limit %s", size, limit)
