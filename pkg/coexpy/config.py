import os
from dataclasses import dataclass, field, replace
from pathlib import Path

__all__ = ["Settings", "DEFAULT_SETTINGS", "CACHE_ENV_VAR"]

CACHE_ENV_VAR = "COEXPY_CACHE_DIR"


def _default_cache_dir():
    return Path.home() / ".cache" / "coexpy"


@dataclass(frozen=True)
class Settings:
    '''
    Knobs shared by the exact integrals, the extremal search and the CLI
    '''
    term_budget: int = 10**8
    witness_cap: int = 100
    max_nodes: int = None
    max_seconds: float = None
    cache_dir: Path = field(default_factory=_default_cache_dir)

    @classmethod
    def from_env(cls, environ=None, **kwargs):
        environ = os.environ if environ is None else environ
        if environ.get(CACHE_ENV_VAR):
            kwargs.setdefault("cache_dir", Path(environ[CACHE_ENV_VAR]))
        return cls(**kwargs)

    def override(self, **kwargs):
        return replace(self, **{key: val for key, val in kwargs.items() if val is not None})


DEFAULT_SETTINGS = Settings()
