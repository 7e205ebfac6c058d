"""Resource caps for enumerations and the representation-theoretic oracle."""
from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace

ENV_MAX_CANDIDATES = "COMPACTIFY_MAX_CANDIDATES"


@dataclass(frozen=True)
class Limits:
    max_candidates: int = 1_000_000
    max_dim: int = 10_000_000
    max_oracle_rank: int = 6

    def with_overrides(self, **kwargs) -> "Limits":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


_ACTIVE: ContextVar = ContextVar("compactify_limits", default=None)


def env_limits() -> Limits:
    """Defaults, with the candidate cap taken from the environment when set."""
    raw = os.environ.get(ENV_MAX_CANDIDATES)
    if raw:
        return Limits(max_candidates=int(raw))
    return Limits()


def current_limits() -> Limits:
    active = _ACTIVE.get()
    return active if active is not None else env_limits()


@contextmanager
def using_limits(limits: Limits):
    """Make ``limits`` the caps seen by every enumeration inside the block."""
    token = _ACTIVE.set(limits)
    try:
        yield limits
    finally:
        _ACTIVE.reset(token)


def load_config(path) -> dict:
    """Read a ``key = value`` config file; blank lines and ``#`` comments are ignored."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in {"max_candidates", "max_dim", "max_oracle_rank"}:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = int(value)
    return values
