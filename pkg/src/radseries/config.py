"""key=value configuration with environment override.

Resolution order: an explicit --config path, then $RADSERIES_CONFIG, then
./radseries.conf if present, then built-in defaults.  Command-line flags
override whatever the file says.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import InvalidArgumentError

ENV_VAR = "RADSERIES_CONFIG"
DEFAULT_FILENAME = "radseries.conf"


@dataclass
class Config:
    sieve_limit: int = 100_000
    prime_limit: int = 100_000
    tolerance_scale: float = 1.0
    cache_values: bool = True
    threads: int = 1
    spec: str = "radical"  # default built-in multiplicative spec


_BOOL_WORDS = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}


def _parse_value(name: str, raw: str, kind: type):
    raw = raw.strip()
    try:
        if kind is bool:
            return _BOOL_WORDS[raw.lower()]
        return kind(raw)
    except (KeyError, ValueError):
        raise InvalidArgumentError(f"config key {name}: cannot parse {raw!r} as {kind.__name__}") from None


def load_config(path: str | os.PathLike | None = None) -> Config:
    """Load configuration, falling back to defaults when no file applies."""
    if path is None:
        path = os.environ.get(ENV_VAR)
    if path is None and Path(DEFAULT_FILENAME).is_file():
        path = DEFAULT_FILENAME
    cfg = Config()
    if path is None:
        return cfg
    known = {f.name for f in fields(Config)}
    kinds = {"sieve_limit": int, "prime_limit": int, "tolerance_scale": float,
             "cache_values": bool, "threads": int, "spec": str}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidArgumentError(f"cannot read config {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidArgumentError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, raw = line.partition("=")
        key = key.strip()
        if key not in known:
            raise InvalidArgumentError(f"{path}:{lineno}: unknown config key {key!r}")
        setattr(cfg, key, _parse_value(key, raw, kinds[key]))
    return cfg
