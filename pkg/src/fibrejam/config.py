"""Flat ``key = value`` configuration text format.

One key per line, ``#`` starts a comment, blank lines ignored. Values are
kept as strings here; consumers convert with the typed getters. Writers
emit keys in a fixed order so serialization is byte-deterministic.
"""

from __future__ import annotations

from .errors import ConfigurationError


def parse_kv_text(text: str) -> dict[str, str]:
    """Parse flat key=value text into an ordered dict of raw strings."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigurationError(f"line {lineno}: empty key")
        if key in out:
            raise ConfigurationError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def read_kv_file(path) -> dict[str, str]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_kv_text(fh.read())


def format_kv_text(items: dict[str, str], header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"{k} = {v}" for k, v in items.items())
    return "\n".join(lines) + "\n"


def write_kv_file(path, items: dict[str, str], header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_kv_text(items, header=header))


def get_float(cfg: dict[str, str], key: str, default: float | None = None) -> float:
    if key not in cfg:
        if default is None:
            raise ConfigurationError(f"missing required key {key!r}")
        return default
    try:
        return float(cfg[key])
    except ValueError as exc:
        raise ConfigurationError(f"key {key!r}: not a number: {cfg[key]!r}") from exc


def get_int(cfg: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in cfg:
        if default is None:
            raise ConfigurationError(f"missing required key {key!r}")
        return default
    try:
        return int(cfg[key])
    except ValueError as exc:
        raise ConfigurationError(f"key {key!r}: not an integer: {cfg[key]!r}") from exc


def get_str(cfg: dict[str, str], key: str, default: str | None = None) -> str:
    if key not in cfg:
        if default is None:
            raise ConfigurationError(f"missing required key {key!r}")
        return default
    return cfg[key]


def get_bool(cfg: dict[str, str], key: str, default: bool | None = None) -> bool:
    if key not in cfg:
        if default is None:
            raise ConfigurationError(f"missing required key {key!r}")
        return default
    value = cfg[key].lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"key {key!r}: not a boolean: {cfg[key]!r}")
