"""Load and merge config from YAML file + environment variables."""

import os
from pathlib import Path

import yaml

from .engines import COMPLETE_RULES
from .errors import ConfigError

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "config.yaml"

ENV_OVERRIDES = {
    "NETREL_ORACLE_WORKERS": ("oracle", "workers", int),
    "NETREL_ORACLE_MAX_M_STAR": ("oracle", "max_m_star", int),
    "NETREL_COMPLETE_RULE": ("engines", "complete_rule", str),
}


def load_config(config_path=None):
    """Load config from YAML, fill defaults, then override with env vars."""
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if path.exists():
        try:
            with open(path, encoding="utf-8") as f:
                cfg = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{path}: {e}") from e
    elif config_path:
        raise ConfigError(f"config file not found: {path}")
    else:
        cfg = {}
    if not isinstance(cfg, dict):
        raise ConfigError(f"{path}: top level must be a mapping")

    # Ensure nested dicts exist
    for section in ("engines", "oracle", "generator", "output"):
        cfg.setdefault(section, {})
        if not isinstance(cfg[section], dict):
            raise ConfigError(f"section '{section}' must be a mapping")

    e = cfg["engines"]
    e.setdefault("tolerance", 1e-9)
    e.setdefault("complete_rule", "creation")
    e.setdefault("max_mps", 62)

    o = cfg["oracle"]
    o.setdefault("max_m_star", 30)
    o.setdefault("workers", 1)

    cfg["generator"].setdefault("max_retries", 100)

    out = cfg["output"]
    out.setdefault("json_indent", 2)
    out.setdefault("float_digits", 10)

    for var, (section, key, cast) in ENV_OVERRIDES.items():
        if var in os.environ:
            try:
                cfg[section][key] = cast(os.environ[var])
            except ValueError:
                raise ConfigError(f"{var}={os.environ[var]!r} is not a valid {cast.__name__}") from None

    try:
        _validate(cfg)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid config value: {e}") from e
    return cfg


def _validate(cfg):
    e, o = cfg["engines"], cfg["oracle"]
    if e["complete_rule"] not in COMPLETE_RULES:
        raise ConfigError(f"engines.complete_rule must be one of {', '.join(COMPLETE_RULES)}")
    if not 1 <= int(e["max_mps"]) <= 62:
        raise ConfigError("engines.max_mps must be in 1..62")
    if float(e["tolerance"]) <= 0:
        raise ConfigError("engines.tolerance must be positive")
    if int(o["workers"]) < 1:
        raise ConfigError("oracle.workers must be at least 1")
    if not 0 <= int(o["max_m_star"]) <= 62:
        raise ConfigError("oracle.max_m_star must be in 0..62")
    if int(cfg["generator"]["max_retries"]) < 1:
        raise ConfigError("generator.max_retries must be at least 1")
