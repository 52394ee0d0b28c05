#!/usr/bin/env python3
"""
Run configuration: defaults from the environment (.env), overridden by
command-line flags.
"""

import os
import logging
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


def _env_int(name, default=None):
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}")


INT_SETTINGS = {
    "max_word_len": ("BRAUER_MAX_WORD_LEN", 12),
    "period_bound": ("BRAUER_PERIOD_BOUND", None),
    "probe_depth": ("BRAUER_PROBE_DEPTH", None),
    "seed": ("BRAUER_SEED", 0),
}
OUTPUT_FORMAT = os.getenv("BRAUER_OUTPUT_FORMAT", "text")
LOG_LEVEL = os.getenv("BRAUER_LOG_LEVEL", "WARNING")
GRAPHS_DIR = os.getenv("BRAUER_GRAPHS_DIR") or os.path.join(os.path.dirname(os.path.dirname(__file__)), "graphs")

FORMATS = {"text": "text", "structured": "structured", "json": "structured",
           "json-like": "structured", "dot": "dot"}


@dataclass
class RunConfig:
    max_word_len: int = 12
    period_bound: int = None
    probe_depth: int = None
    output_format: str = "text"
    seed: int = 0
    log_level: str = "WARNING"
    graphs_dir: str = GRAPHS_DIR


def load_run_config(**overrides):
    """Environment defaults with non-None overrides applied, validated"""
    config = RunConfig(
        output_format=os.getenv("BRAUER_OUTPUT_FORMAT", OUTPUT_FORMAT),
        log_level=os.getenv("BRAUER_LOG_LEVEL", LOG_LEVEL),
        graphs_dir=os.getenv("BRAUER_GRAPHS_DIR") or GRAPHS_DIR,
        **{key: _env_int(env, default) for key, (env, default) in INT_SETTINGS.items()},
    )
    for key, value in overrides.items():
        if value is not None:
            setattr(config, key, value)

    for name, env in (("max_word_len", "BRAUER_MAX_WORD_LEN"),
                      ("period_bound", "BRAUER_PERIOD_BOUND"),
                      ("probe_depth", "BRAUER_PROBE_DEPTH")):
        value = getattr(config, name)
        if value is not None and value <= 0:
            raise ValueError(f"{env} must be positive, got {value}")
    if config.output_format not in FORMATS:
        raise ValueError(f"BRAUER_OUTPUT_FORMAT must be one of {sorted(FORMATS)}, got {config.output_format!r}")
    config.output_format = FORMATS[config.output_format]
    return config


def setup_logging(level=None):
    """Configure the root logger once"""
    level = (level or LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
