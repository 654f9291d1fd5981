#!/usr/bin/env python3
"""
Configuration and logging setup for the RTA engine
"""

import json
import logging
import os
from typing import Dict, List, Optional

logger = logging.getLogger(__name__)

CONFIG_NAME = "rta_config.json"

DEFAULT_CONFIG = {
    "max_line_length": 79,
    "depth": 6,
    "rounds": 3,
    "max_degree": 6,
    "threads": 4,
    "output_format": "json",
    "output_dir": ".",
    "log_level": "WARNING",
    "log_file": "",
    "truncation_margin": 0,
    "duflo_max_bound": 1024,
    "center_max_degree": 4,
}


def config_candidates(script_dir: str) -> List[str]:
    """Search order: script directory, its parent, current directory"""
    return [
        os.path.join(script_dir, CONFIG_NAME),
        os.path.join(os.path.dirname(script_dir), CONFIG_NAME),
        os.path.join(os.getcwd(), CONFIG_NAME),
    ]


def load_config(path: Optional[str] = None, script_dir: Optional[str] = None) -> Dict:
    """Load configuration from JSON, filling in defaults for missing keys"""
    config = dict(DEFAULT_CONFIG)
    if path is None:
        script_dir = script_dir or os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        path = next((c for c in config_candidates(script_dir) if os.path.exists(c)), None)
        if path is None:
            return config
    try:
        with open(path, 'r') as f:
            loaded = json.load(f)
    except FileNotFoundError:
        logger.warning("config file not found: %s, using defaults", path)
        return config
    except json.JSONDecodeError as e:
        logger.warning("error reading config %s: %s, using defaults", path, e)
        return config
    for key, value in loaded.items():
        config[key] = value
    logger.debug("config loaded from %s", path)
    return config


def save_config(config: Dict, path: str):
    with open(path, 'w') as f:
        json.dump(config, f, indent=4)
        f.write("\n")


def setup_logging(config: Dict):
    """Configure the root logger once from log_level and log_file"""
    root = logging.getLogger()
    if getattr(setup_logging, "_done", False):
        return
    level = getattr(logging, str(config.get("log_level", "WARNING")).upper(), logging.WARNING)
    fmt = logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
    handler = logging.FileHandler(config["log_file"]) if config.get("log_file") else logging.StreamHandler()
    handler.setFormatter(fmt)
    root.addHandler(handler)
    root.setLevel(level)
    setup_logging._done = True
