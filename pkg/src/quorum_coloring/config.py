#!/usr/bin/env python3
"""
Configuration module for Quorum Coloring

Values are layered: built-in defaults, then the YAML file, then environment
variables (a local .env file is loaded first).
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

load_dotenv()

DEFAULTS: Dict[str, Any] = {
    'limits': {
        'brute_force_tree': 20,
        'brute_force_graph': 10,
        'size_cap': 10_000_000,
        'max_closed_form_height': 62,
    },
    'refine': {
        'validate_each_iteration': False,
    },
    'generators': {
        'seed_retries': 1000,
        'local_retries': 100,
    },
    'oracles': {
        'workers': 1,
    },
    'benchmark': {
        'ratio_threshold': 3.0,
        'repetitions': 3,
        'min_timed_seconds': 0.002,
    },
    'logging': {
        'level': 'WARNING',
    },
}

# env var -> (section, key, type)
ENV_OVERRIDES = {
    'QUORUM_BRUTE_FORCE_LIMIT': ('limits', 'brute_force_tree', int),
    'QUORUM_BRUTE_FORCE_GRAPH_LIMIT': ('limits', 'brute_force_graph', int),
    'QUORUM_SIZE_CAP': ('limits', 'size_cap', int),
    'QUORUM_WORKERS': ('oracles', 'workers', int),
    'QUORUM_LOG_LEVEL': ('logging', 'level', str),
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def load_yaml_config(path: Optional[Path]) -> Dict[str, Any]:
    """Read a YAML config file; a missing file yields an empty dict"""
    if path is None or not Path(path).is_file():
        return {}
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Config file {path} must contain a mapping")
    return data


class Config:
    """Base configuration"""

    DEBUG = False
    BASE_DIR = Path(__file__).parent.parent.parent
    CONFIG_FILE = BASE_DIR / 'config.yaml'

    def __init__(self, overrides: Optional[Dict[str, Any]] = None):
        self.DEBUG = os.getenv('DEBUG', str(self.DEBUG)).lower() == 'true'
        config_file = os.getenv('QUORUM_CONFIG')
        path = Path(config_file) if config_file else self.CONFIG_FILE

        settings = copy.deepcopy(DEFAULTS)
        settings['refine']['validate_each_iteration'] = self.DEBUG
        _merge(settings, load_yaml_config(path))
        for name, (section, key, cast) in ENV_OVERRIDES.items():
            raw = os.getenv(name)
            if raw:
                settings[section][key] = cast(raw)
        _merge(settings, overrides or {})
        self.settings = settings

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self.settings.get(section, {}).get(key, default)

    @property
    def brute_force_tree_limit(self) -> int:
        return int(self.get('limits', 'brute_force_tree'))

    @property
    def brute_force_graph_limit(self) -> int:
        return int(self.get('limits', 'brute_force_graph'))

    @property
    def size_cap(self) -> int:
        return int(self.get('limits', 'size_cap'))

    @property
    def max_closed_form_height(self) -> int:
        return int(self.get('limits', 'max_closed_form_height'))

    @property
    def validate_each_iteration(self) -> bool:
        return bool(self.get('refine', 'validate_each_iteration'))

    @property
    def workers(self) -> int:
        return max(1, int(self.get('oracles', 'workers')))

    @property
    def log_level(self) -> str:
        return str(self.get('logging', 'level')).upper()


class DevelopmentConfig(Config):
    """Development configuration: refinement re-validates after every iteration"""
    DEBUG = True


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False


def get_config(overrides: Optional[Dict[str, Any]] = None) -> Config:
    """Get configuration based on environment"""
    env = os.getenv('ENV', 'development')
    if env == 'production':
        return ProductionConfig(overrides)
    return DevelopmentConfig(overrides)
