"""
Configuration Loader
Load and validate configuration
"""

import yaml
from pathlib import Path
from typing import Any, Dict
from loguru import logger

DEFAULTS: Dict[str, Dict[str, Any]] = {
    'algebra': {'quasi_unipotency_bound': 2520, 'max_rank': 6},
    'table': {'path': 'data/cy_table.json', 'kmax': 5, 'workers': 1},
    'output': {'format': 'json'},
    'system': {'log_level': 'INFO'},
    'paths': {'logs': 'logs'},
}


def load_config(config_path: str = 'config/config.yaml') -> Dict:
    """
    Load configuration from YAML file

    Args:
        config_path: Path to configuration file

    Returns:
        Configuration dictionary
    """
    config_file = Path(config_path)

    if not config_file.exists():
        logger.error(f"Configuration file not found: {config_path}")
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    try:
        with open(config_file, 'r') as f:
            config = yaml.safe_load(f) or {}

        # Validate configuration
        _validate_config(config)

        logger.debug(f"Configuration loaded from {config_path}")
        return config

    except yaml.YAMLError as e:
        logger.error(f"Error parsing configuration file: {e}")
        raise


def _validate_config(config: Dict):
    """
    Validate configuration structure and fill optional keys

    Args:
        config: Configuration dictionary
    """
    required_sections = ['algebra', 'table', 'system', 'paths']

    for section in required_sections:
        if section not in config:
            raise ValueError(f"Missing required configuration section: {section}")

    for section, values in DEFAULTS.items():
        present = config.setdefault(section, {})
        for key, default in values.items():
            if key not in present:
                logger.warning(f"Missing configuration {section}.{key}, using {default!r}")
                present[key] = default

    bound = config['algebra']['quasi_unipotency_bound']
    if not isinstance(bound, int) or bound < 1:
        raise ValueError(f"algebra.quasi_unipotency_bound must be a positive integer, got {bound!r}")

    max_rank = config['algebra']['max_rank']
    if not isinstance(max_rank, int) or max_rank < 1:
        raise ValueError(f"algebra.max_rank must be a positive integer, got {max_rank!r}")

    if config['table']['kmax'] < 1:
        raise ValueError("table.kmax must be at least 1")

    if config['table']['workers'] < 1:
        raise ValueError("table.workers must be at least 1")

    if config['output']['format'] not in ('json', 'text'):
        raise ValueError(f"output.format must be json or text, got {config['output']['format']!r}")

    logger.debug("Configuration validation passed")


def default_config() -> Dict:
    """Configuration used when no file is present"""
    return {section: dict(values) for section, values in DEFAULTS.items()}


def save_config(config: Dict, config_path: str = 'config/config.yaml'):
    """
    Save configuration to YAML file

    Args:
        config: Configuration dictionary
        config_path: Path to save configuration
    """
    config_file = Path(config_path)
    config_file.parent.mkdir(parents=True, exist_ok=True)

    try:
        with open(config_file, 'w') as f:
            yaml.dump(config, f, default_flow_style=False, indent=2)

        logger.success(f"Configuration saved to {config_path}")

    except Exception as e:
        logger.error(f"Error saving configuration: {e}")
        raise
