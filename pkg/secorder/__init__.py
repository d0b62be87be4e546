"""
Package initialization for the section-order toolkit.
Implements the application factory pattern.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

_current_app = None


@dataclass
class SecOrderApp:
    """Configured toolkit instance: the active settings and the root logger."""
    name: str
    config: Dict[str, Any] = field(default_factory=dict)

    @property
    def logger(self) -> logging.Logger:
        return logging.getLogger('secorder')


def _settings_from_object(obj) -> Dict[str, Any]:
    """Copy the upper-case attributes of a configuration class."""
    return {key: getattr(obj, key) for key in dir(obj) if key.isupper()}


def create_app(config_name: Optional[str] = None) -> SecOrderApp:
    """
    Application factory that selects a configuration and sets up logging.

    Args:
        config_name (str): The configuration to use (default, development, testing, production)

    Returns:
        SecOrderApp: The configured toolkit instance, also registered as current
    """
    global _current_app

    from config import config
    config_name = config_name or os.environ.get('SECORDER_CONFIG', 'default')
    if config_name not in config:
        from secorder.errors import UsageError
        raise UsageError(f"Unknown configuration: {config_name}")

    app = SecOrderApp(name=config_name, config=_settings_from_object(config[config_name]))

    # Log to stderr so that stdout stays machine readable
    logging.basicConfig(
        level=getattr(logging, str(app.config['LOG_LEVEL']).upper(), logging.INFO),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    app.logger.setLevel(str(app.config['LOG_LEVEL']).upper())

    _current_app = app
    return app


def current_config() -> Dict[str, Any]:
    """Return the settings of the current app, or the default configuration."""
    if _current_app is not None:
        return _current_app.config
    from config import config
    return _settings_from_object(config['default'])
