"""
src.config.env

================================================================================
Centralized Environment Variable Loader - Function-Based Access
================================================================================

Overview
--------
This module centralizes loading of the exploration bounds and runtime
settings of the toolkit, using lazy, function-based accessors instead of
module-level constants.

By encapsulating environment access in dedicated functions, it ensures:
- Strict validation of required variables
- Support for optional/default values
- Avoidance of import-time environment reads
- Improved testability and flexibility

Responsibilities
----------------
- Define `get_env_var()` for environment variable retrieval with validation.
- Define `get_int_var()` for bounded integer settings.
- Provide `get_app_config()`, a dictionary of every bound used by the
  checkers, the tame-complex enumeration and the CLI.

Usage Context
-------------
Example:
    >>> from src.config.env import get_app_config
    >>> config = get_app_config()
    >>> config["VERTEX_CAP"]
    20000
"""

import os
from typing import Optional

from dotenv import load_dotenv

from src.exceptions.custom_exceptions import ConfigurationError

load_dotenv()


def get_env_var(name: str, required: bool = True, default: Optional[str] = None) -> str:
    """
    Retrieve a single environment variable with optional default and strict validation.

    :param name: The name of the environment variable.
    :type name: str
    :param required: Whether the variable is mandatory. If True and missing, raises an error.
    :type required: bool
    :param default: Optional fallback value if the variable is not found.
    :type default: Optional[str]
    :raises EnvironmentError: If required is True and the variable is missing.
    :return: The resolved environment variable value.
    :rtype: str
    """
    value = os.getenv(name, default)
    if required and value is None:
        raise EnvironmentError(f"Missing required environment variable: {name}")
    return value if value is not None else ""


def get_int_var(name: str, default: int, minimum: int = 1) -> int:
    """
    Retrieve an integer setting, enforcing a lower bound.

    :param name: The name of the environment variable.
    :type name: str
    :param default: Value used when the variable is unset.
    :type default: int
    :param minimum: Smallest accepted value.
    :type minimum: int
    :raises ConfigurationError: If the value is not an integer or is below ``minimum``.
    :return: The parsed integer.
    :rtype: int
    """
    raw = get_env_var(name, required=False, default=str(default))
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigurationError(
            f"Environment variable {name} must be an integer",
            details={"name": name, "value": raw},
        ) from exc
    if value < minimum:
        raise ConfigurationError(
            f"Environment variable {name} must be at least {minimum}",
            details={"name": name, "value": value, "minimum": minimum},
        )
    return value


def get_app_config() -> dict:
    """
    Load and return the toolkit configuration as a dictionary.

    Configuration keys include:
    - APP_NAME, APP_VERSION: Optional, with defaults.
    - RADIUS_BOUND: ball radius bound of contraction_constant (default 6).
    - WORD_LENGTH: generic word length of enumerate_ball (default 3).
    - GRID_WORD_LENGTH: word length of the grid reproduction (default 2).
    - VERTEX_CAP: vertex budget of tame-complex portions (default 20000).
    - LENGTH_BOUND: geodesic length bound of the SCP checker (default 4).
    - LINK_MAX_DEGREE: highest elementary degree explored by `tame link` (default 4).
    - LOG_LEVEL: level name applied to the structured logger (default WARNING).

    :raises ConfigurationError: If an integer setting is malformed.
    :return: A dictionary containing the toolkit's configuration values.
    :rtype: dict
    """
    return {
        "APP_NAME": get_env_var(
            "APP_NAME", required=False, default="Uber Contraction Toolkit"
        ),
        "APP_VERSION": get_env_var("APP_VERSION", required=False, default="1.0.0"),
        "RADIUS_BOUND": get_int_var("RADIUS_BOUND", 6, minimum=0),
        "WORD_LENGTH": get_int_var("WORD_LENGTH", 3, minimum=0),
        "GRID_WORD_LENGTH": get_int_var("GRID_WORD_LENGTH", 2, minimum=0),
        "VERTEX_CAP": get_int_var("VERTEX_CAP", 20000),
        "LENGTH_BOUND": get_int_var("LENGTH_BOUND", 4),
        "LINK_MAX_DEGREE": get_int_var("LINK_MAX_DEGREE", 4),
        "LOG_LEVEL": get_env_var("LOG_LEVEL", required=False, default="WARNING").upper(),
    }
