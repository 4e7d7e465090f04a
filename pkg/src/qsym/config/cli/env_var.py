"""Provides configuration values from the environment variables."""

from __future__ import annotations

import logging
import os
from typing import Any

from .convert import StrConvert

CONVERT = StrConvert()
PREFIX = "QSYM_"


def get_env_var(key: str, of_type: type[Any]) -> tuple[Any, str] | None:
    """
    Get the environment variable option.

    :param key: the option destination requested
    :param of_type: the type we would like to convert it to
    :return: the converted value and its origin, ``None`` when not set or not convertible
    """
    environ_key = f"{PREFIX}{key.upper()}"
    if environ_key not in os.environ:
        return None
    value = os.environ[environ_key]
    try:
        result = CONVERT.to(value, of_type)
    except Exception as exception:  # noqa: BLE001
        logging.warning("env var %s=%r cannot be transformed to %r because %r", environ_key, value, of_type, exception)
        return None
    return result, f"env var {environ_key}"


__all__ = (
    "PREFIX",
    "get_env_var",
)
