"""Convert raw string values of environment variables and config files to option types."""

from __future__ import annotations

from inspect import isclass
from pathlib import Path
from typing import Any, List, Literal, TypeVar, Union, cast

V = TypeVar("V")


class StrConvert:
    """Converts a string to the python type an option is declared with."""

    TRUTHFUL_VALUES = frozenset({"true", "1", "yes", "on"})
    FALSE_VALUES = frozenset({"false", "0", "no", "off", ""})
    VALID_BOOL = sorted(TRUTHFUL_VALUES | FALSE_VALUES)

    def to(self, raw: str, of_type: type[V]) -> V:
        """
        Convert given raw string to python type.

        :param raw: the raw value
        :param of_type: python type
        :return: the converted value
        """
        if getattr(of_type, "__module__", None) in {"typing", "typing_extensions"}:
            return cast(V, self._to_typing(raw, of_type))
        if isclass(of_type):
            if issubclass(of_type, Path):
                return cast(V, Path(raw.strip()))
            if issubclass(of_type, bool):
                return cast(V, self.to_bool(raw))
            if issubclass(of_type, str):
                return cast(V, raw.strip())
        return of_type(raw.strip())  # type: ignore[call-arg]

    def _to_typing(self, raw: str, of_type: Any) -> Any:
        origin = getattr(of_type, "__origin__", of_type.__class__)
        if origin in {list, List}:
            return [self.to(i.strip(), of_type.__args__[0]) for i in raw.split(",") if i.strip()]
        if origin == Union:  # Optional values
            args = [i for i in of_type.__args__ if i is not type(None)]
            return self.to(raw, args[0]) if raw.strip() else None
        if origin in {Literal, type(Literal)}:
            value = raw.strip()
            if value not in of_type.__args__:
                msg = f"{value} must be one of {of_type.__args__}"
                raise ValueError(msg)
            return value
        msg = f"{raw} cannot cast to {of_type!r}"
        raise TypeError(msg)

    @staticmethod
    def to_bool(value: str) -> bool:
        norm = str(value).strip().lower()
        if norm in StrConvert.TRUTHFUL_VALUES:
            return True
        if norm in StrConvert.FALSE_VALUES:
            return False
        msg = f"value {value!r} cannot be transformed to bool, valid: {', '.join(StrConvert.VALID_BOOL)}"
        raise TypeError(msg)


__all__ = ("StrConvert",)
