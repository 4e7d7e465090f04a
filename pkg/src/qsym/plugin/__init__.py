"""
qsym uses `pluggy <https://pluggy.readthedocs.io/en/stable/>`_ to let other packages add commands and consume reports.

Pluggy discovers a plugin by looking up entry-points named ``qsym``, for example in a pyproject.toml:

.. code-block:: toml

    [project.entry-points.qsym]
    your_plugin = "your_plugin.hooks"

A plugin implements hooks. For example the following adds a command counting the edges of a graph file:

.. code-block:: python

    from pathlib import Path

    from qsym.config.cli.parser import QsymParser
    from qsym.plugin import impl


    @impl
    def qsym_add_option(parser: QsymParser) -> None:
        sub = parser.add_command("edges", [], "count the edges of a graph", count_edges)
        sub.add_argument("graph", type=Path)

Setting the ``QSYM_DISABLE_PLUGINS`` environment variable skips every plugin that is not part of qsym.
"""

from __future__ import annotations

from typing import Any, Callable, TypeVar

import pluggy

NAME = "qsym"  #: the name of the qsym hook

_F = TypeVar("_F", bound=Callable[..., Any])
impl: Callable[[_F], _F] = pluggy.HookimplMarker(NAME)  #: decorator to mark qsym plugin hooks


__all__ = (
    "NAME",
    "impl",
)
