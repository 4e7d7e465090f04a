"""Contains the plugin manager object."""

from __future__ import annotations

import logging
import os
from typing import TYPE_CHECKING

import pluggy

from . import NAME, spec

if TYPE_CHECKING:
    from qsym.check import CheckReport
    from qsym.config.cli.parser import QsymParser

DISABLE_ENV_VAR = "QSYM_DISABLE_PLUGINS"
LOGGER = logging.getLogger(__name__)


class Plugin:
    def __init__(self) -> None:
        self.manager: pluggy.PluginManager = pluggy.PluginManager(NAME)
        self.manager.add_hookspecs(spec)

    def _register_plugins(self) -> None:
        from qsym.session.cmd import aut, lemmas, maintheorem, qaut, replay, table4, version_flag  # noqa: PLC0415

        if os.environ.get(DISABLE_ENV_VAR):
            LOGGER.debug("external plugins disabled via %s", DISABLE_ENV_VAR)
        else:
            self.manager.load_setuptools_entrypoints(NAME)
        internal_plugins = (version_flag, aut, qaut, table4, maintheorem, lemmas, replay)
        for plugin in internal_plugins:
            self.manager.register(plugin)
        self.manager.check_pending()

    def qsym_add_option(self, parser: QsymParser) -> None:
        self.manager.hook.qsym_add_option(parser=parser)

    def qsym_on_report(self, report: CheckReport) -> None:
        self.manager.hook.qsym_on_report(report=report)

    def load_plugins(self) -> None:
        for _plugin in self.manager.get_plugins():  # make sure we start with a clean state, repeated in memory run
            self.manager.unregister(_plugin)
        self._register_plugins()


MANAGER = Plugin()

__all__ = (
    "DISABLE_ENV_VAR",
    "MANAGER",
    "Plugin",
)
