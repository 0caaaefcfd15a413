#                     __ _
#   ___  ___ ____ ___/ /(_)__ __
#  / _ \/ _ `/ _ `/ _  // /\ \ /
# / .__/\_,_/\_,_/\_,_//_//_\_\
#/_/
#
# Copyright (C) 2024, 2025 padix developers
#
# This file is part of padix
#
# padix is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# padix is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with padix.  If not, see <https://www.gnu.org/licenses/>.
"""Shared fixtures for the padix tests."""
from __future__ import annotations

import random

import pytest
from typer.testing import CliRunner

# Imports to get all of the subcommands into typer
import padix.padix as _padix  # pylint: disable=unused-import
from padix.options import arguments


@pytest.fixture
def runner() -> CliRunner:
	"""Return a typer test runner."""
	return CliRunner()


@pytest.fixture
def rng() -> random.Random:
	"""Return a seeded generator so sweeps are repeatable."""
	return random.Random(20)


@pytest.fixture(autouse=True)
def _quiet_arguments(monkeypatch: pytest.MonkeyPatch) -> None:
	"""Keep config and environment out of the run state."""
	monkeypatch.delenv("PADIX_BUDGET", raising=False)
	monkeypatch.setattr(arguments, "verbose", False)
	monkeypatch.setattr(arguments, "debug", False)
	monkeypatch.setattr(arguments, "json", False)
	monkeypatch.setattr(arguments, "budget", None)
