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
"""Module for shared constants."""
from __future__ import annotations

import os
from enum import IntEnum
from pathlib import Path

from padix import _, color

# File Constants
XDG_CONFIG_HOME = Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config"))
USER_CONFIG = XDG_CONFIG_HOME / "padix" / "padix.conf"
"""~/.config/padix/padix.conf"""
SYSTEM_CONFIG = Path("/etc/padix/padix.conf")
"""/etc/padix/padix.conf"""
GPL3_LICENSE = Path("/usr/share/common-licenses/GPL-3")
"""/usr/share/common-licenses/GPL-3"""

CONFIG_ENV = "PADIX_CONFIG"
BUDGET_ENV = "PADIX_BUDGET"

DEFAULT_PRECISION = 32
MIN_PRECISION = 4
DEFAULT_BUDGET = 10_000_000
FREE_VALUES_EXTRA = (0, 1)
"""Free parameters are sampled over these values and the prime itself."""

ERROR_PREFIX = color(_("Error:"), "RED")
NOTICE_PREFIX = color(_("Notice:"), "YELLOW")
PASS_TEXT = color(_("pass"), "GREEN")
FAIL_TEXT = color(_("fail"), "RED")
FINDING_TEXT = color(_("finding"), "YELLOW")


class Provenance(IntEnum):
	"""Where the elements of a representative set came from."""

	CLAIMED = 0
	CLAIMED_REDUCED = 1
	CONSTRUCTED = 2
	REDUCED_MINIMAL = 3

	@property
	def label(self) -> str:
		"""Return the serialized tag."""
		return self.name.lower().replace("_", "-")


class CheckState(IntEnum):
	"""Outcome of a single conformance check."""

	PASS = 0
	FINDING = 1
	FAIL = 2
