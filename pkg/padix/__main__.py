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
"""The main module for padix."""
from __future__ import annotations

import sys

# Imports to get all of the subcommands into typer
import padix.padix as _padix  # pylint: disable=unused-import
from padix import _
from padix.error import ExitCode
from padix.options import padix
from padix.utils import eprint


def main() -> None:
	"""Padix function to reference from the entry point."""
	try:
		padix()
	except KeyboardInterrupt:
		eprint("\n" + _("Exiting at your request."))
		sys.exit(ExitCode.SIGINT)
	except BrokenPipeError:
		sys.stderr.close()


if __name__ == "__main__":
	main()
