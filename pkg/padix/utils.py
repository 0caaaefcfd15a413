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
"""Where Utilities who don't have a special home come together."""
from __future__ import annotations

import json
import os
import sys
from datetime import datetime
from fractions import Fraction
from typing import Any

from padix import _
from padix.constants import BUDGET_ENV, DEFAULT_BUDGET, NOTICE_PREFIX
from padix.options import arguments


def get_date() -> str:
	"""Return the formatted Date and Time."""
	return f"{datetime.now():%Y-%m-%d %H:%M:%S}"


def vprint(msg: object) -> None:
	"""Print message if verbose."""
	if arguments.verbose or arguments.debug:
		eprint(msg)
	if arguments.debug:
		dprint(msg, from_verbose=True)


def dprint(msg: object, from_verbose: bool = False) -> None:
	"""Print message if debugging, write to the debug log if one is set.

	from_verbose as true will stop this from printing.

	vprint sends it's messages here to be put in the log.
	"""
	if not arguments.debug:
		return
	if not from_verbose:
		eprint(f"DEBUG: {msg}")
	if logfile := arguments.config.get_str("debug_log"):
		with open(logfile, "a", encoding="utf-8") as file:
			file.write(f"[{get_date()}] DEBUG: {msg}\n")


def eprint(*args: Any, **kwargs: Any) -> None:
	"""Print message to stderr."""
	print(*args, file=sys.stderr, **kwargs)


def resolve_budget(budget: int | None = None) -> int:
	"""Return the residue budget.

	The flag wins over the environment, which wins over the config file.
	"""
	if budget is not None:
		return budget
	if arguments.budget is not None:
		return arguments.budget
	if env := os.environ.get(BUDGET_ENV):
		try:
			return int(env)
		except ValueError:
			eprint(
				_("{notice} Ignoring {env}={value}, it is not an integer.").format(
					notice=NOTICE_PREFIX, env=BUDGET_ENV, value=env
				)
			)
	return arguments.config.get_int("budget", DEFAULT_BUDGET)


def check_budget(size: int, budget: int | None = None) -> None:
	"""Raise BudgetError if a sweep of `size` residues is over budget."""
	# pylint: disable=import-outside-toplevel, cyclic-import
	from padix.error import BudgetError

	limit = resolve_budget(budget)
	if size > limit:
		raise BudgetError(size, limit)


def fraction_str(value: Fraction | int) -> str:
	"""Format an exact rational the way the parsers read it back."""
	value = Fraction(value)
	if value.denominator == 1:
		return f"{value.numerator}"
	return f"{value.numerator}/{value.denominator}"


def dump_json(data: object) -> str:
	"""Serialize a report or record to JSON."""
	return json.dumps(data, indent=2, ensure_ascii=False, default=_json_default)


def _json_default(value: object) -> object:
	if isinstance(value, Fraction):
		return fraction_str(value)
	if isinstance(value, (set, frozenset)):
		return sorted(value)
	if hasattr(value, "to_dict"):
		return value.to_dict()
	raise TypeError(f"{type(value).__name__} is not JSON serializable")
