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
"""Functions and classes for padix errors."""
from __future__ import annotations

import sys
from typing import NoReturn

from padix import _, color
from padix.constants import ERROR_PREFIX, NOTICE_PREFIX
from padix.utils import eprint


class ExitCode:  # pylint: disable=too-few-public-methods
	"""Constants for Exit Codes."""

	OK = 0
	NEGATIVE = 1
	USAGE = 2
	PRECISION = 3
	SIGINT = 130


class PadixError(Exception):
	"""Base class for every error raised by padix."""

	exit_code = ExitCode.USAGE


class DomainError(PadixError):
	"""Input outside the domain of an operation."""


class DegenerateChangeError(DomainError):
	"""A generated basis is not a basis."""


class ParserError(PadixError):
	"""Exception class for errors with parsing."""


class PrecisionError(PadixError):
	"""Too few known digits to decide a condition."""

	exit_code = ExitCode.PRECISION

	def __init__(self, message: str = "", needed: int = 0, available: int = 0) -> None:
		"""Define error properties."""
		super().__init__(message)
		self.needed = needed
		self.available = available


class PrecisionExhausted(PrecisionError):
	"""A result is indistinguishable from zero at the working precision."""


class BudgetError(PadixError):
	"""An exhaustive sweep is larger than the residue budget."""

	exit_code = ExitCode.PRECISION

	def __init__(self, size: int, budget: int) -> None:
		"""Define error properties."""
		super().__init__(
			_("sweep over {size} residues exceeds the budget of {budget}").format(
				size=size, budget=budget
			)
		)
		self.size = size
		self.budget = budget


class IncompleteSetError(PadixError):
	"""No element of a representative set decomposes the input."""

	exit_code = ExitCode.NEGATIVE

	def __init__(self, message: str, coset: int, valuation_class: int) -> None:
		"""Define error properties."""
		super().__init__(message)
		self.coset = coset
		self.valuation_class = valuation_class


def padix_error(error: PadixError) -> NoReturn:
	"""Print a padix error and exit with its code."""
	eprint(f"{ERROR_PREFIX} {error}")
	if isinstance(error, PrecisionError) and error.needed:
		eprint(
			_("{notice} Needed {needed} digits but only {available} are known.").format(
				notice=NOTICE_PREFIX,
				needed=color(error.needed, "YELLOW"),
				available=color(error.available, "YELLOW"),
			)
		)
	sys.exit(error.exit_code)
