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
"""The options module."""
from __future__ import annotations

import os
import sys
from enum import Enum
from pathlib import Path
from pydoc import pager
from typing import Dict, NoReturn, Optional, Union

import tomli
import typer
from sympy import isprime

from padix import _, __version__, color
from padix.constants import (
	CONFIG_ENV,
	DEFAULT_PRECISION,
	ERROR_PREFIX,
	GPL3_LICENSE,
	MIN_PRECISION,
	NOTICE_PREFIX,
	SYSTEM_CONFIG,
	USER_CONFIG,
)

ConfigValue = Union[str, bool, int]


class Config:
	"""Class for managing configurations."""

	def __init__(self, conf: Path | None = None) -> None:
		"""Class for managing configurations."""
		self.conf = conf or self.find_config()
		self.data: Dict[str, Dict[str, ConfigValue]] = {"Padix": {}}

	@staticmethod
	def find_config() -> Path | None:
		"""Return the first config file that exists, if any."""
		candidates = [USER_CONFIG, SYSTEM_CONFIG]
		if env := os.environ.get(CONFIG_ENV):
			candidates.insert(0, Path(env))
		for path in candidates:
			if path.is_file():
				return path
		return None

	def read_config(self) -> None:
		"""Read the configuration file."""
		if self.conf is None:
			return
		try:
			with open(self.conf, "rb") as file:
				self.data = tomli.load(file)
		except (tomli.TOMLDecodeError, FileNotFoundError) as error:
			print(f"{ERROR_PREFIX} {error}", file=sys.stderr)
			print(
				_(
					"{notice} Unable to read config file: {filename}. Using defaults"
				).format(
					notice=NOTICE_PREFIX,
					filename=color(self.conf, "YELLOW"),
				),
				file=sys.stderr,
			)
		self.data.setdefault("Padix", {})

	@staticmethod
	def key_error(key: object, value: object, kind: str) -> NoReturn:
		"""Exit with key error."""
		sys.exit(
			_("{error} Config key '{key}' should be a {kind} not {value}").format(
				error=ERROR_PREFIX, key=key, kind=kind, value=value
			)
		)

	def get_bool(self, key: str, default: bool = False) -> bool:
		"""Get Boolean from config."""
		value = self.data["Padix"].get(key, default)
		if isinstance(value, bool):
			return value
		self.key_error(key, value, "bool")

	def get_str(self, key: str, default: str = "") -> str:
		"""Get String from config."""
		value = self.data["Padix"].get(key, default)
		if isinstance(value, str):
			return value
		self.key_error(key, value, "string")

	def get_int(self, key: str, default: int = 0) -> int:
		"""Get Integer from config."""
		value = self.data["Padix"].get(key, default)
		# bool is an int subclass, but `precision = true` is a mistake
		if isinstance(value, int) and not isinstance(value, bool):
			return value
		self.key_error(key, value, "integer")

	def set(self, key: str, value: ConfigValue) -> None:
		"""Set value in the Padix Config."""
		self.data["Padix"][key] = value


class Arguments:
	"""Arguments class."""

	def __init__(self) -> None:
		"""Arguments class."""
		self.command: str = ""
		self.config = Config()
		self.config.read_config()
		# True Global
		self.verbose: bool = False
		self.debug: bool = False

		# Semi Global
		self.json: bool = False
		self.precision: int = DEFAULT_PRECISION
		self.budget: Optional[int] = None
		self.init_config()

	def __str__(self) -> str:
		"""Return the state of the object as a string."""
		kwarg = "\n    ".join(
			(f"{key} = {value},") for key, value in self.__dict__.items()
		)
		return f"Options = [\n    {kwarg}\n]"

	def init_config(self) -> None:
		"""Initialize Padix Configs."""
		self.json = self.config.get_bool("json", False)
		self.precision = self.config.get_int("precision", DEFAULT_PRECISION)

	def set_verbose(self, value: bool) -> None:
		"""Set option."""
		self.verbose = value

	def set_debug(self, value: bool) -> None:
		"""Set option."""
		self.debug = value

	def set_json(self, value: Optional[bool]) -> None:
		"""Set option."""
		if value is None:
			self.json = self.config.get_bool("json", False)
			return
		self.json = value

	def set_precision(self, value: Optional[int]) -> Optional[int]:
		"""Set option."""
		if value is None:
			self.precision = self.config.get_int("precision", DEFAULT_PRECISION)
			return value
		if value < MIN_PRECISION:
			raise typer.BadParameter(
				_("precision must be at least {minimum}").format(minimum=MIN_PRECISION)
			)
		self.precision = value
		return value

	def set_budget(self, value: Optional[int]) -> Optional[int]:
		"""Set option."""
		if value is not None and value < 1:
			raise typer.BadParameter(_("budget must be positive"))
		self.budget = value
		return value

	def state(self) -> str:
		"""Return the state of the object as a string."""
		return f"{self}"


arguments = Arguments()
padix = typer.Typer(add_completion=True)


def print_license(value: bool) -> None:
	"""Print the GPLv3 with `--license`."""
	if not value:
		return
	if GPL3_LICENSE.exists():
		with open(GPL3_LICENSE, encoding="utf-8") as file:
			pager(file.read())
	else:
		print(
			_(
				"It seems the system has no license file\n"
				"The full GPLv3 can be found at:\n"
				"https://www.gnu.org/licenses/gpl-3.0.txt"
			)
		)
	sys.exit()


def version(value: bool) -> None:
	"""Print version."""
	if not value:
		return
	print(f"padix {__version__}")
	sys.exit()


VERSION = typer.Option(
	False,
	"--version",
	callback=version,
	is_eager=True,
	help=_("Show program's version number and exit."),
)

LICENSE = typer.Option(
	False,
	"--license",
	callback=print_license,
	is_eager=True,
	help=_("Reads the GPLv3 which padix is licensed under."),
)

VERBOSE = typer.Option(
	False,
	"-v",
	"--verbose",
	callback=arguments.set_verbose,
	is_eager=True,
	help=_("Print extra information while sweeping."),
)

DEBUG = typer.Option(
	False,
	"--debug",
	callback=arguments.set_debug,
	is_eager=True,
	help=_("Logs extra information for debugging."),
)

JSON = typer.Option(
	None,
	"--json / --no-json",
	callback=arguments.set_json,
	is_eager=True,
	help=_("Write machine readable JSON instead of text."),
)

PRECISION = typer.Option(
	None,
	"--prec",
	callback=arguments.set_precision,
	is_eager=True,
	help=_("Working precision in p-adic digits."),
)

BUDGET = typer.Option(
	None,
	"--budget",
	callback=arguments.set_budget,
	is_eager=True,
	help=_("Largest residue count an exhaustive sweep may visit."),
)


def check_prime(value: int) -> int:
	"""Reject a prime flag that is not a prime."""
	if value < 2 or not isprime(value):
		raise typer.BadParameter(_("{value} is not a prime").format(value=value))
	return value


def check_symbolic_prime(value: str) -> str:
	"""Accept a prime or the letter p."""
	if value == "p":
		return value
	try:
		check_prime(int(value))
	except ValueError as error:
		raise typer.BadParameter(_("expected a prime or 'p'")) from error
	return value


PRIME = typer.Option(
	...,
	"-p",
	"--prime",
	callback=check_prime,
	help=_("The prime p of Q_p."),
)

SYMBOLIC_PRIME = typer.Option(
	...,
	"-p",
	"--prime",
	callback=check_symbolic_prime,
	help=_("The prime p, or 'p' to keep it symbolic."),
)

STAGES = typer.Option(
	...,
	"--m",
	min=1,
	help=_("The number of p-th root stages, q = p^m."),
)

DERIVED = typer.Option(
	False,
	"--derived",
	help=_("Derive the conditions through the digit recursion instead of printing them."),
)

ALGEBRA_CLASS = typer.Option(
	...,
	"--class",
	help=_("The class of the algebra: I, II or III."),
)

PARAMS = typer.Option(
	...,
	"--params",
	help=_("Comma separated parameters, e.g. '0,1,0,0,0,0'."),
)

OUTPUT = typer.Option(
	None,
	"-o",
	"--output",
	help=_("Write the report to this file instead of stdout."),
)


class SetKind(str, Enum):
	"""Which representative set `decompose` searches."""

	CLAIMED = "claimed"
	TILDE = "tilde"
	CONSTRUCTED = "constructed"
	MINIMAL = "minimal"


SET_KIND = typer.Option(
	SetKind.MINIMAL,
	"--set",
	case_sensitive=False,
	help=_("The representative set to search for ε."),
)

QUICK = typer.Option(
	False,
	"--quick",
	help=_("Run the sweeps at reduced depth."),
)

EXPONENT = typer.Option(
	...,
	"-q",
	"--exp",
	help=_("The exponent q of x^q = a."),
)

VALUE = typer.Option(
	...,
	"--value",
	help=_("A value as 'n/d', an integer or the compact form 'γ|d0,d1,...'."),
)

VALIDATE = typer.Option(
	None,
	"--validate",
	metavar="K",
	help=_("Validate the sets exhaustively over residues mod p^K."),
)

REDUCED = typer.Option(
	False,
	"--reduced",
	help=_("Use the reduced set instead of the claimed one."),
)

CONTEXT_SETTINGS = {"help_option_names": ["-h", "--help"]}


@padix.callback(context_settings=CONTEXT_SETTINGS, invoke_without_command=True)
# pylint: disable=unused-argument
def global_options(
	ctx: typer.Context,
	_version: bool = VERSION,
	_license: bool = LICENSE,
) -> None:
	"""Each command has its own help page.

	For Example: `padix solve --help`
	"""
	if ctx.invoked_subcommand:
		arguments.command = ctx.invoked_subcommand
		return
	print(ctx.get_help())
