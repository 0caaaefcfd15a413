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
"""Rich options for padix output."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from rich.box import ROUNDED
from rich.console import Console, Group, RenderableType
from rich.markup import escape
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskID, TextColumn
from rich.table import Column, Table
from rich.text import Text

from padix import _, err_console
from padix.constants import CheckState
from padix.options import arguments
from padix.utils import fraction_str

__all__ = (
	"Table",
	"Column",
	"Console",
	"Text",
	"escape",
	"Group",
	"TaskID",
	"Panel",
	"Progress",
	"RenderableType",
)

STATE_STYLE = {
	CheckState.PASS: "bold green",
	CheckState.FINDING: "bold yellow",
	CheckState.FAIL: "bold red",
}

SPIN_TYPE = "dots"
ELLIPSIS = "…"
checking = _("Checking")


def check_progress() -> Progress:
	"""Return a transient progress bar for the conformance sweeps."""
	return Progress(
		SpinnerColumn(SPIN_TYPE, style="bold blue"),
		TextColumn(f"[bold blue]{checking} {{task.description}} {ELLIPSIS}", justify="right"),
		BarColumn(bar_width=None),
		TextColumn("[progress.percentage]{task.completed}/{task.total}"),
		console=err_console,
		transient=True,
		disable=arguments.json or not err_console.is_terminal,
	)


def padix_table(*columns: str, title: str = "") -> Table:
	"""Return a table in the padix style."""
	table = Table(
		*(Column(name, overflow="fold") for name in columns),
		title=title or None,
		box=ROUNDED,
		padding=(0, 1),
		header_style="bold",
	)
	return table


def state_text(state: CheckState) -> Text:
	"""Return the colored state name."""
	return Text(_(state.name.lower()), style=STATE_STYLE[state])


def fraction_row(values: Iterable[Fraction]) -> str:
	"""Join rationals as p/q text."""
	return ", ".join(fraction_str(value) for value in values)


def key_values(pairs: Sequence[tuple[str, object]], title: str = "") -> Table:
	"""Return a two column table of labelled values."""
	table = padix_table(_("Field"), _("Value"), title=title)
	for key, value in pairs:
		table.add_row(f"[bold]{escape(key)}", escape(f"{value}"))
	return table
