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
"""Main module for padix which facilitates the commands."""
from __future__ import annotations

import sys
from functools import wraps
from pathlib import Path
from typing import Callable, List, Optional, TypeVar

from padix import _, color, console
from padix.carry import emit_criterion
from padix.constants import FAIL_TEXT, FINDING_TEXT, NOTICE_PREFIX, PASS_TEXT, CheckState
from padix.error import ExitCode, PadixError, padix_error
from padix.leibniz import (
	Class3Params,
	is_filiform,
	leibniz_defect,
	lower_central_dims,
	normalize_class3,
	parse_params,
	structure_constants,
)
from padix.options import (
	ALGEBRA_CLASS,
	BUDGET,
	DEBUG,
	DERIVED,
	EXPONENT,
	JSON,
	OUTPUT,
	PARAMS,
	PRECISION,
	PRIME,
	QUICK,
	REDUCED,
	SET_KIND,
	STAGES,
	SYMBOLIC_PRIME,
	VALIDATE,
	VALUE,
	VERBOSE,
	SetKind,
	arguments,
	padix,
)
from padix.padic_core import PrecisionContext, parse_value
from padix.reps import (
	RepresentativeSet,
	build_set,
	build_tilde_set,
	construct_set,
	decompose,
	minimal_set,
	validate,
)
from padix.report import CHECKS, Report, Scale, build_report
from padix.rich import check_progress, fraction_row, key_values, padix_table, state_text
from padix.roots import solve as solve_equation
from padix.utils import dprint, dump_json, eprint, vprint

Command = TypeVar("Command", bound=Callable[..., None])

STATE_TEXT = {
	CheckState.PASS: PASS_TEXT,
	CheckState.FINDING: FINDING_TEXT,
	CheckState.FAIL: FAIL_TEXT,
}


def padix_errors(func: Command) -> Command:
	"""Turn a PadixError into its message and exit code."""

	@wraps(func)
	def wrapper(*args: object, **kwargs: object) -> None:
		try:
			func(*args, **kwargs)
		except PadixError as error:
			dprint(f"{type(error).__name__}: {error}")
			padix_error(error)

	return wrapper  # type: ignore[return-value]


def emit(record: object) -> None:
	"""Print a JSON record to stdout."""
	print(dump_json(record))


@padix.command(help=_("Decide whether x^q = a is solvable in Q_p."))
@padix_errors
# pylint: disable=unused-argument,too-many-arguments
def solve(
	prime: int = PRIME,
	exponent: int = EXPONENT,
	value: str = VALUE,
	precision: Optional[int] = PRECISION,
	json: Optional[bool] = JSON,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Decide whether x^q = a is solvable in Q_p."""
	a = parse_value(value, PrecisionContext(prime, arguments.precision))
	verdict = solve_equation(a, exponent)
	vprint(_("a = {value}").format(value=a.text()))
	if arguments.json:
		emit({"p": prime, "q": exponent, "a": a.compact(), **verdict.to_dict()})
	else:
		answer = (
			color(_("solvable"), "GREEN")
			if verdict.solvable
			else color(_("not solvable"), "RED")
		)
		print(
			_("x^{q} = {a} is {answer} in Q_{p} ({method})").format(
				q=exponent, a=value, answer=answer, p=prime, method=verdict.method.value
			)
		)
		if verdict.root is not None:
			print(
				_("root: {root} (to {digits} digits)").format(
					root=verdict.root.text(), digits=verdict.effective_precision
				)
			)
		elif verdict.failure_reason is not None:
			print(verdict.failure_reason.condition)
	if not verdict.solvable:
		sys.exit(ExitCode.NEGATIVE)


@padix.command(help=_("Print the digit conditions for x^(p^m) = a."))
@padix_errors
# pylint: disable=unused-argument
def criterion(
	prime: str = SYMBOLIC_PRIME,
	stages: int = STAGES,
	derived: bool = DERIVED,
	json: Optional[bool] = JSON,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Print the digit conditions for x^(p^m) = a."""
	result = emit_criterion(None if prime == "p" else int(prime), stages, derived)
	if arguments.json:
		emit(result.to_dict())
		return
	print(
		_("x^({p}^{m}) = a is solvable iff ({source}):").format(
			p=prime, m=stages, source=result.source
		)
	)
	for line in result.pretty():
		print(f"  {line}")


def _set_table(rep_set: RepresentativeSet) -> None:
	title = f"{rep_set.label} ({rep_set.provenance.label})"
	table = padix_table(_("γ mod q"), _("Elements"), title=title)
	for valuation, elements in sorted(rep_set.rows().items()):
		table.add_row(f"{valuation}", fraction_row(elements))
	console.print(table)
	if rep_set.validation is not None:
		check = rep_set.validation
		console.print(
			key_values(
				[
					(_("checked mod p^K"), check.checked_depth),
					(_("sound"), check.sound),
					(_("complete"), check.complete),
					(_("distinct"), check.distinct),
					(_("missing cosets"), len(check.missing)),
				]
			)
		)


@padix.command(help=_("Show the representative sets E_{p,q}."))
@padix_errors
# pylint: disable=unused-argument,too-many-arguments
def epsilon(
	prime: int = PRIME,
	exponent: int = EXPONENT,
	depth: Optional[int] = VALIDATE,
	reduced: bool = REDUCED,
	budget: Optional[int] = BUDGET,
	json: Optional[bool] = JSON,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Show the claimed set next to the constructed and minimal ones."""
	claimed: Optional[RepresentativeSet]
	try:
		claimed = build_tilde_set(prime) if reduced else build_set(prime, exponent)
	except PadixError as error:
		vprint(f"{NOTICE_PREFIX} {error}")
		claimed = None
	if claimed is not None and claimed.q != exponent:
		eprint(_("{notice} The reduced sets exist for q = p only.").format(notice=NOTICE_PREFIX))
		claimed = None
	if claimed is not None and depth is not None:
		claimed = validate(claimed, depth)
	constructed, minimal = construct_set(prime, exponent, depth)
	sets = [rep_set for rep_set in (claimed, constructed, minimal) if rep_set is not None]
	if arguments.json:
		emit({rep_set.provenance.label: rep_set.to_dict() for rep_set in sets})
		return
	for rep_set in sets:
		_set_table(rep_set)


@padix.command("decompose", help=_("Write a as ε y^q with ε from a representative set."))
@padix_errors
# pylint: disable=unused-argument,too-many-arguments
def decompose_value(
	prime: int = PRIME,
	exponent: int = EXPONENT,
	value: str = VALUE,
	kind: SetKind = SET_KIND,
	precision: Optional[int] = PRECISION,
	budget: Optional[int] = BUDGET,
	json: Optional[bool] = JSON,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Write a as ε y^q with ε from a representative set."""
	a = parse_value(value, PrecisionContext(prime, arguments.precision))
	rep_set = {
		SetKind.CLAIMED: lambda: build_set(prime, exponent),
		SetKind.TILDE: lambda: build_tilde_set(prime),
		SetKind.CONSTRUCTED: lambda: construct_set(prime, exponent)[0],
		SetKind.MINIMAL: lambda: minimal_set(prime, exponent),
	}[kind]()
	eps, root = decompose(a, exponent, rep_set)
	if arguments.json:
		emit(
			{
				"p": prime,
				"q": exponent,
				"a": a.compact(),
				"set": rep_set.label,
				"provenance": rep_set.provenance.label,
				"epsilon": eps,
				"root": root.compact(),
			}
		)
		return
	print(
		_("{a} = {eps} * y^{q} in Q_{p}, ε from {label}").format(
			a=value, eps=eps, q=exponent, p=prime, label=rep_set.label
		)
	)
	print(_("y = {root}").format(root=root.text()))


@padix.command("algebra-check", help=_("Check the Leibniz identity and the filiform property."))
@padix_errors
# pylint: disable=unused-argument,too-many-arguments
def algebra_check(
	prime: int = PRIME,
	class_tag: str = ALGEBRA_CLASS,
	params: str = PARAMS,
	json: Optional[bool] = JSON,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Check the Leibniz identity and the filiform property."""
	tensor = structure_constants(class_tag.upper(), parse_params(params), prime)
	defect = leibniz_defect(tensor)
	dims = lower_central_dims(tensor)
	filiform = is_filiform(tensor)
	if arguments.json:
		emit(
			{
				"class": class_tag.upper(),
				"leibniz_defect": defect,
				"lower_central_dims": list(dims),
				"filiform": filiform,
				"structure": tensor.to_dict(),
			}
		)
	else:
		table = padix_table(_("Product"), _("Coefficient"), title=_("Structure constants"))
		for i, j, k, coefficient in tensor.dump():
			table.add_row(f"[e{i}, e{j}] ∋ e{k}", fraction_row([coefficient]))
		console.print(table)
		console.print(
			key_values(
				[
					(_("Leibniz defect"), defect),
					(_("lower central dims"), dims),
					(_("filiform"), filiform),
				]
			)
		)
	if defect != 0 or not filiform:
		sys.exit(ExitCode.NEGATIVE)


@padix.command("algebra-normalize", help=_("Bring a class III algebra to its canonical form."))
@padix_errors
# pylint: disable=unused-argument,too-many-arguments
def algebra_normalize(
	prime: int = PRIME,
	params: str = PARAMS,
	precision: Optional[int] = PRECISION,
	budget: Optional[int] = BUDGET,
	json: Optional[bool] = JSON,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Bring a class III algebra to its canonical form."""
	source = Class3Params.of(*parse_params(params))
	form = normalize_class3(source, prime, arguments.precision)
	if arguments.json:
		emit({"input": [*source.as_tuple()], **form.to_dict()})
	elif form.covered:
		print(
			_("{source} ≅ {target} by {label}").format(
				source=source, target=form.params, label=form.label
			)
		)
		if form.change is not None:
			print(_("e_1' = {a}").format(a=fraction_row(form.change.A)))
			print(_("e_2' = {b}").format(b=fraction_row(form.change.B)))
	else:
		print(_("{source} is not covered by any case").format(source=source))
	if not form.covered:
		sys.exit(ExitCode.NEGATIVE)


def _run_report(scale: Scale) -> Report:
	with check_progress() as progress:
		task = progress.add_task("", total=len(CHECKS))
		steps: List[str] = []

		def on_step(key: str) -> None:
			steps.append(key)
			progress.update(task, description=key, completed=len(steps) - 1)
			vprint(_("Running {check}").format(check=key))

		report = build_report(scale, on_step=on_step)
	return report


@padix.command(help=_("Run the acceptance sweeps and show pass, finding and fail rows."))
@padix_errors
# pylint: disable=unused-argument
def selftest(
	quick: bool = QUICK,
	budget: Optional[int] = BUDGET,
	json: Optional[bool] = JSON,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Run the acceptance sweeps; exit 1 if any check fails."""
	report = _run_report(Scale.quick() if quick else Scale.full())
	if arguments.json:
		emit(report.to_dict())
	else:
		table = padix_table(_("Check"), _("State"), _("Title"), title=_("padix selftest"))
		for check in report.checks:
			table.add_row(check.key, state_text(check.state), check.title)
		console.print(table)
		counts = report.counts()
		print(
			", ".join(
				f"{counts[state.name.lower()]} {STATE_TEXT[state]}" for state in CheckState
			)
		)
	if report.failed:
		sys.exit(ExitCode.NEGATIVE)


@padix.command(help=_("Write the conformance report as JSON."))
@padix_errors
# pylint: disable=unused-argument
def report(
	output: Optional[Path] = OUTPUT,
	quick: bool = QUICK,
	budget: Optional[int] = BUDGET,
	verbose: bool = VERBOSE,
	debug: bool = DEBUG,
) -> None:
	"""Write the conformance report as JSON."""
	document = dump_json(_run_report(Scale.quick() if quick else Scale.full()).to_dict())
	if output is None:
		print(document)
		return
	output.write_text(document + "\n", encoding="utf-8")
	eprint(
		_("{notice} Report written to {file}").format(
			notice=NOTICE_PREFIX, file=color(output, "YELLOW")
		)
	)

