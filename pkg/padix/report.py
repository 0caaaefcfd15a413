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
"""Conformance checks shared by `padix report` and `padix selftest`.

Each check returns a Check with a state: pass, finding (a printed claim
that exact arithmetic contradicts, recorded on purpose) or fail.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from padix import __version__
from padix.carry import (
	carry_polynomial,
	digit_recursion,
	emit_criterion,
	printed_derived_differences,
	summand_list,
)
from padix.constants import CheckState
from padix.error import DegenerateChangeError, DomainError
from padix.leibniz import (
	CASE_NUMBERS,
	BasisChange,
	Class3Params,
	canonical_example,
	change_of_basis,
	extract_class3,
	is_filiform,
	leibniz_defect,
	normalize_class3,
	padic_close,
	random_change,
	random_params,
	structure_constants,
	classification_catalog,
	transform_class3,
)
from padix.padic_core import PadicNumber
from padix.reps import (
	build_set,
	build_tilde_set,
	construct_set,
	exact_depth,
	nonpower_cover,
	reduction_witnesses,
	unit_cover,
	validate,
)
from padix.roots import (
	factor_exponent,
	fast_criterion,
	oracle_verdict,
	residue_index,
	solve,
	verify_root,
)
from padix.utils import check_budget, get_date

EXAMPLE_LIMIT = 5


@dataclass(frozen=True)
class Scale:
	"""Sweep sizes; `full` is the acceptance scale, `quick` keeps tests short."""

	name: str
	depth: int
	square_primes: Tuple[int, ...]
	coprime_primes: Tuple[int, ...]
	pth_primes: Tuple[int, ...]
	criterion_primes: Tuple[int, ...]
	criterion_stages: int
	recursion_samples: int
	transform_samples: int
	catalog_primes: Tuple[int, ...]
	set_primes: Tuple[int, ...]

	@classmethod
	def full(cls) -> Scale:
		"""Return the acceptance scale."""
		return cls(
			"full",
			depth=5,
			square_primes=(2, 3, 5, 7, 11, 13),
			coprime_primes=(2, 3, 5, 7, 11, 13),
			pth_primes=(3, 5, 7),
			criterion_primes=(5, 7),
			criterion_stages=4,
			recursion_samples=100,
			transform_samples=200,
			catalog_primes=(3, 5, 7),
			set_primes=(2, 3, 5, 7),
		)

	@classmethod
	def quick(cls) -> Scale:
		"""Return a scale that finishes in seconds."""
		return cls(
			"quick",
			depth=3,
			square_primes=(2, 3, 5),
			coprime_primes=(2, 3, 7),
			pth_primes=(3, 5),
			criterion_primes=(5,),
			criterion_stages=2,
			recursion_samples=20,
			transform_samples=8,
			catalog_primes=(3,),
			set_primes=(2, 3),
		)


@dataclass
class Check:
	"""One conformance row."""

	key: str
	title: str
	state: CheckState = CheckState.PASS
	detail: Dict[str, object] = field(default_factory=dict)

	def note(self, state: CheckState) -> None:
		"""Raise the state to at least `state`."""
		self.state = max(self.state, state)

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"key": self.key,
			"title": self.title,
			"state": self.state.name.lower(),
			"detail": self.detail,
		}


def _sweep(
	prime: int, depth: int, valuations: Sequence[int] = (0, 1), precision: Optional[int] = None
) -> Iterator[PadicNumber]:
	"""Yield every unit residue mod p^depth at each valuation."""
	check_budget(prime**depth * len(valuations))
	precision = precision or depth
	for valuation in valuations:
		for unit in range(1, prime**depth):
			if unit % prime:
				yield PadicNumber.from_residue(prime, unit, precision, valuation)


def _oracle_sweep(check: Check, prime: int, q: int, depth: int, roots: bool = False) -> None:
	mismatches: List[str] = []
	unsound = 0
	not_unique = 0
	count = 0
	for a in _sweep(prime, depth):
		count += 1
		verdict = solve(a, q)
		oracle = oracle_verdict(a, q, depth)
		if verdict.solvable != oracle.solvable:
			mismatches.append(a.compact())
		if verdict.solvable and roots and not verify_root(verdict, a, q):
			unsound += 1
		if oracle.solvable and q == prime > 2 and len(oracle.roots) != 1:
			not_unique += 1
	check.detail[f"p={prime},q={q}"] = {
		"residues": count,
		"mismatches": len(mismatches),
		"examples": mismatches[:EXAMPLE_LIMIT],
		"unsound_roots": unsound,
		"non_unique": not_unique,
	}
	if mismatches or unsound or not_unique:
		check.note(CheckState.FAIL)


def check_square(scale: Scale) -> Check:
	"""is_square against the stabilized oracle."""
	check = Check("square-oracle", "x^2 = a against the residue oracle")
	for prime in scale.square_primes:
		_oracle_sweep(check, prime, 2, scale.depth, roots=True)
	return check


def check_coprime(scale: Scale) -> Check:
	"""solve_coprime against the oracle, with root soundness."""
	check = Check("coprime-oracle", "x^q = a, gcd(q, p) = 1, against the oracle")
	for q in (3, 5):
		for prime in scale.coprime_primes:
			if prime % q:
				_oracle_sweep(check, prime, q, scale.depth, roots=True)
	return check


def check_pth(scale: Scale) -> Check:
	"""x^p = a against the oracle, with root uniqueness."""
	check = Check("pth-oracle", "x^p = a against the oracle, unique roots")
	for prime in scale.pth_primes:
		_oracle_sweep(check, prime, prime, scale.depth, roots=True)
	return check


GENERAL_CASES: Tuple[Tuple[int, int], ...] = (
	(2, 6), (3, 6), (2, 4), (3, 9), (3, 27), (5, 25), (5, 125),
)  # fmt: skip
FAST_CASES: Tuple[Tuple[int, int], ...] = (
	(2, 6), (2, 4), (2, 8), (3, 6), (5, 20), (3, 9), (5, 25), (3, 27), (5, 125),
)  # fmt: skip


def _general_depth(prime: int, q: int, depth: int) -> int:
	return max(depth, factor_exponent(q, prime).s + 3, exact_depth(prime, q))


def check_general(scale: Scale) -> Check:
	"""solve for q = m p^s against the oracle."""
	check = Check("general-oracle", "x^(m p^s) = a against the oracle")
	for prime, q in GENERAL_CASES:
		if scale.name == "quick" and q > 9:
			continue
		_oracle_sweep(check, prime, q, _general_depth(prime, q, scale.depth))
	return check


def check_fast_paths(scale: Scale) -> Check:
	"""Closed-form digit conditions against solve; disagreements are findings."""
	check = Check("fast-paths", "closed-form digit conditions against solve")
	for prime, q in FAST_CASES:
		if scale.name == "quick" and q > 9:
			continue
		depth = _general_depth(prime, q, scale.depth)
		disagreements: List[str] = []
		count = 0
		for a in _sweep(prime, depth, valuations=(0,)):
			fast = fast_criterion(a, q)
			if fast is None:
				continue
			count += 1
			if fast.solvable != solve(a, q).solvable:
				disagreements.append(a.compact())
		check.detail[f"p={prime},q={q}"] = {
			"residues": count,
			"disagreements": len(disagreements),
			"examples": disagreements[:EXAMPLE_LIMIT],
		}
		if disagreements:
			check.note(CheckState.FINDING)
	return check


def check_carry(scale: Scale) -> Check:
	"""N_2 closed form, divisibility of every coefficient, and the base summand."""
	check = Check("carry", "carry polynomials")
	top = 12 if scale.name == "full" else 6
	for prime in (3, 5, 7, 11):
		expected = frozenset({(prime * (prime - 1) // 2, (prime - 2, 2))})
		second = carry_polynomial(prime, 2).terms == expected
		base = summand_list(prime, 2) == frozenset({(prime - 2, 2)})
		divisible = all(carry_polynomial(prime, k).divisible() for k in range(1, top + 1))
		check.detail[f"p={prime}"] = {
			"n2_closed_form": second,
			"base_summand": base,
			f"divisible_k_le_{top}": divisible,
		}
		if not (second and base and divisible):
			check.note(CheckState.FAIL)
	return check


def check_recursion(scale: Scale) -> Check:
	"""Ported digit recursion on a = b^p; index 0 must always agree."""
	check = Check("digit-recursion", "digit recursion reproduces the p-th root")
	for prime in (3, 5, 7):
		rng = random.Random(prime)
		precision = 12
		modulus = prime**precision
		agreements: List[int] = []
		for _sample in range(scale.recursion_samples):
			b = rng.randrange(1, modulus)
			while b % prime == 0:
				b = rng.randrange(1, modulus)
			a = PadicNumber.from_residue(prime, pow(b, prime, modulus), precision)
			ported = digit_recursion(a.digits, prime, 1)
			digits = PadicNumber.from_residue(prime, b, precision).digits
			agreement = 0
			for ours, theirs in zip(ported, digits):
				if ours != theirs:
					break
				agreement += 1
			agreements.append(agreement)
		low = min(agreements)
		check.detail[f"p={prime}"] = {
			"samples": len(agreements),
			"min_agreement": low,
			"max_agreement": max(agreements),
			"expected": prime - 1,
		}
		if low < 1:
			check.note(CheckState.FAIL)
		elif low < prime - 1:
			check.note(CheckState.FINDING)
	return check


def check_criteria(scale: Scale) -> Check:
	"""Emitted criteria against solve; m = 1 must agree."""
	check = Check("criteria", "emitted criteria against solve")
	differences = printed_derived_differences()
	check.detail["printed_vs_derived"] = [
		{"line": line, "printed_minus_derived": sympy.sstr(expr)} for line, expr in differences
	]
	if differences:
		check.note(CheckState.FINDING)
	cells = [(3, m) for m in range(1, 3)]
	cells += [(p, m) for p in scale.criterion_primes for m in range(1, scale.criterion_stages + 1)]
	for prime, stages in cells:
		q = prime**stages
		printed = emit_criterion(prime, stages)
		derived = emit_criterion(prime, stages, derived=True)
		depth = stages + 2
		counts = {"residues": 0, "printed": 0, "printed_p_squared": 0, "derived": 0}
		for a in _sweep(prime, depth, valuations=(0,), precision=depth + 1):
			counts["residues"] += 1
			truth = solve(a, q).solvable
			counts["printed"] += printed.evaluate(a).satisfied != truth
			counts["printed_p_squared"] += printed.evaluate(a, True).satisfied != truth
			counts["derived"] += derived.evaluate(a).satisfied != truth
		check.detail[f"p={prime},m={stages}"] = counts
		if stages == 1 and (counts["printed"] or counts["derived"]):
			check.note(CheckState.FAIL)
		elif counts["printed"] or counts["derived"]:
			check.note(CheckState.FINDING)
	return check


def check_sets(scale: Scale) -> Check:
	"""Constructed sets are complete; printed sets are validated and reported."""
	check = Check("representative-sets", "representative sets E_{p,q}")
	e22 = validate(build_set(2, 2), 7)
	assert e22.validation is not None
	check.detail["E_{2,2} at K=7"] = e22.validation.to_dict()
	if not (e22.validation.sound and e22.validation.complete):
		check.note(CheckState.FAIL)
	for prime in scale.set_primes:
		for q in range(2, 7):
			constructed, minimal = construct_set(prime, q)
			assert constructed.validation is not None and minimal.validation is not None
			index = residue_index(prime, q, exact_depth(prime, q))
			claimed = validate(build_set(prime, q), exact_depth(prime, q) + 1)
			assert claimed.validation is not None
			check.detail[f"p={prime},q={q}"] = {
				"constructed_complete": constructed.validation.complete,
				"minimal_complete": minimal.validation.complete,
				"minimal_size": len(minimal.elements),
				"expected_size": q * index,
				"claimed": claimed.validation.to_dict(),
			}
			if not (constructed.validation.complete and minimal.validation.complete):
				check.note(CheckState.FAIL)
			if len(minimal.elements) != q * index:
				check.note(CheckState.FAIL)
			if not (claimed.validation.complete and claimed.validation.sound):
				check.note(CheckState.FINDING)
	for prime in scale.set_primes:
		if prime == 2:
			continue
		constructed, _minimal = construct_set(prime, prime)
		covered = unit_cover(prime, prime, constructed.units())
		printed = unit_cover(prime, prime, nonpower_cover(prime))
		check.detail[f"E_1 cover p={prime}"] = {
			"constructed_cosets": sorted(covered),
			"printed_cosets": sorted(printed),
		}
		if covered != printed:
			check.note(CheckState.FAIL)
	for prime in (3, 5):
		claimed = validate(build_set(prime, prime), exact_depth(prime, prime) + 2)
		tilde = validate(build_tilde_set(prime), exact_depth(prime, prime) + 2)
		assert claimed.validation is not None and tilde.validation is not None
		check.detail[f"claimed E_{{{prime},{prime}}}"] = claimed.validation.to_dict()
		check.detail[f"tilde E_{{{prime},{prime}}}"] = tilde.validation.to_dict()
		# the printed unit lists are expected to be flagged
		if claimed.validation.complete:
			check.note(CheckState.FAIL)
		else:
			check.note(CheckState.FINDING)
	return check


def check_witnesses(_scale: Scale) -> Check:
	"""Identifications used to shrink the printed sets."""
	check = Check("witnesses", "identifications behind the reduced sets")
	witnesses = reduction_witnesses()
	check.detail["claims"] = [witness.to_dict() for witness in witnesses]
	if not all(witness.holds for witness in witnesses):
		check.note(CheckState.FINDING)
	return check


def check_catalog(scale: Scale) -> Check:
	"""Every classification row is Leibniz and filiform."""
	check = Check("catalog", "classification list: Leibniz identity and filiform")
	for prime in scale.catalog_primes:
		entries = classification_catalog(prime)
		broken = [
			entry.name
			for entry in entries
			if leibniz_defect(entry.tensor) != 0 or not is_filiform(entry.tensor)
		]
		check.detail[f"p={prime}"] = {
			"algebras": len(entries),
			"broken": broken[:EXAMPLE_LIMIT],
		}
		if broken:
			check.note(CheckState.FAIL)
	return check


def _random_pair(
	rng: random.Random, prime: int, b1_zero: bool = True
) -> Tuple[Class3Params, BasisChange]:
	while True:
		params = random_params(rng, prime)
		try:
			change = random_change(rng, prime, b1_zero)
			transform_class3(params, change)
		except DomainError:
			continue
		return params, change


def check_transforms(scale: Scale) -> Check:
	"""Closed formulas against recomputing the tensor in the new basis."""
	check = Check("transforms", "class III transformation formulas")
	for prime in (3, 5, 7):
		rng = random.Random(1000 + prime)
		counts = {
			"pairs": 0,
			"mismatch": 0,
			"composition_mismatch": 0,
			"composition_skipped": 0,
			"identity_moved": 0,
		}
		for _sample in range(scale.transform_samples):
			params, first = _random_pair(rng, prime)
			_params, second = _random_pair(rng, prime)
			tensor = structure_constants("III", params, prime)
			counts["pairs"] += 1
			try:
				moved = change_of_basis(tensor, first)
			except DegenerateChangeError:
				counts["mismatch"] += 1
				continue
			expected = transform_class3(params, first)
			extracted = extract_class3(moved)
			if not extracted.shaped or extracted.params != expected:
				counts["mismatch"] += 1
			try:
				chained = transform_class3(expected, second)
			except DomainError:
				# A_1 + A_2 δ' = 0 leaves the closed formulas undefined
				counts["composition_skipped"] += 1
			else:
				composed = extract_class3(change_of_basis(moved, second))
				if not composed.shaped or composed.params != chained:
					counts["composition_mismatch"] += 1
			if change_of_basis(tensor, BasisChange.identity()) != tensor:
				counts["identity_moved"] += 1
		check.detail[f"p={prime}"] = counts
		if counts["mismatch"] or counts["identity_moved"] or counts["composition_mismatch"]:
			check.note(CheckState.FAIL)
	check.detail["B_1 != 0"] = _b1_observation(scale)
	return check


def _b1_observation(scale: Scale) -> Dict[str, int]:
	rng = random.Random(7)
	shaped = matching = total = 0
	for _sample in range(max(4, scale.transform_samples // 10)):
		params, change = _random_pair(rng, 5, b1_zero=False)
		try:
			extraction = extract_class3(
				change_of_basis(structure_constants("III", params, 5), change)
			)
		except DegenerateChangeError:
			continue
		total += 1
		shaped += extraction.shaped
		matching += extraction.shaped and extraction.params == transform_class3(params, change)
	return {"samples": total, "class_iii_shaped": shaped, "formulas_match": matching}


def check_normalizer(scale: Scale) -> Check:
	"""Every case lands on its canonical shape; witnesses and fixed points hold."""
	check = Check("normalizer", "class III case normalization")
	primes = (3, 5, 7) if scale.name == "full" else (5,)
	for prime in primes:
		rng = random.Random(2000 + prime)
		failures: List[str] = []
		for case in CASE_NUMBERS:
			params = canonical_example(case, prime, rng)
			form = normalize_class3(params, prime)
			if form.case != case or form.change is None:
				failures.append(f"case {case}: landed in {form.label}")
				continue
			tensor = change_of_basis(structure_constants("III", params, prime), form.change)
			extracted = extract_class3(tensor)
			close = extracted.shaped and all(
				padic_close(got, want, prime, 16)
				for got, want in zip(extracted.params.as_tuple(), form.params.as_tuple())
			)
			if not close:
				failures.append(f"case {case}: witness does not reproduce {form.params}")
			again = normalize_class3(form.params, prime)
			if again.case != case or again.params != form.params:
				failures.append(f"case {case}: canonical form is not fixed")
		check.detail[f"p={prime}"] = {"cases": len(CASE_NUMBERS), "failures": failures}
		if failures:
			check.note(CheckState.FAIL)
	notes = _printed_case_formulas()
	check.detail["printed_formulas"] = notes
	if any(not note["agrees"] for note in notes):
		check.note(CheckState.FINDING)
	return check


def _printed_case_formulas() -> List[Dict[str, object]]:
	"""Compare two printed parameter formulas with what the witness change gives."""
	prime = 5
	notes: List[Dict[str, object]] = []
	six = Class3Params.of(3, 2, 0, 2, 2, 0)
	form = normalize_class3(six, prime)
	y = Fraction(1)
	if form.change is not None:
		y = form.change.A[0]
	printed = (2 * six.alpha**2 * six.theta1 - six.beta * six.theta2) / (2 * six.alpha**2 * y**4)
	notes.append(
		{
			"case": 6,
			"printed": "(2α²θ1 - βθ2)/(2α²y⁴)",
			"computed": "(2α²θ1 - βθ2)/(2αy⁴)",
			"agrees": padic_close(printed, form.params.theta1, prime, 16),
		}
	)
	eleven = Class3Params.of(2, 2, 1, 0, 0, 1)
	form = normalize_class3(eleven, prime)
	eps = form.constants.get("epsilon", Fraction(1))
	nu = form.constants.get("nu", Fraction(1))
	notes.append(
		{
			"case": 11,
			"printed": "(ν - 4ε²)/(4ε)",
			"computed": "(ν + 4ε²)/(4ε)",
			"agrees": form.params.theta1 == (nu - 4 * eps**2) / (4 * eps),
		}
	)
	return notes


CHECKS: Tuple[Tuple[str, Callable[[Scale], Check]], ...] = (
	("square-oracle", check_square),
	("coprime-oracle", check_coprime),
	("pth-oracle", check_pth),
	("general-oracle", check_general),
	("fast-paths", check_fast_paths),
	("carry", check_carry),
	("criteria", check_criteria),
	("digit-recursion", check_recursion),
	("representative-sets", check_sets),
	("witnesses", check_witnesses),
	("catalog", check_catalog),
	("transforms", check_transforms),
	("normalizer", check_normalizer),
)


@dataclass
class Report:
	"""The conformance report."""

	scale: str
	checks: List[Check] = field(default_factory=list)

	def counts(self) -> Dict[str, int]:
		"""Return the number of checks per state."""
		out = {state.name.lower(): 0 for state in CheckState}
		for check in self.checks:
			out[check.state.name.lower()] += 1
		return out

	@property
	def failed(self) -> bool:
		"""Return True if any check failed."""
		return any(check.state == CheckState.FAIL for check in self.checks)

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON document."""
		return {
			"padix": __version__,
			"generated": get_date(),
			"scale": self.scale,
			"summary": self.counts(),
			"checks": [check.to_dict() for check in self.checks],
		}


def build_report(
	scale: Scale,
	only: Sequence[str] = (),
	on_step: Optional[Callable[[str], None]] = None,
) -> Report:
	"""Run the checks in order; `on_step` is called before each one."""
	report = Report(scale.name)
	for key, run in CHECKS:
		if only and key not in only:
			continue
		if on_step is not None:
			on_step(key)
		report.checks.append(run(scale))
	return report
