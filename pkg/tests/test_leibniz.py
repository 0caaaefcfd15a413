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
"""Tests for the six-dimensional Leibniz algebra tools."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from padix.error import DegenerateChangeError, DomainError
from padix.leibniz import (
	CASE_NUMBERS,
	CATALOG_ROWS,
	FILIFORM_DIMS,
	BasisChange,
	Class3Params,
	canonical_example,
	case_of,
	change_of_basis,
	extract_class3,
	is_filiform,
	leibniz_defect,
	lower_central_dims,
	normalize_class3,
	padic_close,
	parse_params,
	random_change,
	random_params,
	structure_constants,
	classification_catalog,
	transform_class3,
)


def test_class_one_is_filiform() -> None:
	tensor = structure_constants("I", [0, 0, 0, 0], 5)
	assert leibniz_defect(tensor) == 0
	assert lower_central_dims(tensor) == FILIFORM_DIMS
	assert tensor.dump()[0] == (1, 1, 3, Fraction(1))


@pytest.mark.parametrize(
	("tag", "params"),
	[("I", (1, -2, 5, 5)), ("II", (1, 0, 3, 1)), ("III", (1, 2, 3, 1, 2, 1)), ("III", (0, 1, 0, 0, 0, 0))],
)
def test_classes_satisfy_identity(tag: str, params: tuple[int, ...]) -> None:
	tensor = structure_constants(tag, params, 3)
	assert leibniz_defect(tensor) == 0
	assert is_filiform(tensor)


def test_mutation_breaks_identity() -> None:
	tensor = structure_constants("II", (0, 0, 0, 0), 5).adjusted(2, 3, 4, 1)
	assert leibniz_defect(tensor) == 1


def test_unknown_class_and_arity() -> None:
	with pytest.raises(DomainError):
		structure_constants("IV", (0, 0, 0, 0), 5)
	with pytest.raises(DomainError):
		structure_constants("III", (0, 0, 0, 0), 5)


def test_basis_change_domain() -> None:
	with pytest.raises(DomainError):
		BasisChange.of([0, 1], [1, 0])
	with pytest.raises(DomainError):
		BasisChange.of([1, 2], [1, 2])


def test_identity_change_fixes_tensor() -> None:
	tensor = structure_constants("III", (1, 2, 3, 1, 2, 1), 5)
	assert change_of_basis(tensor, BasisChange.identity()) == tensor


def test_class_two_identity_change_is_degenerate() -> None:
	tensor = structure_constants("II", (1, 0, 0, 0), 5)
	with pytest.raises(DegenerateChangeError):
		change_of_basis(tensor, BasisChange.identity())


def test_transformation_formulas_match_recomputation() -> None:
	params = Class3Params.of(1, 2, 3, 1, 2, 1)
	change = BasisChange.of([1, 1], [0, 1])
	extraction = extract_class3(change_of_basis(structure_constants("III", params, 5), change))
	assert extraction.shaped
	assert extraction.params == transform_class3(params, change)


def test_random_transformations() -> None:
	rng = random.Random(1005)
	for _sample in range(10):
		params, change = random_params(rng, 5), random_change(rng, 5)
		try:
			expected = transform_class3(params, change)
		except DomainError:
			continue
		moved = change_of_basis(structure_constants("III", params, 5), change)
		assert extract_class3(moved).params == expected


def test_composed_changes_match_chained_formulas() -> None:
	params = Class3Params.of(1, 2, 3, 1, 2, 1)
	first = BasisChange.of([1, 1], [0, 1])
	second = BasisChange.of([1, 2, 1], [0, 3, 1])
	moved = change_of_basis(structure_constants("III", params, 5), first)
	composed = extract_class3(change_of_basis(moved, second))
	assert composed.shaped
	assert composed.params == transform_class3(transform_class3(params, first), second)


def test_random_compositions() -> None:
	rng = random.Random(2007)
	for _sample in range(8):
		params = random_params(rng, 7)
		first, second = random_change(rng, 7), random_change(rng, 7)
		try:
			chained = transform_class3(transform_class3(params, first), second)
		except DomainError:
			continue
		moved = change_of_basis(structure_constants("III", params, 7), first)
		composed = extract_class3(change_of_basis(moved, second))
		assert composed.shaped
		assert composed.params == chained


def test_extract_reports_shape() -> None:
	assert not extract_class3(structure_constants("I", (0, 0, 0, 0), 5)).shaped


def test_transform_needs_nonzero_shift() -> None:
	with pytest.raises(DomainError):
		transform_class3(Class3Params.of(0, 1, 0, 0, 0, 1), BasisChange.of([1, -1], [0, 1]))


def test_padic_close() -> None:
	assert padic_close(1, 1 + 5**4, 5, 4)
	assert not padic_close(1, 1 + 5**4, 5, 5)
	assert padic_close(Fraction(2, 3), Fraction(2, 3), 5, 100)


def test_parse_params() -> None:
	assert parse_params("1, -2/3,0") == [Fraction(1), Fraction(-2, 3), Fraction(0)]


def test_case_guards() -> None:
	assert case_of(Class3Params.of(0, 1, 0, 0, 0, 0)) == 1
	assert case_of(Class3Params.of(1, 0, 1, 0, 0, 0)) == 2
	assert case_of(Class3Params.of(0, 0, 0, 0, 0, 0)) is None
	assert case_of(Class3Params.of(1, 0, 0, 0, 0, 2)) is None
	assert case_of(Class3Params.of(2, 2, 1, 0, 0, 1)) == 11


def test_normalize_cube_to_one() -> None:
	form = normalize_class3(Class3Params.of(0, 8, 0, 0, 0, 0), 5)
	assert form.case == 1
	assert form.params == Class3Params.of(0, 1, 0, 0, 0, 0)
	assert form.change is not None
	assert form.change.A[0] == 2


@pytest.mark.parametrize("prime", [5, 7])
@pytest.mark.parametrize("epsilon", [1, 2, 3, 6])
def test_normalize_ignores_cube_factors(prime: int, epsilon: int) -> None:
	form = normalize_class3(Class3Params.of(0, epsilon, 0, 0, 0, 0), prime)
	assert form.case == 1
	for cube in (8, 27):
		scaled = normalize_class3(Class3Params.of(0, epsilon * cube, 0, 0, 0, 0), prime)
		assert (scaled.case, scaled.params) == (form.case, form.params)


def test_normalize_uncovered() -> None:
	form = normalize_class3(Class3Params.of(0, 0, 0, 0, 0, 0), 5)
	assert not form.covered
	assert form.label == "not covered"


@pytest.mark.parametrize("case", CASE_NUMBERS)
def test_normalizer_cases(case: int) -> None:
	params = canonical_example(case, 5, random.Random(2005))
	form = normalize_class3(params, 5)
	assert form.case == case
	assert form.change is not None
	moved = extract_class3(change_of_basis(structure_constants("III", params, 5), form.change))
	assert moved.shaped
	for got, want in zip(moved.params.as_tuple(), form.params.as_tuple()):
		assert padic_close(got, want, 5, 16)
	again = normalize_class3(form.params, 5)
	assert (again.case, again.params) == (case, form.params)


def test_catalog_rows() -> None:
	assert len(CATALOG_ROWS) == 42
	assert sum(row.class_tag == "I" for row in CATALOG_ROWS) == 10
	assert sum(row.class_tag == "II" for row in CATALOG_ROWS) == 8


def test_catalog_is_leibniz_and_filiform() -> None:
	for entry in classification_catalog(3):
		assert leibniz_defect(entry.tensor) == 0, entry.name
		assert is_filiform(entry.tensor), entry.name
