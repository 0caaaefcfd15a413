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
"""Tests for the representative sets E_{p,q}."""
from __future__ import annotations

from fractions import Fraction

import pytest

from padix.constants import Provenance
from padix.error import DomainError, IncompleteSetError, PrecisionError
from padix.padic_core import from_fraction
from padix.reps import (
	build_set,
	build_tilde_set,
	class_count,
	construct_set,
	decompose,
	exact_depth,
	find_nonpower_unit,
	is_qth_power,
	minimal_set,
	nonpower_cover,
	reduction_witnesses,
	same_class,
	unit_cover,
	validate,
)
from padix.roots import residue_index


def test_square_classes_over_two() -> None:
	rep_set = validate(build_set(2, 2), 7)
	assert rep_set.elements == tuple(Fraction(e) for e in (1, 3, 5, 7, 2, 6, 10, 14))
	assert rep_set.validation is not None
	assert rep_set.validation.sound
	assert rep_set.validation.complete
	assert rep_set.validation.distinct


def test_claimed_cube_list_is_incomplete() -> None:
	rep_set = validate(build_set(3, 3), 3)
	assert rep_set.validation is not None
	assert not rep_set.validation.complete
	assert (0, 2) in rep_set.validation.missing
	assert not rep_set.validation.distinct


def test_claimed_fifth_power_list_is_incomplete() -> None:
	rep_set = validate(build_set(5, 5), 3)
	assert rep_set.validation is not None
	assert not rep_set.validation.complete


@pytest.mark.parametrize("prime", [2, 3, 5])
@pytest.mark.parametrize("q", [2, 3, 4, 5, 6])
def test_constructed_sets_are_complete(prime: int, q: int) -> None:
	constructed, minimal = construct_set(prime, q)
	assert constructed.validation is not None and constructed.validation.complete
	assert minimal.validation is not None and minimal.validation.complete
	assert minimal.validation.distinct
	assert minimal.provenance == Provenance.REDUCED_MINIMAL
	assert len(minimal.elements) == q * residue_index(prime, q, exact_depth(prime, q))
	assert len(minimal.elements) == class_count(prime, q)


def test_validate_needs_depth() -> None:
	with pytest.raises(PrecisionError):
		validate(build_set(3, 3), 1)


def test_exact_depth() -> None:
	assert exact_depth(2, 4) == 4
	assert exact_depth(3, 3) == 2
	assert exact_depth(5, 2) == 1


def test_labels() -> None:
	assert build_set(3, 3).label == "E_{3,3}"
	assert build_tilde_set(3).label == "~E_{3,3}"
	with pytest.raises(DomainError):
		build_tilde_set(7)


def test_decompose_over_claimed_fifth_powers() -> None:
	eps, root = decompose(from_fraction(12, 5, 32), 5, build_set(5, 5))
	assert eps == 12
	assert root.to_fraction() == 1


def test_decompose_over_reduced_cubes() -> None:
	eps, _root = decompose(from_fraction(4, 3, 32), 3, build_tilde_set(3))
	assert eps == 5


def test_decompose_reports_missing_coset() -> None:
	with pytest.raises(IncompleteSetError) as info:
		decompose(from_fraction(2, 3, 32), 3, build_set(3, 3))
	assert info.value.coset == 2
	assert info.value.valuation_class == 0


def test_decompose_with_minimal_set() -> None:
	value = from_fraction(Fraction(40, 7), 5, 32)
	eps, root = decompose(value, 3, minimal_set(5, 3))
	assert (root**3).equal_at(value / from_fraction(eps, 5, 32), 16)


def test_decompose_rejects_mismatched_set() -> None:
	with pytest.raises(DomainError):
		decompose(from_fraction(2, 3, 32), 2, build_set(3, 3))


def test_reduction_witnesses() -> None:
	verdicts = [(w.prime, w.ratio, w.holds) for w in reduction_witnesses()]
	assert verdicts == [
		(5, Fraction(12, 11), False),
		(5, Fraction(13, 11), False),
		(5, Fraction(14, 11), True),
		(3, Fraction(4, 5), True),
		(3, Fraction(12, 5), False),
		(3, Fraction(36, 5), False),
		(3, Fraction(12, 15), True),
		(3, Fraction(36, 45), True),
	]


def test_qth_powers() -> None:
	assert is_qth_power(Fraction(14, 11), 5, 5)
	assert not is_qth_power(Fraction(2), 3, 3)
	assert same_class(Fraction(4), Fraction(5), 3, 3)


@pytest.mark.parametrize("prime", [3, 5, 7])
def test_constructed_units_match_nonpower_cover(prime: int) -> None:
	constructed, _minimal = construct_set(prime, prime)
	covered = unit_cover(prime, prime, constructed.units())
	assert covered == unit_cover(prime, prime, nonpower_cover(prime))
	assert len(covered) == prime


@pytest.mark.parametrize(("prime", "q"), [(3, 3), (5, 5), (2, 2)])
def test_minimal_set_is_pairwise_distinct(prime: int, q: int) -> None:
	_constructed, minimal = construct_set(prime, q)
	elements = minimal.elements
	for index, first in enumerate(elements):
		for second in elements[index + 1:]:
			assert not same_class(first, second, prime, q)


def test_find_nonpower_unit() -> None:
	assert find_nonpower_unit(7, 2) == 3
	assert find_nonpower_unit(7, 3) == 2
	assert find_nonpower_unit(5, 3) is None
