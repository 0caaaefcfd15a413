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
"""Tests for the solvability criteria against brute force."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from padix.error import DomainError, PrecisionError
from padix.padic_core import PadicNumber, from_fraction
from padix.roots import (
	FailureKind,
	Method,
	brute_force_root,
	factor_exponent,
	fast_criterion,
	is_square,
	oracle_verdict,
	power_table,
	residue_index,
	solve,
	verify_root,
)


def units(prime: int, depth: int) -> list[PadicNumber]:
	"""Return every unit residue mod p^depth."""
	return [
		PadicNumber.from_residue(prime, unit, depth)
		for unit in range(1, prime**depth)
		if unit % prime
	]


def test_cube_root_of_eight() -> None:
	verdict = solve(from_fraction(8, 3, 32), 3)
	assert verdict.solvable
	assert verdict.method == Method.PTH_POWER
	assert verdict.root is not None
	assert verdict.root.to_fraction() == 2
	assert verdict.effective_precision == 31


def test_square_over_two() -> None:
	assert is_square(from_fraction(17, 2, 8)).solvable
	verdict = is_square(from_fraction(7, 2, 8))
	assert not verdict.solvable
	assert verdict.failure_reason is not None
	assert verdict.failure_reason.kind == FailureKind.DIGIT


def test_square_failures() -> None:
	residue = is_square(from_fraction(2, 3, 8))
	assert residue.failure_reason is not None
	assert residue.failure_reason.kind == FailureKind.RESIDUE
	valuation = is_square(from_fraction(3, 3, 8))
	assert valuation.failure_reason is not None
	assert valuation.failure_reason.kind == FailureKind.VALUATION


def test_identity_exponent() -> None:
	a = from_fraction(Fraction(2, 7), 7, 8)
	verdict = solve(a, 1)
	assert verdict.method == Method.IDENTITY
	assert verdict.root == a


def test_zero_is_rejected() -> None:
	with pytest.raises(DomainError):
		solve(PadicNumber.zero(5), 3)


def test_coprime_cubes_mod_seven() -> None:
	assert not solve(from_fraction(2, 7, 6), 3).solvable
	verdict = solve(from_fraction(6, 7, 6), 3)
	assert verdict.solvable
	assert verify_root(verdict, from_fraction(6, 7, 6), 3)


def test_factor_exponent() -> None:
	factors = factor_exponent(12, 2)
	assert (factors.m, factors.s, factors.q) == (3, 2, 12)


def test_staged_needs_digits() -> None:
	with pytest.raises(PrecisionError):
		solve(PadicNumber.from_residue(3, 1, 4), 27)


@pytest.mark.parametrize(("prime", "q"), [(2, 2), (3, 2), (5, 2), (7, 3), (2, 3), (5, 3)])
def test_matches_oracle(prime: int, q: int) -> None:
	for a in units(prime, 4):
		verdict = solve(a, q)
		assert verdict.solvable == oracle_verdict(a, q, 4).solvable, a.compact()
		if verdict.solvable:
			assert verify_root(verdict, a, q)


@pytest.mark.parametrize("prime", [3, 5])
def test_pth_root_matches_oracle_and_is_unique(prime: int) -> None:
	for a in units(prime, 4):
		oracle = oracle_verdict(a, prime, 4)
		assert solve(a, prime).solvable == oracle.solvable
		if oracle.solvable:
			assert len(oracle.roots) == 1


@pytest.mark.parametrize(("prime", "q", "depth"), [(2, 6, 4), (3, 6, 4), (2, 4, 5), (3, 9, 5)])
def test_general_exponent_matches_oracle(prime: int, q: int, depth: int) -> None:
	for a in units(prime, depth):
		assert solve(a, q).solvable == oracle_verdict(a, q, depth).solvable, a.compact()


def test_valuation_class_matters() -> None:
	assert solve(from_fraction(9, 3, 8), 2).solvable
	assert not solve(from_fraction(27, 3, 8), 2).solvable


def test_sixth_power_fast_path_disagrees_at_five() -> None:
	# a_1 = 0 alone does not make 5 a square in Q_2
	a = from_fraction(5, 2, 8)
	fast = fast_criterion(a, 6)
	assert fast is not None and fast.solvable
	assert not solve(a, 6).solvable


def test_fast_paths_agree_where_exact() -> None:
	for a in units(3, 5):
		fast = fast_criterion(a, 9)
		assert fast is not None
		assert fast.solvable == solve(a, 9).solvable
		assert fast.root is None


def test_no_fast_path() -> None:
	assert fast_criterion(from_fraction(2, 3, 8), 5) is None


def test_oracle_helpers() -> None:
	assert power_table(5, 2, 1) == {1: (1, 4), 4: (2, 3)}
	assert brute_force_root(from_fraction(8, 3, 4), 3, 4) == frozenset({2, 29, 56})
	assert oracle_verdict(from_fraction(8, 3, 4), 3, 4).roots == frozenset({2})
	assert residue_index(3, 3, 2) == 3
	assert residue_index(2, 2, 3) == 4


def test_first_power_has_no_fast_path() -> None:
	assert fast_criterion(from_fraction(3, 2, 8), 1) is None
	assert solve(from_fraction(3, 2, 8), 1).solvable


@pytest.mark.parametrize("q", [1, 2, 4, 8])
def test_two_adic_fast_paths_match_solve(q: int) -> None:
	for a in units(2, 6):
		fast = fast_criterion(a, q)
		if fast is not None:
			assert fast.solvable == solve(a, q).solvable, a.compact()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_two_power_digit_condition(k: int) -> None:
	q = 2**k
	for a in units(2, k + 3):
		expected = all(a.digit(index) == 0 for index in range(1, k + 2))
		fast = fast_criterion(a, q)
		assert fast is not None
		assert fast.solvable == expected == solve(a, q).solvable, a.compact()
	shifted = PadicNumber.from_residue(2, 1, k + 3, valuation=q)
	assert solve(shifted, q).solvable
	assert not solve(PadicNumber.from_residue(2, 1, k + 3, valuation=1), q).solvable


def test_two_adic_square_root_digits() -> None:
	for t in range(32):
		a = PadicNumber.from_residue(2, 1 + 8 * t, 8)
		verdict = solve(a, 2)
		assert verdict.root is not None
		y0, y1, y2 = (verdict.root.digit(index) for index in range(3))
		assert y0 == 1
		assert a.digit(3) == (y1 * (y1 + 1) // 2 + y2) % 2


def test_worked_examples() -> None:
	assert not solve(from_fraction(3, 2, 8), 6).solvable
	for value, prime, q in [(729, 2, 6), (16, 5, 4), (1, 7, 5)]:
		a = from_fraction(value, prime, 8)
		verdict = solve(a, q)
		assert verdict.solvable
		assert verify_root(verdict, a, q)


SWEEP_CELLS = [(2, 2), (2, 4), (3, 3), (3, 9), (5, 5), (3, 6), (5, 2), (7, 3)]


@pytest.mark.parametrize(("prime", "q"), SWEEP_CELLS)
def test_scaling_by_qth_powers(prime: int, q: int, rng: random.Random) -> None:
	for _sample in range(20):
		unit = rng.randrange(1, prime**8)
		if unit % prime == 0:
			continue
		a = PadicNumber.from_residue(prime, unit, 8, rng.randrange(q))
		b = from_fraction(rng.randrange(1, prime**4), prime, 8)
		assert solve(a * b**q, q).solvable == solve(a, q).solvable, (a.compact(), b.compact())


@pytest.mark.parametrize(("prime", "q"), SWEEP_CELLS)
def test_verdict_reads_leading_digits(prime: int, q: int, rng: random.Random) -> None:
	keep = factor_exponent(q, prime).s + 3
	for _sample in range(20):
		low = rng.randrange(1, prime**keep)
		if low % prime == 0:
			continue
		valuation = rng.randrange(q)
		a = PadicNumber.from_residue(prime, low, 8, valuation)
		high = rng.randrange(prime ** (8 - keep))
		b = PadicNumber.from_residue(prime, low + prime**keep * high, 8, valuation + q)
		assert solve(a, q).solvable == solve(b, q).solvable, (a.compact(), b.compact())
