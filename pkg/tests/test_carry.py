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
"""Tests for carry polynomials, the digit recursion and the criteria."""
from __future__ import annotations

import random

import pytest

from padix.carry import (
	P,
	carry_polynomial,
	digit_recursion,
	emit_criterion,
	expansion_identity_holds,
	multinomial,
	printed_derived_differences,
	summand_list,
	symbolic_carry_polynomial,
)
from padix.error import DomainError, PrecisionError
from padix.padic_core import PadicNumber, from_fraction
from padix.roots import solve


@pytest.mark.parametrize("prime", [3, 5, 7, 11])
def test_second_carry_polynomial(prime: int) -> None:
	assert summand_list(prime, 2) == frozenset({(prime - 2, 2)})
	assert carry_polynomial(prime, 2).terms == frozenset(
		{(prime * (prime - 1) // 2, (prime - 2, 2))}
	)


def test_carry_polynomial_text() -> None:
	assert str(carry_polynomial(5, 2)) == "10*x0^3*x1^2"
	assert str(carry_polynomial(5, 1)) == "0"


@pytest.mark.parametrize("prime", [3, 5, 7])
def test_coefficients_divisible(prime: int) -> None:
	assert all(carry_polynomial(prime, k).divisible() for k in range(1, 9))


def test_summands_have_entries_below_p() -> None:
	for exponents in summand_list(3, 6):
		assert sum(exponents) == 3
		assert all(count < 3 for count in exponents)
		assert sum(j * count for j, count in enumerate(exponents)) == 6


def test_multinomial() -> None:
	assert multinomial((2, 1)) == 3
	assert multinomial((3, 2)) == 10


def test_carry_polynomial_needs_positive_k() -> None:
	with pytest.raises(DomainError):
		carry_polynomial(5, 0)


def test_symbolic_matches_concrete() -> None:
	expr = symbolic_carry_polynomial(2)
	assert expr.subs(P, 5).subs({"x_0": 2, "x_1": 3}) == carry_polynomial(5, 2).evaluate([2, 3])


@pytest.mark.parametrize(("prime", "digits"), [(5, [2, 1, 3]), (3, [1, 2, 2, 1]), (7, [3, 0, 6])])
def test_expansion_identity(prime: int, digits: list[int]) -> None:
	assert expansion_identity_holds(prime, digits)


def test_digit_recursion_first_digit() -> None:
	a = from_fraction(2**5, 5, 6)
	assert digit_recursion(a.digits, 5, 1)[0] == 2


@pytest.mark.parametrize(("digits", "prime", "m"), [([1, 0, 0], 3, 0), ([1, 0, 0], 3, 3), ([1, 0], 5, 1)])
def test_digit_recursion_domain(digits: list[int], prime: int, m: int) -> None:
	with pytest.raises(DomainError):
		digit_recursion(digits, prime, m)


def test_first_criterion() -> None:
	criterion = emit_criterion(5, 1)
	assert len(criterion.congruences) == 1
	assert criterion.evaluate(from_fraction(32, 5, 4)).satisfied
	outcome = criterion.evaluate(from_fraction(3, 5, 4))
	assert not outcome.satisfied
	assert outcome.failed_line == 1
	assert emit_criterion(5, 1).evaluate(from_fraction(5, 5, 4)).failed_line == 0


def test_second_criterion_adds_equality() -> None:
	criterion = emit_criterion(5, 2)
	assert criterion.congruences[1].equality
	assert criterion.pretty()[0] == "25 ∣ γ(a)"


def test_symbolic_printed_criterion() -> None:
	record = emit_criterion(None, 4).to_dict()
	assert record["prime"] == "p"
	assert record["source"] == "printed"
	assert len(record["congruences"]) == 4  # type: ignore[arg-type]


def test_derived_beyond_printed() -> None:
	assert emit_criterion(7, 5).source == "derived"
	assert len(emit_criterion(7, 5).congruences) == 5


@pytest.mark.parametrize(("prime", "m"), [(3, 3), (2, 1), (5, 0)])
def test_criterion_domain(prime: int, m: int) -> None:
	with pytest.raises(DomainError):
		emit_criterion(prime, m)


def test_symbolic_criterion_cannot_evaluate() -> None:
	with pytest.raises(DomainError):
		emit_criterion(None, 1).evaluate(from_fraction(1, 5, 4))


def test_criterion_reads_enough_digits() -> None:
	with pytest.raises(PrecisionError):
		emit_criterion(5, 2).evaluate(PadicNumber.from_residue(5, 1, 2))


def test_printed_and_derived_lines() -> None:
	lines = {line for line, _difference in printed_derived_differences()}
	assert 4 in lines
	assert not lines & {1, 2}


@pytest.mark.parametrize("prime", [5, 7])
def test_first_stage_matches_solve(prime: int) -> None:
	criterion = emit_criterion(prime, 1)
	for unit in range(1, prime**3):
		if unit % prime:
			a = PadicNumber.from_residue(prime, unit, 4)
			assert criterion.evaluate(a).satisfied == solve(a, prime).solvable


def test_third_carry_polynomial() -> None:
	assert summand_list(5, 3) == frozenset({(3, 1, 1), (2, 3, 0)})
	assert carry_polynomial(5, 3).terms == frozenset({(20, (3, 1, 1)), (10, (2, 3, 0))})
	assert str(carry_polynomial(5, 3)) == "20*x0^3*x1*x2 + 10*x0^2*x1^3"


def test_digit_recursion_for_three(rng: random.Random) -> None:
	modulus = 3**12
	for _sample in range(100):
		b = rng.randrange(1, modulus)
		if b % 3 == 0:
			continue
		a = PadicNumber.from_residue(3, pow(b, 3, modulus), 12)
		ported = digit_recursion(a.digits, 3, 1)
		assert ported[:2] == PadicNumber.from_residue(3, b, 12).digits[:2]


@pytest.mark.parametrize(("prime", "m"), [(3, 1), (3, 2), (5, 1)])
def test_printed_criterion_matches_solve(prime: int, m: int) -> None:
	criterion = emit_criterion(prime, m)
	for unit in range(1, prime ** (m + 2)):
		if unit % prime:
			a = PadicNumber.from_residue(prime, unit, m + 3)
			assert criterion.evaluate(a).satisfied == solve(a, prime**m).solvable
