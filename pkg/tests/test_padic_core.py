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
"""Tests for exact p-adic arithmetic."""
from __future__ import annotations

from fractions import Fraction

import pytest

from padix.error import DomainError, ParserError, PrecisionError, PrecisionExhausted
from padix.padic_core import (
	PadicNumber,
	PrecisionContext,
	add,
	canonicalize_rational,
	from_fraction,
	inv,
	padic_norm,
	parse_rational,
	parse_value,
	power,
	valuation_of,
)


def test_one_third_in_q5() -> None:
	third = from_fraction(Fraction(1, 3), 5, 4)
	assert third.valuation == 0
	assert third.unit == 417
	assert third.digits == [2, 3, 1, 3]
	assert third.compact() == "0|2,3,1,3"
	assert third.to_fraction() == 417


def test_valuation_and_norm() -> None:
	assert valuation_of(Fraction(50, 3), 5) == 2
	assert valuation_of(Fraction(3, 50), 5) == -2
	assert padic_norm(Fraction(50, 3), 5) == Fraction(1, 25)
	assert padic_norm(0, 5) == 0
	assert from_fraction(Fraction(1, 25), 5, 4).norm() == 25


def test_multiplication_keeps_smaller_precision() -> None:
	x = from_fraction(3, 7, 6)
	y = from_fraction(5, 7, 4)
	product = x * y
	assert product.precision == 4
	assert product.to_fraction() == 15


def test_inverse_round_trip() -> None:
	x = from_fraction(Fraction(2, 15), 5, 8)
	assert (x * inv(x)).equal_at(from_fraction(1, 5, 8), 8)
	with pytest.raises(DomainError):
		inv(PadicNumber.zero(5))


def test_add_renormalizes_cancellation() -> None:
	total = add(from_fraction(1, 5, 4), from_fraction(4, 5, 4))
	assert total.valuation == 1
	assert total.unit == 1
	assert total.precision == 3


def test_add_to_zero_is_exhausted() -> None:
	with pytest.raises(PrecisionExhausted):
		from_fraction(1, 5, 4) + from_fraction(-1, 5, 4)


def test_power_and_negative_exponent() -> None:
	assert power(from_fraction(2, 3, 6), 5).to_fraction() == 32
	assert (from_fraction(3, 3, 6) ** 2).valuation == 2
	with pytest.raises(DomainError):
		power(from_fraction(2, 3, 6), -1)


def test_digit_beyond_precision() -> None:
	x = from_fraction(7, 3, 2)
	assert x.digit(1) == 2
	with pytest.raises(PrecisionError) as info:
		x.digit(2)
	assert info.value.needed == 3


@pytest.mark.parametrize(
	("text", "valuation", "unit", "precision"),
	[
		("1|2,3", 1, 17, 2),
		("10", 1, 2, 8),
		("-1/5", -1, 5**8 - 1, 8),
	],
)
def test_parse_value(text: str, valuation: int, unit: int, precision: int) -> None:
	value = parse_value(text, PrecisionContext(5, 8))
	assert (value.valuation, value.unit, value.precision) == (valuation, unit, precision)


@pytest.mark.parametrize("text", ["abc", "1/0", "0|0,1", "0|1,7"])
def test_parse_value_rejects(text: str) -> None:
	with pytest.raises(ParserError):
		parse_value(text, PrecisionContext(5, 8))


def test_parse_rational() -> None:
	assert parse_rational(" -3/6 ") == Fraction(-1, 2)
	with pytest.raises(ParserError):
		parse_rational("1.5")


@pytest.mark.parametrize(("prime", "precision"), [(4, 10), (1, 10), (5, 2)])
def test_precision_context_rejects(prime: int, precision: int) -> None:
	with pytest.raises(DomainError):
		PrecisionContext(prime, precision)


def test_unit_must_be_canonical() -> None:
	with pytest.raises(DomainError):
		PadicNumber(5, 0, 10, 4)


def test_canonicalize_rational() -> None:
	four_fifths = canonicalize_rational(4, 5, PrecisionContext(3, 4))
	assert (four_fifths.valuation, four_fifths.digits) == (0, [2, 2, 1, 0])
	eight = canonicalize_rational(8, 1, PrecisionContext(2, 4))
	assert (eight.valuation, eight.digits) == (3, [1, 0, 0, 0])
	assert canonicalize_rational(0, 7, PrecisionContext(7, 4)).is_zero
