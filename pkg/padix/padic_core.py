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
"""Exact p-adic arithmetic at a fixed working precision.

A nonzero value is held as p^valuation * unit, where unit is an integer
known modulo p^precision and prime to p. Its base-p digits are the
canonical expansion x = p^γ (x_0 + x_1 p + x_2 p^2 + ...).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from sympy import isprime

from padix import _
from padix.constants import DEFAULT_PRECISION, MIN_PRECISION
from padix.error import DomainError, ParserError, PrecisionError, PrecisionExhausted

Rational = Union[int, Fraction]

COMPACT_PATTERN = re.compile(r"^\s*(-?\d+)\s*\|\s*(\d+(?:\s*,\s*\d+)*)\s*$")
RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+))?\s*$")


def valuation_of(value: Rational, prime: int) -> int:
	"""Return v_p of a nonzero integer or rational."""
	value = Fraction(value)
	if value == 0:
		raise DomainError(_("the valuation of zero is undefined"))
	return _int_valuation(value.numerator, prime) - _int_valuation(
		value.denominator, prime
	)


def _int_valuation(number: int, prime: int) -> int:
	count = 0
	number = abs(number)
	while number % prime == 0:
		number //= prime
		count += 1
	return count


def padic_norm(value: Rational, prime: int) -> Fraction:
	"""Return |value|_p for an exact rational."""
	if value == 0:
		return Fraction(0)
	return Fraction(prime) ** -valuation_of(value, prime)


@dataclass(frozen=True)
class PrecisionContext:
	"""Prime and working precision shared by a computation."""

	prime: int
	working_precision: int = DEFAULT_PRECISION

	def __post_init__(self) -> None:
		"""Validate the prime and the precision."""
		if self.prime < 2 or not isprime(self.prime):
			raise DomainError(_("{prime} is not a prime").format(prime=self.prime))
		if self.working_precision < MIN_PRECISION:
			raise DomainError(
				_("working precision must be at least {minimum}").format(
					minimum=MIN_PRECISION
				)
			)

	@property
	def modulus(self) -> int:
		"""Return p^N."""
		return self.prime**self.working_precision


@dataclass(frozen=True)
class PadicNumber:
	"""A p-adic number truncated to `precision` unit digits."""

	prime: int
	valuation: int
	unit: int
	precision: int
	is_zero: bool = False

	def __post_init__(self) -> None:
		"""Check the canonical form."""
		if self.is_zero:
			return
		if self.precision < 1:
			raise PrecisionExhausted(_("a nonzero value needs at least one digit"))
		if self.unit % self.prime == 0:
			raise DomainError(_("the unit part must be prime to p"))
		if not 0 < self.unit < self.prime**self.precision:
			raise DomainError(_("the unit part must be reduced modulo p^N"))

	@classmethod
	def zero(cls, prime: int, precision: int = DEFAULT_PRECISION) -> PadicNumber:
		"""Return the distinguished zero."""
		return cls(prime, 0, 0, precision, is_zero=True)

	@classmethod
	def from_residue(
		cls, prime: int, residue: int, precision: int, valuation: int = 0
	) -> PadicNumber:
		"""Build p^valuation * residue from a unit residue mod p^precision."""
		return cls(prime, valuation, residue % prime**precision, precision)

	@classmethod
	def from_digits(cls, prime: int, valuation: int, digits: List[int]) -> PadicNumber:
		"""Build a value from its little-endian unit digits."""
		if not digits or digits[0] == 0:
			raise ParserError(_("the leading unit digit must be nonzero"))
		if any(not 0 <= digit < prime for digit in digits):
			raise ParserError(
				_("digits must lie between 0 and {top}").format(top=prime - 1)
			)
		unit = sum(digit * prime**index for index, digit in enumerate(digits))
		return cls(prime, valuation, unit, len(digits))

	@property
	def modulus(self) -> int:
		"""Return p^precision."""
		return self.prime**self.precision

	@property
	def absolute_precision(self) -> int:
		"""Return the power of p up to which the value is known."""
		return self.valuation + self.precision

	@property
	def digits(self) -> List[int]:
		"""Return the unit digits d_0 .. d_{N-1}, little-endian."""
		out = []
		unit = self.unit
		for _index in range(self.precision):
			unit, digit = divmod(unit, self.prime)
			out.append(digit)
		return out

	def digit(self, index: int) -> int:
		"""Return the unit digit a_index."""
		if self.is_zero:
			return 0
		if not 0 <= index < self.precision:
			raise PrecisionError(
				_("digit a_{index} is not known").format(index=index),
				needed=index + 1,
				available=self.precision,
			)
		return (self.unit // self.prime**index) % self.prime

	def residue(self, count: int) -> int:
		"""Return the unit part modulo p^count."""
		if count > self.precision:
			raise PrecisionError(
				_("{count} unit digits are not known").format(count=count),
				needed=count,
				available=self.precision,
			)
		return self.unit % self.prime**count

	def truncate(self, precision: int) -> PadicNumber:
		"""Return the same value known to fewer digits."""
		if self.is_zero or precision >= self.precision:
			return self
		return PadicNumber(
			self.prime, self.valuation, self.residue(precision), precision
		)

	def norm(self) -> Fraction:
		"""Return |x|_p."""
		return norm(self)

	def to_fraction(self) -> Fraction:
		"""Return the exact rational p^γ * unit of the truncated expansion."""
		if self.is_zero:
			return Fraction(0)
		return Fraction(self.unit) * Fraction(self.prime) ** self.valuation

	def equal_at(self, other: PadicNumber, precision: int) -> bool:
		"""Return True if both values agree on their first `precision` digits."""
		if self.is_zero or other.is_zero:
			return self.is_zero and other.is_zero
		if self.valuation != other.valuation:
			return False
		if precision > min(self.precision, other.precision):
			raise PrecisionError(
				_("cannot compare {count} digits").format(count=precision),
				needed=precision,
				available=min(self.precision, other.precision),
			)
		return self.residue(precision) == other.residue(precision)

	def compact(self) -> str:
		"""Return the compact form 'γ|d0,d1,...'."""
		if self.is_zero:
			return "0"
		return f"{self.valuation}|{','.join(str(digit) for digit in self.digits)}"

	def text(self) -> str:
		"""Return the text form 'p^γ * (d0 + d1*p + ...)'."""
		if self.is_zero:
			return "0"
		prime = self.prime
		terms = []
		for index, digit in enumerate(self.digits):
			if index == 0:
				terms.append(f"{digit}")
			elif index == 1:
				terms.append(f"{digit}*{prime}")
			else:
				terms.append(f"{digit}*{prime}^{index}")
		return f"{prime}^{self.valuation} * ({' + '.join(terms)} + ...)"

	def __str__(self) -> str:
		"""Return the compact form."""
		return self.compact()

	def __mul__(self, other: PadicNumber) -> PadicNumber:
		"""Multiply two values."""
		return mul(self, other)

	def __add__(self, other: PadicNumber) -> PadicNumber:
		"""Add two values."""
		return add(self, other)

	def __sub__(self, other: PadicNumber) -> PadicNumber:
		"""Subtract two values."""
		return add(self, neg(other))

	def __neg__(self) -> PadicNumber:
		"""Negate."""
		return neg(self)

	def __truediv__(self, other: PadicNumber) -> PadicNumber:
		"""Divide two values."""
		return mul(self, inv(other))

	def __pow__(self, exponent: int) -> PadicNumber:
		"""Raise to a nonnegative integer power."""
		return power(self, exponent)


def canonicalize_rational(
	numerator: int, denominator: int, ctx: PrecisionContext
) -> PadicNumber:
	"""Return the canonical expansion of numerator/denominator to N digits."""
	return from_fraction(Fraction(numerator, denominator), ctx.prime, ctx.working_precision)


def from_fraction(value: Rational, prime: int, precision: int) -> PadicNumber:
	"""Return the canonical expansion of an exact rational."""
	value = Fraction(value)
	if value == 0:
		return PadicNumber.zero(prime, precision)
	num_val = _int_valuation(value.numerator, prime)
	den_val = _int_valuation(value.denominator, prime)
	modulus = prime**precision
	num_unit = value.numerator // prime**num_val
	den_unit = value.denominator // prime**den_val
	unit = num_unit * pow(den_unit, -1, modulus) % modulus
	return PadicNumber(prime, num_val - den_val, unit, precision)


def norm(x: PadicNumber) -> Fraction:
	"""Return |x|_p = p^-γ, or 0 for zero."""
	if x.is_zero:
		return Fraction(0)
	return Fraction(x.prime) ** -x.valuation


def _same_prime(x: PadicNumber, y: PadicNumber) -> None:
	if x.prime != y.prime:
		raise DomainError(
			_("cannot combine values of Q_{p} and Q_{q}").format(p=x.prime, q=y.prime)
		)


def mul(x: PadicNumber, y: PadicNumber) -> PadicNumber:
	"""Multiply, keeping the smaller unit precision."""
	_same_prime(x, y)
	precision = min(x.precision, y.precision)
	if x.is_zero or y.is_zero:
		return PadicNumber.zero(x.prime, precision)
	modulus = x.prime**precision
	return PadicNumber(
		x.prime, x.valuation + y.valuation, x.unit * y.unit % modulus, precision
	)


def inv(x: PadicNumber) -> PadicNumber:
	"""Return 1/x."""
	if x.is_zero:
		raise DomainError(_("zero has no inverse"))
	return PadicNumber(x.prime, -x.valuation, pow(x.unit, -1, x.modulus), x.precision)


def neg(x: PadicNumber) -> PadicNumber:
	"""Return -x."""
	if x.is_zero:
		return x
	return PadicNumber(x.prime, x.valuation, -x.unit % x.modulus, x.precision)


def power(x: PadicNumber, exponent: int) -> PadicNumber:
	"""Return x^exponent by repeated squaring."""
	if exponent < 0:
		raise DomainError(_("negative exponents are not supported, use inv"))
	if exponent == 0:
		return PadicNumber(x.prime, 0, 1, x.precision)
	if x.is_zero:
		return x
	return PadicNumber(
		x.prime,
		x.valuation * exponent,
		pow(x.unit, exponent, x.modulus),
		x.precision,
	)


def add(x: PadicNumber, y: PadicNumber) -> PadicNumber:
	"""Add, keeping the smaller absolute precision.

	Cancellation of leading digits is renormalized away and shortens the
	unit precision. A sum with no surviving digit raises PrecisionExhausted.
	"""
	_same_prime(x, y)
	if x.is_zero:
		return y
	if y.is_zero:
		return x
	prime = x.prime
	low = min(x.valuation, y.valuation)
	known = min(x.absolute_precision, y.absolute_precision) - low
	modulus = prime**known
	total = (
		x.unit * prime ** (x.valuation - low) + y.unit * prime ** (y.valuation - low)
	) % modulus
	if total == 0:
		raise PrecisionExhausted(
			_("the sum is indistinguishable from zero at {count} digits").format(
				count=known
			),
			needed=known + 1,
			available=known,
		)
	shift = _int_valuation(total, prime)
	return PadicNumber(prime, low + shift, total // prime**shift, known - shift)


def digit(x: PadicNumber, index: int) -> int:
	"""Return the unit digit a_index of x."""
	return x.digit(index)


def parse_value(text: str, ctx: PrecisionContext) -> PadicNumber:
	"""Parse 'n/d', an integer, or the compact form 'γ|d0,d1,...'."""
	if match := COMPACT_PATTERN.match(text):
		digits = [int(part) for part in match.group(2).split(",")]
		return PadicNumber.from_digits(ctx.prime, int(match.group(1)), digits)
	if match := RATIONAL_PATTERN.match(text):
		denominator = int(match.group(2) or 1)
		if denominator == 0:
			raise ParserError(_("denominator must not be zero"))
		return canonicalize_rational(int(match.group(1)), denominator, ctx)
	raise ParserError(
		_("'{text}' is neither 'n/d' nor 'γ|d0,d1,...'").format(text=text)
	)


def parse_rational(text: str) -> Fraction:
	"""Parse 'n/d' or an integer into an exact rational."""
	if match := RATIONAL_PATTERN.match(text):
		denominator = int(match.group(2) or 1)
		if denominator == 0:
			raise ParserError(_("denominator must not be zero"))
		return Fraction(int(match.group(1)), denominator)
	raise ParserError(_("'{text}' is not a rational").format(text=text))
