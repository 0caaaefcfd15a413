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
"""Carry polynomials of p-th powers, the digit recursion and criterion emission.

The p-th power of a digit expansion x = x_0 + x_1 p + x_2 p^2 + ... is

	x^p = x_0^p + sum_k p^k (p x_0^(p-1) x_k + N_k(x_0, ..., x_(k-1))) + pure terms

where N_k collects the multinomial terms of total weight k that are neither
linear in x_k nor a pure power x_j^p. Every coefficient of N_k is divisible
by p, so N_k / p is an integer polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import sympy

from padix import _
from padix.error import DomainError, PrecisionError
from padix.padic_core import PadicNumber

ExponentTuple = Tuple[int, ...]
Term = Tuple[Fraction, Tuple[int, ...]]

P = sympy.Symbol("p", positive=True, integer=True)
SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
PRINTED_STAGES = 4


def digit_symbol(index: int) -> sympy.Symbol:
	"""Return the symbol a_index."""
	return sympy.Symbol(f"a_{index}", nonnegative=True, integer=True)


def _weight_partitions(k: int) -> Iterator[Tuple[int, ...]]:
	"""Yield multiplicities (l_1, ..., l_(k-1)) with sum of j * l_j equal to k."""

	def place(index: int, remaining: int) -> Iterator[Dict[int, int]]:
		if index == 0:
			if remaining == 0:
				yield {}
			return
		for count in range(remaining // index, -1, -1):
			for rest in place(index - 1, remaining - count * index):
				yield {**rest, index: count} if count else rest

	for parts in place(k - 1, k):
		yield tuple(parts.get(index, 0) for index in range(1, k))


def summand_list(p: int, k: int) -> FrozenSet[ExponentTuple]:
	"""Return the exponent tuples (l_0, ..., l_(k-1)) of the summands of N_k.

	Each tuple has sum p, weight sum j * l_j equal to k, and every entry
	below p.
	"""
	out = set()
	for rest in _weight_partitions(k):
		used = sum(rest)
		if used > p or any(count >= p for count in rest):
			continue
		out.add((p - used, *rest))
	return frozenset(out)


@lru_cache(maxsize=None)
def multinomial(exponents: ExponentTuple) -> int:
	"""Return (sum l_j)! / prod l_j!."""
	return factorial(sum(exponents)) // prod(factorial(count) for count in exponents)


@dataclass(frozen=True)
class CarryPolynomial:
	"""The integer polynomial N_k in x_0 .. x_(k-1), before division by p."""

	prime: int
	k: int
	terms: FrozenSet[Tuple[int, ExponentTuple]]

	def evaluate(self, values: Sequence[int]) -> int:
		"""Return N_k at integer digits x_0 .. x_(k-1)."""
		return sum(
			coefficient * prod(value**count for value, count in zip(values, exponents))
			for coefficient, exponents in self.terms
		)

	def divisible(self) -> bool:
		"""Return True if p divides every coefficient."""
		return all(coefficient % self.prime == 0 for coefficient, _exp in self.terms)

	def sorted_terms(self) -> List[Tuple[int, ExponentTuple]]:
		"""Return the terms, highest power of x_0 first."""
		return sorted(self.terms, key=lambda term: term[1], reverse=True)

	def __str__(self) -> str:
		"""Return e.g. '20*x0^3*x1*x2 + 10*x0^2*x1^3'."""
		if not self.terms:
			return "0"
		rendered = []
		for coefficient, exponents in self.sorted_terms():
			factors = [f"{coefficient}"]
			for index, count in enumerate(exponents):
				if count == 1:
					factors.append(f"x{index}")
				elif count > 1:
					factors.append(f"x{index}^{count}")
			rendered.append("*".join(factors))
		return " + ".join(rendered)

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"prime": self.prime,
			"k": self.k,
			"terms": [[coefficient, list(exp)] for coefficient, exp in self.sorted_terms()],
		}


@lru_cache(maxsize=None)
def carry_polynomial(p: int, k: int) -> CarryPolynomial:
	"""Return N_k for the prime p; N_1 is zero."""
	if k < 1:
		raise DomainError(_("carry polynomials start at k = 1"))
	return CarryPolynomial(
		p, k, frozenset((multinomial(exp), exp) for exp in summand_list(p, k))
	)


def symbolic_carry_over_p(k: int, values: Sequence[sympy.Expr]) -> sympy.Expr:
	"""Return N_k(values) / p with p symbolic; valid for p > k.

	p! / (l_0! prod l_j!) / p is the falling factorial (p-1)_(r-1) over
	prod l_j!, where r = sum of l_j for j >= 1.
	"""
	total = sympy.Integer(0)
	for rest in _weight_partitions(k):
		used = sum(rest)
		coefficient = sympy.ff(P - 1, used - 1) / prod(factorial(count) for count in rest)
		monomial = values[0] ** (P - used)
		for index, count in enumerate(rest, start=1):
			monomial *= values[index] ** count
		total += coefficient * monomial
	return total


def symbolic_carry_polynomial(k: int) -> sympy.Expr:
	"""Return N_k in the symbols x_0 .. x_(k-1) with p symbolic."""
	xs = [sympy.Symbol(f"x_{index}") for index in range(max(k, 1))]
	return sympy.expand(P * symbolic_carry_over_p(k, xs))


def digit_recursion(a_digits: Sequence[int], p: int, m: int) -> List[int]:
	"""Run m stages of the digit recursion for x^(p^m) = a.

	Each stage keeps the leading digit and maps a_(j+1) - N_j(a_0..a_(j-1)) / p
	mod p into position j, dropping the last digit.
	"""
	if m < 1 or m > p - 1:
		raise DomainError(
			_("the digit recursion is defined for 1 <= m <= p - 1 = {top}").format(
				top=p - 1
			)
		)
	digits = list(a_digits)
	if len(digits) < m + 2:
		raise DomainError(
			_("{m} stages need at least {count} digits").format(m=m, count=m + 2)
		)
	for _stage in range(m):
		out = [digits[0]]
		for j in range(1, len(digits) - 1):
			carry = carry_polynomial(p, j).evaluate(digits[:j]) // p
			out.append((digits[j + 1] - carry) % p)
		digits = out
	return digits


def expansion_identity_holds(p: int, digits: Sequence[int]) -> bool:
	"""Check x^p against its carry decomposition modulo p^(k+1)."""
	k = len(digits)
	modulus = p ** (k + 1)
	x = sum(digit * p**index for index, digit in enumerate(digits))

	def at(index: int) -> int:
		return digits[index] if index < k else 0

	total = digits[0] ** p
	for weight in range(1, k + 1):
		linear = p * digits[0] ** (p - 1) * at(weight)
		total += p**weight * (linear + carry_polynomial(p, weight).evaluate(digits[:weight]))
	for index in range(1, k // p + 1):
		total += p ** (index * p) * at(index) ** p
	return pow(x, p, modulus) == total % modulus


def _pretty(expr: sympy.Expr) -> str:
	text = sympy.sstr(expr)
	text = re.sub(r"a_(\d+)", lambda match: "a" + match.group(1).translate(SUBSCRIPTS), text)
	return text.replace("**", "^").replace("*", "·")


@dataclass(frozen=True)
class Congruence:
	"""One line lhs ≡ rhs (mod modulus) over the digits of a."""

	lhs: sympy.Expr
	rhs: sympy.Expr
	modulus: sympy.Expr
	printed_modulus: Optional[sympy.Expr] = None
	equality: bool = False

	def substitute(self, prime: int) -> Congruence:
		"""Return the line with p replaced by a concrete prime."""

		def sub(expr: Optional[sympy.Expr]) -> Optional[sympy.Expr]:
			return None if expr is None else sympy.expand(expr.subs(P, prime))

		return Congruence(
			sub(self.lhs),
			sub(self.rhs),
			sub(self.modulus),
			sub(self.printed_modulus),
			self.equality,
		)

	def pretty(self) -> str:
		"""Return the line with ≡ and subscripts."""
		if self.equality:
			return f"{_pretty(self.lhs)} = {_pretty(self.rhs)}"
		modulus = f" (mod {_pretty(self.modulus)})"
		if self.printed_modulus is not None:
			modulus += f"  [printed: mod {_pretty(self.printed_modulus)}]"
		return f"{_pretty(self.lhs)} ≡ {_pretty(self.rhs)}{modulus}"


@dataclass(frozen=True)
class CriterionOutcome:
	"""Result of evaluating a criterion against a value."""

	satisfied: bool
	failed_line: Optional[int] = None
	"""0 is the divisibility line, 1.. are the congruences in order."""
	condition: str = ""


@dataclass(frozen=True)
class Criterion:
	"""Solvability conditions for x^(p^m) = a."""

	stages: int
	congruences: Tuple[Congruence, ...]
	prime: Optional[int] = None
	source: str = "printed"
	symbols: Tuple[sympy.Symbol, ...] = field(default=(), compare=False)

	@property
	def divisor(self) -> sympy.Expr:
		"""Return p^m, which must divide γ(a)."""
		base = P if self.prime is None else sympy.Integer(self.prime)
		return base**self.stages

	def concrete(self, prime: int) -> Criterion:
		"""Return the criterion for one prime."""
		return Criterion(
			self.stages,
			tuple(line.substitute(prime) for line in self.congruences),
			prime,
			self.source,
			self.symbols,
		)

	@cached_property
	def _compiled(self) -> List[Tuple[List[Term], int, Optional[int]]]:
		if self.prime is None:
			raise DomainError(_("a criterion with symbolic p cannot be evaluated"))
		out = []
		for line in self.congruences:
			printed = None if line.printed_modulus is None else int(line.printed_modulus)
			out.append((_compile(line.lhs - line.rhs, self.symbols), int(line.modulus), printed))
		return out

	def evaluate(self, a: PadicNumber, printed_modulus: bool = False) -> CriterionOutcome:
		"""Evaluate left to right and stop at the first failed line."""
		compiled = self._compiled
		if a.is_zero:
			raise DomainError(_("a must be nonzero"))
		if a.precision <= self.stages:
			raise PrecisionError(
				_("the criterion reads digits a_0 .. a_{m}").format(m=self.stages),
				needed=self.stages + 1,
				available=a.precision,
			)
		if a.valuation % int(self.divisor):
			return CriterionOutcome(False, 0, f"{self.divisor} ∤ γ(a)")
		digits = a.digits[: self.stages + 1]
		for index, (terms, modulus, printed) in enumerate(compiled, start=1):
			if printed_modulus and printed is not None:
				modulus = printed
			if _residue(_evaluate(terms, digits), modulus):
				return CriterionOutcome(False, index, self.congruences[index - 1].pretty())
		return CriterionOutcome(True)

	def pretty(self) -> List[str]:
		"""Return the human readable lines."""
		lines = [f"{_pretty(self.divisor)} ∣ γ(a)"]
		lines.extend(line.pretty() for line in self.congruences)
		return lines

	def to_dict(self) -> dict[str, object]:
		"""Return the machine form."""
		congruences = []
		for line in self.congruences:
			record: dict[str, object] = {
				"relation": "=" if line.equality else "≡",
				"lhs": self._expression(line.lhs),
				"rhs": self._expression(line.rhs),
				"modulus": sympy.sstr(line.modulus),
			}
			if line.printed_modulus is not None:
				record["printed_modulus"] = sympy.sstr(line.printed_modulus)
			congruences.append(record)
		return {
			"prime": self.prime if self.prime is not None else "p",
			"stages": self.stages,
			"source": self.source,
			"divisor": sympy.sstr(self.divisor),
			"congruences": congruences,
		}

	def _expression(self, expr: sympy.Expr) -> object:
		if self.prime is None:
			return sympy.sstr(expr)
		return [
			[str(coefficient), list(exponents)]
			for coefficient, exponents in _compile(expr, self.symbols)
		]


def _compile(expr: sympy.Expr, symbols: Sequence[sympy.Symbol]) -> List[Term]:
	poly = sympy.Poly(sympy.expand(expr), *symbols)
	return [
		(Fraction(int(coeff.p), int(coeff.q)), tuple(monomial))
		for monomial, coeff in poly.terms()
	]


def _evaluate(terms: List[Term], digits: Sequence[int]) -> Fraction:
	return sum(
		(
			coefficient * prod(digit**count for digit, count in zip(digits, exponents))
			for coefficient, exponents in terms
		),
		Fraction(0),
	)


def _residue(value: Fraction, modulus: int) -> int:
	try:
		inverse = pow(value.denominator, -1, modulus)
	except ValueError as error:
		raise DomainError(
			_("a coefficient denominator is not invertible modulo {modulus}").format(
				modulus=modulus
			)
		) from error
	return value.numerator * inverse % modulus


def _printed_lines(stages: int) -> List[Congruence]:
	a0, a1, a2, a3, a4 = (digit_symbol(index) for index in range(5))
	half = sympy.Rational(1, 2)
	lines = [
		Congruence(a0**P, a0 + a1 * P, P**2),
		Congruence(a1, a2, P, equality=True),
		Congruence(
			a1,
			a3 - half * (P - 1) * a0 ** (P - 2) * a1**2,
			P,
			printed_modulus=P**2,
		),
		Congruence(
			a1,
			a4
			- sympy.Rational(1, 6) * (P - 1) * (P - 2) * a0 ** (P - 3) * a1**3
			+ sympy.Rational(3, 2) * (P - 1) * a0 ** (P - 2) * a1**2,
			P,
			printed_modulus=P**2,
		),
	]
	return lines[:stages]


def _symbolic_stage(values: List[sympy.Expr]) -> List[sympy.Expr]:
	out = [values[0]]
	for j in range(1, len(values) - 1):
		out.append(sympy.expand(values[j + 1] - symbolic_carry_over_p(j, values[:j])))
	return out


def derive_criterion(p: Optional[int], m: int) -> Criterion:
	"""Derive the criterion for x^(p^m) = a by iterating the stage condition.

	Stage t requires the second digit of the (t-1)-fold recursion image to
	repeat a_1, as the first stage does; a_2 = a_1 is substituted once known.
	"""
	_check_stages(p, m)
	symbols = tuple(digit_symbol(index) for index in range(m + 1))
	a0, a1 = symbols[0], symbols[1]
	lines = [Congruence(a0**P, a0 + a1 * P, P**2)]
	values: List[sympy.Expr] = list(symbols)
	for stage in range(2, m + 1):
		values = _symbolic_stage(values)
		rhs = values[1]
		if stage >= 3:
			rhs = sympy.expand(rhs.subs(symbols[2], a1))
		lines.append(Congruence(a1, rhs, P, equality=stage == 2))
	criterion = Criterion(m, tuple(lines), None, "derived", symbols)
	return criterion if p is None else criterion.concrete(p)


def emit_criterion(p: Optional[int], m: int, derived: bool = False) -> Criterion:
	"""Return the criterion for x^(p^m) = a.

	Up to four stages the printed lines are used; beyond that, or with
	derived set, the lines come from symbolic iteration. p may be None for
	a symbolic prime.
	"""
	if derived or m > PRINTED_STAGES:
		return derive_criterion(p, m)
	_check_stages(p, m)
	symbols = tuple(digit_symbol(index) for index in range(m + 1))
	criterion = Criterion(m, tuple(_printed_lines(m)), None, "printed", symbols)
	return criterion if p is None else criterion.concrete(p)


def _check_stages(p: Optional[int], m: int) -> None:
	if m < 1:
		raise DomainError(_("a criterion needs at least one stage"))
	if p is None:
		return
	if p == 2:
		raise DomainError(_("the digit criteria are stated for odd primes"))
	if m > p - 1:
		raise DomainError(
			_("criteria are defined for m <= p - 1 = {top}").format(top=p - 1)
		)


def printed_derived_differences(m: int = PRINTED_STAGES) -> List[Tuple[int, sympy.Expr]]:
	"""Return (line, printed rhs - derived rhs) for every line that differs."""
	printed = emit_criterion(None, m)
	derived = derive_criterion(None, m)
	out = []
	for index, (left, right) in enumerate(
		zip(printed.congruences, derived.congruences), start=1
	):
		difference = sympy.simplify(sympy.expand(left.rhs - right.rhs))
		if difference != 0:
			out.append((index, difference))
	return out
