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
"""Solvability of x^q = a over Q_p and digit-by-digit root extraction."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Dict, FrozenSet, Optional, Tuple

from padix import _
from padix.error import DomainError, PrecisionError
from padix.padic_core import PadicNumber
from padix.utils import check_budget, dprint

PowerTable = Dict[int, Tuple[int, ...]]


class Method(str, Enum):
	"""Which criterion decided a verdict."""

	IDENTITY = "identity"
	SQUARE = "square"
	COPRIME = "coprime"
	PTH_POWER = "pth-power"
	MP_POWER = "mp-power"
	GENERAL_MPS = "general-mps"
	FAST_PATH = "closed-form"
	ORACLE = "oracle"


class FailureKind(str, Enum):
	"""Which family of condition failed."""

	VALUATION = "valuation-divisibility"
	RESIDUE = "residue-condition"
	DIGIT = "digit-condition"


@dataclass(frozen=True)
class FailureReason:
	"""The condition a negative verdict failed on."""

	kind: FailureKind
	condition: str

	def to_dict(self) -> dict[str, str]:
		"""Return the JSON record."""
		return {"kind": self.kind.value, "condition": self.condition}


@dataclass(frozen=True)
class SolveVerdict:
	"""Outcome of deciding x^q = a."""

	solvable: bool
	method: Method
	root: Optional[PadicNumber] = None
	failure_reason: Optional[FailureReason] = None
	effective_precision: int = 0
	recursion_agreement: Optional[int] = None
	"""Leading digits on which the ported digit recursion matched the root."""

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		record: dict[str, object] = {
			"solvable": self.solvable,
			"criterion_used": self.method.value,
			"effective_precision": self.effective_precision,
		}
		if self.failure_reason is not None:
			record["failure_reason"] = self.failure_reason.to_dict()
		if self.root is not None:
			record["root"] = self.root.compact()
		if self.recursion_agreement is not None:
			record["recursion_agreement"] = self.recursion_agreement
		return record


@dataclass(frozen=True)
class ExponentFactorization:
	"""q = m * p^s with gcd(m, p) = 1."""

	m: int
	s: int
	prime: int

	@property
	def q(self) -> int:
		"""Return the recomposed exponent."""
		return self.m * self.prime**self.s


@dataclass
class OracleVerdict:
	"""Brute-force verdict at a fixed digit depth."""

	solvable: bool
	stable: bool
	depth: int
	roots: FrozenSet[int] = field(default_factory=frozenset)
	"""Unit roots modulo p^(depth - s), one per true root."""


def factor_exponent(q: int, prime: int) -> ExponentFactorization:
	"""Split q into m * p^s."""
	if q < 1:
		raise DomainError(_("the exponent must be positive"))
	m, s = q, 0
	while m % prime == 0:
		m //= prime
		s += 1
	return ExponentFactorization(m, s, prime)


def _negative(
	method: Method, kind: FailureKind, condition: str, precision: int
) -> SolveVerdict:
	return SolveVerdict(
		False,
		method,
		failure_reason=FailureReason(kind, condition),
		effective_precision=precision,
	)


def _require_unit_input(a: PadicNumber) -> None:
	if a.is_zero:
		raise DomainError(_("x^q = 0 has only the trivial root, a must be nonzero"))


def _require_digits(a: PadicNumber, count: int) -> None:
	if a.precision < count:
		raise PrecisionError(
			_("{count} unit digits are needed to decide this equation").format(
				count=count
			),
			needed=count,
			available=a.precision,
		)


def _valuation_check(a: PadicNumber, q: int, method: Method) -> Optional[SolveVerdict]:
	if a.valuation % q:
		return _negative(
			method,
			FailureKind.VALUATION,
			f"{q} ∤ γ(a) = {a.valuation}",
			a.precision,
		)
	return None


def is_residue(a0: int, q: int, prime: int) -> bool:
	"""Return True if a0 is a q-th power residue modulo an odd prime."""
	if prime == 2:
		return True
	return pow(a0, (prime - 1) // gcd(q, prime - 1), prime) == 1


def _lift_root(unit: int, q: int, prime: int, precision: int) -> Optional[int]:
	"""Return a unit root of x^q = unit modulo p^(precision - s), or None.

	Seeds are residues modulo p (modulo 4 when p = 2 and s >= 1). Each step
	keeps the one next digit d with (x + d p^k)^q = unit mod p^(k + s + 1);
	the derivative q x^(q-1) has valuation exactly s, so d is unique.
	The smallest seed wins, which makes the root of 1 equal to 1.
	"""
	s = factor_exponent(q, prime).s
	start = 2 if prime == 2 and s >= 1 else 1
	target = precision - s
	if target < start:
		raise PrecisionError(
			_("lifting a root of x^{q} needs {count} digits").format(
				q=q, count=start + s
			),
			needed=start + s,
			available=precision,
		)
	seed_modulus = prime ** (start + s)
	seeds = [
		x
		for x in range(1, prime**start)
		if x % prime and pow(x, q, seed_modulus) == unit % seed_modulus
	]
	if not seeds:
		return None
	root = seeds[0]
	for k in range(start, target):
		step = prime**k
		modulus = prime ** (k + s + 1)
		for candidate in range(prime):
			lifted = root + candidate * step
			if pow(lifted, q, modulus) == unit % modulus:
				root = lifted
				break
		else:
			# Unreachable for a true seed; the derivative argument guarantees a digit.
			return None
	return root


def _root_verdict(
	a: PadicNumber, q: int, method: Method, root_unit: int, precision: int
) -> SolveVerdict:
	root = PadicNumber.from_residue(a.prime, root_unit, precision, a.valuation // q)
	return SolveVerdict(True, method, root=root, effective_precision=precision)


def is_square(a: PadicNumber) -> SolveVerdict:
	"""Decide x^2 = a."""
	_require_unit_input(a)
	if (negative := _valuation_check(a, 2, Method.SQUARE)) is not None:
		return negative
	prime = a.prime
	if prime == 2:
		_require_digits(a, 3)
		if a.digit(1) or a.digit(2):
			return _negative(
				Method.SQUARE,
				FailureKind.DIGIT,
				f"a_1 = {a.digit(1)}, a_2 = {a.digit(2)}, both must be 0",
				a.precision,
			)
	elif not is_residue(a.digit(0), 2, prime):
		return _negative(
			Method.SQUARE,
			FailureKind.RESIDUE,
			f"a_0 = {a.digit(0)} is not a quadratic residue modulo {prime}",
			a.precision,
		)
	precision = a.precision - (1 if prime == 2 else 0)
	root = _lift_root(a.unit, 2, prime, a.precision)
	assert root is not None
	return _root_verdict(a, 2, Method.SQUARE, root, precision)


def solve_coprime(a: PadicNumber, q: int) -> SolveVerdict:
	"""Decide x^q = a for q > 2 prime to p."""
	_require_unit_input(a)
	prime = a.prime
	if q <= 2 or gcd(q, prime) != 1:
		raise DomainError(
			_("the coprime criterion needs q > 2 with gcd(q, {p}) = 1").format(p=prime)
		)
	if (negative := _valuation_check(a, q, Method.COPRIME)) is not None:
		return negative
	if not is_residue(a.digit(0), q, prime):
		return _negative(
			Method.COPRIME,
			FailureKind.RESIDUE,
			f"a_0 = {a.digit(0)} is not a {q}-th power residue modulo {prime}",
			a.precision,
		)
	root = _lift_root(a.unit, q, prime, a.precision)
	assert root is not None
	return _root_verdict(a, q, Method.COPRIME, root, a.precision)


def _pth_condition(a: PadicNumber) -> bool:
	prime = a.prime
	a0 = a.digit(0)
	return pow(a0, prime, prime**2) == a.residue(2)


def solve_p(a: PadicNumber) -> SolveVerdict:
	"""Decide x^p = a; the root is unique and known to N - 1 digits."""
	_require_unit_input(a)
	prime = a.prime
	if prime == 2:
		return is_square(a)
	if (negative := _valuation_check(a, prime, Method.PTH_POWER)) is not None:
		return negative
	_require_digits(a, 2)
	if not _pth_condition(a):
		return _negative(
			Method.PTH_POWER,
			FailureKind.DIGIT,
			f"a_0^p ≢ a_0 + a_1 p (mod p^2) with a_0 = {a.digit(0)}, a_1 = {a.digit(1)}",
			a.precision,
		)
	root = _lift_root(a.unit, prime, prime, a.precision)
	assert root is not None
	verdict = _root_verdict(a, prime, Method.PTH_POWER, root, a.precision - 1)
	return _with_recursion_check(verdict, a)


def _with_recursion_check(verdict: SolveVerdict, a: PadicNumber) -> SolveVerdict:
	# pylint: disable=import-outside-toplevel, cyclic-import
	from padix.carry import digit_recursion

	assert verdict.root is not None
	if a.precision < 3:
		return verdict
	ported = digit_recursion(a.digits, a.prime, 1)
	lifted = verdict.root.digits
	agreement = 0
	for ours, theirs in zip(lifted, ported):
		if ours != theirs:
			break
		agreement += 1
	if agreement < a.prime - 1:
		dprint(
			f"digit recursion agrees with the lifted root on {agreement} digits "
			f"for a = {a.compact()} in Q_{a.prime}"
		)
	return SolveVerdict(
		verdict.solvable,
		verdict.method,
		root=verdict.root,
		effective_precision=verdict.effective_precision,
		recursion_agreement=agreement,
	)


def _mth_root(y: PadicNumber, m: int) -> Optional[int]:
	"""Return a unit m-th root of y's unit part, m prime to p."""
	if m == 1:
		return y.unit
	return _lift_root(y.unit, m, y.prime, y.precision)


def solve_mp(a: PadicNumber, m: int) -> SolveVerdict:
	"""Decide x^(m p) = a with gcd(m, p) = 1 through y = x^m."""
	_require_unit_input(a)
	prime = a.prime
	if m < 1 or gcd(m, prime) != 1:
		raise DomainError(_("m must be positive and prime to {p}").format(p=prime))
	q = m * prime
	if (negative := _valuation_check(a, q, Method.MP_POWER)) is not None:
		return negative
	unit = PadicNumber(prime, 0, a.unit, a.precision)
	if prime == 2:
		inner = is_square(unit)
	else:
		if not is_residue(a.digit(0), m, prime):
			return _negative(
				Method.MP_POWER,
				FailureKind.RESIDUE,
				f"a_0 = {a.digit(0)} is not a {m}-th power residue modulo {prime}",
				a.precision,
			)
		inner = solve_p(unit)
	if not inner.solvable:
		assert inner.failure_reason is not None
		return SolveVerdict(
			False,
			Method.MP_POWER,
			failure_reason=inner.failure_reason,
			effective_precision=a.precision,
		)
	assert inner.root is not None
	root = _mth_root(inner.root, m)
	assert root is not None
	return _root_verdict(a, q, Method.MP_POWER, root, inner.root.precision)


def _staged(a: PadicNumber, factors: ExponentFactorization) -> SolveVerdict:
	"""Take s successive p-th roots, then the m-th root."""
	prime, s, m = a.prime, factors.s, factors.m
	q = factors.q
	if (negative := _valuation_check(a, q, Method.GENERAL_MPS)) is not None:
		return negative
	current = PadicNumber(prime, 0, a.unit, a.precision)
	for stage in range(1, s + 1):
		inner = is_square(current) if prime == 2 else solve_p(current)
		if not inner.solvable:
			assert inner.failure_reason is not None
			return SolveVerdict(
				False,
				Method.GENERAL_MPS,
				failure_reason=FailureReason(
					inner.failure_reason.kind,
					f"stage {stage} of {s}: {inner.failure_reason.condition}",
				),
				effective_precision=a.precision,
			)
		assert inner.root is not None
		current = inner.root
		if prime == 2 and current.unit % 4 != 1:
			# Only the square root congruent to 1 mod 4 can itself be a square.
			current = PadicNumber(
				prime, 0, -current.unit % current.modulus, current.precision
			)
	if m > 1 and not is_residue(current.digit(0), m, prime):
		return _negative(
			Method.GENERAL_MPS,
			FailureKind.RESIDUE,
			f"a_0 = {a.digit(0)} is not a {m}-th power residue modulo {prime}",
			a.precision,
		)
	root = _mth_root(current, m)
	assert root is not None
	return _root_verdict(a, q, Method.GENERAL_MPS, root, current.precision)


def solve(a: PadicNumber, q: int) -> SolveVerdict:
	"""Decide x^q = a for any positive q and return a root when one exists."""
	_require_unit_input(a)
	factors = factor_exponent(q, a.prime)
	dprint(f"solve x^{q} = {a.compact()} in Q_{a.prime}: m = {factors.m}, s = {factors.s}")
	if q == 1:
		return SolveVerdict(True, Method.IDENTITY, root=a, effective_precision=a.precision)
	if q == 2:
		return is_square(a)
	if factors.s == 0:
		return solve_coprime(a, q)
	if factors.s == 1:
		return solve_p(a) if factors.m == 1 else solve_mp(a, factors.m)
	if a.precision <= factors.s + 2:
		raise PrecisionError(
			_("{s} root stages need more than {count} digits").format(
				s=factors.s, count=factors.s + 2
			),
			needed=factors.s + 3,
			available=a.precision,
		)
	return _staged(a, factors)


def verify_root(verdict: SolveVerdict, a: PadicNumber, q: int) -> bool:
	"""Return True if root^q equals a on the digits the root determines."""
	if not verdict.solvable or verdict.root is None:
		return False
	s = factor_exponent(q, a.prime).s
	check = max(1, a.precision - s - 1)
	return (verdict.root**q).equal_at(a, check)


def fast_criterion(a: PadicNumber, q: int) -> Optional[SolveVerdict]:
	"""Decide x^q = a from a closed-form digit condition, if one applies.

	Returns None when (q, p) matches no closed form; the caller falls back
	to solve. No root is constructed.
	"""
	_require_unit_input(a)
	prime = a.prime
	factors = factor_exponent(q, prime)
	kind = _fast_path_kind(q, prime, factors)
	if kind is None:
		return None
	if (negative := _valuation_check(a, q, Method.FAST_PATH)) is not None:
		return negative
	failed = _fast_path_failure(a, kind, factors)
	if failed is not None:
		return _negative(Method.FAST_PATH, FailureKind.DIGIT, failed, a.precision)
	return SolveVerdict(True, Method.FAST_PATH, effective_precision=a.precision)


def _fast_path_kind(q: int, prime: int, factors: ExponentFactorization) -> Optional[str]:
	if prime == 2 and q == 6:
		return "six-over-two"
	if prime == 2 and factors.m == 1 and factors.s >= 1:
		return "two-power"
	if prime >= 3 and q == (prime - 1) * prime:
		return "p-minus-one-p"
	if q == prime**2:
		return "p-squared"
	if q == prime**3:
		return "p-cubed"
	return None


def _fast_path_failure(
	a: PadicNumber, kind: str, factors: ExponentFactorization
) -> Optional[str]:
	"""Return the first failed closed-form condition, or None."""
	prime = a.prime
	if kind == "six-over-two":
		_require_digits(a, 2)
		return None if a.digit(1) == 0 else f"a_1 = {a.digit(1)} must be 0"
	if kind == "two-power":
		_require_digits(a, factors.s + 2)
		for index in range(1, factors.s + 2):
			if a.digit(index):
				return f"a_{index} = {a.digit(index)} must be 0"
		return None
	if kind == "p-minus-one-p":
		_require_digits(a, 2)
		if a.digit(0) != 1:
			return f"a_0 = {a.digit(0)} must be 1"
		return None if a.digit(1) == 0 else f"a_1 = {a.digit(1)} must be 0"
	_require_digits(a, 3 if kind == "p-squared" else 4)
	if not _pth_condition(a):
		return "a_0^p ≢ a_0 + a_1 p (mod p^2)"
	if a.digit(1) != a.digit(2):
		return f"a_1 = {a.digit(1)} differs from a_2 = {a.digit(2)}"
	if kind == "p-squared":
		return None
	a0, a1, a3 = a.digit(0), a.digit(1), a.digit(3)
	# (p - 1) / 2 is an integer for odd p
	rhs = a3 - (prime - 1) // 2 * pow(a0, prime - 2) * a1 * a1
	if (a1 - rhs) % prime:
		return "a_1 ≢ a_3 - (p-1)/2 a_0^(p-2) a_1^2 (mod p)"
	return None


@lru_cache(maxsize=64)
def power_table(prime: int, q: int, depth: int) -> PowerTable:
	"""Return unit residue -> unit roots of x^q modulo p^depth."""
	modulus = prime**depth
	check_budget(modulus)
	table: Dict[int, list[int]] = {}
	for x in range(1, modulus):
		if x % prime:
			table.setdefault(pow(x, q, modulus), []).append(x)
	return {residue: tuple(roots) for residue, roots in table.items()}


def brute_force_root(a: PadicNumber, q: int, depth: int) -> FrozenSet[int]:
	"""Return every unit residue u mod p^depth with u^q = unit(a) mod p^depth.

	The set is empty when q does not divide γ(a).
	"""
	_require_unit_input(a)
	_require_digits(a, depth)
	check_budget(a.prime**depth)
	if a.valuation % q:
		return frozenset()
	return frozenset(power_table(a.prime, q, depth).get(a.residue(depth), ()))


def oracle_verdict(a: PadicNumber, q: int, depth: int) -> OracleVerdict:
	"""Return the stabilized brute-force verdict at `depth`.

	The verdict is stable when depth - 1 gives the same answer. Roots are
	reported modulo p^(depth - s), where each true root has one image.
	"""
	deep = brute_force_root(a, q, depth)
	shallow = brute_force_root(a.truncate(depth - 1), q, depth - 1)
	s = factor_exponent(q, a.prime).s
	projected = frozenset(root % a.prime ** max(depth - s, 1) for root in deep)
	return OracleVerdict(bool(deep), bool(deep) == bool(shallow), depth, projected)


def residue_index(prime: int, q: int, depth: int) -> int:
	"""Return the index of q-th powers among units mod p^depth, by enumeration."""
	units = (prime - 1) * prime ** (depth - 1)
	return units // len(power_table(prime, q, depth))
