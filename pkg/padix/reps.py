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
"""Representative sets: every nonzero x in Q_p is ε * y^q with ε from a finite set."""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from padix import _
from padix.constants import MIN_PRECISION, Provenance
from padix.error import DomainError, IncompleteSetError, PrecisionError
from padix.padic_core import PadicNumber, from_fraction, valuation_of
from padix.roots import factor_exponent, power_table, solve
from padix.utils import check_budget, dprint, fraction_str

CosetKey = Tuple[int, int]
"""(valuation class mod q, smallest unit residue of the coset mod p^e)."""

SUPPORTED_EXPONENTS = range(2, 7)
TABLE_EXPONENT_SETS: Dict[int, Tuple[int, ...]] = {
	3: (1, 4, 5),
	5: (1, 11, 12, 13, 14),
	# fmt: off
	7: (
		1, 8, 9, 10, 11, 12, 13, 22, 23, 24, 25, 26, 27, 28,
		36, 37, 38, 39, 40, 41, 42,
	),
	# fmt: on
}
"""Printed ε lists for x^p = a, each crossed with p^i for i < p."""

TILDE_SETS: Dict[int, Tuple[int, ...]] = {
	3: (1, 3, 5, 9, 15, 45),
	5: tuple(unit * 5**index for unit in (1, 11) for index in range(5)),
}

WITNESS_CLAIMS: Tuple[Tuple[int, int, Fraction, str], ...] = (
	(5, 5, Fraction(12, 11), "12 = 11 y^5"),
	(5, 5, Fraction(13, 11), "13 = 11 y^5"),
	(5, 5, Fraction(14, 11), "14 = 11 y^5"),
	(3, 3, Fraction(4, 5), "4 = 5 y^3"),
	(3, 3, Fraction(12, 5), "12 = 5 y^3"),
	(3, 3, Fraction(36, 5), "36 = 5 y^3"),
	(3, 3, Fraction(12, 15), "12 = 15 y^3"),
	(3, 3, Fraction(36, 45), "36 = 45 y^3"),
)
"""Identifications used to shrink the printed sets to their tilde variants."""


@dataclass(frozen=True)
class SetValidation:
	"""Outcome of an exhaustive check of a representative set."""

	sound: bool
	complete: bool
	distinct: bool
	checked_depth: int
	missing: Tuple[CosetKey, ...] = ()
	duplicates: Tuple[Tuple[Fraction, Fraction], ...] = ()
	powers: Tuple[Fraction, ...] = ()
	"""Listed ε other than 1 that are themselves q-th powers."""

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"sound": self.sound,
			"complete": self.complete,
			"distinct": self.distinct,
			"checked_depth": self.checked_depth,
			"missing": [
				{"valuation_class": valuation, "unit_coset": unit}
				for valuation, unit in self.missing
			],
			"duplicates": [[fraction_str(a), fraction_str(b)] for a, b in self.duplicates],
			"powers": [fraction_str(value) for value in self.powers],
		}


@dataclass(frozen=True)
class RepresentativeSet:
	"""A finite set E_{p,q} with where it came from and how it validated."""

	prime: int
	q: int
	elements: Tuple[Fraction, ...]
	provenance: Provenance
	validation: Optional[SetValidation] = None

	@property
	def label(self) -> str:
		"""Return e.g. 'E_{3,3}'."""
		tilde = "~" if self.provenance == Provenance.CLAIMED_REDUCED else ""
		return f"{tilde}E_{{{self.prime},{self.q}}}"

	def units(self) -> Tuple[Fraction, ...]:
		"""Return the elements of valuation zero."""
		return tuple(e for e in self.elements if valuation_of(e, self.prime) == 0)

	def rows(self) -> Dict[int, List[Fraction]]:
		"""Group the elements by valuation."""
		out: Dict[int, List[Fraction]] = {}
		for element in self.elements:
			out.setdefault(valuation_of(element, self.prime), []).append(element)
		return out

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"p": self.prime,
			"q": self.q,
			"provenance": self.provenance.label,
			"elements": [fraction_str(element) for element in self.elements],
			"validation": None if self.validation is None else self.validation.to_dict(),
		}


@dataclass(frozen=True)
class WitnessCheck:
	"""One printed identification and what exact arithmetic says about it."""

	prime: int
	q: int
	ratio: Fraction
	claim: str
	holds: bool

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"p": self.prime,
			"q": self.q,
			"claim": self.claim,
			"ratio": fraction_str(self.ratio),
			"holds": self.holds,
		}


def canonical_order(elements: Iterable[Fraction | int], prime: int) -> Tuple[Fraction, ...]:
	"""Deduplicate and sort by valuation, then by value."""
	unique = {Fraction(element) for element in elements}
	return tuple(sorted(unique, key=lambda e: (valuation_of(e, prime), e)))


def exact_depth(prime: int, q: int) -> int:
	"""Return the depth e at which a unit's residue decides whether it is a q-th power."""
	s = factor_exponent(q, prime).s
	if s == 0:
		return 1
	return s + 1 if prime != 2 else s + 2


def _unit_residue(value: Fraction, prime: int, depth: int) -> int:
	value = Fraction(value) / Fraction(prime) ** valuation_of(value, prime)
	modulus = prime**depth
	return value.numerator * pow(value.denominator, -1, modulus) % modulus


@lru_cache(maxsize=4096)
def is_qth_power(value: Fraction, prime: int, q: int) -> bool:
	"""Return True if a nonzero rational is a q-th power in Q_p."""
	s = factor_exponent(q, prime).s
	precision = max(MIN_PRECISION, exact_depth(prime, q) + s + 3)
	return solve(from_fraction(value, prime, precision), q).solvable


def find_nonpower_unit(p: int, q: int) -> Optional[int]:
	"""Return the smallest positive unit that is not a q-th power, or None."""
	for unit in range(1, p ** exact_depth(p, q)):
		if unit % p and not is_qth_power(Fraction(unit), p, q):
			return unit
	return None


class _CosetIndex:
	"""Unit cosets of the q-th powers modulo p^e, keyed by their smallest residue."""

	def __init__(self, prime: int, q: int) -> None:
		"""Enumerate the q-th power subgroup."""
		self.prime = prime
		self.q = q
		self.depth = exact_depth(prime, q)
		self.modulus = prime**self.depth
		self.powers = tuple(power_table(prime, q, self.depth))
		self._memo: Dict[int, int] = {}

	def coset(self, residue: int) -> int:
		"""Return the coset representative of a unit residue."""
		residue %= self.modulus
		if residue not in self._memo:
			self._memo[residue] = min(residue * h % self.modulus for h in self.powers)
		return self._memo[residue]

	def key(self, value: Fraction) -> CosetKey:
		"""Return the class of a nonzero rational modulo q-th powers."""
		return (
			valuation_of(value, self.prime) % self.q,
			self.coset(_unit_residue(value, self.prime, self.depth)),
		)

	def all_cosets(self) -> List[int]:
		"""Return every coset representative."""
		return sorted(
			{self.coset(unit) for unit in range(1, self.modulus) if unit % self.prime}
		)


def _check_exponent(p: int, q: int) -> None:
	if q in SUPPORTED_EXPONENTS:
		return
	if q == p and p in TABLE_EXPONENT_SETS:
		return
	raise DomainError(
		_("printed representative sets exist for q in 2..6 only, not q = {q}").format(q=q)
	)


def _cross(units: Iterable[int | Fraction], scales: Iterable[int | Fraction]) -> List[Fraction]:
	return [Fraction(unit) * Fraction(scale) for unit in units for scale in scales]


def _powers_of(base: int, count: int) -> List[int]:
	return [base**index for index in range(count)]


def _claimed_elements(p: int, q: int) -> List[Fraction]:
	# Missing η/ζ/ξ/μ means every unit is a power; 1 stands in and duplicates collapse.
	eta = find_nonpower_unit(p, 2) or 1
	zeta = find_nonpower_unit(p, 3) or 1
	xi = find_nonpower_unit(p, 5) or 1
	if q == p and p in TABLE_EXPONENT_SETS:
		return _cross(TABLE_EXPONENT_SETS[p], _powers_of(p, p))
	if q == 2:
		if p == 2:
			return _cross((1, 2, 3, 5, 6, 7, 10, 14), (1,))
		return _cross((1, eta), (1, p))
	if q == 3:
		if p == 2:
			return _cross((1, 2, 4), (1,))
		return _cross(_powers_of(p, 3), _powers_of(zeta, 3))
	if q == 4:
		if p == 2:
			return _cross((1, 3, 5, 7, 9, 11, 13), _powers_of(2, 4))
		if p % 4 == 3:
			return _cross(_powers_of(p, 4), (1, eta))
		return _cross(_powers_of(p, 4), _powers_of(eta, 4))
	if q == 5:
		if p % 5 == 1:
			return _cross(_powers_of(p, 5), _powers_of(xi, 5))
		return _cross(_powers_of(p, 5), (1,))
	# q == 6: ε δ^2 with ε from E_{p,2} and δ from E_{p,3}
	if p == 2:
		return _cross(_powers_of(2, 6), (1, 3))
	if p == 3:
		return _cross((1, 2, 4, 5, 7, 8), _powers_of(3, 6))
	deltas = _cross(_powers_of(p, 3), _powers_of(zeta, 3))
	return _cross((1, eta, p, p * eta), [delta**2 for delta in deltas])


def build_set(p: int, q: int) -> RepresentativeSet:
	"""Return the printed set E_{p,q} with η, ζ, ξ, μ instantiated."""
	_check_exponent(p, q)
	return RepresentativeSet(
		p, q, canonical_order(_claimed_elements(p, q), p), Provenance.CLAIMED
	)


def build_tilde_set(p: int) -> RepresentativeSet:
	"""Return the reduced printed set ~E_{p,p} for p in {3, 5}."""
	if p not in TILDE_SETS:
		raise DomainError(_("reduced sets are printed for p = 3 and p = 5 only"))
	return RepresentativeSet(
		p, p, canonical_order(TILDE_SETS[p], p), Provenance.CLAIMED_REDUCED
	)


def nonpower_cover(p: int) -> Tuple[int, ...]:
	"""Return {1} and every i + j p with i^p ≢ i + j p (mod p^2)."""
	modulus = p * p
	out = {1}
	for i in range(1, p):
		for j in range(p):
			if pow(i, p, modulus) != (i + j * p) % modulus:
				out.add(i + j * p)
	return tuple(sorted(out))


def unit_cover(p: int, q: int, units: Iterable[Fraction | int]) -> FrozenSet[int]:
	"""Return the unit cosets of the q-th powers that the given units hit."""
	index = _CosetIndex(p, q)
	return frozenset(
		index.coset(_unit_residue(Fraction(unit), p, index.depth)) for unit in units
	)


def _default_depth(p: int, q: int) -> int:
	return factor_exponent(q, p).s + 3


def construct_set(
	p: int, q: int, K: Optional[int] = None
) -> Tuple[RepresentativeSet, RepresentativeSet]:
	"""Build E_{p,q} from residue enumeration; return (constructed, reduced-minimal).

	The constructed set crosses {1} and every non-power unit below p^e with
	{p^r : r < q}. The reduced-minimal set keeps one unit per coset, picked
	greedily in increasing order. Both come back validated at depth K.
	"""
	if q < 1:
		raise DomainError(_("the exponent must be positive"))
	depth = _default_depth(p, q) if K is None else K
	modulus = p ** exact_depth(p, q)
	check_budget(modulus)
	units = [u for u in range(1, modulus) if u % p]
	redundant = [1] + [u for u in units if not is_qth_power(Fraction(u), p, q)]
	chosen: List[int] = []
	for unit in units:
		if not any(is_qth_power(Fraction(unit, w), p, q) for w in chosen):
			chosen.append(unit)
	dprint(f"E_{{{p},{q}}}: {len(chosen)} unit cosets modulo {modulus}")
	scales = _powers_of(p, q)
	constructed = RepresentativeSet(
		p, q, canonical_order(_cross(redundant, scales), p), Provenance.CONSTRUCTED
	)
	minimal = RepresentativeSet(
		p, q, canonical_order(_cross(chosen, scales), p), Provenance.REDUCED_MINIMAL
	)
	return validate(constructed, depth), validate(minimal, depth)


@lru_cache(maxsize=None)
def minimal_set(p: int, q: int) -> RepresentativeSet:
	"""Return the validated reduced-minimal set, cached."""
	return construct_set(p, q)[1]


def validate(rep_set: RepresentativeSet, K: int) -> RepresentativeSet:
	"""Check soundness, completeness and distinctness over residues mod p^K."""
	p, q = rep_set.prime, rep_set.q
	index = _CosetIndex(p, q)
	if K < index.depth:
		raise PrecisionError(
			_("validating q = {q} needs residues modulo p^{depth}").format(
				q=q, depth=index.depth
			),
			needed=index.depth,
			available=K,
		)
	check_budget(p**K)
	seen: Dict[CosetKey, Fraction] = {}
	duplicates = []
	for element in rep_set.elements:
		key = index.key(element)
		if key in seen:
			duplicates.append((seen[key], element))
		else:
			seen[key] = element
	missing = set()
	for unit in range(1, p**K):
		if unit % p == 0:
			continue
		coset = index.coset(unit)
		for valuation in range(q):
			if (valuation, coset) not in seen:
				missing.add((valuation, coset))
	powers = tuple(
		element
		for element in rep_set.elements
		if element != 1 and is_qth_power(element, p, q)
	)
	validation = SetValidation(
		sound=not powers,
		complete=not missing,
		distinct=not duplicates,
		checked_depth=K,
		missing=tuple(sorted(missing)),
		duplicates=tuple(duplicates),
		powers=powers,
	)
	return replace(rep_set, validation=validation)


def class_count(p: int, q: int) -> int:
	"""Return q times the number of unit cosets of the q-th powers."""
	return q * len(_CosetIndex(p, q).all_cosets())


def decompose(
	x: PadicNumber, q: int, rep_set: RepresentativeSet
) -> Tuple[Fraction, PadicNumber]:
	"""Return the first ε in canonical order with x / ε a q-th power, and the root."""
	if x.is_zero:
		raise DomainError(_("zero has no decomposition"))
	if rep_set.prime != x.prime or rep_set.q != q:
		raise DomainError(
			_("{label} does not decompose over Q_{p} with q = {q}").format(
				label=rep_set.label, p=x.prime, q=q
			)
		)
	for element in rep_set.elements:
		if (x.valuation - valuation_of(element, x.prime)) % q:
			continue
		ratio = x / from_fraction(element, x.prime, x.precision)
		verdict = solve(ratio, q)
		if verdict.solvable:
			assert verdict.root is not None
			return element, verdict.root
	depth = min(exact_depth(x.prime, q), x.precision)
	coset = x.residue(depth)
	raise IncompleteSetError(
		_(
			"{label} has no ε for the unit coset {coset} mod {p}^{depth}"
			" at valuation class {r}"
		).format(
			label=rep_set.label, coset=coset, p=x.prime, depth=depth, r=x.valuation % q
		),
		coset=coset,
		valuation_class=x.valuation % q,
	)


def reduction_witnesses() -> List[WitnessCheck]:
	"""Re-check every identification printed alongside the reduced sets."""
	return [
		WitnessCheck(prime, q, ratio, claim, is_qth_power(ratio, prime, q))
		for prime, q, ratio, claim in WITNESS_CLAIMS
	]


def same_class(a: Fraction, b: Fraction, p: int, q: int) -> bool:
	"""Return True if a / b is a q-th power in Q_p."""
	return is_qth_power(Fraction(a) / Fraction(b), p, q)
