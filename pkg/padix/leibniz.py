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
"""Six-dimensional filiform Leibniz algebras over Q_p.

Basis vectors are 0-based internally: e_1 is index 0. Dumps and the
`adjusted` helper use the 1-based names.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from padix import _
from padix.constants import DEFAULT_PRECISION, FREE_VALUES_EXTRA
from padix.error import DegenerateChangeError, DomainError, PrecisionError
from padix.padic_core import from_fraction, padic_norm, parse_rational, valuation_of
from padix.reps import build_tilde_set, decompose, minimal_set
from padix.utils import dprint, fraction_str

DIMENSION = 6
FILIFORM_DIMS = (6, 4, 3, 2, 1, 0)

Vector = Tuple[Fraction, ...]
Products = Dict[Tuple[int, int], Dict[int, Fraction]]
Rational = Union[int, Fraction]


def _vec(values: Mapping[int, Rational]) -> Vector:
	return tuple(Fraction(values.get(index, 0)) for index in range(DIMENSION))


@dataclass(frozen=True)
class Class1Params:
	"""L_1(α_1, α_2, α_3, β)."""

	alpha1: Fraction
	alpha2: Fraction
	alpha3: Fraction
	beta: Fraction

	def as_tuple(self) -> Tuple[Fraction, ...]:
		"""Return the parameters in printed order."""
		return (self.alpha1, self.alpha2, self.alpha3, self.beta)


@dataclass(frozen=True)
class Class2Params:
	"""L_2(β_1, β_2, β_3, γ)."""

	beta1: Fraction
	beta2: Fraction
	beta3: Fraction
	gamma: Fraction

	def as_tuple(self) -> Tuple[Fraction, ...]:
		"""Return the parameters in printed order."""
		return (self.beta1, self.beta2, self.beta3, self.gamma)


@dataclass(frozen=True)
class Class3Params:
	"""L_3(θ_1, θ_2, θ_3, α, β, δ); δ is 0 or 1 on the printed classes."""

	theta1: Fraction
	theta2: Fraction
	theta3: Fraction
	alpha: Fraction
	beta: Fraction
	delta: Fraction

	def as_tuple(self) -> Tuple[Fraction, ...]:
		"""Return the parameters in printed order."""
		return (self.theta1, self.theta2, self.theta3, self.alpha, self.beta, self.delta)

	@classmethod
	def of(cls, *values: Rational) -> Class3Params:
		"""Build from six rationals."""
		if len(values) != 6:
			raise DomainError(_("class III takes six parameters"))
		return cls(*(Fraction(value) for value in values))

	def __str__(self) -> str:
		"""Return e.g. 'L_3(0,1,0,0,0,0)'."""
		return f"L_3({','.join(fraction_str(value) for value in self.as_tuple())})"


Params = Union[Class1Params, Class2Params, Class3Params]
PARAM_TYPES: Dict[str, type] = {"I": Class1Params, "II": Class2Params, "III": Class3Params}


def coerce_params(class_tag: str, values: Union[Params, Sequence[Rational]]) -> Params:
	"""Return the parameter record for a class tag."""
	if class_tag not in PARAM_TYPES:
		raise DomainError(
			_("unknown class '{tag}', expected I, II or III").format(tag=class_tag)
		)
	kind = PARAM_TYPES[class_tag]
	if isinstance(values, kind):
		return values
	if isinstance(values, (Class1Params, Class2Params, Class3Params)):
		raise DomainError(_("parameters do not belong to class {tag}").format(tag=class_tag))
	values = list(values)
	expected = 6 if class_tag == "III" else 4
	if len(values) != expected:
		raise DomainError(
			_("class {tag} takes {count} parameters, got {got}").format(
				tag=class_tag, count=expected, got=len(values)
			)
		)
	return kind(*(Fraction(value) for value in values))


@dataclass(frozen=True, eq=False)
class StructureTensor:
	"""Structure constants [e_i, e_j] = sum_k γ_{i,j}^k e_k; omitted products are zero."""

	prime: int
	products: Products = field(default_factory=dict)

	def basis_bracket(self, i: int, j: int) -> Vector:
		"""Return [e_i, e_j] (0-based)."""
		return _vec(self.products.get((i, j), {}))

	def bracket(self, x: Vector, y: Vector) -> Vector:
		"""Return [x, y] by bilinearity."""
		out = [Fraction(0)] * DIMENSION
		for (i, j), row in self.products.items():
			scale = x[i] * y[j]
			if not scale:
				continue
			for k, coefficient in row.items():
				out[k] += scale * coefficient
		return tuple(out)

	def adjusted(self, i: int, j: int, k: int, coefficient: Rational) -> StructureTensor:
		"""Return a copy with coefficient added to γ_{i,j}^k (1-based)."""
		products = {key: dict(row) for key, row in self.products.items()}
		row = products.setdefault((i - 1, j - 1), {})
		row[k - 1] = row.get(k - 1, Fraction(0)) + Fraction(coefficient)
		return StructureTensor(self.prime, _prune(products))

	def dump(self) -> List[Tuple[int, int, int, Fraction]]:
		"""Return the nonzero (i, j, k, coefficient), 1-based and sorted."""
		return sorted(
			(i + 1, j + 1, k + 1, coefficient)
			for (i, j), row in self.products.items()
			for k, coefficient in row.items()
			if coefficient
		)

	def __eq__(self, other: object) -> bool:
		"""Compare the nonzero structure constants."""
		if not isinstance(other, StructureTensor):
			return NotImplemented
		return self.dump() == other.dump()

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"prime": self.prime,
			"products": [[i, j, k, fraction_str(value)] for i, j, k, value in self.dump()],
		}


def _prune(products: Products) -> Products:
	out: Products = {}
	for key, row in products.items():
		kept = {k: Fraction(value) for k, value in row.items() if value}
		if kept:
			out[key] = kept
	return out


def _class1(params: Class1Params) -> Products:
	a1, a2, a3, b = params.as_tuple()
	products: Products = {
		(0, 0): {2: Fraction(1)},
		(0, 1): {3: a1, 4: a2, 5: b},
		(1, 1): {3: a1, 4: a2, 5: a3},
		(2, 1): {4: a1, 5: a2},
		(3, 1): {5: a1},
	}
	for i in range(1, 5):
		products[(i, 0)] = {i + 1: Fraction(1)}
	return products


def _class2(params: Class2Params) -> Products:
	b1, b2, b3, gamma = params.as_tuple()
	products: Products = {
		(0, 0): {2: Fraction(1)},
		(0, 1): {3: b1, 4: b2, 5: b3},
		(1, 1): {5: gamma},
		(2, 1): {4: b1, 5: b2},
		(3, 1): {5: b1},
	}
	for i in range(2, 5):
		products[(i, 0)] = {i + 1: Fraction(1)}
	return products


def _class3(params: Class3Params) -> Products:
	t1, t2, t3, a, b, d = params.as_tuple()
	products: Products = {
		(0, 0): {5: t1},
		(0, 1): {2: Fraction(-1), 5: t2},
		(1, 1): {5: t3},
		(1, 2): {4: a, 5: b},
		(2, 1): {4: -a, 5: -b},
		(1, 3): {5: a},
		(3, 1): {5: -a},
		(2, 3): {5: d},
		(3, 2): {5: -d},
		(1, 4): {5: -d},
		(4, 1): {5: d},
	}
	for i in range(1, 5):
		products[(i, 0)] = {i + 1: Fraction(1)}
	for i in range(2, 5):
		products[(0, i)] = {i + 1: Fraction(-1)}
	return products


BUILDERS: Dict[str, Callable[..., Products]] = {"I": _class1, "II": _class2, "III": _class3}


def structure_constants(
	class_tag: str, params: Union[Params, Sequence[Rational]], prime: int
) -> StructureTensor:
	"""Return the exact multiplication table of L_1, L_2 or L_3."""
	record = coerce_params(class_tag, params)
	return StructureTensor(prime, _prune(BUILDERS[class_tag](record)))


def leibniz_defect(tensor: StructureTensor) -> Fraction:
	"""Return the largest |[x,[y,z]] - [[x,y],z] + [[x,z],y]|_p over basis triples."""
	worst = Fraction(0)
	for x, y, z in product(range(DIMENSION), repeat=3):
		ex, ey, ez = (_unit_vector(index) for index in (x, y, z))
		left = tensor.bracket(ex, tensor.basis_bracket(y, z))
		first = tensor.bracket(tensor.basis_bracket(x, y), ez)
		second = tensor.bracket(tensor.basis_bracket(x, z), ey)
		for coordinate in range(DIMENSION):
			value = left[coordinate] - first[coordinate] + second[coordinate]
			if value:
				worst = max(worst, padic_norm(value, tensor.prime))
	return worst


def _unit_vector(index: int) -> Vector:
	return _vec({index: 1})


def _matrix(rows: Sequence[Vector]) -> sympy.Matrix:
	return sympy.Matrix(
		[[sympy.Rational(value.numerator, value.denominator) for value in row] for row in rows]
	)


def _span_basis(vectors: Sequence[Vector]) -> List[Vector]:
	"""Return an echelon basis of the span."""
	vectors = [vector for vector in vectors if any(vector)]
	if not vectors:
		return []
	reduced, pivots = _matrix(vectors).rref()
	return [
		tuple(Fraction(int(entry.p), int(entry.q)) for entry in reduced.row(index))
		for index in range(len(pivots))
	]


def lower_central_dims(tensor: StructureTensor) -> Tuple[int, ...]:
	"""Return dim L^1 .. dim L^6 with L^(k+1) = [L^k, L]."""
	current = [_unit_vector(index) for index in range(DIMENSION)]
	dims = [DIMENSION]
	for _step in range(DIMENSION - 1):
		current = _span_basis(
			[
				tensor.bracket(vector, _unit_vector(index))
				for vector in current
				for index in range(DIMENSION)
			]
		)
		dims.append(len(current))
	return tuple(dims)


def is_filiform(tensor: StructureTensor) -> bool:
	"""Return True if dim L^i = 6 - i for 2 <= i <= 6."""
	return lower_central_dims(tensor) == FILIFORM_DIMS


@dataclass(frozen=True)
class BasisChange:
	"""e_1' = sum A_i e_i and e_2' = sum B_i e_i."""

	A: Vector
	B: Vector

	def __post_init__(self) -> None:
		"""Check the printed domain of the transformation formulas."""
		if len(self.A) != DIMENSION or len(self.B) != DIMENSION:
			raise DomainError(_("a basis change needs six A and six B coefficients"))
		a1, a2 = self.A[0], self.A[1]
		b1, b2 = self.B[0], self.B[1]
		if a1 * b2 - a2 * b1 == 0:
			raise DomainError(_("A_1 B_2 - A_2 B_1 must be nonzero"))
		if a1 * b2 == 0:
			raise DomainError(_("A_1 B_2 must be nonzero"))

	@classmethod
	def of(cls, a: Sequence[Rational], b: Sequence[Rational]) -> BasisChange:
		"""Build from two coefficient lists, padded with zeros."""
		pad = lambda values: tuple(  # noqa: E731
			Fraction(value) for value in list(values) + [0] * (DIMENSION - len(values))
		)
		return cls(pad(a), pad(b))

	@classmethod
	def identity(cls) -> BasisChange:
		"""Return e_1' = e_1, e_2' = e_2."""
		return cls.of([1], [0, 1])

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"A": [fraction_str(value) for value in self.A],
			"B": [fraction_str(value) for value in self.B],
		}


def change_of_basis(tensor: StructureTensor, change: BasisChange) -> StructureTensor:
	"""Rewrite the tensor in e_1', e_2' and e_(i+1)' = [e_i', e_1']."""
	basis: List[Vector] = [change.A, change.B]
	for _index in range(2, DIMENSION):
		basis.append(tensor.bracket(basis[-1], change.A))
	columns = _matrix(basis).T
	if columns.det() == 0:
		raise DegenerateChangeError(
			_("the generated vectors e_1' .. e_6' are not a basis")
		)
	inverse = columns.inv()
	products: Products = {}
	for i, j in product(range(DIMENSION), repeat=2):
		old = tensor.bracket(basis[i], basis[j])
		if not any(old):
			continue
		new = inverse * _matrix([old]).T
		products[(i, j)] = {
			k: Fraction(int(new[k].p), int(new[k].q)) for k in range(DIMENSION)
		}
	return StructureTensor(tensor.prime, _prune(products))


@dataclass(frozen=True)
class Class3Extraction:
	"""Parameters read off a tensor and the entries that break class III shape."""

	params: Class3Params
	mismatches: Tuple[Tuple[int, int, int], ...] = ()

	@property
	def shaped(self) -> bool:
		"""Return True if the tensor is exactly L_3 of the read parameters."""
		return not self.mismatches


def extract_class3(tensor: StructureTensor) -> Class3Extraction:
	"""Read θ_1, θ_2, θ_3, α, β, δ and compare against the class III table."""
	read = tensor.basis_bracket
	params = Class3Params(
		read(0, 0)[5], read(0, 1)[5], read(1, 1)[5], read(1, 2)[4], read(1, 2)[5], read(2, 3)[5]
	)
	expected = structure_constants("III", params, tensor.prime)
	mismatches = tuple(
		(i + 1, j + 1, k + 1)
		for i, j in product(range(DIMENSION), repeat=2)
		for k in range(DIMENSION)
		if tensor.basis_bracket(i, j)[k] != expected.basis_bracket(i, j)[k]
	)
	return Class3Extraction(params, mismatches)


def transform_class3(params: Class3Params, change: BasisChange) -> Class3Params:
	"""Return the primed parameters by the closed transformation formulas."""
	t1, t2, t3, a, b, d = params.as_tuple()
	a1, a2 = change.A[0], change.A[1]
	b2, b3, b4 = change.B[1], change.B[2], change.B[3]
	shift = a1 + a2 * d
	if a1 * b2 == 0 or shift == 0:
		raise DomainError(_("A_1 B_2 and A_1 + A_2 δ must be nonzero"))
	base = a1**3 * shift
	beta_num = (
		b * a1**2 * b2**2
		+ 2 * a**2 * a1 * a2 * b2**2
		+ a**2 * d * a2**2 * b2**2
		+ d * a1**2 * b3**2
		- 2 * d * a1**2 * b2 * b4
	)
	return Class3Params(
		(a1**2 * t1 + a1 * a2 * t2 + a2**2 * t3) / (base * b2),
		(a1 * t2 + 2 * a2 * t3) / base,
		b2 * t3 / base,
		b2 * a / a1**2,
		beta_num / (a1**4 * b2 * shift),
		b2 * d / shift,
	)


def padic_close(x: Rational, y: Rational, prime: int, digits: int) -> bool:
	"""Return True if v_p(x - y) >= digits."""
	difference = Fraction(x) - Fraction(y)
	return difference == 0 or valuation_of(difference, prime) >= digits


def _random_rational(rng: random.Random, prime: int, unit: bool = False) -> Fraction:
	while True:
		value = rng.randint(-3 * prime, 3 * prime)
		if value and (not unit or value % prime):
			return Fraction(value)


def random_change(rng: random.Random, prime: int, b1_zero: bool = True) -> BasisChange:
	"""Return a random change with unit A_1, B_2; B_1 = 0 unless asked otherwise."""
	a = [_random_rational(rng, prime, unit=True)] + [
		Fraction(rng.randint(-prime, prime)) for _index in range(DIMENSION - 1)
	]
	b = [Fraction(0) if b1_zero else _random_rational(rng, prime)]
	b += [_random_rational(rng, prime, unit=True)]
	b += [Fraction(rng.randint(-prime, prime)) for _index in range(DIMENSION - 2)]
	return BasisChange(tuple(a), tuple(b))


def random_params(rng: random.Random, prime: int) -> Class3Params:
	"""Return random class III parameters with δ in {0, 1}."""
	values = [Fraction(rng.randint(-2 * prime, 2 * prime)) for _index in range(5)]
	return Class3Params(*values, Fraction(rng.randint(0, 1)))


@dataclass(frozen=True)
class NormalForm:
	"""Outcome of normalizing a class III parameter tuple."""

	params: Class3Params
	case: Optional[int]
	change: Optional[BasisChange]
	branch: str = ""
	constants: Mapping[str, Fraction] = field(default_factory=dict)
	"""The ε and ν the case drew from representative sets."""

	@property
	def covered(self) -> bool:
		"""Return False when no printed case applies."""
		return self.case is not None

	@property
	def label(self) -> str:
		"""Return 'case N' or 'not covered'."""
		if self.case is None:
			return "not covered"
		return f"case {self.case}" + (f" ({self.branch})" if self.branch else "")

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"case": self.case,
			"label": self.label,
			"params": [fraction_str(value) for value in self.params.as_tuple()],
			"change": None if self.change is None else self.change.to_dict(),
			"constants": {key: fraction_str(value) for key, value in self.constants.items()},
		}


@dataclass
class _Plan:
	case: int
	a1: Fraction
	a2: Fraction
	b2: Optional[Fraction]
	targets: Dict[int, Fraction]
	branch: str = ""


class _Normalizer:
	"""Case dispatch for one prime and precision."""

	def __init__(self, params: Class3Params, prime: int, precision: int) -> None:
		"""Store the input."""
		self.params = params
		self.prime = prime
		self.precision = precision
		self.constants: Dict[str, Fraction] = {}

	def split(self, value: Fraction, q: int) -> Tuple[Fraction, Fraction]:
		"""Return (ε, y) with value = ε y^q, ε from the reduced-minimal set."""
		eps, root = decompose(
			from_fraction(value, self.prime, self.precision), q, minimal_set(self.prime, q)
		)
		return eps, root.to_fraction()

	def plan(self) -> Optional[_Plan]:
		"""Pick the case whose guard holds, in printed order."""
		case = case_of(self.params)
		if case is None:
			return None
		plan: _Plan = getattr(self, f"_case{case}")()
		return plan

	def _eps_plan(self, value: Fraction, q: int) -> Tuple[Fraction, Fraction]:
		eps, y = self.split(value, q)
		self.constants["epsilon"] = eps
		return eps, y

	def _case1(self) -> _Plan:
		t1, t2 = self.params.theta1, self.params.theta2
		eps, y = self._eps_plan(t2, 3)
		return _Plan(1, y, -t1 / (eps * y**2), Fraction(1), _slots(0, eps, 0, 0, 0, 0))

	def _case2(self) -> _Plan:
		t1, t2, t3 = self.params.theta1, self.params.theta2, self.params.theta3
		eps, y = self._eps_plan(t1 * t3 - t2**2 / 4, 6)
		return _Plan(2, y, -y * t2 / (2 * t3), y**4 / t3, _slots(eps, 0, 1, 0, 0, 0))

	def _case3(self) -> _Plan:
		beta = self.params.beta
		eps, y = self._eps_plan(self.params.theta1 * beta, 5)
		return _Plan(3, y, Fraction(0), y**3 / beta, _slots(eps, 0, 0, 0, 1, 0))

	def _case4(self) -> _Plan:
		t1, t2 = self.params.theta1, self.params.theta2
		eps, y = self._eps_plan(t2, 3)
		return _Plan(
			4, y, -t1 / (eps * y**2), y**3 / self.params.beta, _slots(0, eps, 0, 0, 1, 0)
		)

	def _clear_beta(self, case: int, y: Fraction, targets: Dict[int, Fraction]) -> _Plan:
		alpha, beta = self.params.alpha, self.params.beta
		return _Plan(case, y, -y * beta / (2 * alpha**2), y**2 / alpha, targets)

	def _case5(self) -> _Plan:
		theta1 = self.params.theta1
		if theta1 == 0:
			eps, y = Fraction(0), Fraction(1)
			self.constants["epsilon"] = eps
		else:
			eps, y = self._eps_plan(theta1 * self.params.alpha, 4)
		return self._clear_beta(5, y, _slots(eps, 0, 0, 1, 0, 0))

	def _case6(self) -> _Plan:
		eps, y = self._eps_plan(self.params.theta2, 3)
		return self._clear_beta(6, y, _slots(None, eps, 0, 1, 0, 0))

	def _case7(self) -> _Plan:
		eps, y = self._eps_plan(self.params.theta3 / self.params.alpha, 2)
		return self._clear_beta(7, y, _slots(None, None, eps, 1, 0, 0))

	def _case8(self) -> _Plan:
		alpha = self.params.alpha
		eps, y = self._eps_plan(alpha**2 * self.params.theta1, 5)
		return _Plan(8, y, y * (y - alpha) / alpha, None, _slots(eps, 0, 0, 1, 0, 1))

	def _case9(self) -> _Plan:
		t1, t2, alpha = self.params.theta1, self.params.theta2, self.params.alpha
		if alpha != 0:
			eps, y = self._eps_plan(alpha * t2, 4)
			targets = _slots(None, 1, 0, eps, 0, 1)
			return _Plan(9, y, t2 / y**2 - y, None, targets, "α ≠ 0")
		eps, y = self._eps_plan(t2**2 / (t2 - t1), 3)
		targets = _slots(1 - 1 / eps, 1, 0, 0, 0, 1)
		return _Plan(9, y, t2 / y**2 - y, None, targets, "α = 0")

	def _case10(self) -> _Plan:
		t2, t3 = self.params.theta2, self.params.theta3
		eps, y = self._eps_plan(t3, 3)
		targets = _slots(None, 0, eps, None, 0, 1)
		return _Plan(10, y, -t2 / (2 * eps * y**2), None, targets)

	def _case11(self) -> _Plan:
		t1, t2, t3 = self.params.theta1, self.params.theta2, self.params.theta3
		alpha = self.params.alpha
		eps, y = self._eps_plan(t3, 3)
		discriminant = 4 * t1 * t3 - t2**2
		if discriminant == 0 and alpha == 0:
			targets = _slots(eps, 2 * eps, eps, 0, 0, 1)
			return _Plan(11, y, Fraction(0), None, targets, "4θ_1θ_3 = θ_2^2, α = 0")
		if discriminant == 0:
			targets = _slots(eps, 2 * eps, eps, 1, 0, 1)
			branch = "4θ_1θ_3 = θ_2^2, α ≠ 0"
			return _Plan(11, y, y * (y - alpha) / alpha, None, targets, branch)
		nu, z = self.split(discriminant, 2)
		self.constants["nu"] = nu
		targets = _slots((nu + 4 * eps**2) / (4 * eps), 2 * eps, eps, None, 0, 1)
		return _Plan(11, y, z / y**2 - y, None, targets, "4θ_1θ_3 ≠ θ_2^2")


def _slots(*values: Optional[Rational]) -> Dict[int, Fraction]:
	"""Map slot index to its exact target; None marks a free parameter slot."""
	return {index: Fraction(value) for index, value in enumerate(values) if value is not None}


def normalize_class3(
	params: Class3Params, prime: int, precision: int = DEFAULT_PRECISION
) -> NormalForm:
	"""Bring a class III tuple to its canonical form by the printed case analysis.

	Representative slots are snapped to their exact ε, 0 or 1 after a p-adic
	closeness check at half the working precision; parameter slots keep the
	transformed values.
	"""
	normalizer = _Normalizer(params, prime, precision)
	plan = normalizer.plan()
	if plan is None:
		return NormalForm(params, None, None)
	a1, a2 = plan.a1, plan.a2
	b2 = a1 + a2 if plan.b2 is None else plan.b2
	b4 = Fraction(0)
	if params.delta == 1:
		a, b = params.alpha, params.beta
		b4 = b2 * (b * a1**2 + 2 * a**2 * a1 * a2 + a**2 * a2**2) / (2 * a1**2)
	change = BasisChange.of([a1, a2], [0, b2, 0, b4])
	raw = list(transform_class3(params, change).as_tuple())
	digits = precision // 2
	for slot, target in plan.targets.items():
		if not padic_close(raw[slot], target, prime, digits):
			raise PrecisionError(
				_("case {case} slot {slot} did not settle at {digits} digits").format(
					case=plan.case, slot=slot + 1, digits=digits
				),
				needed=precision + 1,
				available=precision,
			)
		raw[slot] = target
	dprint(f"{params} -> case {plan.case}: {Class3Params(*raw)}")
	return NormalForm(Class3Params(*raw), plan.case, change, plan.branch, normalizer.constants)


CASE_NUMBERS = tuple(range(1, 12))


def canonical_example(case: int, prime: int, rng: random.Random) -> Class3Params:
	"""Return a random tuple satisfying the guard of a case."""
	if case not in CASE_NUMBERS:
		raise DomainError(_("cases run from 1 to 11"))

	def nonzero() -> Fraction:
		return _random_rational(rng, prime)

	def anything() -> Fraction:
		return Fraction(rng.randint(-2 * prime, 2 * prime))

	zero = Fraction(0)
	while True:
		t1, t2, t3, a, b = anything(), nonzero(), nonzero(), nonzero(), anything()
		candidate = {
			1: (t1, t2, zero, zero, zero, 0),
			2: (t1, t2, t3, zero, zero, 0),
			3: (nonzero(), zero, zero, zero, nonzero(), 0),
			4: (t1, t2, zero, zero, nonzero(), 0),
			5: (t1, zero, zero, a, b, 0),
			6: (t1, t2, zero, a, b, 0),
			7: (t1, t2, t3, a, b, 0),
			8: (nonzero(), zero, zero, a, b, 1),
			9: (t1, t2, zero, anything(), b, 1),
			10: (t1, t2, t3, anything(), b, 1),
			11: (t1, 2 * t3, t3, anything(), b, 1),
		}[case]
		params = Class3Params.of(*candidate)
		if case_of(params) == case:
			return params


def case_of(params: Class3Params) -> Optional[int]:
	"""Return the case whose guard holds, without normalizing."""
	t1, t2, t3, a, b, d = params.as_tuple()
	if d == 0:
		guards = (
			a == 0 and b == 0 and t3 == 0 and t2 != 0,
			a == 0 and b == 0 and t3 * (t2**2 - 4 * t1 * t3) != 0,
			a == 0 and t2 == 0 and t3 == 0 and b * t1 != 0,
			a == 0 and t3 == 0 and b * t2 != 0,
			t2 == 0 and t3 == 0 and a != 0,
			t3 == 0 and a * t2 != 0,
			a * t3 != 0,
		)
		offset = 1
	elif d == 1:
		guards = (
			t2 == 0 and t3 == 0 and a * t1 != 0,
			t3 == 0 and t2 * (t1 - t2) != 0,
			t3 * (2 * t3 - t2) != 0,
			2 * t3 == t2 and t3 != 0,
		)
		offset = 8
	else:
		return None
	for index, guard in enumerate(guards):
		if guard:
			return index + offset
	return None


@dataclass(frozen=True)
class CatalogRow:
	"""One printed row of the classification list."""

	label: str
	class_tag: str
	build: Callable[[Mapping[str, Fraction]], Tuple[Rational, ...]]
	sets: Tuple[Tuple[str, int], ...] = ()
	"""(symbol, q) drawn from E_{p,q}."""
	free: Tuple[str, ...] = ()
	tilde: Tuple[int, ...] = ()
	"""Primes at which the first set symbol comes from the reduced tilde set."""


@dataclass(frozen=True)
class CatalogEntry:
	"""One instantiated algebra."""

	label: str
	class_tag: str
	params: Tuple[Fraction, ...]
	tensor: StructureTensor
	sources: Mapping[str, str] = field(default_factory=dict)

	@property
	def name(self) -> str:
		"""Return e.g. 'L_1(1,-2,5,5)'."""
		index = {"I": 1, "II": 2, "III": 3}[self.class_tag]
		return f"L_{index}({','.join(fraction_str(value) for value in self.params)})"

	def to_dict(self) -> dict[str, object]:
		"""Return the JSON record."""
		return {
			"class": self.class_tag,
			"row": self.label,
			"name": self.name,
			"params": [fraction_str(value) for value in self.params],
			"sources": dict(self.sources),
		}


def _row(
	label: str,
	tag: str,
	build: Callable[[Mapping[str, Fraction]], Tuple[Rational, ...]],
	sets: Tuple[Tuple[str, int], ...] = (),
	free: Tuple[str, ...] = (),
	tilde: Tuple[int, ...] = (),
) -> CatalogRow:
	return CatalogRow(label, tag, build, sets, free, tilde)


# fmt: off
CATALOG_ROWS: Tuple[CatalogRow, ...] = (
	_row("L_1(0,0,0,0)", "I", lambda v: (0, 0, 0, 0)),
	_row("L_1(0,0,1,1)", "I", lambda v: (0, 0, 1, 1)),
	_row("L_1(0,1,0,0)", "I", lambda v: (0, 1, 0, 0)),
	_row("L_1(0,1,1,β)", "I", lambda v: (0, 1, 1, v["beta"]), free=("beta",)),
	_row("L_1(1,0,α,β)", "I", lambda v: (1, 0, v["alpha"], v["beta"]), free=("alpha", "beta")),
	_row("L_1(1,-2,5,5)", "I", lambda v: (1, -2, 5, 5)),
	_row("L_1(0,0,0,ε)", "I", lambda v: (0, 0, 0, v["eps"]), sets=(("eps", 3),), tilde=(3,)),
	_row("L_1(0,0,1,ε+1)", "I", lambda v: (0, 0, 1, v["eps"] + 1), sets=(("eps", 3),), tilde=(3,)),
	_row("L_1(1,-2,5,ε+5)", "I", lambda v: (1, -2, 5, v["eps"] + 5), sets=(("eps", 3),), tilde=(3,)),
	_row("L_1(1,-2,ν+5,β)", "I", lambda v: (1, -2, v["nu"] + 5, v["beta"]), sets=(("nu", 2),), free=("beta",)),
	_row("L_2(0,0,0,0)", "II", lambda v: (0, 0, 0, 0)),
	_row("L_2(0,0,1,0)", "II", lambda v: (0, 0, 1, 0)),
	_row("L_2(0,1,0,0)", "II", lambda v: (0, 1, 0, 0)),
	_row("L_2(0,1,1,0)", "II", lambda v: (0, 1, 1, 0)),
	_row("L_2(0,1,0,1)", "II", lambda v: (0, 1, 0, 1)),
	_row("L_2(1,0,0,0)", "II", lambda v: (1, 0, 0, 0)),
	_row("L_2(1,0,β,1)", "II", lambda v: (1, 0, v["beta"], 1), free=("beta",)),
	_row("L_2(1,0,ν,0)", "II", lambda v: (1, 0, v["nu"], 0), sets=(("nu", 2),)),
	_row("L_3(0,0,0,0,0,0)", "III", lambda v: (0, 0, 0, 0, 0, 0)),
	_row("L_3(1,0,0,0,0,0)", "III", lambda v: (1, 0, 0, 0, 0, 0)),
	_row("L_3(0,0,1,0,0,0)", "III", lambda v: (0, 0, 1, 0, 0, 0)),
	_row("L_3(0,0,0,0,1,0)", "III", lambda v: (0, 0, 0, 0, 1, 0)),
	_row("L_3(α,0,1,0,1,0)", "III", lambda v: (v["alpha"], 0, 1, 0, 1, 0), free=("alpha",)),
	_row("L_3(0,0,0,1,0,0)", "III", lambda v: (0, 0, 0, 1, 0, 0)),
	_row("L_3(0,0,0,0,0,1)", "III", lambda v: (0, 0, 0, 0, 0, 1)),
	_row("L_3(0,0,0,1,0,1)", "III", lambda v: (0, 0, 0, 1, 0, 1)),
	_row("L_3(1,0,0,0,0,1)", "III", lambda v: (1, 0, 0, 0, 0, 1)),
	_row("L_3(1,1,0,0,0,1)", "III", lambda v: (1, 1, 0, 0, 0, 1)),
	_row("L_3(α,β,ε,1,0,0)", "III", lambda v: (v["alpha"], v["beta"], v["eps"], 1, 0, 0), sets=(("eps", 3),), free=("alpha", "beta")),
	_row("L_3(0,ε,0,0,0,0)", "III", lambda v: (0, v["eps"], 0, 0, 0, 0), sets=(("eps", 3),)),
	_row("L_3(0,ε,0,0,1,0)", "III", lambda v: (0, v["eps"], 0, 0, 1, 0), sets=(("eps", 3),)),
	_row("L_3(α,ε,0,1,0,0)", "III", lambda v: (v["alpha"], v["eps"], 0, 1, 0, 0), sets=(("eps", 3),), free=("alpha",)),
	_row("L_3((ε-1)/ε,1,0,0,0,1)", "III", lambda v: ((v["eps"] - 1) / v["eps"], 1, 0, 0, 0, 1), sets=(("eps", 3),)),
	_row("L_3(α,0,ε,β,0,1)", "III", lambda v: (v["alpha"], 0, v["eps"], v["beta"], 0, 1), sets=(("eps", 3),), free=("alpha", "beta")),
	_row("L_3(ε,2ε,ε,0,0,1)", "III", lambda v: (v["eps"], 2 * v["eps"], v["eps"], 0, 0, 1), sets=(("eps", 3),)),
	_row("L_3(ε,2ε,ε,1,0,1)", "III", lambda v: (v["eps"], 2 * v["eps"], v["eps"], 1, 0, 1), sets=(("eps", 3),)),
	_row("L_3((ν-4ε²)/(4ε),2ε,ε,α,0,1)", "III", lambda v: ((v["nu"] - 4 * v["eps"] ** 2) / (4 * v["eps"]), 2 * v["eps"], v["eps"], v["alpha"], 0, 1), sets=(("eps", 3), ("nu", 2)), free=("alpha",)),
	_row("L_3(ξ,0,0,1,0,0)", "III", lambda v: (v["xi"], 0, 0, 1, 0, 0), sets=(("xi", 4),)),
	_row("L_3(α,1,0,ξ,0,1)", "III", lambda v: (v["alpha"], 1, 0, v["xi"], 0, 1), sets=(("xi", 4),), free=("alpha",)),
	_row("L_3(ζ,0,0,0,1,0)", "III", lambda v: (v["zeta"], 0, 0, 0, 1, 0), sets=(("zeta", 5),), tilde=(5,)),
	_row("L_3(ζ,0,0,1,0,1)", "III", lambda v: (v["zeta"], 0, 0, 1, 0, 1), sets=(("zeta", 5),), tilde=(5,)),
	_row("L_3(μ,0,1,0,0,0)", "III", lambda v: (v["mu"], 0, 1, 0, 0, 0), sets=(("mu", 6),)),
)
# fmt: on


def free_values(prime: int) -> Tuple[Fraction, ...]:
	"""Return the values free parameters α, β are sampled over."""
	return tuple(Fraction(value) for value in (*FREE_VALUES_EXTRA, prime))


def _set_values(
	row: CatalogRow, symbol: str, q: int, prime: int
) -> Tuple[Tuple[Fraction, ...], str]:
	if row.tilde and prime in row.tilde and symbol == row.sets[0][0]:
		tilde = build_tilde_set(prime)
		return tilde.elements, tilde.label
	rep_set = minimal_set(prime, q)
	return rep_set.elements, f"{rep_set.provenance.label} {rep_set.label}"


def instantiate_row(row: CatalogRow, prime: int) -> List[CatalogEntry]:
	"""Return every instance of a row over its sets and the free values."""
	axes: List[Tuple[str, Tuple[Fraction, ...]]] = []
	sources: Dict[str, str] = {}
	for symbol, q in row.sets:
		values, source = _set_values(row, symbol, q, prime)
		axes.append((symbol, values))
		sources[symbol] = source
	for symbol in row.free:
		axes.append((symbol, free_values(prime)))
		sources[symbol] = "free"
	entries = []
	for combination in product(*(values for _symbol, values in axes)):
		assignment = {symbol: value for (symbol, _values), value in zip(axes, combination)}
		params = tuple(Fraction(value) for value in row.build(assignment))
		entries.append(
			CatalogEntry(
				row.label,
				row.class_tag,
				params,
				structure_constants(row.class_tag, params, prime),
				sources,
			)
		)
	return entries


def classification_catalog(prime: int) -> List[CatalogEntry]:
	"""Instantiate every row of the six-dimensional classification list."""
	entries: List[CatalogEntry] = []
	for row in CATALOG_ROWS:
		entries.extend(instantiate_row(row, prime))
	dprint(f"catalog over Q_{prime}: {len(CATALOG_ROWS)} rows, {len(entries)} algebras")
	return entries


def parse_params(text: str) -> List[Fraction]:
	"""Parse a comma separated list of rationals."""
	return [parse_rational(part) for part in text.split(",") if part.strip()]
