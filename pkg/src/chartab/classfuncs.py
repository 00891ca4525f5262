"""Class functions and multiplicity sequences.

The two distinguished class functions here are the character pi of the group
acting on itself by conjugation, whose value on a class is the centralizer
order, and psi, the sum of the squares of the irreducible characters, which
equals the centralizer order on real classes and vanishes elsewhere.
Multiplicities of irreducibles in powers of pi and psi are always computed
twice, once as an inner product and once by the weighted row-sum formula, and
the two results are required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyclotomic, as_rational_integer
from .errors import ClassDataMismatchError, TableIntegrityError
from .groups import ClassData, ConjugacyData
from .tables import Character, CharacterTable


@dataclass(frozen=True)
class ClassFunction:
    """One cyclotomic value per conjugacy class."""

    values: tuple[Cyclotomic, ...]
    data: ClassData

    def __post_init__(self):
        if len(self.values) != self.data.k:
            raise ValueError(f"expected {self.data.k} values, got {len(self.values)}")

    def _check(self, other: "ClassFunction") -> None:
        if self.data != other.data:
            raise ClassDataMismatchError("class functions over different class data")

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(
                tuple(a * b for a, b in zip(self.values, other.values)), self.data
            )
        if isinstance(other, (int, Fraction)):
            return ClassFunction(tuple(v * other for v in self.values), self.data)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        self._check(other)
        return ClassFunction(
            tuple(a + b for a, b in zip(self.values, other.values)), self.data
        )


def _class_data_of(source) -> ClassData:
    if isinstance(source, ClassData):
        return source
    return source.class_data


def all_ones(source) -> ClassFunction:
    data = _class_data_of(source)
    return ClassFunction(tuple(Cyclotomic.one(data.exponent) for _ in range(data.k)), data)


def from_character(table: CharacterTable, row: int) -> ClassFunction:
    return ClassFunction(table.rows[row].values, table.class_data)


def pi_character(cd: ConjugacyData | ClassData) -> ClassFunction:
    """The conjugation character: centralizer order on each class."""
    data = _class_data_of(cd)
    return ClassFunction(
        tuple(Cyclotomic.from_rational(data.exponent, c) for c in data.centralizer_orders),
        data,
    )


def _psi_reference(data: ClassData) -> ClassFunction:
    """Case-split form of psi: centralizer order on real classes, 0 otherwise."""
    return ClassFunction(
        tuple(
            Cyclotomic.from_rational(data.exponent, c if real else 0)
            for c, real in zip(data.centralizer_orders, data.real_flags)
        ),
        data,
    )


def psi_character(table: CharacterTable) -> ClassFunction:
    """Sum of the squared irreducible characters, verified against its case split."""
    data = table.class_data
    total = ClassFunction(
        tuple(Cyclotomic.zero(data.exponent) for _ in range(data.k)), data
    )
    for row in table.rows:
        sq = ClassFunction(tuple(v * v for v in row.values), data)
        total = total + sq
    if total != _psi_reference(data):
        raise TableIntegrityError(
            "sum of squared characters is not centralizer-on-real-classes"
        )
    return total


def pointwise(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return a * b


def power(a: ClassFunction, n: int) -> ClassFunction:
    """n-th pointwise power; power(a, 0) is the all-ones function."""
    if n < 0:
        raise ValueError(f"power must be non-negative, got {n}")
    out = all_ones(a.data)
    for _ in range(n):
        out = out * a
    return out


def inner(phi: ClassFunction, theta: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over classes of |K| phi(g_K) conj(theta(g_K)), exactly."""
    phi._check(theta)
    data = phi.data
    total = Cyclotomic.zero(data.exponent)
    for size, a, b in zip(data.sizes, phi.values, theta.values):
        total = total + size * (a * b.conjugate())
    return total * Fraction(1, data.order)


def _values_of(phi) -> tuple[Cyclotomic, ...]:
    if isinstance(phi, (Character, ClassFunction)):
        return phi.values
    raise TypeError(f"expected a Character or ClassFunction, got {type(phi)!r}")


def _multiplicity(phi, cd, n: int, real_only: bool) -> int:
    data = _class_data_of(cd)
    values = _values_of(phi)
    base = _psi_reference(data) if real_only else pi_character(data)
    phi_cf = ClassFunction(values, data)
    by_inner = inner(phi_cf, power(base, n))
    by_rows = Cyclotomic.zero(data.exponent)
    for i in range(data.k):
        if real_only and not data.real_flags[i]:
            continue
        weight = data.centralizer_orders[i] ** (n - 1)
        by_rows = by_rows + weight * values[i]
    if by_inner != by_rows:
        raise TableIntegrityError(
            "inner-product and row-sum multiplicities disagree (corrupt input)"
        )
    result = as_rational_integer(by_inner)
    if result < 0:
        raise TableIntegrityError(f"multiplicity {result} is negative (corrupt input)")
    return result


def gamma(n: int, phi, cd: ConjugacyData | ClassData) -> int:
    """Multiplicity of phi in the n-th power of the conjugation character."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return _multiplicity(phi, cd, n, real_only=False)


def delta(n: int, phi, cd: ConjugacyData | ClassData) -> int:
    """Multiplicity of phi in the n-th power of the squared-character sum."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return _multiplicity(phi, cd, n, real_only=True)


def row_sums(phi, cd: ConjugacyData | ClassData) -> tuple[int, int]:
    """(sum over all classes, sum over real classes) of the character values.

    These are the multiplicities of phi in pi and in psi, and both identities
    are re-checked against the inner products.
    """
    data = _class_data_of(cd)
    values = _values_of(phi)
    full = Cyclotomic.zero(data.exponent)
    real = Cyclotomic.zero(data.exponent)
    for i, v in enumerate(values):
        full = full + v
        if data.real_flags[i]:
            real = real + v
    phi_cf = ClassFunction(values, data)
    if inner(phi_cf, pi_character(data)) != full:
        raise TableIntegrityError("row sum differs from the inner product with pi")
    if inner(phi_cf, _psi_reference(data)) != real:
        raise TableIntegrityError("real row sum differs from the inner product with psi")
    return as_rational_integer(full), as_rational_integer(real)
