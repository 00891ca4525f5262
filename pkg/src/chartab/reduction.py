"""Reduction of cyclotomic integers to finite fields of characteristic p.

The target field is the residue field of a maximal ideal over p in the ring
of integers of Q(eps_e).  Concretely: strip the p-part of e to get m, take f
to be the multiplicative order of p mod m, build GF(p^f), and send eps to a
root eta of the e-th cyclotomic polynomial mod p.  Any eta of exact order m
works; the builder picks one deterministically and `candidate_roots` lists
them all so independence of the choice can be tested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, multiplicative_order
from .cyclo import Cyclotomic, cyclotomic_polynomial
from .errors import NonIntegralValueError, OrderMismatchError
from .finite_field import (
    ExtensionFieldElement,
    field_elements,
    field_generator,
    irreducible_polynomial,
)


@dataclass(frozen=True)
class ReductionMap:
    """Ring homomorphism data: integer coefficients mod p, eps -> eta."""

    e: int
    p: int
    m: int
    f: int
    poly: tuple[int, ...]
    eta: ExtensionFieldElement

    def zero(self) -> ExtensionFieldElement:
        return ExtensionFieldElement.zero(self.p, self.poly)

    def from_int(self, n: int) -> ExtensionFieldElement:
        return ExtensionFieldElement.from_int(self.p, self.poly, n)


def _phi_e_value(e: int, el: ExtensionFieldElement) -> ExtensionFieldElement:
    """Evaluate the e-th cyclotomic polynomial at a field element (Horner)."""
    coeffs = cyclotomic_polynomial(e)
    acc = ExtensionFieldElement.zero(el.p, el.poly)
    for c in reversed(coeffs):
        acc = acc * el + ExtensionFieldElement.from_int(el.p, el.poly, c)
    return acc


def _p_free_part(e: int, p: int) -> int:
    while e % p == 0:
        e //= p
    return e


def build_reduction(e: int, p: int) -> ReductionMap:
    """Deterministic reduction map for order e and prime p.

    eta is the first power of the field's smallest generator that has exact
    order m and kills the e-th cyclotomic polynomial.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"order must be positive, got {e}")
    m = _p_free_part(e, p)
    f = 1 if m == 1 else multiplicative_order(p, m)
    poly = irreducible_polynomial(p, f)
    gen = field_generator(p, poly)
    size = p**f
    cand = ExtensionFieldElement.one(p, poly)
    for _ in range(size - 1):
        if cand.multiplicative_order() == m and not _phi_e_value(e, cand):
            eta = cand
            break
        cand = cand * gen
    else:
        raise AssertionError("unreachable: a root of exact order m always exists")
    return ReductionMap(e=e, p=p, m=m, f=f, poly=poly, eta=eta)


def candidate_roots(e: int, p: int) -> list[ExtensionFieldElement]:
    """Every valid eta: elements of exact order m that are roots of Phi_e mod p."""
    base = build_reduction(e, p)
    out = []
    for el in field_elements(p, base.poly):
        if el and el.multiplicative_order() == base.m and not _phi_e_value(e, el):
            out.append(el)
    return out


def reduce_mod_M(z: Cyclotomic, rmap: ReductionMap) -> ExtensionFieldElement:
    """Apply the homomorphism to a cyclotomic integer (integer coefficients required)."""
    if z.e != rmap.e:
        raise OrderMismatchError(f"value of order {z.e} under a map for order {rmap.e}")
    if not z.is_integral():
        raise NonIntegralValueError(
            f"not an algebraic integer: coefficients {[str(c) for c in z.coeffs]}"
        )
    acc = rmap.zero()
    for c in reversed(z.coeffs):
        acc = acc * rmap.eta + rmap.from_int(int(c))
    return acc
