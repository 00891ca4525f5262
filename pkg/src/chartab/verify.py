"""One-shot verification suite over the group catalog.

Runs every exact check the package promises, in a fixed order, and reports
one result line per (group, check).  Used by the `verify` CLI subcommand; the
pytest suite covers the same ground with finer-grained assertions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, prime_factors
from .blocks import (
    alt_normalizer_report,
    is_p_element,
    principal_block_members,
    strunkov_analog_gamma,
)
from .classfuncs import (
    ClassFunction,
    delta,
    from_character,
    gamma,
    pi_character,
    pointwise,
    power,
    psi_character,
    row_sums,
)
from .cyclo import Cyclotomic, as_rational_integer
from .duality import (
    SizeSpectrum,
    defect_zero_by_characters,
    delta_sequence,
    gamma_sequence,
    recover_class_sizes,
    recover_real_class_sizes,
)
from .groups import (
    ConjugacyData,
    Group,
    class_mult_coefficients,
    conjugacy_data,
    count_commutator_solutions,
    enumerate_group,
    load_catalog,
)
from .reduction import ReductionMap, build_reduction, candidate_roots
from .tables import CharacterTable, compute_table, dixon_prime, verify_orthogonality


@dataclass(frozen=True)
class CheckResult:
    group: str
    check: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        out = {"group": self.group, "check": self.check, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


def _check_class_structure(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    if sum(cd.sizes) != group.order:
        return "class sizes do not sum to the group order"
    for i in range(cd.k):
        if cd.sizes[i] * cd.centralizer_orders[i] != group.order:
            return f"size * centralizer mismatch at class {i}"
        if cd.power_class(i, 1) != i or cd.power_class(i, group.exponent) != 0:
            return f"power map inconsistent at class {i}"
        if cd.real_flags[i] != (cd.inverse_class[i] == i):
            return f"real flag inconsistent at class {i}"
    for i in range(cd.k):
        for j in range(cd.k):
            coeffs = class_mult_coefficients(cd, i, j)
            lhs = sum(a * s for a, s in zip(coeffs, cd.sizes))
            if lhs != cd.sizes[i] * cd.sizes[j]:
                return f"class multiplication counting identity fails at ({i}, {j})"
    return ""


def _check_determinism(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    spec = load_catalog()[group.name]
    again = enumerate_group(spec)
    if again.elements != group.elements:
        return "element ordering changed between runs"
    cd2 = conjugacy_data(again)
    if (cd2.class_of, cd2.sizes, cd2.power_map) != (cd.class_of, cd.sizes, cd.power_map):
        return "class data changed between runs"
    return ""


def _check_table(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    violations = verify_orthogonality(table)
    if violations:
        return f"orthogonality violations: {violations[:2]}"
    if sum(d * d for d in table.degrees) != group.order:
        return "sum of squared degrees is off"
    if not all(v == 1 for v in table.rows[0].values):
        return "row 0 is not trivial"
    for row in table.rows:
        if not all(v.is_integral() for v in row.values):
            return "non-integral character value"
    q1 = dixon_prime(group.exponent, group.order)
    q2 = dixon_prime(group.exponent, group.order, above=q1)
    if compute_table(group, cd, prime=q2) != table:
        return f"table changed between primes {q1} and {q2}"
    return ""


def _check_identities(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    data = table.class_data
    pi = pi_character(cd)
    zero = ClassFunction(
        tuple(Cyclotomic.zero(group.exponent) for _ in range(cd.k)), data
    )
    total = zero
    for i, row in enumerate(table.rows):
        conj_row = ClassFunction(tuple(v.conjugate() for v in row.values), data)
        total = total + from_character(table, i) * conj_row
    if total != pi:
        return "pi is not the sum of chi * conj(chi)"
    psi = psi_character(table)  # raises on a case-split failure
    for n in range(0, 4):
        for m in range(1, 4):
            if pointwise(power(pi, n), power(psi, m)) != power(psi, n + m):
                return f"pi^{n} psi^{m} != psi^{n + m}"
    for i, row in enumerate(table.rows):
        full, real = row_sums(row, cd)  # re-checks the inner products internally
        for n in range(1, 4):
            gamma(n, row, cd)  # dual-path equality is asserted inside
            delta(n, row, cd)
        for n in range(4, 6):
            if gamma(n, row, cd) < 0 or delta(n, row, cd) < 0:
                return f"negative multiplicity for row {i} at n={n}"
    for n in range(1, 4):
        acc = zero
        for i, row in enumerate(table.rows):
            acc = acc + gamma(n, row, cd) * from_character(table, i)
        if acc != power(pi, n):
            return f"pi^{n} does not re-expand from its multiplicities"
    return ""


def _check_recovery(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    d = len(divisors(group.order))
    seq = gamma_sequence(table, cd, d + 3)
    actual = SizeSpectrum.from_sizes(group.order, cd.sizes)
    for length in range(d, d + 4):
        if recover_class_sizes(seq[:length], group.order) != actual:
            return f"class-size recovery failed with {length} terms"
    dseq = delta_sequence(table, cd, d + 3)
    real_actual = SizeSpectrum.from_sizes(
        group.order, [s for s, r in zip(cd.sizes, cd.real_flags) if r]
    )
    for length in range(d, d + 4):
        if recover_real_class_sizes(dseq[:length], group.order) != real_actual:
            return f"real class-size recovery failed with {length} terms"
    return ""


def _check_defect(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    for p in prime_factors(group.order):
        for n in (2, 3):
            for real in (False, True):
                report = defect_zero_by_characters(table, cd, p, n, real)
                if report.character_side != report.direct_side:
                    return f"biconditional fails for p={p}, n={n}, real={real}"
    return ""


def _check_congruences(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    for p in prime_factors(group.order):
        rmap = build_reduction(group.exponent, p)
        for i in range(cd.k):
            is_p_element(i, p, table, rmap)  # raises on criterion disagreement
        block = principal_block_members(table, cd, p)
        if not block.members or not block.member_flags[0]:
            return f"principal block broken for p={p}"
        if rmap.m <= 12:
            for eta in candidate_roots(group.exponent, p):
                variant = ReductionMap(
                    e=rmap.e, p=rmap.p, m=rmap.m, f=rmap.f, poly=rmap.poly, eta=eta
                )
                pel = [is_p_element(i, p, table, variant) for i in range(cd.k)]
                if pel != [is_p_element(i, p, table, rmap) for i in range(cd.k)]:
                    return f"p-element verdicts depend on the root choice for p={p}"
                if (
                    principal_block_members(table, cd, p, variant).member_flags
                    != block.member_flags
                ):
                    return f"block membership depends on the root choice for p={p}"
    return ""


def _check_commutator_oracle(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    for n in (1, 2):
        cap = 24 if n == 1 else 12
        if group.order > cap:
            continue
        for c, rep in enumerate(cd.representatives):
            brute = count_commutator_solutions(group, group.elements[rep], n)
            total = Cyclotomic.zero(group.exponent)
            for row in table.rows:
                total = total + row.values[c] * Fraction(1, row.degree ** (2 * n - 1))
            formula = as_rational_integer(total * group.order ** (2 * n - 1))
            if brute != formula:
                return f"commutator count mismatch at class {c}, n={n}"
    return ""


def _check_counterexample(group: Group, cd: ConjugacyData, table: CharacterTable) -> str:
    # the S3 / p=3 block-sum computation; exploratory elsewhere
    if group.name != "S3":
        return ""
    values = [strunkov_analog_gamma(table, cd, 3, row) for row in table.rows]
    if sorted(values) != [153, 153, 279]:
        return f"block-sum values changed: {values}"
    if any(v % 9 for v in values):
        return "block-sum values are not all divisible by 9"
    alt_normalizer_report(table, cd, 3)  # must at least build
    return ""


_CHECKS = (
    ("class-structure", _check_class_structure),
    ("determinism", _check_determinism),
    ("table-integrity", _check_table),
    ("identities", _check_identities),
    ("size-recovery", _check_recovery),
    ("defect-biconditional", _check_defect),
    ("mod-M-congruences", _check_congruences),
    ("commutator-oracle", _check_commutator_oracle),
    ("block-counterexample", _check_counterexample),
)


def verify_catalog(names=None) -> list[CheckResult]:
    """Run every check over the named groups (default: the whole catalog)."""
    specs = load_catalog()
    if names is None:
        names = list(specs)
    results = []
    for name in names:
        group = enumerate_group(specs[name])
        cd = conjugacy_data(group)
        table = compute_table(group, cd)
        for check_name, fn in _CHECKS:
            try:
                detail = fn(group, cd, table)
            except Exception as exc:  # a raising check is a failing check
                detail = f"{type(exc).__name__}: {exc}"
            results.append(
                CheckResult(group=name, check=check_name, ok=not detail, detail=detail)
            )
    return results
