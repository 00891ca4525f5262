import pytest

from chartab.arith import prime_factors
from chartab.blocks import (
    alt_normalizer_report,
    central_character,
    is_p_element,
    principal_block_members,
    strunkov_analog_gamma,
)
from chartab.classfuncs import ClassFunction, from_character, pi_character, power
from chartab.cyclo import Cyclotomic
from chartab.errors import NonIntegralValueError
from chartab.reduction import ReductionMap, build_reduction, candidate_roots
from chartab.tables import Character

from conftest import ALL_GROUPS


@pytest.fixture()
def s3(group_factory, table_factory):
    group, cd = group_factory("S3")
    return group, cd, table_factory("S3"), build_reduction(group.exponent, 3)


class TestIsPElement:
    def test_identity_always(self, s3):
        _, _, table, rmap = s3
        assert is_p_element(0, 3, table, rmap)

    def test_three_cycles_are_3_elements(self, s3):
        _, cd, table, rmap = s3
        assert is_p_element(cd.sizes.index(2), 3, table, rmap)

    def test_transpositions_are_not(self, s3):
        _, cd, table, rmap = s3
        assert not is_p_element(cd.sizes.index(3), 3, table, rmap)

    @pytest.mark.parametrize("name", ALL_GROUPS)
    def test_congruence_equals_order_test(self, group_factory, table_factory, name):
        group, cd = group_factory(name)
        table = table_factory(name)
        for p in prime_factors(group.order):
            rmap = build_reduction(group.exponent, p)
            for i in range(cd.k):
                order = cd.rep_orders[i]
                while order % p == 0:
                    order //= p
                # is_p_element itself raises if the two tests disagree
                assert is_p_element(i, p, table, rmap) == (order == 1)


class TestCentralCharacter:
    def test_identity_class(self, s3):
        _, cd, table, _ = s3
        for row in table.rows:
            assert central_character(row, 0, cd) == 1

    def test_degree_two_at_three_cycles(self, s3):
        _, cd, table, _ = s3
        assert central_character(table.rows[2], cd.sizes.index(2), cd) == -1

    def test_sign_at_transpositions(self, s3):
        _, cd, table, _ = s3
        assert central_character(table.rows[1], cd.sizes.index(3), cd) == -3

    @pytest.mark.parametrize("name", ALL_GROUPS)
    def test_always_integral(self, group_factory, table_factory, name):
        _, cd = group_factory(name)
        table = table_factory(name)
        for row in table.rows:
            for i in range(cd.k):
                assert central_character(row, i, cd).is_integral()

    def test_non_integral_detected(self, s3):
        _, cd, table, _ = s3
        fake = Character(values=table.rows[0].values, degree=4)
        with pytest.raises(NonIntegralValueError):
            central_character(fake, cd.sizes.index(3), cd)


class TestPrincipalBlock:
    def test_s3_p3_contains_everything(self, s3):
        _, cd, table, _ = s3
        report = principal_block_members(table, cd, 3)
        assert report.members == (0, 1, 2)
        assert not report.failures

    def test_c2_p3_only_trivial(self, group_factory, table_factory):
        group, cd = group_factory("C2")
        table = table_factory("C2")
        report = principal_block_members(table, cd, 3)
        assert report.members == (0,)
        assert report.failures == ((1, 1),)

    @pytest.mark.parametrize("name", ALL_GROUPS)
    def test_trivial_character_always_member(self, group_factory, table_factory, name):
        group, cd = group_factory(name)
        table = table_factory(name)
        for p in (2, 3, 5, 7):
            report = principal_block_members(table, cd, p)
            assert report.member_flags[0]
            assert report.members

    def test_non_prime_rejected(self, s3):
        _, cd, table, _ = s3
        with pytest.raises(ValueError):
            principal_block_members(table, cd, 6)


class TestChoiceIndependence:
    @pytest.mark.parametrize("name", ALL_GROUPS)
    def test_verdicts_for_every_valid_root(self, group_factory, table_factory, name):
        group, cd = group_factory(name)
        table = table_factory(name)
        for p in prime_factors(group.order):
            base = build_reduction(group.exponent, p)
            if base.m > 12:
                continue
            reference_pel = [is_p_element(i, p, table, base) for i in range(cd.k)]
            reference_blk = principal_block_members(table, cd, p, base).member_flags
            for eta in candidate_roots(group.exponent, p):
                variant = ReductionMap(
                    e=base.e, p=base.p, m=base.m, f=base.f, poly=base.poly, eta=eta
                )
                pel = [is_p_element(i, p, table, variant) for i in range(cd.k)]
                blk = principal_block_members(table, cd, p, variant).member_flags
                assert pel == reference_pel
                assert blk == reference_blk


class TestStrunkovAnalog:
    def test_s3_counterexample_values(self, s3):
        _, cd, table, _ = s3
        values = [strunkov_analog_gamma(table, cd, 3, row) for row in table.rows]
        assert values == [153, 153, 279]
        assert all(v % 9 == 0 for v in values)

    def test_small_groups_cross_checked_naively(self, group_factory, table_factory):
        # groups with at most two classes also run the literal quadruple sum
        group, cd = group_factory("C2")
        table = table_factory("C2")
        values = [strunkov_analog_gamma(table, cd, 2, row) for row in table.rows]
        assert values == [8, 8]
        group_t, cd_t = group_factory("trivial")
        table_t = table_factory("trivial")
        assert strunkov_analog_gamma(table_t, cd_t, 2, table_t.rows[0]) == 1

    def test_empty_block_rejected(self, s3):
        _, cd, table, _ = s3
        with pytest.raises(ValueError):
            strunkov_analog_gamma(table, cd, 3, table.rows[0], block=())

    def test_explicit_block_override(self, s3):
        _, cd, table, _ = s3
        full = strunkov_analog_gamma(table, cd, 3, table.rows[0], block=(0, 1, 2))
        assert full == 153

    @pytest.mark.parametrize("name", ("trivial", "C2", "C3", "S3"))
    def test_factorization_identity_by_naive_expansion(
        self, group_factory, table_factory, name
    ):
        # sum over chi1, chi2, chi3 of |chi1 chi2|^2 |chi3|^2 equals pi^3
        group, cd = group_factory(name)
        table = table_factory(name)
        data = table.class_data
        rows = [from_character(table, r) for r in range(table.k)]
        conj = [
            ClassFunction(tuple(v.conjugate() for v in row.values), data)
            for row in table.rows
        ]
        acc = ClassFunction(
            tuple(Cyclotomic.zero(data.exponent) for _ in range(data.k)), data
        )
        for c1 in range(table.k):
            for c2 in range(table.k):
                norm12 = (rows[c1] * rows[c2]) * (conj[c1] * conj[c2])
                for c3 in range(table.k):
                    acc = acc + norm12 * (rows[c3] * conj[c3])
        assert acc == power(pi_character(cd), 3)


class TestAltNormalizerReport:
    def test_s3_p3(self, s3):
        _, cd, table, _ = s3
        report = alt_normalizer_report(table, cd, 3)
        assert report.gamma_values == (153, 153, 279)
        assert report.p_times_order_p_part == 9
        assert report.block_degree_sum == 6
        assert report.block_degree_sum_p_part == 3
        assert all(report.divisible_by_p_times_p_part)

    def test_d12_report_is_exploratory(self, group_factory, table_factory):
        group, cd = group_factory("D12")
        table = table_factory("D12")
        report = alt_normalizer_report(table, cd, 3)
        assert len(report.gamma_values) == table.k
        assert len(report.divisible_by_degree_sum) == table.k
        data = report.as_dict()
        assert set(data["divisibility"]) == {
            "p_times_order_p_part", "block_degree_sum", "block_degree_sum_p_part",
        }

    def test_trivial_group(self, group_factory, table_factory):
        group, cd = group_factory("trivial")
        table = table_factory("trivial")
        report = alt_normalizer_report(table, cd, 2)
        assert report.gamma_values == (1,)
        assert report.block == (0,)
