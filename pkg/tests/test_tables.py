import json

import pytest

from chartab.cyclo import Cyclotomic, root_power
from chartab.errors import FormatError, TableIntegrityError
from chartab.tables import (
    Character,
    CharacterTable,
    compute_table,
    dixon_prime,
    load_table,
    save_table,
    table_to_dict,
    verify_orthogonality,
)

from conftest import ALL_GROUPS


class TestDixonPrime:
    def test_s3(self):
        assert dixon_prime(6, 6) == 7

    def test_a5(self):
        assert dixon_prime(30, 60) == 31

    def test_trivial(self):
        assert dixon_prime(1, 1) == 3

    def test_congruence_and_size(self):
        for e, order in ((6, 6), (12, 24), (30, 60), (60, 120), (4, 8)):
            q = dixon_prime(e, order)
            assert q % e == 1
            assert q * q > 4 * order
            assert order % q != 0

    def test_next_admissible(self):
        q1 = dixon_prime(6, 6)
        q2 = dixon_prime(6, 6, above=q1)
        assert q2 > q1 and q2 % 6 == 1

    def test_divisor_skipped(self):
        # for the cyclic group of order 7 the first candidate 7 divides the order
        assert dixon_prime(7, 7) == 29


class TestComputeTable:
    def test_c2_rows(self, table_factory):
        table = table_factory("C2")
        one = Cyclotomic.one(2)
        assert table.rows[0].values == (one, one)
        assert table.rows[1].values == (one, -one)

    def test_s3(self, table_factory):
        table = table_factory("S3")
        assert table.degrees == (1, 1, 2)
        expected = [
            [1, 1, 1],
            [1, 1, -1],
            [2, -1, 0],
        ]
        for row, exp in zip(table.rows, expected):
            assert [v for v in row.values] == [Cyclotomic.from_rational(6, x) for x in exp]

    def test_a5_degrees(self, table_factory):
        table = table_factory("A5")
        assert table.degrees == (1, 3, 3, 4, 5)

    def test_c4_has_imaginary_values(self, table_factory):
        table = table_factory("C4")
        i = root_power(4, 1)
        found = {v for row in table.rows for v in row.values}
        assert i in found and -i in found

    @pytest.mark.parametrize("name", ALL_GROUPS)
    def test_sum_of_squared_degrees(self, group_factory, table_factory, name):
        group, _ = group_factory(name)
        table = table_factory(name)
        assert sum(d * d for d in table.degrees) == group.order

    @pytest.mark.parametrize("name", ALL_GROUPS)
    def test_row_zero_trivial_and_degrees_divide(self, table_factory, name):
        table = table_factory(name)
        assert all(v == 1 for v in table.rows[0].values)
        for row in table.rows:
            assert row.degree >= 1 and table.order % row.degree == 0

    @pytest.mark.parametrize("name", ALL_GROUPS)
    def test_values_are_algebraic_integers(self, table_factory, name):
        table = table_factory(name)
        for row in table.rows:
            for v in row.values:
                assert v.is_integral()

    @pytest.mark.parametrize("name", ("trivial", "C4", "S3", "Q8", "A4"))
    def test_prime_independence_small(self, group_factory, table_factory, name):
        group, cd = group_factory(name)
        table = table_factory(name)
        q1 = dixon_prime(group.exponent, group.order)
        q2 = dixon_prime(group.exponent, group.order, above=q1)
        assert compute_table(group, cd, prime=q2) == table

    def test_identity_column_is_degrees(self, table_factory):
        table = table_factory("S4")
        assert tuple(v for v in (row.values[0] for row in table.rows)) == tuple(
            Cyclotomic.from_rational(12, d) for d in table.degrees
        )


class TestOrthogonality:
    @pytest.mark.parametrize("name", ("S3", "C4", "Q8", "A5"))
    def test_computed_tables_clean(self, table_factory, name):
        assert verify_orthogonality(table_factory(name)) == []

    def test_scaled_row_reported(self, table_factory):
        table = table_factory("S3")
        bad_rows = list(table.rows)
        bad_rows[2] = Character(
            values=tuple(v * 2 for v in bad_rows[2].values),
            degree=bad_rows[2].degree * 2,
        )
        bad = CharacterTable(
            group_name=table.group_name,
            order=table.order,
            exponent=table.exponent,
            class_sizes=table.class_sizes,
            rep_orders=table.rep_orders,
            inverse_class=table.inverse_class,
            power_map=table.power_map,
            rows=tuple(bad_rows),
        )
        violations = verify_orthogonality(bad)
        assert any(v["kind"] == "row" and v["first"] == 2 == v["second"] for v in violations)


class TestTableFiles:
    def test_round_trip(self, table_factory, tmp_path):
        for name in ("S3", "C4", "A5"):
            table = table_factory(name)
            path = tmp_path / f"{name}.json"
            save_table(table, path)
            loaded = load_table(path)
            assert loaded == table
            assert loaded.provenance.startswith("file sha256:")

    def test_duplicated_row_rejected(self, table_factory, tmp_path):
        data = table_to_dict(table_factory("S3"))
        data["rows"][2] = data["rows"][1]
        path = tmp_path / "dup.json"
        path.write_text(json.dumps(data))
        with pytest.raises(TableIntegrityError):
            load_table(path)

    def test_non_canonical_value_rejected(self, table_factory, tmp_path):
        data = table_to_dict(table_factory("S3"))
        data["rows"][0][0] = {"e": 6, "num": [2, 0], "den": [2, 1]}
        path = tmp_path / "noncanon.json"
        path.write_text(json.dumps(data))
        with pytest.raises(FormatError):
            load_table(path)

    def test_wrong_field_order_rejected(self, table_factory, tmp_path):
        data = table_to_dict(table_factory("S3"))
        data["rows"][0][1] = {"e": 12, "num": [1, 0, 0, 0], "den": [1, 1, 1, 1]}
        path = tmp_path / "wrongorder.json"
        path.write_text(json.dumps(data))
        with pytest.raises(FormatError):
            load_table(path)

    def test_missing_key_rejected(self, table_factory, tmp_path):
        data = table_to_dict(table_factory("S3"))
        del data["power_map"]
        path = tmp_path / "missing.json"
        path.write_text(json.dumps(data))
        with pytest.raises(FormatError):
            load_table(path)

    def test_not_json_rejected(self, tmp_path):
        path = tmp_path / "garbage.json"
        path.write_text("not json at all")
        with pytest.raises(FormatError):
            load_table(path)

    def test_loaded_table_usable_without_engine(self, table_factory, tmp_path):
        # the verifier side works from the file alone
        path = tmp_path / "q8.json"
        save_table(table_factory("Q8"), path)
        loaded = load_table(path)
        assert verify_orthogonality(loaded) == []
        assert loaded.degrees == (1, 1, 1, 1, 2)
