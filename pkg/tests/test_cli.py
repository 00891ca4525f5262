import json
import subprocess
import sys

from chartab.cli import main


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestClasses:
    def test_s3_sizes(self, capsys):
        code, report = run_json(capsys, ["classes", "--group", "S3"])
        assert code == 0
        assert report["results"]["sizes"] == [1, 2, 3]
        assert report["group"] == "S3"
        assert report["order"] == 6

    def test_report_shape(self, capsys):
        _, report = run_json(capsys, ["classes", "--group", "C4"])
        for key in ("command", "group", "order", "table_provenance", "inputs",
                    "results", "verdicts"):
            assert key in report

    def test_spec_file_source(self, capsys, tmp_path):
        spec = {"name": "C7", "degree": 7, "generators": ["(1 2 3 4 5 6 7)"]}
        path = tmp_path / "c7.json"
        path.write_text(json.dumps(spec))
        code, report = run_json(capsys, ["classes", "--spec-file", str(path)])
        assert code == 0
        assert report["order"] == 7
        assert report["results"]["sizes"] == [1] * 7


class TestTable:
    def test_json_report_contains_table(self, capsys):
        code, report = run_json(capsys, ["table", "--group", "S3"])
        assert code == 0
        assert report["results"]["degrees"] == [1, 1, 2]
        assert report["table_provenance"] == "computed (dixon prime 7)"

    def test_save_and_reload(self, capsys, tmp_path):
        path = tmp_path / "s3.json"
        code, _ = run_json(capsys, ["table", "--group", "S3", "--save", str(path)])
        assert code == 0 and path.exists()
        code, report = run_json(
            capsys, ["table", "--group", "S3", "--table-file", str(path)]
        )
        assert code == 0
        assert report["table_provenance"].startswith("file sha256:")

    def test_table_file_for_wrong_group_rejected(self, capsys, tmp_path):
        path = tmp_path / "s3.json"
        run_json(capsys, ["table", "--group", "S3", "--save", str(path)])
        code = main(["table", "--group", "C6", "--table-file", str(path)])
        capsys.readouterr()
        assert code == 4

    def test_human_rendering(self, capsys):
        code = main(["table", "--group", "S3", "--human"])
        out = capsys.readouterr().out
        assert code == 0
        assert "X0" in out and "class sizes" in out


class TestGamma:
    def test_values(self, capsys):
        code, report = run_json(capsys, ["gamma", "--group", "S3", "-n", "2"])
        assert code == 0
        assert report["results"]["gamma"] == [11, 7, 9]
        assert report["results"]["delta"] == [11, 7, 9]

    def test_bad_n(self, capsys):
        code = main(["gamma", "--group", "S3", "-n", "0"])
        capsys.readouterr()
        assert code == 5


class TestRecover:
    def test_round_trip_verdict(self, capsys):
        code, report = run_json(capsys, ["recover", "--group", "S4"])
        assert code == 0
        assert report["verdicts"]["matches_group"] is True
        assert report["results"]["sequence"][0] == 5  # class count

    def test_real_variant(self, capsys):
        code, report = run_json(capsys, ["recover", "--group", "C4", "--real"])
        assert code == 0
        assert report["results"]["recovered_spectrum"] == [[1, 2]]


class TestDefect:
    def test_s3(self, capsys):
        code, report = run_json(capsys, ["defect", "--group", "S3", "-p", "3", "-n", "2"])
        assert code == 0
        assert report["verdicts"] == {
            "character_side": True, "direct_side": True, "agree": True,
        }

    def test_non_prime_exit_code(self, capsys):
        code = main(["defect", "--group", "S3", "-p", "4", "-n", "2"])
        capsys.readouterr()
        assert code == 5


class TestPElements:
    def test_s4_p2(self, capsys):
        code, report = run_json(capsys, ["pelements", "--group", "S4", "-p", "2"])
        assert code == 0
        assert report["verdicts"]["tests_agree"] is True
        assert report["results"]["congruence_test"] == report["results"]["direct_order_test"]


class TestBlocks:
    def test_s3_p3(self, capsys):
        code, report = run_json(capsys, ["blocks", "--group", "S3", "-p", "3"])
        assert code == 0
        assert report["results"]["members"] == [0, 1, 2]
        assert report["verdicts"]["all_characters_in_block"] is True


class TestCounterexample:
    def test_s3_p3(self, capsys):
        code, report = run_json(capsys, ["counterexample", "--group", "S3", "-p", "3"])
        assert code == 0
        assert report["results"]["gamma_psi"] == [153, 153, 279]
        assert report["results"]["modulus"] == 9
        assert report["verdicts"]["all_divisible"] is True

    def test_alt_normalizer(self, capsys):
        code, report = run_json(
            capsys, ["counterexample", "--group", "D12", "-p", "3", "--alt-normalizer"]
        )
        assert code == 0
        assert "divisibility" in report["results"]


class TestErrors:
    def test_unknown_group(self, capsys):
        code = main(["classes", "--group", "M11"])
        err = capsys.readouterr().err
        assert code == 3
        assert "unknown group" in err

    def test_malformed_spec_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"name": "bad", "degree": 3, "generators": ["(1 2"]}')
        code = main(["classes", "--spec-file", str(path)])
        capsys.readouterr()
        assert code == 4

    def test_cap_exceeded(self, capsys, tmp_path):
        path = tmp_path / "s4.json"
        path.write_text(
            '{"name": "S4", "degree": 4, "generators": ["(1 2)", "(1 2 3 4)"]}'
        )
        code = main(["classes", "--spec-file", str(path), "--cap", "10"])
        capsys.readouterr()
        assert code == 6

    def test_corrupt_table_file(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("[1, 2, 3]")
        code = main(["table", "--group", "S3", "--table-file", str(path)])
        capsys.readouterr()
        assert code == 4


class TestVerify:
    def test_single_group_passes(self, capsys):
        code, report = run_json(capsys, ["verify", "--group", "S3"])
        assert code == 0
        assert report["verdicts"]["all_passed"] is True
        assert all(check["ok"] for check in report["checks"])

    def test_output_reproducible(self, capsys):
        main(["verify", "--group", "C6"])
        first = capsys.readouterr().out
        main(["verify", "--group", "C6"])
        second = capsys.readouterr().out
        assert first == second

    def test_human_lines(self, capsys):
        code = main(["verify", "--group", "C2", "--human"])
        out = capsys.readouterr().out
        assert code == 0
        assert "PASS C2" in out
        assert "all checks passed" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chartab", "classes", "--group", "C2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["order"] == 2
