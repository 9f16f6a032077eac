import json

import pytest

from spt_kernel.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestTable:
    def test_q8_mod5_row(self, capsys):
        code, out = run_cli(capsys, "table", "--order", "8", "--t", "5")
        assert code == 0
        assert "[5, 3, 2, 2, 3]" in out.splitlines()[-1]

    def test_row4_mod3(self, capsys):
        code, out = run_cli(capsys, "table", "--order", "4", "--t", "3")
        assert code == 0
        assert "[1, 1, 1]" in out.splitlines()[-1]

    def test_csv_format(self, capsys):
        code, out = run_cli(capsys, "table", "--order", "8", "--t", "5",
                            "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "n,spt2,class0,class1,class2,class3,class4"
        assert lines[-1] == "8,15,5,3,2,2,3"

    def test_json_exact_strings(self, capsys):
        code, out = run_cli(capsys, "table", "--order", "4", "--format", "json")
        rows = [json.loads(line) for line in out.strip().splitlines()]
        assert rows[-1]["spt2"] == "3"
        assert all(isinstance(r["spt2"], str) for r in rows)

    def test_order_zero_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--order", "0"])
        assert exc.value.code == 2


class TestVerify:
    def test_all_pass_exit_zero(self, capsys):
        code, out = run_cli(capsys, "verify", "--order", "24",
                            "--oracle-bound", "6", "--format", "json")
        assert code == 0
        reports = [json.loads(line) for line in out.strip().splitlines()]
        assert len(reports) == 7
        assert all(r["status"] == "pass" for r in reports)

    def test_only_filter(self, capsys):
        code, out = run_cli(capsys, "verify", "--order", "20",
                            "--only", "theorem1", "--format", "json")
        assert code == 0
        reports = [json.loads(line) for line in out.strip().splitlines()]
        assert [r["check"] for r in reports] == ["theorem1"]

    def test_unknown_check_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--only", "theorem9"])
        assert exc.value.code == 2

    def test_oracle_bound_guard(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--oracle-bound", "40"])
        assert exc.value.code == 2

    def test_byte_identical_runs(self, capsys):
        _, first = run_cli(capsys, "verify", "--order", "20",
                           "--oracle-bound", "5", "--format", "json")
        _, second = run_cli(capsys, "verify", "--order", "20",
                            "--oracle-bound", "5", "--format", "json")
        assert first == second


class TestExport:
    def test_a2_coefficients(self, capsys):
        code, out = run_cli(capsys, "export", "--what", "A2", "--order", "10",
                            "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[:3] == ["n,coefficient", "0,1", "1,2"]

    def test_spt2_csv(self, capsys):
        code, out = run_cli(capsys, "export", "--what", "spt2", "--order", "8",
                            "--format", "csv")
        lines = out.strip().splitlines()
        assert "4,3" in lines and "8,15" in lines

    def test_m2crank0_constant_term(self, capsys):
        code, out = run_cli(capsys, "export", "--what", "M2crank0",
                            "--order", "6", "--format", "csv")
        assert out.strip().splitlines()[1] == "0,1"

    def test_table_export_csv(self, capsys):
        code, out = run_cli(capsys, "export", "--what", "table", "--order", "8",
                            "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "n,m,coefficient"
        assert "8,0,5" in lines

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "a2.csv"
        code, _ = run_cli(capsys, "export", "--what", "A2", "--order", "5",
                          "--format", "csv", "--out", str(target))
        assert code == 0
        assert target.read_text().startswith("n,coefficient")

    def test_out_dir_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SPT_KERNEL_OUT_DIR", str(tmp_path))
        code, _ = run_cli(capsys, "export", "--what", "A2", "--order", "5",
                          "--format", "csv", "--out", "a2.csv")
        assert code == 0
        assert (tmp_path / "a2.csv").exists()

    def test_unwritable_path(self, capsys):
        code = main(["export", "--what", "A2", "--order", "5",
                     "--out", "/nonexistent-dir/a2.csv"])
        assert code == 1
