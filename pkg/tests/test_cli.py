"""Command-line surface: exit codes, round-trips, tables."""

import json

import pytest

from gallaistar.cli import main
from gallaistar.constructions import pentagon_coloring


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_c4_certificate(self, capsys, tmp_path):
        out = tmp_path / "cert.json"
        dot = tmp_path / "cert.dot"
        code, _, _ = run(capsys, "construct", "c4", "--k", "5",
                         "--out", str(out), "--dot", str(dot))
        assert code == 0
        data = json.loads(out.read_text())
        assert data["counts"]["actual_vertices"] == 8
        assert data["verdicts"]["rainbow_free"]
        assert all(data["verdicts"]["target_free"])
        assert data["manifest"]["version"]
        assert "--" in dot.read_text()

    def test_star_certificate(self, capsys):
        code, stdout, _ = run(capsys, "construct", "star", "--m", "3",
                              "--k", "3")
        assert code == 0
        data = json.loads(stdout)
        assert data["host"] == "K5"

    def test_blowup(self, capsys, tmp_path):
        outer = tmp_path / "outer.txt"
        inner = tmp_path / "inner.txt"
        outer.write_text("K2 2\n0 1 1\n")
        inner.write_text("K2 2\n0 1 2\n")
        code, stdout, _ = run(capsys, "construct", "blowup",
                              "--outer", str(outer), "--inner", str(inner))
        assert code == 0
        assert json.loads(stdout)["host"] == "K4"

    def test_clone(self, capsys, tmp_path):
        base = tmp_path / "pent.txt"
        base.write_text(pentagon_coloring().to_text())
        code, stdout, _ = run(capsys, "construct", "clone",
                              "--coloring", str(base), "--u", "0",
                              "--target", "K3")
        assert code == 0
        data = json.loads(stdout)
        assert data["counts"]["actual_star"] == 4

    def test_bad_parameter_exit(self, capsys):
        code, _, err = run(capsys, "construct", "c4", "--k", "1")
        assert code == 2 and "error" in err

    def test_missing_input_exit(self, capsys):
        code, _, _ = run(capsys, "construct", "clone", "--u", "0")
        assert code == 2


class TestVerify:
    def test_certificate_roundtrip(self, capsys, tmp_path):
        out = tmp_path / "cert.json"
        run(capsys, "construct", "p4-ext", "--k", "3", "--out", str(out))
        code, stdout, _ = run(capsys, "verify", str(out), "--target", "P4",
                              "--gallai")
        assert code == 0
        assert "verdict: PASS" in stdout
        assert "rainbow-triangle: none" in stdout

    def test_rainbow_reported(self, capsys, tmp_path):
        f = tmp_path / "rb.txt"
        f.write_text("K3 3\n0 1 1\n0 2 2\n1 2 3\n")
        code, stdout, _ = run(capsys, "verify", str(f))
        assert code == 3
        assert "vertices (0, 1, 2)" in stdout

    def test_mono_reported(self, capsys, tmp_path):
        f = tmp_path / "mono.txt"
        lines = ["K5 1"] + [f"{u} {v} 1" for u in range(5)
                            for v in range(u + 1, 5)]
        f.write_text("\n".join(lines) + "\n")
        code, stdout, _ = run(capsys, "verify", str(f), "--target", "C4")
        assert code == 3
        assert "embedding" in stdout

    def test_gallai_partition_report(self, capsys, tmp_path):
        f = tmp_path / "pent.txt"
        f.write_text(pentagon_coloring().to_text())
        code, stdout, _ = run(capsys, "verify", str(f), "--gallai",
                              "--minimal")
        assert code == 0
        assert "mode=exhaustive" in stdout

    def test_parse_failure_exit(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("garbage\n")
        code, _, err = run(capsys, "verify", str(f))
        assert code == 2


class TestTables:
    def test_path_star_critical_values(self, capsys):
        code, stdout, _ = run(capsys, "table", "thm3", "--k", "1..3")
        assert code == 0
        for k in (1, 2, 3):
            assert f"gr*_{k}(P4)" in stdout
        assert "NO" not in stdout

    def test_path_threshold_values(self, capsys):
        code, stdout, _ = run(capsys, "table", "lemma5", "--k", "1..3")
        assert code == 0 and stdout.count("computed") == 3

    def test_star_value(self, capsys):
        code, stdout, _ = run(capsys, "table", "thm4", "--m", "3", "--k", "3")
        assert code == 0 and "gr*_3(K1_3)" in stdout

    def test_two_color_row(self, capsys):
        code, stdout, _ = run(capsys, "table", "lemma3")
        assert code == 0 and stdout.count("yes") == 3

    def test_budget_marks_witness_only(self, capsys):
        code, stdout, _ = run(capsys, "table", "lemma4", "--k", "3",
                              "--nodes", "50")
        assert code == 0
        assert "witness-only" in stdout

    def test_json_output(self, capsys, tmp_path):
        out = tmp_path / "rows.json"
        code, _, _ = run(capsys, "table", "thm2", "--k", "2", "--out",
                         str(out))
        assert code == 0
        rows = json.loads(out.read_text())
        assert rows[0]["value"] == 5


class TestUsage:
    def test_unknown_table(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "nonsense"])
        assert exc.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
