import pytest

from provtrace.cli import cli_main


class TestSimulate:
    def test_writes_expected_rows(self, tmp_path, capsys):
        out = tmp_path / "fig4.csv"
        code = cli_main([
            "simulate", "--nodes", "6", "--hops", "3", "--sig-len-list", "8,12",
            "--list-size", "2", "--algorithms", "omp,l_omp,pl_omp",
            "--trials", "5", "--seed", "42", "--out", str(out),
        ])
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1 + 3 * 2  # header + 3 algorithms x 2 m-values

    def test_runtime_error_exit_code(self, tmp_path, capsys):
        code = cli_main([
            "simulate", "--nodes", "4", "--hops", "5", "--sig-len-list", "8",
            "--trials", "1", "--out", str(tmp_path / "x.csv"),
        ])
        assert code == 1

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli_main(["simulate", "--bogus", "1"])
        assert exc.value.code == 2

    def test_unknown_algorithm_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli_main([
                "simulate", "--nodes", "6", "--hops", "3", "--sig-len-list", "8",
                "--algorithms", "nope", "--trials", "1", "--out", "x.csv",
            ])
        assert exc.value.code == 2


class TestComplexity:
    def test_grid_size(self, tmp_path, capsys):
        out = tmp_path / "fig5.csv"
        code = cli_main([
            "complexity", "--nodes", "15", "--sig-len", "8",
            "--list-max", "4", "--hops-max", "5", "--out", str(out),
        ])
        assert code == 0
        assert len(out.read_text().splitlines()) == 1 + 16


class TestOracleCheck:
    def test_small_sweep_agrees(self, capsys):
        code = cli_main(["oracle-check", "--nodes", "4", "--hops-max", "3"])
        assert code == 0
        assert "agree" in capsys.readouterr().out


class TestDemo:
    def test_demo_runs(self, capsys):
        code = cli_main(["demo", "--nodes", "5", "--hops", "2", "--sig-len", "8",
                         "--seed", "1"])
        assert code == 0
        out = capsys.readouterr().out
        assert "true path" in out and "oracle" in out
