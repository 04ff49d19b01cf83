import json

import numpy as np
import pytest

from corrkit.cli import main
from corrkit.formats import read_sequence


def run_cli(*argv):
    return main(list(argv))


class TestGen:
    def test_chu_example(self, tmp_path, capsys):
        out = tmp_path / "z.txt"
        assert run_cli("gen", "chu", "--n", "4", "--a", "1", "--out", str(out)) == 0
        assert out.read_text() == "UNIMODULAR-PHASE 4 4\n0\n1\n4\n1\n"
        assert capsys.readouterr().out == ""  # diagnostics only on stderr

    def test_rs_m0_pair(self, tmp_path):
        stem = tmp_path / "rs"
        assert run_cli("gen", "rs", "--m", "0", "--out", str(stem)) == 0
        for suffix in (".a", ".b"):
            text = (tmp_path / f"rs{suffix}").read_text()
            assert text == "UNIMODULAR-PHASE 1 1\n0\n"

    def test_thm2_n5_pair(self, tmp_path):
        stem = tmp_path / "p"
        assert run_cli("gen", "thm2", "--n", "5", "--out", str(stem)) == 0
        a = read_sequence(tmp_path / "p.a")
        b = read_sequence(tmp_path / "p.b")
        assert a.n == b.n == 10
        assert a.phase_modulus == b.phase_modulus == 10
        assert list(a.phases) == [(6 * j * j) % 20 for j in range(10)]
        assert list(b.phases) == [(4 * j * j) % 20 for j in range(10)]

    def test_invalid_params_exit_2(self, tmp_path, capsys):
        assert run_cli("gen", "chu", "--n", "0", "--a", "1",
                       "--out", str(tmp_path / "x")) == 2
        assert "error" in capsys.readouterr().err


class TestAnalyze:
    def test_rudin_shapiro_m2(self, tmp_path, capsys):
        stem = tmp_path / "rs"
        run_cli("gen", "rs", "--m", "2", "--out", str(stem))
        capsys.readouterr()
        assert run_cli("analyze", str(stem) + ".a", str(stem) + ".b") == 0
        data = json.loads(capsys.readouterr().out)
        assert data["adf_a"] == pytest.approx(0.25, abs=1e-10)
        assert data["cdf"] == pytest.approx(0.75, abs=1e-10)
        assert data["psc"] == pytest.approx(1.0, abs=1e-10)

    def test_identical_length_one_files(self, tmp_path, capsys):
        path = tmp_path / "one.txt"
        path.write_text("COMPLEX 1\n1 0\n")
        assert run_cli("analyze", str(path), str(path)) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["psc"] == pytest.approx(1.0)

    def test_conjugate_pair_psc_bound(self, tmp_path, capsys):
        stem = tmp_path / "t1"
        run_cli("gen", "thm1", "--n", "64", "--out", str(stem))
        capsys.readouterr()
        assert run_cli("analyze", str(stem) + ".a", str(stem) + ".b", "--json") == 0
        data = json.loads(capsys.readouterr().out)
        assert data["psc"] >= 1 - 1e-9

    def test_parse_failure_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("NOT A SEQUENCE\n")
        good = tmp_path / "good.txt"
        good.write_text("COMPLEX 1\n1 0\n")
        assert run_cli("analyze", str(bad), str(good)) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error" in captured.err

    def test_length_mismatch_exit_2(self, tmp_path, capsys):
        p1 = tmp_path / "a.txt"
        p1.write_text("COMPLEX 1\n1 0\n")
        p2 = tmp_path / "b.txt"
        p2.write_text("COMPLEX 2\n1 0\n1 0\n")
        assert run_cli("analyze", str(p1), str(p2)) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file_exit_2(self, tmp_path, capsys):
        good = tmp_path / "good.txt"
        good.write_text("COMPLEX 1\n1 0\n")
        assert run_cli("analyze", str(tmp_path / "absent.txt"), str(good)) == 2


class TestGaussCommand:
    def test_total(self, capsys):
        assert run_cli("gauss", "--N", "2", "--x", "0.5", "--theta", "0.25") == 0
        data = json.loads(capsys.readouterr().out)
        assert data["total"][0] == pytest.approx(-2.0, abs=1e-13)
        assert data["total"][1] == pytest.approx(0.0, abs=1e-13)

    def test_decompose(self, capsys):
        assert run_cli("gauss", "--N", "48", "--x", str(2 / 64),
                       "--theta", str(16 / 64), "--decompose") == 0
        data = json.loads(capsys.readouterr().out)
        assert data["M"] == 2
        assert abs(complex(*data["remainder"])) < 2 / 64

    def test_decompose_domain_error(self, capsys):
        assert run_cli("gauss", "--N", "5", "--x", "1.5", "--theta", "0.0",
                       "--decompose") == 2
        assert "error" in capsys.readouterr().err


class TestStudyCommand:
    def test_stdout_csv(self, capsys):
        assert run_cli("study", "chu1", "--grid", "64,256") == 0
        captured = capsys.readouterr()
        lines = captured.out.strip().split("\n")
        assert lines[0] == "n,quantity,measured,target,deviation"
        assert len(lines) == 3

    def test_csv_and_figure_files(self, tmp_path, capsys):
        out = tmp_path / "study.csv"
        assert run_cli("study", "thm1", "--grid", "16,64",
                       "--out", str(out), "--plot") == 0
        assert out.exists()
        png = tmp_path / "study.png"
        assert png.exists() and png.stat().st_size > 0
        assert capsys.readouterr().out == ""

    def test_all_writes_directory(self, tmp_path, monkeypatch):
        import corrkit.experiments as experiments

        monkeypatch.setattr(experiments, "DEFAULT_GRID", (16, 64))
        monkeypatch.setattr(experiments, "DEFAULT_BALANCED_GRID", (16, 17, 64))
        monkeypatch.setattr(experiments, "DEFAULT_GAUSS_GRID", (256, 1024))
        out = tmp_path / "studies"
        assert run_cli("study", "all", "--out", str(out)) == 0
        for kind in ("chu1", "thm1", "thm2", "gauss-ratio"):
            assert (out / f"{kind}.csv").exists()

    def test_all_rejects_custom_grid(self, capsys):
        assert run_cli("study", "all", "--grid", "16,64") == 2
        assert "per-kind" in capsys.readouterr().err

    def test_plot_requires_out(self, capsys):
        assert run_cli("study", "chu1", "--grid", "16,64", "--plot") == 2
        assert "requires --out" in capsys.readouterr().err

    def test_bad_grid_exit_2(self, capsys):
        assert run_cli("study", "chu1", "--grid", "64,64") == 2


class TestVerifyCommand:
    def test_small_suite_passes(self, capsys, monkeypatch):
        import corrkit.checks as checks

        monkeypatch.setitem(
            checks.SUITES, "lemma21",
            (lambda: checks.check_closedform_adf(32),
             lambda: checks.check_closedform_magnitudes(32)),
        )
        assert run_cli("verify", "lemma21") == 0
        captured = capsys.readouterr()
        results = json.loads(captured.out)
        assert all(r["passed"] for r in results)
        assert "[pass]" in captured.err

    def test_failure_exits_3(self, capsys, monkeypatch):
        import corrkit.checks as checks

        monkeypatch.setitem(
            checks.SUITES, "identities",
            (lambda: checks.CheckResult("forced", False, "synthetic failure"),),
        )
        assert run_cli("verify", "identities") == 3
        captured = capsys.readouterr()
        assert "[FAIL]" in captured.err


class TestArgparseBehaviour:
    def test_unknown_option_rejected(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("analyze", "a", "b", "--frobnicate")
        assert exc.value.code == 2

    def test_unknown_subcommand_rejected(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("transmogrify")
        assert exc.value.code == 2


def test_gen_roundtrip_matches_memory(tmp_path):
    from corrkit import chu

    out = tmp_path / "z.txt"
    run_cli("gen", "chu", "--n", "37", "--a", "11", "--out", str(out))
    back = read_sequence(out)
    direct = chu(37, 11)
    assert np.array_equal(back.entries, direct.entries)
    assert np.array_equal(back.phases, direct.phases)
