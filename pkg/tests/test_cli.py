import json

import pytest

from ciboolean import cli
from ciboolean.ci import CHECKS, WALSH_COMPONENT

EXAMPLE = "3 2\n0 0 1 3 1 1 0 2\n"


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(EXAMPLE)
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCi:
    def test_example_all_methods(self, capsys, example_file):
        code, out, _ = run(capsys, "ci", "--input", example_file, "--method", "all", "--order", "max")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert all(line.endswith("ci_order = 0") for line in lines)

    def test_constant_reaches_n(self, capsys, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text("4 2\n" + "3 " * 16)
        code, out, _ = run(capsys, "ci", "--input", str(path))
        assert code == 0
        assert out.count("ci_order = 4") == 5

    def test_single_order(self, capsys):
        code, out, _ = run(capsys, "ci", "--anf", "x1 + x2", "--n", "2", "--m", "1", "--order", "1")
        assert code == 0
        assert out.count("t = 1: pass") == 5

    def test_json_report(self, capsys, example_file):
        code, out, _ = run(capsys, "ci", "--input", example_file, "--method", "definition,walsh-generalized",
                           "--json", "-", "--quiet", "--points")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        assert data["agree"] is True
        assert data["input"]["n"] == 3 and data["input"]["m"] == 2
        assert set(data["methods"]) == {"definition", "walsh-generalized"}
        assert data["methods"]["walsh-generalized"]["ci_order"] == 0
        assert "spectral_report" in data["methods"]["walsh-generalized"]

    def test_json_to_file(self, capsys, example_file, tmp_path):
        target = tmp_path / "r.json"
        code, _, _ = run(capsys, "ci", "--input", example_file, "--json", str(target))
        assert code == 0
        assert json.loads(target.read_text())["schema"] == 1

    def test_permutation_cap(self, capsys):
        code, _, err = run(capsys, "ci", "--anf", "0", "--n", "9", "--m", "1",
                           "--method", "fourier-generalized")
        assert code == 1
        assert "--allow-large" in err

    def test_cap_does_not_apply_to_walsh(self, capsys):
        code, out, _ = run(capsys, "ci", "--anf", "x1", "--n", "9", "--m", "1", "--method", "walsh-component")
        assert code == 0
        assert "ci_order = 0" in out

    @pytest.mark.parametrize("argv", [
        ("ci",),
        ("ci", "--anf", "x1"),
        ("ci", "--anf", "x9", "--n", "2", "--m", "1"),
        ("ci", "--anf", "x1", "--n", "2", "--m", "1", "--method", "bogus"),
        ("ci", "--anf", "x1", "--n", "2", "--m", "1", "--order", "5"),
        ("ci", "--input", "/nonexistent/file"),
    ])
    def test_input_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 1
        assert err.startswith("error:")

    def test_disagreement_exit_code(self, capsys, example_file, monkeypatch):
        real = CHECKS[WALSH_COMPONENT]

        def broken(fn, t, **kw):
            verdict = real(fn, t, **kw)
            verdict.passed = True
            verdict.witness = None
            return verdict

        monkeypatch.setitem(CHECKS, WALSH_COMPONENT, broken)
        code, _, err = run(capsys, "ci", "--input", example_file, "--order", "1")
        assert code == 2
        assert "disagree" in err


class TestSweep:
    def test_n1(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n", "1", "--m", "1", "--json", "-", "--quiet")
        assert code == 0
        data = json.loads(out)
        assert data["functions"] == 4
        assert data["disagreements"] == 0
        for hist in data["ci_order_distribution"].values():
            assert {int(k): v for k, v in hist.items()} == {0: 2, 1: 2}

    def test_n2_text(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n", "2", "--m", "1")
        assert code == 0
        assert "16 functions, 0 disagreements" in out
        assert out.count("order 0: 12 order 1: 2 order 2: 2") == 5

    def test_universe_limit(self, capsys):
        code, _, err = run(capsys, "sweep", "--n", "4", "--m", "2")
        assert code == 1
        assert "exceeds" in err


class TestBench:
    @pytest.mark.parametrize("n, m, t, comp, gen", [
        (10, 4, 2, 825, 220),
        (10, 4, 0, 0, 0),
        (3, 2, 3, 21, 14),
    ])
    def test_counts(self, capsys, n, m, t, comp, gen):
        code, out, _ = run(capsys, "bench", "--n", str(n), "--m", str(m), "--t", str(t), "--json", "-", "--quiet")
        assert code == 0
        counts = json.loads(out)["counts"]
        assert counts["walsh_component"] == {"measured": comp, "expected": comp}
        assert counts["walsh_generalized"] == {"measured": gen, "expected": gen}

    def test_text_ratio(self, capsys):
        code, out, _ = run(capsys, "bench", "--n", "6", "--m", "3", "--t", "1", "--samples", "2")
        assert code == 0
        assert "ratio: 7/3" in out
        assert "timing_inputs" in out

    def test_bad_order(self, capsys):
        assert run(capsys, "bench", "--n", "3", "--m", "2", "--t", "4")[0] == 1


class TestSpectrum:
    def test_example_generalized(self, capsys, example_file):
        code, out, _ = run(capsys, "spectrum", "--input", example_file, "--transform", "walsh-generalized",
                           "--points", "0", "--i", "2")
        assert code == 0
        assert out.strip() == "000  2 + 2·ζ4"

    def test_constant_vanishes(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--anf", "1", "--n", "3", "--m", "2", "--points", "0b101", "--i", "2")
        assert code == 0
        assert out.split()[-1] == "0"

    def test_component_x1x2(self, capsys, example_file):
        # bit 1 of the packed value carries x1 x2
        code, out, _ = run(capsys, "spectrum", "--input", example_file, "--transform", "walsh-component",
                           "--points", "0", "--v", "2")
        assert code == 0
        assert out.split()[-1] == "4"

    def test_weight_and_json(self, capsys, example_file):
        code, out, _ = run(capsys, "spectrum", "--input", example_file, "--weight", "1", "--i", "2",
                           "--json", "-", "--quiet")
        assert code == 0
        rows = json.loads(out)["points"]
        assert [r["c"] for r in rows] == [0, 1, 2, 4]

    def test_dft(self, capsys, example_file):
        code, out, _ = run(capsys, "spectrum", "--input", example_file, "--transform", "dft", "--i", "2",
                           "--points", "4")
        assert code == 0
        assert out.strip() == "4  2 + 2·ζ4"

    def test_bad_point(self, capsys, example_file):
        assert run(capsys, "spectrum", "--input", example_file, "--points", "8")[0] == 1
        assert run(capsys, "spectrum", "--input", example_file, "--points", "zz")[0] == 1


class TestConvert:
    def test_table_to_anf(self, capsys, example_file):
        code, out, _ = run(capsys, "convert", "--input", example_file)
        assert code == 0
        assert out.strip() == "2*x1*x2 + 2*x2*x3 + x2 + x3"

    def test_anf_to_table(self, capsys):
        code, out, _ = run(capsys, "convert", "--anf", "2*x1*x2 + 2*x2*x3 + x2 + x3", "--n", "3", "--m", "2")
        assert code == 0
        assert out.split()[2:] == ["0", "0", "1", "3", "1", "1", "0", "2"]

    def test_console_script(self, example_file):
        import shutil
        import subprocess

        exe = shutil.which("ciboolean")
        if exe is None:
            pytest.skip("console script not on PATH")
        res = subprocess.run([exe, "convert", "--input", example_file], capture_output=True, text=True)
        assert res.returncode == 0
        assert "2*x1*x2" in res.stdout
