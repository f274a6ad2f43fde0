import json

import pytest

from strangeci.cli import (
    EXIT_BUDGET,
    EXIT_CHECK_FAILED,
    EXIT_INVALID,
    EXIT_OK,
    main,
)
from strangeci.families import quadric_normal_form
from strangeci.geometry import ProjectivePoint
from strangeci.gf import make_field
from strangeci.strangeness import is_strange_for, strange_locus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestStrangeCheck:
    def test_char2_conic_verdict_matches_library(self, capsys):
        code, out, _ = run(
            capsys,
            "strange-check",
            "--char", "2", "--n", "2",
            "--poly", "z0^2 + z1*z2",
            "--vertex", "(1:0:0)",
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        F2 = make_field(2)
        rep = is_strange_for(quadric_normal_form(2, 2), ProjectivePoint(F2, [1, 0, 0]))
        assert doc == rep.to_dict()
        assert doc["verdict"] is True

    def test_negative_verdict_still_exit_ok(self, capsys):
        code, out, _ = run(
            capsys,
            "strange-check",
            "--char", "3", "--n", "2",
            "--poly", "z0^2 + z1*z2",
            "--vertex", "(1:0:0)",
        )
        assert code == EXIT_OK and json.loads(out)["verdict"] is False

    def test_pretty_output_parses(self, capsys):
        code, out, _ = run(
            capsys,
            "strange-check", "--pretty",
            "--char", "2", "--n", "2",
            "--poly", "z0^2 + z1*z2",
            "--vertex", "(1:0:0)",
        )
        assert code == EXIT_OK and json.loads(out)["verdict"] is True
        assert "\n" in out.strip()


class TestStrangeLocus:
    def test_matches_library(self, capsys):
        code, out, _ = run(
            capsys,
            "strange-locus",
            "--char", "2", "--n", "2",
            "--poly", "z0^2 + z1*z2",
        )
        assert code == EXIT_OK
        assert json.loads(out) == strange_locus(quadric_normal_form(2, 2)).to_dict()


class TestNormalize:
    def test_known_example(self, capsys):
        code, out, _ = run(
            capsys,
            "normalize",
            "--char", "2", "--n", "2",
            "--poly", "z0*z1 + z2^2",
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"normalized": ["z2^2"]}

    def test_normalize_system_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "normalize-system",
            "--char", "2", "--n", "2",
            "--poly", "z0^2 + z1*z2",
        )
        assert code == EXIT_OK and json.loads(out)["ideal_equal"] is True


class TestConeAndSearch:
    def test_cone_check(self, capsys):
        code, out, _ = run(
            capsys,
            "cone-check",
            "--char", "5", "--n", "3",
            "--poly", "z1^3 + z2^3 + z3^3",
            "--vertex", "(1:0:0:0)",
        )
        assert code == EXIT_OK and json.loads(out)["cone"] is True

    def test_singular_search_family(self, capsys):
        code, out, _ = run(
            capsys,
            "singular-search",
            "--char", "2", "--n", "2", "--ext-bound", "2",
            "--poly", "z2*z1^3 + z0^4",
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"singular_points": [{"m": 1, "point": "(0:0:1)"}]}

    def test_budget_exit_code(self, capsys, monkeypatch):
        monkeypatch.setenv("STRANGECI_BUDGET", "10")
        code, out, err = run(
            capsys,
            "singular-search",
            "--char", "2", "--n", "3", "--ext-bound", "4",
            "--poly", "z0*z1 + z2*z3",
        )
        assert code == EXIT_BUDGET and out == "" and "budget" in err


class TestTangentAndGauss:
    def test_tangent(self, capsys):
        code, out, _ = run(
            capsys,
            "tangent",
            "--char", "3", "--n", "2",
            "--poly", "z0*z1 + z2^2",
            "--point", "(1:0:0)",
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["dim"] == 2

    def test_gauss(self, capsys):
        code, out, _ = run(
            capsys,
            "gauss",
            "--char", "2", "--n", "2",
            "--poly", "z0^2 + z1*z2",
            "--point", "(1:1:1)",
        )
        assert code == EXIT_OK and json.loads(out) == {"dual_point": "(0:1:1)"}


class TestFamilyCommand:
    def test_quadric(self, capsys):
        code, out, _ = run(capsys, "family", "--id", "quadric", "--char", "2", "--n", "2")
        assert code == EXIT_OK
        assert json.loads(out) == {
            "generators": ["z0^2 + z1*z2"],
            "degrees": [2],
            "p": 2,
            "N": 2,
        }

    def test_p_divides(self, capsys):
        code, out, _ = run(
            capsys, "family", "--id", "p-divides", "--char", "2", "--n", "2", "--e", "4"
        )
        assert code == EXIT_OK and json.loads(out)["degrees"] == [4]

    def test_bad_family_params(self, capsys):
        code, _, err = run(
            capsys, "family", "--id", "p-divides", "--char", "2", "--n", "2", "--e", "5"
        )
        assert code == EXIT_INVALID and err


class TestCensusCommand:
    def test_small_census(self, capsys, tmp_path):
        out_path = tmp_path / "census.jsonl"
        code, out, _ = run(
            capsys,
            "census",
            "--char", "2", "--n", "3", "--degrees", "3",
            "--samples", "10", "--seed", "5", "--ext-bound", "2",
            "--out", str(out_path),
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["total"] == 10 and doc["smooth_certified"] == 0
        lines = out_path.read_text().splitlines()
        assert len(lines) == 11  # header + 10 records
        assert "run" in json.loads(lines[0])


class TestVerifyCommand:
    @pytest.mark.parametrize(
        "suite,samples",
        [("euler", 50), ("lemma-rank", 30), ("phi-surjectivity", 50), ("quadric-table", 1)],
    )
    def test_suites_pass(self, capsys, suite, samples):
        code, out, _ = run(
            capsys, "verify", "--suite", suite, "--samples", str(samples)
        )
        assert code == EXIT_OK and json.loads(out)["ok"] is True

    def test_cone_corollary_suite(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "cone-corollary", "--samples", "10"
        )
        assert code == EXIT_OK and json.loads(out)["checked"] == 10


class TestInputHandling:
    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "system.txt"
        path.write_text("2 2 2\nz0^2 + z1*z2\n")
        code, out, _ = run(
            capsys,
            "strange-locus", "--char", "2", "--n", "2", "--in", str(path),
        )
        assert code == EXIT_OK and json.loads(out)["dim"] == 1

    def test_file_header_mismatch(self, capsys, tmp_path):
        path = tmp_path / "system.txt"
        path.write_text("3 2 2\nz0^2 + z1*z2\n")
        code, _, err = run(
            capsys,
            "strange-locus", "--char", "2", "--n", "2", "--in", str(path),
        )
        assert code == EXIT_INVALID and "header" in err

    def test_no_generators(self, capsys):
        code, _, err = run(capsys, "strange-locus", "--char", "2", "--n", "2")
        assert code == EXIT_INVALID and err

    def test_parse_error(self, capsys):
        code, _, err = run(
            capsys,
            "strange-locus", "--char", "2", "--n", "2", "--poly", "z0 + z1^2",
        )
        assert code == EXIT_INVALID and err

    def test_console_script_installed(self):
        import shutil
        import subprocess

        exe = shutil.which("strangeci")
        assert exe is not None
        proc = subprocess.run(
            [exe, "verify", "--suite", "quadric-table"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0 and json.loads(proc.stdout)["ok"] is True
