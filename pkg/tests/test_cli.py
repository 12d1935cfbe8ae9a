import json
from pathlib import Path

import pytest

from supersplit import analysis, cli
from supersplit.errors import ConsistencyError, JobError
from supersplit.jobfile import parse_job, parse_job_text

FIXTURES = Path(cli.__file__).parent / "fixtures"
JOBS = sorted(FIXTURES.glob("*.job"))


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if code == 0 else None), err


def write(tmp_path, text, name="job.job"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_fixture_corpus_present():
    assert {p.stem for p in JOBS} >= {"quadric_p22", "sethi_n2", "sethi_n3", "aganagic_vafa", "weighted_split"}


@pytest.mark.parametrize("path", JOBS, ids=lambda p: p.stem)
def test_analyze_matches_golden(capsys, path):
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    golden = json.loads(path.with_suffix(".analyze.json").read_text())
    assert out == golden


@pytest.mark.parametrize("name, outcome", [
    ("quadric_p22", "NonSplit"),
    ("sethi_n2", "NonSplit"),
    ("sethi_n3", "NonSplit"),
    ("aganagic_vafa", "NonSplit"),
    ("product_p11", "NonSplit"),
    ("weighted_split", "Split"),
    ("reduced", "Split"),
    ("higher_order", "HomogeneouslyNonSplit"),
    ("singular_quadric", "HomogeneouslyNonSplit"),
])
def test_fixture_outcomes(capsys, name, outcome):
    _, out, _ = run(capsys, "analyze", FIXTURES / f"{name}.job")
    assert out["verdict"]["outcome"] == outcome


class TestSubcommands:
    def test_model_flags(self, capsys):
        code, out, _ = run(capsys, "model", "--m", 2, "--b", "1,2")
        assert code == 0
        assert out["split_model"]["odd_cotangent"] == ["O(-1)", "O(-2)"]
        assert out["positive"] and out["odd_dominates_even"]

    def test_model_product(self, capsys):
        _, out, _ = run(capsys, "model", FIXTURES / "product_p11.job")
        assert out["product"]["reduced"] == "P^1 x P^1"

    def test_cohomology_single(self, capsys):
        _, out, _ = run(capsys, "cohomology", "--m", 3, "--q", 0, "--k", 2)
        assert out["dim"] == 10

    def test_cohomology_tangent(self, capsys):
        _, out, _ = run(capsys, "cohomology", "--m", 2, "--q", 1, "--k", -3, "--sheaf", "tangent")
        assert out["dim"] == 1

    def test_cohomology_table(self, capsys):
        _, out, _ = run(capsys, "cohomology", "--m", 1, "--table", "--kmin", -2, "--kmax", 0)
        assert len(out["entries"]) == 3 * 2

    def test_normality_from_job(self, capsys):
        _, out, _ = run(capsys, "normality", FIXTURES / "quadric_p22.job")
        assert out["overall"] == "Normal"

    def test_normality_lines(self, capsys):
        _, out, _ = run(capsys, "normality", "--m", 2, "--b", "1,1", "--d", 1)
        assert out["overall"] == "NotProvable"

    def test_search(self, capsys):
        _, out, _ = run(capsys, "search", FIXTURES / "weighted_split.job")
        assert out["result"] == "HomogeneouslySplit"
        assert out["witness"]["even"][2] == "x3 - t1*t2"

    def test_search_max_order(self, capsys):
        _, out, _ = run(capsys, "search", FIXTURES / "higher_order.job", "--max-order", 2)
        assert out["result"] == "Exhausted" and out["max_order"] == 2

    def test_segre(self, capsys):
        _, out, _ = run(capsys, "segre", "--m", 1, "--b", "1", "--m2", 1, "--b2", "1")
        assert (out["m2"], out["n2"]) == (3, 4)
        assert out["coordinate_map"]["even"] == ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]

    def test_charts(self, capsys):
        _, out, _ = run(capsys, "charts", "--m", 2, "--b", "1,2", "--check-cocycles")
        assert len(out["transitions"]) == 6
        assert out["cocycles"]["all_pass"] and out["cocycles"]["checked"] == 27

    def test_verbose_goes_to_stderr(self, capsys):
        code, out, err = run(capsys, "-v", "analyze", FIXTURES / "quadric_p22.job")
        assert code == 0 and "verdict: NonSplit" in err


class TestExitCodes:
    def test_bad_weight_length(self, capsys, tmp_path):
        p = write(tmp_path, "[model]\nm = 2\nn = 2\nb = 1\n[variety]\nf1 = \"x1^2 + t1*t2\"\n")
        code, _, err = run(capsys, "analyze", p)
        assert code == 1 and "error" in err

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == 1

    def test_missing_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["cohomology"])
        assert exc.value.code == 1

    def test_parse_error(self, capsys, tmp_path):
        p = write(tmp_path, "[model]\nm = 2\nn = 2\n[variety]\nf1 = \"x1^2 + + t1*t2\"\n")
        code, _, err = run(capsys, "analyze", p)
        assert code == 1 and "line 5" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "analyze", tmp_path / "nope.job")
        assert code == 1

    def test_charts_weighted_rejected(self, capsys):
        code, _, _ = run(capsys, "charts", "--m", 2, "--a", "1,1,2", "--b", "1")
        assert code == 1

    def test_omega_needs_p(self, capsys):
        code, _, _ = run(capsys, "cohomology", "--m", 2, "--q", 0, "--k", 0, "--sheaf", "omega")
        assert code == 1

    def test_consistency_failure(self, capsys, monkeypatch):
        def broken(job, max_order=None):
            raise ConsistencyError("forced")
        monkeypatch.setattr(analysis, "splitting_search", broken)
        code, _, err = run(capsys, "analyze", FIXTURES / "quadric_p22.job")
        assert code == 2 and "forced" in err


class TestJobFiles:
    def test_round_trip(self):
        text = '[model]\nm = 2\nn = 2\nb = [1, 1]\n[variety]\nf1 = "x1^2 + t1*t2"\n'
        assert parse_job_text(text).spec.b == (1, 1)
        assert len(parse_job(text).generators) == 1

    def test_unknown_key(self):
        with pytest.raises(JobError) as exc:
            parse_job("[model]\nm = 2\nq = 3\n")
        assert exc.value.line == 3

    def test_unknown_section(self):
        with pytest.raises(JobError, match="section"):
            parse_job("[model]\nm = 2\nn = 0\n[extra]\nx = 1\n")

    def test_missing_model(self):
        with pytest.raises(JobError):
            parse_job('[variety]\nf1 = "x1"\n')

    def test_bad_integer(self):
        with pytest.raises(JobError) as exc:
            parse_job("[model]\nm = two\nn = 0\n")
        assert exc.value.line == 2

    def test_zero_based_generators(self):
        text = '[model]\nm = 1\nn = 2\nb = 0, 2\n[variety]\nf1 = "x0*x1 + t1*t2"\n'
        assert parse_job_text(text).zero_based
        assert str(parse_job(text).generators[0]) == "x1*x2 + t1*t2"

    def test_assumptions(self):
        job = parse_job('[model]\nm = 2\nn = 2\n[variety]\nf1 = "x1^3 + t1*t2*x1"\n'
                    "[assume]\nsmooth = true\nirreducible = yes\n")
        assert job.assume_smooth and job.assume_irreducible
