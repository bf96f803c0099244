import json
from pathlib import Path

import pytest

from bondlab import cli
from bondlab.graphs import make_family, emit_graph6

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_matches_golden_file(self, capsys):
        code, out, _ = run(capsys, "table", "--chi-from", "-21", "--chi-to", "0")
        assert code == 0
        assert out == (DATA / "comparison_table_chi_-21_0.txt").read_text()

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "table", "--chi-from", "-1", "--chi-to", "0", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "chi,baseline_term,improved_term"

    def test_bad_range_exits_one(self, capsys):
        code, _, err = run(capsys, "table", "--chi-from", "0", "--chi-to", "2")
        assert code == 1
        assert err.startswith("bondlab: error:")


class TestInvariants:
    def test_k33_values(self, capsys):
        g6 = emit_graph6(make_family("kmn", 3, 3))
        code, out, _ = run(capsys, "invariants", g6, "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert (data["gamma"], data["b"], data["bprime"]) == (2, 3, 5)

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("A_\n"))
        code, out, _ = run(capsys, "invariants", "-")
        assert code == 0
        assert "b: 1" in out

    def test_malformed_graph_exits_one(self, capsys):
        code, _, err = run(capsys, "invariants", "!!!")
        assert code == 1
        assert "bondlab: error:" in err


class TestChi:
    def test_k33_with_witness(self, capsys):
        g6 = emit_graph6(make_family("kmn", 3, 3))
        code, out, _ = run(capsys, "chi", g6, "--witness", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["chi"] == 1 and data["certified"]
        assert data["orientable"]["chi"] == 0
        from bondlab.embedding import RotationSystem, trace_faces
        from bondlab.graphs import parse_graph6

        rs = RotationSystem.from_json_dict(data["witness"])
        assert trace_faces(parse_graph6(g6), rs).chi == 1

    def test_strict_budget_exit_three(self, capsys):
        g6 = emit_graph6(make_family("kmn", 3, 3))
        code, _, err = run(capsys, "chi", g6, "--budget", "10", "--strict", "--exhaustive")
        assert code == 3
        assert "budget" in err

    def test_orientable_only(self, capsys):
        g6 = emit_graph6(make_family("kn", 5))
        code, out, _ = run(capsys, "chi", g6, "--orientable-only", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["orientable"]["chi"] == 0
        assert data["nonorientable"] is None


class TestBounds:
    def test_explicit_parameters(self, capsys):
        code, out, _ = run(capsys, "bounds", "--delta", "4", "--chi", "-4", "--format", "json")
        data = json.loads(out)
        assert code == 0
        entries = {e["name"]: e for e in data["entries"]}
        assert entries["cubic"]["bound"] == 8
        assert entries["sqrt"]["bound"] == 9
        assert all("provenance" in e for e in data["entries"])

    def test_from_graph(self, capsys):
        g6 = emit_graph6(make_family("kmn", 4, 4))
        code, out, _ = run(capsys, "bounds", "--graph6", g6, "--format", "json")
        data = json.loads(out)
        assert code == 0
        entries = {e["name"]: e for e in data["entries"]}
        assert data["chi"] == 0
        assert entries["triangle_free"]["bound"] == 7
        assert entries["genus"]["applicable"]

    def test_missing_parameters_exit_two(self, capsys):
        code, _, err = run(capsys, "bounds")
        assert code == 2
        assert "delta" in err


class TestVerify:
    def test_family_file(self, capsys, tmp_path):
        corpus = tmp_path / "corpus.g6"
        corpus.write_text(
            "\n".join(
                emit_graph6(make_family(*family))
                for family in [("kn", 4), ("cn", 5), ("kmn", 2, 3)]
            )
            + "\n"
        )
        code, out, err = run(capsys, "verify", str(corpus), "--format", "csv")
        assert code == 0
        assert out.splitlines()[0].startswith("graph6,n,m,delta,gamma,b,bprime,chi")
        assert len(out.splitlines()) == 4

    def test_warning_for_bprime_counterexample(self, capsys, tmp_path):
        corpus = tmp_path / "paths.g6"
        corpus.write_text(emit_graph6(make_family("pn", 4)) + "\n")
        code, _, err = run(capsys, "verify", str(corpus))
        assert code == 0
        assert "warning" in err and "b'" in err

    def test_exit_one_on_failure(self, capsys, monkeypatch, tmp_path):
        from bondlab.harness import CorpusSummary, TheoremCheck, VerificationRecord

        record = VerificationRecord(
            graph6="A_",
            checks=(TheoremCheck("cubic", True, 0, False, -1),),
        )
        summary = CorpusSummary(1, 0, {}, 1)

        monkeypatch.setattr(cli, "verify_corpus", lambda *a, **k: ([record], summary))
        corpus = tmp_path / "one.g6"
        corpus.write_text("A_\n")
        code, _, _ = run(capsys, "verify", str(corpus), "--format", "csv")
        assert code == 1

    def test_empty_corpus_exits_zero(self, capsys, tmp_path):
        corpus = tmp_path / "empty.g6"
        corpus.write_text("")
        code, out, _ = run(capsys, "verify", str(corpus), "--format", "text")
        assert code == 0


class TestEnumerateAndFamilies:
    def test_enumerate_counts(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--max-n", "4")
        assert code == 0
        assert len(out.splitlines()) == 10

    def test_enumerate_budget_exit_one(self, capsys):
        code, _, err = run(capsys, "enumerate", "--max-n", "9")
        assert code == 1
        assert "budget" in err

    def test_families_output_parses(self, capsys):
        from bondlab.graphs import parse_graph6

        code, out, _ = run(capsys, "families", "petersen")
        assert code == 0
        g = parse_graph6(out.strip())
        assert (g.n, g.m) == (10, 15)

    def test_families_bad_params(self, capsys):
        code, _, err = run(capsys, "families", "kn")  # missing parameter
        assert code == 1
        assert "parameter" in err


class TestConfig:
    def test_config_sets_default_flag_wins(self, capsys, tmp_path):
        conf = tmp_path / "run.conf"
        conf.write_text("format=csv\nchi-to=0\nchi-from=-1\n")
        code, out, _ = run(capsys, "--config", str(conf), "table")
        assert code == 0
        assert out.splitlines()[0] == "chi,baseline_term,improved_term"
        # explicit flag beats the config value
        code, out, _ = run(
            capsys, "--config", str(conf), "table", "--format", "text"
        )
        assert code == 0
        assert out.splitlines()[0].lstrip().startswith("chi")
        assert "," not in out.splitlines()[0]

    def test_config_rejects_bad_lines(self, capsys, tmp_path):
        conf = tmp_path / "bad.conf"
        conf.write_text("this is not a pair\n")
        with pytest.raises(SystemExit) as exc:
            run(capsys, "--config", str(conf), "table", "--chi-from", "0", "--chi-to", "0")
        assert exc.value.code == 2


class TestHelpAndEnvironment:
    def test_verify_help_documents_bound_columns(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--help"])
        assert exc.value.code == 0
        out = capsys.readouterr().out
        for name in ("hartnell_rall", "cubic", "triangle_free", "order", "size"):
            assert name in out
        assert "largest root" in out

    def test_threads_default_from_environment(self, monkeypatch):
        monkeypatch.setenv("BONDLAB_THREADS", "3")
        parser = cli.build_parser()
        args = parser.parse_args(["verify", "x"])
        assert args.threads == 3
        monkeypatch.setenv("BONDLAB_THREADS", "junk")
        args = cli.build_parser().parse_args(["verify", "x"])
        assert args.threads == 1


class TestDeterminism:
    def test_verify_output_independent_of_threads(self, capsys, tmp_path):
        corpus = tmp_path / "corpus.g6"
        corpus.write_text(
            "\n".join(emit_graph6(make_family("cn", k)) for k in (3, 4, 5)) + "\n"
        )
        outputs = []
        for threads in ("1", "2"):
            code, out, _ = run(
                capsys, "verify", str(corpus), "--format", "csv", "--threads", threads
            )
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1]
