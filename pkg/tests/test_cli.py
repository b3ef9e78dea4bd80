"""Verb coverage, exit codes, and byte determinism of the front end."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

import pierikit.cli as cli
from pierikit.deform import GoldenReport, StageCheck
from pierikit.exactla import span, subspace_to_json, unit_vector
from pierikit.schubgeom import cell_point, standard_flag
from pierikit.seqcomb import DecSeq


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def dump(path: Path, subspace) -> str:
    path.write_text(json.dumps(subspace_to_json(subspace)))
    return str(path)


def e(i, n=9):
    return unit_vector(n, i)


@pytest.fixture
def worked_files(tmp_path):
    M = span(9, e(2), e(3), e(5), e(6), e(8), e(9))
    Lm = span(9, e(2), e(3), e(5), e(6), e(9))
    return dump(tmp_path / "M.json", M), dump(tmp_path / "Lm.json", Lm)


class TestCombinatoricsVerbs:
    def test_pieri_text(self, capsys):
        rc, out, _ = run(capsys, "pieri", "--n", "9", "--m", "3",
                         "--alpha", "7,4,1", "--r", "2")
        assert rc == 0
        assert out == "9,4,1\n8,5,1\n8,4,2\n7,6,1\n7,5,2\n7,4,3\n"

    def test_pieri_json(self, capsys):
        rc, out, _ = run(capsys, "pieri", "--n", "9", "--alpha", "7,4,1",
                         "--r", "2", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["schema"] == "pierikit/pieri/1"
        assert [g["entries"] for g in blob["result"]][0] == [9, 4, 1]

    def test_m_mismatch_is_usage_error(self, capsys):
        rc, _, err = run(capsys, "pieri", "--n", "9", "--m", "2",
                         "--alpha", "7,4,1", "--r", "1")
        assert rc == 2 and "does not match" in err

    def test_bad_sequence_is_usage_error(self, capsys):
        rc, _, err = run(capsys, "pieri", "--n", "9", "--alpha", "4,7,1",
                         "--r", "1")
        assert rc == 2 and "error" in err

    def test_tree(self, capsys):
        rc, out, _ = run(capsys, "tree", "--n", "9", "--alpha", "7,4,1",
                         "--b", "2", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert [len(level) for level in blob["levels"]] == [1, 3, 6]
        assert len(blob["edges"]) == 9

    def test_chains(self, capsys):
        rc, out, _ = run(capsys, "chains", "--n", "9", "--alpha", "7,4,1",
                         "--b", "2")
        assert rc == 0
        lines = out.strip().split("\n")
        assert len(lines) == 6
        assert lines[0] == "741 -> 841 -> 941"

    def test_schensted(self, capsys):
        rc, out, _ = run(capsys, "schensted", "--shape", "4,2", "--b", "2",
                         "--m", "3")
        assert rc == 0
        assert "result: PASS" in out

    def test_schur(self, capsys):
        rc, out, _ = run(capsys, "schur", "--shape", "2,1", "--m", "2",
                         "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["terms"] == {"1,2": "1", "2,1": "1"}


class TestGeometryVerbs:
    def test_classify(self, capsys, tmp_path):
        L = cell_point(DecSeq(9, (7, 4, 1)), 2, standard_flag(9), seed=0)
        path = dump(tmp_path / "L.json", L)
        rc, out, _ = run(capsys, "classify", "--n", "9", "--alpha", "7,4,1",
                         "--file", path, "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["verdict"] == "TransverseReducible"
        assert blob["equality_set"] == [1, 2, 3]

    def test_cell(self, capsys):
        rc, out, _ = run(capsys, "cell", "--n", "9", "--alpha", "7,4,1",
                         "--s", "2", "--seed", "1", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["profile"]["passed"] is True
        assert len(blob["point"]["basis"]) == 5

    def test_witness_and_tangent(self, capsys, tmp_path):
        L = cell_point(DecSeq(9, (7, 4, 1)), 2, standard_flag(9), seed=0)
        path = dump(tmp_path / "L.json", L)
        rc, out, _ = run(capsys, "witness", "--n", "9", "--alpha", "7,4,1",
                         "--file", path, "--mode", "2", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["checks"] == {"schubert_member": True, "meets_L": True}

        rc, out, _ = run(capsys, "tangent", "--n", "9", "--alpha", "7,4,1",
                         "--file", path, "--mode", "1", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["codim"] == blob["s"] == 2

    def test_pencil(self, capsys, worked_files):
        m_path, lm_path = worked_files
        rc, out, _ = run(capsys, "pencil", "--file", m_path,
                         "--marked-file", lm_path, "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["l"] == 6 and blob["passed"] is True

    def test_pencil_l_mismatch(self, capsys, worked_files):
        m_path, lm_path = worked_files
        rc, _, err = run(capsys, "pencil", "--file", m_path,
                         "--marked-file", lm_path, "--l", "3")
        assert rc == 2 and "disagrees" in err

    def test_step(self, capsys, worked_files):
        m_path, lm_path = worked_files
        rc, out, _ = run(capsys, "step", "--n", "9", "--alpha", "7,4,1",
                         "--s", "2", "--r", "1", "--file", m_path,
                         "--marked-file", lm_path, "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["passed"] is True
        assert len(blob["components"]) == 3

    def test_chain_deform(self, capsys):
        rc, out, _ = run(capsys, "chain-deform", "--n", "9",
                         "--alpha", "7,4,1", "--b", "2", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["passed"] is True
        assert len(blob["reports"]) == 3
        assert len(blob["chains"]) == 6

    def test_appendix_a_matches_golden_file(self, capsys):
        rc, out, _ = run(capsys, "appendix-a")
        golden = Path(__file__).parent / "golden" / "worked_run.txt"
        assert rc == 0
        assert out == golden.read_text()

    def test_missing_file_is_usage_error(self, capsys):
        rc, _, err = run(capsys, "classify", "--n", "9", "--alpha", "7,4,1",
                         "--file", "/nonexistent/L.json")
        assert rc == 2 and "error" in err


class TestEnumerativeVerbs:
    def test_count_real(self, capsys):
        rc, out, _ = run(capsys, "count-real", "--n", "4", "--m", "2",
                         "--alpha", "3,1", "--beta", "2,1",
                         "--a", "1", "--b", "1", "--c", "1", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["d"] == 2
        assert blob["oracle1"] == 2 and blob["oracle2"] == 2
        assert blob["agree"] is True

    def test_triple_witness(self, capsys):
        rc, out, _ = run(capsys, "triple-witness", "--n", "4", "--m", "2",
                         "--alpha", "3,1", "--beta", "2,1",
                         "--a", "1", "--b", "1", "--c", "1", "--json")
        blob = json.loads(out)
        assert rc == 0
        assert blob["count"] == blob["d"] == 2
        assert blob["match"] is True and blob["distinct"] is True

    def test_bad_degrees_usage_error(self, capsys):
        rc, _, err = run(capsys, "count-real", "--n", "4", "--m", "2",
                         "--alpha", "3,1", "--beta", "2,1",
                         "--a", "2", "--b", "1", "--c", "1")
        assert rc == 2 and "ambient dimension" in err


class TestExitAndDeterminism:
    def test_usage_exit_two(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["pieri", "--n", "9"])
        assert exc.value.code == 2

    def test_unknown_verb_exit_two(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["polish"])
        assert exc.value.code == 2

    def test_verification_failure_exit_one(self, capsys, monkeypatch):
        broken = GoldenReport(
            sections=(("stubbed section", (StageCheck("stubbed clause", False),)),),
            final_indices=(),
        )
        monkeypatch.setattr(cli, "golden_run_741", lambda: broken)
        rc, out, err = run(capsys, "appendix-a")
        assert rc == 1
        assert "overall: FAIL" in out
        assert "failed: stubbed section: stubbed clause" in err

    @pytest.mark.parametrize("argv", [
        ("pieri", "--n", "9", "--alpha", "7,4,1", "--r", "2", "--json"),
        ("tree", "--n", "9", "--alpha", "7,4,1", "--b", "2", "--json"),
        ("cell", "--n", "9", "--alpha", "7,4,1", "--s", "2", "--json"),
        ("chain-deform", "--n", "9", "--alpha", "7,4,1", "--b", "2", "--json"),
        ("count-real", "--n", "4", "--m", "2", "--alpha", "3,1",
         "--beta", "2,1", "--a", "1", "--b", "1", "--c", "1", "--json"),
        ("triple-witness", "--n", "4", "--m", "2", "--alpha", "3,1",
         "--beta", "2,1", "--a", "1", "--b", "1", "--c", "1", "--json"),
        ("appendix-a", "--json"),
    ])
    def test_byte_identical_reruns(self, capsys, argv):
        rc1, out1, _ = run(capsys, *argv)
        rc2, out2, _ = run(capsys, *argv)
        assert (rc1, out1) == (rc2, out2)
        json.loads(out1)

    def test_env_seed_default_and_flag_override(self, capsys, monkeypatch):
        argv = ("cell", "--n", "9", "--alpha", "7,4,1", "--s", "2", "--json")
        monkeypatch.setenv(cli.SEED_ENV, "5")
        _, via_env, _ = run(capsys, *argv)
        monkeypatch.delenv(cli.SEED_ENV)
        _, via_flag, _ = run(capsys, *argv, "--seed", "5")
        _, via_default, _ = run(capsys, *argv)
        assert via_env == via_flag
        assert via_env != via_default
        monkeypatch.setenv(cli.SEED_ENV, "5")
        _, env_beaten, _ = run(capsys, *argv, "--seed", "0")
        assert env_beaten == via_default

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "pierikit.cli", "pieri", "--n", "9",
             "--alpha", "7,4,1", "--r", "1"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "8,4,1\n7,5,1\n7,4,2\n"
