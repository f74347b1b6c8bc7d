import io
import json
from fractions import Fraction
from pathlib import Path

import pytest

from jugglecards.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "narayana", "--b", "5", "--n", "8"], "490"),
        (["count", "p4", "--n", "6", "--b", "2"], "1"),
        (["count", "js", "--arrangement", "3,1,4,2", "--n", "9", "--m", "1"], "11050"),
        (["count", "g", "--b", "2", "--n", "6"], "15"),
        (["count", "stirling2", "--n", "9", "--k", "3"], "3025"),
        (["count", "gen-stirling", "--n", "2", "--k", "3", "--m", "2"], "4"),
        (["count", "stirling1", "--n", "4", "--k", "2"], "11"),
        (["count", "p0", "--n", "5", "--b", "4"], "5"),
        (["count", "p2", "--n", "4", "--b", "2"], "1"),
        (["count", "qd", "--d", "4", "--n", "7", "--b", "3"], "35"),
    ],
)
def test_count_prints_exact_integers(capsys, argv, expected):
    assert run(capsys, *argv) == (0, expected + "\n", "")


def test_count_missing_flag_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "narayana", "--b", "5"])
    assert exc.value.code == 2


def test_count_rejects_bad_arrangement(capsys):
    code, out, err = run(
        capsys, "count", "js", "--arrangement", "3,1,4", "--n", "2", "--m", "1"
    )
    assert code == 2 and out == "" and "not a permutation" in err


def test_convert_partition_to_sequence(capsys):
    payload = json.dumps(
        {"blocks": [[1, 4, 9], [2, 6], [3, 5, 8], [7]], "target": [3, 1, 4, 2]}
    )
    code, out, _ = run(capsys, "convert", "partition", "sequence", "--payload", payload)
    assert code == 0
    assert json.loads(out) == {"b": 4, "cards": "C3 C3 C2 C4 C3 C4 C3 C2 C2"}


def test_convert_sequence_to_partition_roundtrips(capsys):
    payload = json.dumps({"b": 4, "cards": "C3 C3 C2 C4 C3 C4 C3 C2 C2"})
    code, out, _ = run(capsys, "convert", "sequence", "partition", "--payload", payload)
    assert code == 0
    parsed = json.loads(out)
    assert parsed == {
        "blocks": [[1, 4, 9], [2, 6], [3, 5, 8], [7]],
        "target": [3, 1, 4, 2],
    }
    code, out, _ = run(
        capsys, "convert", "partition", "sequence", "--payload", json.dumps(parsed)
    )
    assert json.loads(out)["cards"] == "C3 C3 C2 C4 C3 C4 C3 C2 C2"


def test_convert_dyck_both_ways(capsys):
    payload = json.dumps({"b": 5, "cards": "C3 C5 C1 C5 C2 C5 C2 C5"})
    _, out, _ = run(capsys, "convert", "sequence", "dyck", "--payload", payload)
    assert json.loads(out) == {"dyck": "((()()))(())(())"}
    _, out, _ = run(
        capsys, "convert", "dyck", "sequence", "--payload", '{"dyck": "()"}'
    )
    assert json.loads(out) == {"b": 1, "cards": "C1"}


def test_convert_digraph_to_sequence(capsys):
    payload = json.dumps(
        {
            "k": 5,
            "arcs": [[3, 5], [1, 3], [2, 1], [5, 2], [1, 4], [3, 4]],
            "target": [4, 5, 2, 1, 3],
        }
    )
    _, out, _ = run(capsys, "convert", "digraph", "sequence", "--payload", payload)
    assert json.loads(out) == {"b": 5, "cards": "C2,4 C2,5 C2,3 C5,4 C5,2 C4,2"}


def test_convert_cover_to_sequence_reports_the_forced_start(capsys):
    payload = json.dumps(
        {
            "rows": [
                [1, 0, 1, 0, 0, 0, 1],
                [0, 1, 0, 0, 1, 0, 0],
                [1, 0, 0, 1, 0, 1, 0],
                [0, 1, 0, 0, 1, 0, 0],
                [0, 0, 1, 1, 0, 1, 1],
            ],
            "terminal": [4, 1, 5, 3, 2],
        }
    )
    _, out, _ = run(capsys, "convert", "cover", "sequence", "--payload", payload)
    assert json.loads(out) == {
        "b": 5,
        "cards": "C4,5 C4,5 C1,5 C3,4 C4,5 C2,4 C2,3",
        "start": [1, 3, 4, 2, 5],
    }


def test_convert_sequence_to_cover_and_back_to_multigraph(capsys):
    payload = json.dumps({"b": 4, "cards": "C2,4 C1,3 C2,3"})
    _, out, _ = run(capsys, "convert", "sequence", "cover", "--payload", payload)
    cover = json.loads(out)
    assert cover["rows"] == [[1, 1, 0], [1, 0, 0], [0, 1, 1], [0, 0, 1]]
    _, out, _ = run(
        capsys, "convert", "cover", "multigraph", "--payload", json.dumps(cover)
    )
    graph = json.loads(out)
    _, out, _ = run(
        capsys, "convert", "multigraph", "cover", "--payload", json.dumps(graph)
    )
    assert json.loads(out)["rows"] == cover["rows"]


def test_convert_reads_stdin_and_rejects_unknown_pairs(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"dyck": "(())"}'))
    code, out, _ = run(capsys, "convert", "dyck", "sequence")
    assert code == 0 and json.loads(out) == {"b": 2, "cards": "C2 C2"}
    code, _, err = run(
        capsys, "convert", "partition", "dyck", "--payload", '{"blocks": []}'
    )
    assert code == 2 and "no converter" in err


def test_convert_names_the_violated_precondition(capsys):
    payload = json.dumps({"blocks": [[1, 2]], "target": [3, 2, 1]})
    code, _, err = run(capsys, "convert", "partition", "sequence", "--payload", payload)
    assert code == 2 and "blocks cannot reach this arrangement" in err


def test_verify_siteswap(capsys):
    code, out, _ = run(capsys, "verify", "siteswap", "3,4,5")
    assert code == 0
    assert json.loads(out) == {
        "kind": "siteswap", "valid": True, "reason": None, "balls": 4,
    }
    code, out, _ = run(capsys, "verify", "siteswap", "3,5,4", "--human")
    assert code == 1 and out.startswith("fail:") and "land together" in out


def test_verify_dyck(capsys):
    code, out, _ = run(capsys, "verify", "dyck", "((()()))(())(())")
    assert code == 0
    assert json.loads(out)["peaks"] == 4
    code, out, _ = run(capsys, "verify", "dyck", "(()")
    assert code == 1 and "unclosed" in json.loads(out)["reason"]
    code, out, _ = run(capsys, "verify", "dyck", ")(")
    assert code == 1 and "unmatched" in json.loads(out)["reason"]


def test_verify_cover(capsys):
    code, out, _ = run(capsys, "verify", "cover", '{"rows": [[1,0],[0,1],[0,1]]}')
    assert code == 1 and json.loads(out)["valid"] is False
    assert "column" in json.loads(out)["reason"]
    code, out, _ = run(capsys, "verify", "cover", '{"rows": [[1,1],[1,0],[0,1]]}')
    assert code == 0 and json.loads(out) == {
        "kind": "cover", "valid": True, "reason": None, "k": 3, "n": 2, "m": 2,
    }


def test_verify_minimal(capsys):
    code, out, _ = run(capsys, "verify", "minimal", "C1")
    assert code == 0 and json.loads(out)["valid"] is True
    code, out, _ = run(capsys, "verify", "minimal", "C3 C3", "--b", "3")
    assert code == 1
    assert "starting levels" in json.loads(out)["reason"]
    code, out, _ = run(capsys, "verify", "minimal", "C1 C1", "--b", "2")
    assert code == 1 and "C2 is never used" in json.loads(out)["reason"]


def test_render_writes_the_golden_document(capsys, tmp_path):
    out_file = tmp_path / "row.svg"
    code, out, _ = run(
        capsys, "render", "C3 C3 C2 C4 C3 C4 C3 C2 C2", "--output", str(out_file)
    )
    assert code == 0 and out == ""
    assert out_file.read_text() == (GOLDEN / "nine_card_row.svg").read_text()
    code, out, _ = run(capsys, "render", "C3", "--b", "4")
    assert out == (GOLDEN / "single_card.svg").read_text()


def test_render_rejects_nonpositive_dimensions(capsys):
    code, _, err = run(capsys, "render", "C3", "--card-width", "0")
    assert code == 2 and "card_width" in err


def test_census_counts_and_collects(capsys, monkeypatch):
    code, out, _ = run(
        capsys, "census", "--b", "2", "--n", "6",
        "--crossings", "4", "--perm", "id", "--uses-top",
    )
    assert (code, out) == (0, "15\n")
    code, out, _ = run(
        capsys, "census", "--b", "2", "--n", "4",
        "--crossings", "2", "--perm", "id", "--uses-top", "--collect",
    )
    rows = json.loads(out)
    assert len(rows) == 6 and all("C2" in row for row in rows)
    monkeypatch.setenv("JUGGLECARDS_JOBS", "2")
    code, out2, _ = run(
        capsys, "census", "--b", "2", "--n", "6",
        "--crossings", "4", "--perm", "id", "--uses-top",
    )
    assert out2 == "15\n"


def test_sample_is_reproducible(capsys):
    code, out, _ = run(capsys, "sample", "--b", "4", "--n", "10", "--seed", "7")
    assert code == 0
    assert json.loads(out) == {
        "b": 4, "cards": "C4 C1 C3 C4 C3 C2 C3 C3 C2 C2", "seed": 7,
    }
    _, again, _ = run(capsys, "sample", "--b", "4", "--n", "10", "--seed", "7")
    assert again == out
    _, human, _ = run(
        capsys, "sample", "--b", "4", "--n", "10", "--seed", "7", "--human"
    )
    assert human == "C4 C1 C3 C4 C3 C2 C3 C3 C2 C2\n"


def test_walk_exact_reports_the_one_over_b_mass(capsys):
    code, out, _ = run(capsys, "walk", "--b", "3", "--steps", "5", "--exact")
    assert code == 0
    parsed = json.loads(out)
    assert parsed["single_cycle_mass"] == "1/3"
    assert parsed["cycle_counts"]["1"] == "1/3"
    shares = [Fraction(v) for v in parsed["distribution"].values()]
    assert len(shares) == 6 and sum(shares) == 1
    code, out, _ = run(capsys, "walk", "--b", "3", "--steps", "5", "--human")
    assert out.splitlines()[0] == "single-cycle mass: 1/3"


def test_walk_monte_carlo_is_reproducible(capsys):
    argv = ["walk", "--b", "3", "--steps", "4", "--trials", "50", "--seed", "1"]
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["single_cycle_mass"] == "21/50"
    _, again, _ = run(capsys, *argv)
    assert again == out
