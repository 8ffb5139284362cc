import io
import json
from pathlib import Path

import pytest

from elpsplit.cli import main

PROGRAMS = Path(__file__).resolve().parent.parent / "programs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def prog(name):
    return PROGRAMS / name


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", prog("layered_asp.elp"))
    assert code == 0
    assert out.splitlines() == ["1 answer set", "{a,c,e,f,p}"]


def test_no_world_views_is_success(capsys):
    code, out, _ = run(capsys, "worldviews", "--semantics", "g91", prog("unsupported_knowledge.elp"))
    assert code == 0
    assert out.strip() == "0 world views"


def test_tdesp(capsys):
    code, out, _ = run(capsys, "tdesp", "--semantics", "k15", "--u", "p,q", prog("disjunction_known.elp"))
    assert code == 0
    assert out.splitlines() == ["1 world view", "[ {p} ]"]


def test_worldviews_canonical_order(capsys):
    _, out, _ = run(capsys, "worldviews", "--semantics", "s16", prog("cycle.elp"))
    assert out.splitlines() == ["2 world views", "[ {a,e} {b,e} ]", "[ {a,f} {b,f} ]"]


def test_tdespb_with_inner_layer(capsys):
    args = ["tdespb", "--u", "e,f,h,in,m,ne", "--inner", "e,f,h,m,ne", prog("eligibility_ground.elp")]
    _, out, _ = run(capsys, *args)
    assert out.splitlines() == ["1 world view", "[ {a,e,h,in} {a,f,in} ]"]


def test_two_inner_layers_innermost_first(capsys, tmp_path):
    path = tmp_path / "chain.elp"
    path.write_text("a | b. c :- K a. d :- not K c. e :- K d.")
    for command in ("esp", "tdespb", "tdesp"):
        args = [command, "--u", "a,b,c,d", "--inner", "a,b", "--inner", "a,b,c", path]
        code, out, _ = run(capsys, *args)
        assert code == 0
        assert out.splitlines() == ["1 world view", "[ {a,d,e} {b,d,e} ]"]


def test_esp(capsys):
    _, out, _ = run(capsys, "esp", "--u", "a,c,p,q", prog("layered_elp.elp"))
    assert out.splitlines() == ["1 world view", "[ {a,c,e,f,p} ]"]


def test_split_shows_parts(capsys):
    _, out, _ = run(capsys, "split", "--u", "p,q", prog("disjunction_known.elp"))
    assert out.splitlines() == ["% bottom", "p | q.", "% top", ":- not K p."]


def test_split_lists_sets(capsys):
    _, out, _ = run(capsys, "split", prog("disjunction_known.elp"))
    assert out.splitlines() == ["2 splitting sets", "{}", "{p,q}"]


def test_ground(capsys):
    _, out, _ = run(capsys, "ground", prog("eligibility.elp"))
    assert "appointment(mike) :- K interview(mike)." in out.splitlines()


def test_stratify(capsys):
    _, out, _ = run(capsys, "stratify", prog("eligibility_ground.elp"))
    lines = out.splitlines()
    assert lines[0] == "stratified"
    assert lines[-2:] == ["in: 1", "a: 2"]
    _, out, _ = run(capsys, "stratify", "--json", prog("cycle.elp"))
    assert json.loads(out) == {"stratified": False, "violation": ["e", "f"]}


def test_compare_json_schema(capsys):
    code, out, _ = run(capsys, "compare", "--json", "--u", "a,c,p,q", prog("layered_elp.elp"))
    assert code == 0
    data = json.loads(out)
    assert list(data) == [
        "program", "semantics", "splitting_set", "direct", "esp", "tdespb", "tdesp",
        "verdicts", "traces",
    ]
    assert set(data["verdicts"]) == {"esp_eq_direct", "tdespb_eq_direct", "tdesp_eq_direct", "tdespb_eq_esp"}
    assert all(data["verdicts"].values())
    assert data["direct"] == [[["a", "c", "e", "f", "p"]]]
    assert len(data["traces"]) == 4
    assert set(data["traces"][0]) == {"top_world_view", "es", "ec", "rq"}
    assert all(t["ec"] == ["K p"] for t in data["traces"])


def test_json_is_byte_stable_and_round_trips(capsys):
    args = ["compare", "--json", "--semantics", "k15", "--u", "p,q", prog("mutual_support.elp")]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert json.dumps(json.loads(first), indent=2) + "\n" == first


def test_compare_text(capsys):
    _, out, _ = run(capsys, "compare", "--semantics", "k15", "--u", "p,q", prog("disjunction_known.elp"))
    assert "  tdesp_eq_direct: false" in out
    assert "  [ {} ] es={K p} ec={K p} rq={}" in out


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("a | b."))
    _, out, _ = run(capsys, "solve", "-")
    assert out.splitlines() == ["2 answer sets", "{a}", "{b}"]


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.elp"
    bad.write_text("a :- K K b.")
    assert run(capsys, "solve", bad)[0] == 3
    assert run(capsys, "esp", "--u", "zz", prog("disjunction_known.elp"))[0] == 4
    invalid = tmp_path / "chain.elp"
    invalid.write_text("a :- b. b.")
    assert run(capsys, "esp", "--u", "b", invalid)[0] == 4
    assert run(capsys, "worldviews", "--max-subjective", "1", prog("cycle.elp"))[0] == 5
    assert run(capsys, "split", "--max-atoms", "2", prog("eligibility_ground.elp"))[0] == 5
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "esp", prog("disjunction_known.elp"))[0] == 2
    assert run(capsys, "solve", tmp_path / "missing.elp")[0] == 2
    code, _, err = run(capsys, "solve", prog("disjunction_known.elp"))
    assert code == 2 and "subjective" in err


def test_corpus_command(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    assert out.splitlines()[-1].endswith(", 0 failed")
    code, out, _ = run(capsys, "corpus", tmp_path)
    assert code == 0 and out.strip() == "0 checks, 0 failed"


@pytest.mark.parametrize("name", sorted(p.name for p in PROGRAMS.glob("*.elp")))
def test_every_sample_program_grounds(capsys, name):
    assert run(capsys, "ground", prog(name))[0] == 0
