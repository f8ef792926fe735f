import json

import pytest

from simpson.cli import main, stream_timeline
from simpson.core import TablePair
from simpson.generate import literature_example, toggling_sequence
from simpson.io import pair_to_json, parse_pair
from simpson.report import analyze, to_json

BLYTH = ["1000", "9000", "50", "950", "95", "5", "5000", "5000"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--counts", *BLYTH)
    assert code == 0
    assert "case 3 (Paradox)" in out
    assert "SP1" in out


def test_analyze_exit_on_sp(capsys):
    assert run(capsys, "analyze", "--counts", *BLYTH, "--exit-on-sp")[0] == 3
    assert run(capsys, "analyze", "--counts", *"31113111", "--exit-on-sp")[0] == 0


def test_analyze_nonpositive(capsys):
    code, _, err = run(capsys, "analyze", "--counts", "0", *BLYTH[1:])
    assert code == 2
    assert "positive" in err


def test_analyze_malformed_file(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"t1": {"a": 1.5}}')
    assert run(capsys, "analyze", str(f))[0] == 1
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "analyze")[0] == 1


def test_analyze_json_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", "--counts", *BLYTH, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["case"] == 3 and report["sp"] == "SP1"
    assert report["consistent"]
    assert report["quantities"]["mu"] == {"num": "219", "den": "2020", "approx": 219 / 2020}
    f = tmp_path / "echo.json"
    f.write_text(json.dumps(report["input"]))
    _, out2, _ = run(capsys, "analyze", str(f), "--json")
    assert json.loads(out2) == report


def test_report_consistent_for_corpus():
    for name in ("simpson1951", "blyth1971", "gardner1976", "lindley_novick1981", "hand1994"):
        r = analyze(literature_example(name).pair)
        assert r.consistent
        again = analyze(parse_pair(json.dumps(to_json(r)["input"])))
        assert to_json(again) == to_json(r)


def test_analyze_csv_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("t1,5,3,10,10\nt2,1,19,1,20\n"))
    code, out, _ = run(capsys, "analyze", "-")
    assert code == 0 and "case 3" in out


def test_corpus(capsys):
    code, out, _ = run(capsys, "corpus", "verify")
    assert code == 0
    assert out.count("PASS") == 32
    code, out, _ = run(capsys, "corpus", "show", "blyth1971", "--json")
    assert json.loads(out)["expected_case"] == 3
    assert run(capsys, "corpus", "show", "nobody")[0] == 1
    code, out, _ = run(capsys, "corpus", "list", "--json")
    assert len(json.loads(out)) == 32


def test_stream(tmp_path, capsys):
    seq = toggling_sequence(12)
    seq[5], seq[6] = seq[6], seq[5]
    f = tmp_path / "s.json"
    f.write_text(json.dumps([pair_to_json(p) for p in seq]))
    code, out, _ = run(capsys, "stream", str(f), "--json")
    timeline = json.loads(out)
    assert code == 0
    assert timeline["monotone"] is False and timeline["first_violation"] == 5


def test_stream_timeline_transitions():
    t = stream_timeline(toggling_sequence(8))
    assert t["monotone"] is True
    assert t["transitions"] == [1, 2, 3, 4, 5, 6, 7]
    assert [s["case"] for s in t["snapshots"][:4]] == [3, 1, 25, 27]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--property", "thm3", "--max-entry", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"property": "thm3", "checked": 256, "applicable": 256,
                               "violations": 0, "passed": True}
    assert run(capsys, "enumerate", "--property", "thm42")[0] == 1
    code, out, _ = run(capsys, "enumerate", "--property", "thm9-pattern-census",
                       "--max-entry", "3", "--json")
    assert code == 0 and json.loads(out)["applicable"] == 4
    code, out, _ = run(capsys, "enumerate", "--property", "thm6", "--random", "500",
                       "--seed", "1", "--max-entry", "9")
    assert code == 0 and "violations: 0" in out


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "representative", "25")
    assert code == 0
    p = parse_pair(out)
    from simpson import case_of
    assert case_of(p) == 25
    code, out, _ = run(capsys, "generate", "toggling", "5")
    assert len(json.loads(out)) == 5
    _, a, _ = run(capsys, "generate", "random", "--seed", "7")
    _, b, _ = run(capsys, "generate", "random", "--seed", "7")
    assert a == b
    assert run(capsys, "generate", "figure3", "10")[0] == 1
    assert run(capsys, "generate", "literature", "nobody")[0] == 1
    assert run(capsys, "generate", "representative", "28")[0] == 1
    code, out, _ = run(capsys, "generate", "literature", "hand1994")
    assert isinstance(parse_pair(out), TablePair)
