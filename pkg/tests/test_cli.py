import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from lattle.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("key", ["fig1", "fig2", "fig3", "fig4", "fig5"])
def test_analyze_golden(capsys, key):
    code, out, _ = run(capsys, "analyze", key)
    assert code == 0
    assert out == (GOLDEN / f"{key}.txt").read_text()


def test_analyze_fig1_zero_row(capsys):
    _, out, _ = run(capsys, "analyze", "fig1", "--no-laws")
    row = next(line for line in out.splitlines() if line.startswith("x^0 "))
    assert row.split()[1:] == ["1", "fg", "eg", "g", "c", "b", "a", "c", "0"]


def test_analyze_fig5_json(capsys):
    code, out, _ = run(capsys, "analyze", "fig5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["stonean"]["d_stonean"] is True
    assert doc["closed_filters"] == ["F_0", "F_a", "F_b", "F_c", "F_1"]
    assert doc["laws"]["fails"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ("analyze", "fig4", "--format", "json"),
        ("laws", "fig2", "fig3", "--format", "json"),
        ("search", "cond1 & !cond2", "--max-size", "7", "--format", "json"),
        ("search", "cond2", "--mode", "random", "--seed", "5", "--budget", "30", "--format", "json"),
    ],
)
def test_json_is_byte_deterministic(capsys, argv):
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    json.loads(first)


def test_dot(capsys):
    code, out, _ = run(capsys, "analyze", "fig6", "--format", "dot")
    assert code == 0 and "rankdir=BT" in out
    assert out.count("->") == 7


def test_laws_exit_codes(capsys):
    code, out, _ = run(capsys, "laws", "fig2", "--law", "thm2.8")
    assert code == 0 and "thm2.8" in out and "holds" in out
    code, out, _ = run(capsys, "laws", "fig3", "--law", "thm5.5.ii")
    assert code == 0 and "documented counterexample" in out
    assert run(capsys, "laws", "fig1", "--law", "thm99")[0] == 1


def test_laws_exit_4_on_unexplained_failure(capsys, monkeypatch):
    from dataclasses import replace

    from lattle import laws

    law = laws.lookup("thm5.5.ii")
    monkeypatch.setitem(laws._REGISTRY, "thm5.5.ii", replace(law, refuted=""))
    assert run(capsys, "laws", "fig3", "--law", "thm5.5.ii")[0] == 4


def test_search_exit_codes(capsys):
    code, out, _ = run(capsys, "search", "thm2.1.x", "--max-size", "5")
    assert code == 0 and out.startswith("none")
    code, out, _ = run(capsys, "search", "thm5.5.ii", "--max-size", "6")
    assert code == 5 and "found" in out
    code, out, _ = run(capsys, "search", "maximal & !prime", "--max-size", "6")
    assert code == 0 and "filter: F_a" in out
    assert run(capsys, "search", "cond1 & pretty", "--max-size", "5")[0] == 1
    assert run(capsys, "search", "cond1 &", "--max-size", "5")[0] == 1
    assert run(capsys, "search", "cond1", "--max-size", "12")[0] == 1
    assert run(capsys, "search", "cond1", "--max-size", "1")[0] == 1


def test_corpus(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0 and out.splitlines()[3] == "fig4  12"
    code, out, _ = run(capsys, "corpus", "show", "fig6")
    assert "  a-d" in out
    path = tmp_path / "fig5.json"
    assert run(capsys, "corpus", "export", "fig5", str(path))[0] == 0
    a = run(capsys, "analyze", str(path), "--format", "json")[1]
    b = run(capsys, "analyze", "fig5", "--format", "json")[1]
    assert a == b
    assert run(capsys, "corpus", "show", "fig9")[0] == 1
    assert run(capsys, "corpus", "show")[0] == 1


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "analyze")[0] == 1
    assert run(capsys, "analyze", "no/such/file.json")[0] == 1
    assert run(capsys, "--help")[0] == 0


def test_color(capsys, monkeypatch):
    monkeypatch.setenv("LATTLE_COLOR", "1")
    out = run(capsys, "laws", "fig5", "--law", "thm2.1.i")[1]
    assert "\x1b[32mholds" in out
    monkeypatch.setenv("LATTLE_COLOR", "0")
    assert "\x1b" not in run(capsys, "laws", "fig5", "--law", "thm2.1.i")[1]


def write(tmp_path, text):
    p = tmp_path / "in.json"
    p.write_text(text)
    return str(p)


@settings(max_examples=40)
@given(st.text(max_size=40).filter(lambda s: s.strip()[:1] != "{"))
def test_unparseable_input_exits_2(tmp_path_factory, text):
    path = write(tmp_path_factory.mktemp("p"), text)
    assert main(["analyze", path, "--no-laws"]) == 2


@settings(max_examples=30)
@given(st.integers(3, 6), st.data())
def test_non_lattice_exits_3(tmp_path_factory, n, data):
    # two maximal elements and no top, or an antichain
    labels = [f"e{i}" for i in range(n)]
    covers = [[labels[0], labels[i]] for i in range(1, data.draw(st.integers(2, n - 1)) + 1)]
    doc = {"name": "bad", "elements": labels, "covers": covers}
    path = write(tmp_path_factory.mktemp("q"), json.dumps(doc))
    assert main(["analyze", path, "--no-laws"]) == 3


@settings(max_examples=30)
@given(st.sampled_from(["name", "elements", "covers"]))
def test_schema_error_exits_2(tmp_path_factory, key):
    doc = {"name": "x", "elements": ["0", "1"], "covers": [["0", "1"]]}
    del doc[key]
    path = write(tmp_path_factory.mktemp("s"), json.dumps(doc))
    assert main(["analyze", path]) == 2


def test_console_script():
    r = subprocess.run(
        [sys.executable, "-m", "lattle.cli", "corpus", "list"], capture_output=True, text=True
    )
    assert r.returncode == 0 and r.stdout.startswith("fig1  9")
