import json
import subprocess
import sys

import pytest

from tricrit.cli import main
from tricrit.enumeration import enumerate_functions
from tricrit.formats import dumps, to_document
from tricrit.graphs import VertexKind as K
from tricrit.signs import swap_with_signs

from conftest import figure_eight, shuffled, star


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        p = tmp_path / name
        p.write_text(content if isinstance(content, str) else dumps(content))
        return str(p)

    return _write


def test_validate_star(capsys, write):
    code, out, _ = run(capsys, "validate", write("s.json", star()))
    assert code == 0 and out.startswith("valid")


def test_validate_duplicate_id(capsys, write):
    doc = to_document(star())
    doc["vertices"][1]["id"] = 0
    code, _, err = run(capsys, "validate", write("d.json", json.dumps(doc)))
    assert code == 1 and "duplicate" in err


def test_validate_missing_black(capsys, write):
    doc = to_document(figure_eight())
    black = next(v["id"] for v in doc["vertices"] if v["kind"] == "black")
    doc["vertices"] = [v for v in doc["vertices"] if v["id"] != black]
    doc["edges"] = [e for e in doc["edges"] if black not in e]
    path = write("b.json", json.dumps(doc))
    code, out, _ = run(capsys, "validate", path)
    assert code == 2 and "equal color counts" in out
    code, out, _ = run(capsys, "validate", path, "--json")
    assert code == 2 and "equal color counts" in {v["rule"] for v in json.loads(out)["violations"]}


def test_validate_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(dumps(star())))
    assert run(capsys, "validate", "-")[0] == 0


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "nope.json"))[0] == 1


def test_local_tree(capsys):
    code, out, _ = run(capsys, "local-tree", "()")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 2 and doc["class"] == "local-tree"
    c1 = run(capsys, "local-tree", "(())", "--code")[1]
    c2 = run(capsys, "local-tree", "()()", "--code")[1]
    assert c1 == c2 and c1.startswith("01")
    assert run(capsys, "local-tree", "((")[0] == 1
    assert run(capsys, "local-tree", "()", "--dot")[1].startswith("graph")


def test_compare(capsys, write):
    import random

    g = figure_eight()
    a = write("a.json", g)
    b = write("b.json", shuffled(g, random.Random(0)))
    code, out, _ = run(capsys, "compare", a, b, "--relation", "conjugacy")
    assert (code, out.strip()) == (0, "RELATED")


def test_compare_swap_pair(capsys, write):
    from tricrit.canon import are_conjugate

    g = next(h for h in enumerate_functions(3) if not are_conjugate(h, swap_with_signs(h)))
    a, b = write("a.json", g), write("b.json", swap_with_signs(g))
    assert run(capsys, "compare", a, b, "--relation", "conjugacy")[:2] == (3, "NOT-RELATED\n")
    assert run(capsys, "compare", a, b, "--relation", "equivalence")[:2] == (0, "RELATED\n")


def test_compare_class_mismatch(capsys, write):
    from tricrit.graphs import CircleArrangement, tree_from_arrangement

    t = write("t.json", tree_from_arrangement(CircleArrangement.from_parens("()")))
    g = write("g.json", star())
    assert run(capsys, "compare", t, g, "--relation", "local")[0] == 2


def test_compare_invalid_graph(capsys, write):
    doc = to_document(star())
    doc["edges"] = doc["edges"][:2]
    bad = write("bad.json", json.dumps(doc))
    assert run(capsys, "compare", bad, write("g.json", star()))[0] == 2


def test_enumerate(capsys, tmp_path):
    out_dir = tmp_path / "e"
    code, out, _ = run(capsys, "enumerate", "3", "--relation", "conjugacy", "--signs", "oriented", "--out", str(out_dir), "--dot")
    assert code == 0
    k = len(enumerate_functions(3))
    assert out.strip() == f"n=3 relation=conjugacy signs=oriented classes={k}"
    index = json.loads((out_dir / "index.json").read_text())
    assert index["count"] == k == len(index["classes"])
    assert len(list(out_dir.glob("*.json"))) == k + 1
    assert len(list(out_dir.glob("*.dot"))) == k
    first = out_dir / index["classes"][0]["file"]
    assert run(capsys, "validate", str(first))[0] == 0


@pytest.mark.parametrize("argv", [["enumerate", "0"], ["enumerate", "7"], ["enumerate", "x"], ["enumerate", "2", "--signs", "odd"], ["table", "6"], ["table", "3", "--diff-paper"], ["frobnicate"]])
def test_bad_flags(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_table(capsys):
    assert run(capsys, "table", "2")[1] == ",1\n1,1\n"
    code, out, _ = run(capsys, "table", "4")
    rows = [r.split(",") for r in out.strip().splitlines()]
    assert code == 0 and len(rows) == 15
    assert max(int(x) for r in rows[1:] for x in r[1:]) == 20


def test_table_diff(capsys):
    code, out, _ = run(capsys, "table", "4", "--diff-paper")
    assert code == 0
    assert "matched nonzero published cells" in out
    assert "171" in out and "179" in out


def test_signs(capsys, write):
    code, out, _ = run(capsys, "signs", write("s.json", star()))
    assert code == 0 and len(out.strip().splitlines()) == 1
    code, out, _ = run(capsys, "signs", write("f.json", figure_eight()))
    assert len(out.strip().splitlines()) == 2


def test_code_command(capsys, write):
    code, out, _ = run(capsys, "code", write("s.json", star()), "--relation", "equivalence")
    assert code == 0 and out.startswith("01")


def test_no_color(capsys, write, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    out = run(capsys, "validate", write("s.json", star()))[1]
    assert "\033[" not in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tricrit.cli", "local-tree", "()", "--code"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("01")
