import json

import pytest

from tubular.cli import EXIT_BOUND, EXIT_FAIL, EXIT_OK, EXIT_USAGE, run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    assert call(capsys, "classify", "0,0,1,0,1,0")[:2] == (EXIT_OK, "real Schur root 0:1\n")
    code, out, _ = call(capsys, "classify", "1,1,1,1,0,0")
    assert code == EXIT_OK and out.startswith("isotropic")
    assert call(capsys, "classify", "0,0,2,0,2,0")[1] == "neither\n"


def test_classify_bad_vector(capsys):
    code, _, err = call(capsys, "classify", "1,2,x")
    assert code == EXIT_USAGE and "error" in err


def test_compat(capsys):
    code, out, _ = call(capsys, "compat", "0:1", "0:-1")
    assert code == EXIT_OK and out == "incompatible (same slope, x = -y)\n"
    assert call(capsys, "compat", "0:1", "2:1")[1].startswith("compatible")


def test_roots_json(capsys):
    code, out, _ = call(capsys, "roots", "--max-height", "1", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["schema"] == "tubular.roots/1"
    assert len(doc["roots"]) == 2 * 8  # slopes 0 and inf


def test_arc_render(capsys, tmp_path):
    target = tmp_path / "arc.svg"
    code, out, _ = call(capsys, "arc", "render", "7/4", "-o", str(target), "--", "-k")
    assert code == EXIT_OK and target.exists() and "wrote" in out
    assert call(capsys, "arc", "render", "0", "+", "-o", str(tmp_path / "b.svg"))[0] == EXIT_OK


def test_arc_intersect(capsys):
    assert call(capsys, "arc", "intersect", "7/4:+", "inf:-")[1] == "2\n"
    assert call(capsys, "arc", "intersect", "7/4:+", "inf:k")[0] == EXIT_USAGE


def test_quiver_mutate(capsys):
    code, out, _ = call(capsys, "quiver", "mutate", "--fixture", "bt_sphere", "--seq", "1,1")
    assert code == EXIT_OK and out.startswith("n=6")
    assert call(capsys, "quiver", "mutate", "--fixture", "nope", "--seq", "1")[0] == EXIT_USAGE
    code, out, _ = call(capsys, "quiver", "mutate", "--fixture", "delta_d4", "--seq", "2", "--format", "dot")
    assert out.startswith("digraph")


def test_quiver_verify(capsys):
    assert call(capsys, "quiver", "verify", "e7")[:2] == (EXIT_OK, "OK (order=rl)\n")
    assert call(capsys, "quiver", "verify", "d4-class")[0] == EXIT_OK
    code, out, _ = call(capsys, "quiver", "verify", "e6")
    assert code == EXIT_FAIL and "pendant" in out


def test_exchange_explore(capsys, tmp_path):
    code, out, _ = call(capsys, "exchange", "explore", "--depth", "1")
    assert code == EXIT_OK and len(json.loads(out)["nodes"]) == 7
    target = tmp_path / "g.dot"
    assert call(capsys, "exchange", "explore", "--depth", "1", "--format", "dot", "-o", str(target))[1] == ""
    assert target.read_text().startswith("graph")


def test_height_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("TUBULAR_MAX_HEIGHT", "2")
    assert call(capsys, "exchange", "explore", "--depth", "1")[0] == EXIT_BOUND
    monkeypatch.setenv("TUBULAR_MAX_HEIGHT", "abc")
    assert call(capsys, "exchange", "explore", "--depth", "1")[0] == EXIT_USAGE


def test_usage_errors(capsys):
    assert call(capsys)[0] == EXIT_USAGE
    assert call(capsys, "roots")[0] == EXIT_USAGE
