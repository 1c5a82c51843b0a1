import io
import json
import subprocess
import sys

import pytest

from steinberg_rsk import correspondence as corr
from steinberg_rsk.cli import EXIT_INPUT, EXIT_OK, main, run
from steinberg_rsk.matrices import PartialPermutation


def call(argv, doc=None):
    text = doc if isinstance(doc, str) else json.dumps(doc) if doc is not None else ""
    return run(argv, io.StringIO(text))


def test_map_fixtures():
    res = call(["map"], {"p": 1, "q": 1, "ones": []})
    assert res.exit_code == EXIT_OK
    assert res.payload["diagram"]["render"] == ["+-"]
    res = call(["map"], {"p": 2, "q": 2, "ones": [[1, 1], [2, 2]]})
    assert res.payload["diagram"]["render"] == ["-+-+"]


def test_map_is_a_thin_adapter():
    t = PartialPermutation(3, 2, [(1, 2), (3, 1)])
    assert call(["map"], t.to_json()).payload == corr.forward(t).to_json()


def test_duplicate_cell_is_an_input_error():
    res = call(["map"], {"p": 1, "q": 1, "ones": [[1, 1], [1, 1]]})
    assert res.exit_code == EXIT_INPUT
    assert res.payload is None and res.diagnostics


@pytest.mark.parametrize("argv, doc", [
    (["map"], "not json"),
    (["map"], ""),
    (["map"], {"p": 2}),
    (["enum-pp"], {"p": 0, "q": 1}),
    (["rect"], {"tableau": {"chain": [[1]]}}),
    (["evac"], {"chain": [[2]]}),
])
def test_malformed_inputs(argv, doc):
    assert call(argv, doc).exit_code == EXIT_INPUT


def test_unmap_inverts_map():
    doc = {"p": 2, "q": 3, "ones": [[2, 3]]}
    triple = call(["map"], doc).payload
    assert call(["unmap"], triple).payload == doc


def test_dual_tauhat_rsk():
    assert call(["dual"], {"p": 2, "q": 2, "ones": [[1, 1], [2, 2]]}).payload == {"p": 2, "q": 2, "ones": [[1, 2]]}
    assert call(["tauhat"], {"p": 2, "q": 2, "ones": []}).payload == [[1, 1, 0], [0, 0, 1], [0, 0, 1]]
    out = call(["rsk"], {"rows": 3, "cols": 3, "entries": [[1, 1, 0], [0, 0, 1], [0, 0, 1]]}).payload
    assert out["qhat"]["chain"] == [[1], [1, 1], [2, 2]]
    assert out["phat"]["chain"] == [[1, 1], [2, 1], [2, 2]]
    oracle = call(["rsk", "--method", "oracle", "--seed", "3"], [[1, 1, 0], [0, 0, 1], [0, 0, 1]]).payload
    assert oracle == out


def test_tableau_commands():
    assert call(["evac"], {"chain": [[1], [1, 1], [2, 2]]}).payload["chain"] == [[1, 1], [2, 1], [2, 2]]
    res = call(["rect"], {"tableau": {"chain": [[1, 1], [2, 1], [2, 2]]}, "i": 1})
    assert res.payload["chain"] == [[1], [1, 1]]


def test_enumerations():
    assert len(call(["enum-pp"], {"p": 2, "q": 3}).payload) == 13
    assert len(call(["enum-syd"], {"q": 2, "p": 2}).payload) == 10
    assert len(call(["enum-syd"], {"q": 2, "p": 2, "admissible": True}).payload) == 7


def test_census_and_poset():
    out = call(["census"], {"p": 2, "q": 2}).payload
    assert out["pp_count"] == 7 and out["identity_holds"] is True
    poset = call(["poset"], {"q": 1, "p": 1}).payload
    assert len(poset["nodes"]) == 3
    bottom = poset["nodes"].index(["-", "+"])
    assert sorted(poset["edges"]) == sorted([bottom, j] for j in range(3) if j != bottom)
    assert call(["poset"], {"q": 2, "p": 2}).payload == call(["poset"], {"q": 2, "p": 2}).payload


def test_strict_mode_requires_seed():
    assert call(["verify", "--strict", "--trials", "3"]).exit_code == EXIT_INPUT
    assert call(["verify", "--trials", "1", "--seed", "1"]).exit_code == EXIT_INPUT


def test_verify_small_is_reproducible():
    a = call(["verify", "--pmax", "1", "--qmax", "2", "--seed", "4", "--trials", "3", "--strict"])
    b = call(["verify", "--pmax", "1", "--qmax", "2", "--seed", "4", "--trials", "3", "--strict"])
    assert a.exit_code == EXIT_OK and a.payload["passed"]
    strip = lambda r: [{k: v for k, v in c.items() if k != "seconds"} for c in r.payload["checks"]]
    assert strip(a) == strip(b)


def test_in_file(tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps({"p": 1, "q": 1, "ones": [[1, 1]]}))
    assert call(["map", "--in", str(f)]).payload["diagram"]["render"] == ["-+"]
    assert call(["map", "--in", str(tmp_path / "missing.json")]).exit_code == EXIT_INPUT


def test_unknown_command():
    assert call(["frobnicate"]).exit_code == EXIT_INPUT


def test_main_writes_json(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"p":2,"q":2,"ones":[]}'))
    assert main(["tauhat"]) == 0
    assert json.loads(capsys.readouterr().out) == [[1, 1, 0], [0, 0, 1], [0, 0, 1]]
    monkeypatch.setattr(sys, "stdin", io.StringIO("{"))
    assert main(["tauhat"]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["status"] == "error" and err["diagnostics"]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "steinberg_rsk.cli", "tauhat"],
                          input='{"p":1,"q":1,"ones":[[1,1]]}', capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [[0, 1], [1, 0]]


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK
    captured = capsys.readouterr()
    assert "usage" in captured.out and "error" not in captured.err
