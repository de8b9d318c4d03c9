import io
import json
import subprocess
import sys

import pytest

from grafotop.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, json.loads(out.getvalue()) if out.getvalue().lstrip()[:1] in "{[" else out.getvalue()


@pytest.mark.parametrize(
    "argv, code, key, value",
    [
        (["dim", "bull"], 0, "value", "22/15"),
        (["dim", "dumbbell:3,4,3"], 0, "value", "319/100"),
        (["chi", "petersen"], 0, "value", -5),
        (["chi", "--builtin", "cycle", "6"], 0, "value", 0),
        (["betti", "octahedron"], 0, "value", [1, 0, 1]),
        (["homotopy", "contractible", "wheel:5"], 0, "verdict", "yes"),
        (["homotopy", "contractible", "cycle:5"], 1, "verdict", "no"),
        (["homotopy", "equivalent", "cycle:4", "c4_pyramid"], 0, "verdict", "yes"),
        (["topo", "validate", "c6_windows"], 0, "overall", "yes"),
        (["topo", "validate", "c6_thirds"], 1, "overall", "no"),
        (["topo", "summary", "necklace_large"], 0, "topological_dimension", "5/3"),
        (["homeo", "check", "necklace_small", "necklace_large"], 0, "verdict", "yes"),
        (["homeo", "one", "cycle:4", "cycle:9"], 0, "verdict", "yes"),
        (["homeo", "one", "cycle:4", "path:4"], 1, "verdict", "no"),
        (["dim", "nosuch"], 2, "kind", "input"),
        (["topo", "optimize", "c6_thirds"], 2, "kind", "input"),
    ],
)
def test_commands(argv, code, key, value):
    got_code, payload = run(*argv)
    assert got_code == code
    assert payload[key] == value


def test_betti_details():
    code, payload = run("betti", "octahedron")
    assert code == 0 and payload["details"]["counts"] == [6, 12, 8]


def test_graph_formats(tmp_path):
    code, text = run("graph", "bull", "--format", "dot")
    assert code == 0 and "--" in text
    p = tmp_path / "bull.dot"
    p.write_text(text)
    assert run("dim", str(p)) == (0, run("dim", "bull")[1])
    code, listing = run("graph", "--list")
    assert code == 0 and "petersen" in json.dumps(listing)


def test_inline_maps():
    code, rep = run("fix", "lefschetz", "octahedron", "--map", '{"1":6,"6":1,"2":5,"5":2,"3":4,"4":3}')
    assert code == 0 and rep["lefschetz"] == 0
    code, rep = run("fix", "lefschetz", "octahedron", "--map", '{"1":2,"2":1,"3":3,"4":4,"5":5,"6":6}')
    assert code == 2
    code, rep = run("fix", "invariant", "sun_arcs", "--auto", "1")
    assert code == 0 and rep["lefschetz"]["lefschetz"] == 2


def test_morse_and_curvature():
    code, rep = run("morse", "cycle:4", "--function", '{"1":0,"2":1,"3":3,"4":2}')
    assert code == 0
    code, rep = run("curvature", "octahedron", "--expectation")
    assert code == 0


def test_strategy_topology_ref():
    code, rep = run("topo", "validate", "star@petersen")
    assert code == 0 and rep["overall"] == "yes"


def test_two_inputs_required():
    with pytest.raises(SystemExit) as exc:
        main(["homeo", "check", "c6_windows"], io.StringIO())
    assert exc.value.code == 2


def test_deterministic_output():
    a = run("homeo", "subdivide", "cycle:4", "--edge", "1", "2")
    b = run("homeo", "subdivide", "cycle:4", "--edge", "1", "2")
    assert a == b and a[0] == 0


def test_suite_subset():
    code, rep = run("suite", "--theorems", "6", "--seed", "3")
    assert code == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "grafotop.cli", "chi", "cube"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == -4
