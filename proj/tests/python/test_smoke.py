import json
import os
import subprocess
from fractions import Fraction

import pytest

import tokensign as ts

RATIONAL = {
    "type": "object",
    "required": ["num", "den", "approx"],
    "properties": {"num": {"type": "string"}, "den": {"type": "string"}, "approx": {"type": "number"}},
}
GRAPH = {
    "type": "object",
    "required": ["n", "m", "edges"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "m": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {"type": "array", "minItems": 3, "maxItems": 3, "items": {"type": "integer"}},
        },
    },
}


def test_graph_roundtrip():
    g = ts.SignedGraph(4, [(1, 2, 1), (2, 3, -1), (2, 4, -1), (3, 4, 1)])
    assert g.n == 4 and g.m == 4 and g.negative_edges == 2
    assert ts.SignedGraph.parse(g.to_text()) == g
    assert ts.is_balanced(g)


def test_levels_are_exact_fractions():
    assert ts.unbalance_level(ts.family("Kn_minus", 5)) == Fraction(132, 323)
    assert ts.unbalance_level(ts.family("Cn_minus", 15)) == Fraction(2, 4709)
    c5 = ts.family("Cn_minus", 5)
    assert ts.unbalance_level(ts.token_graph(c5, 2)) == Fraction(59, 96)


def test_frustration_and_bounds():
    index, witness = ts.frustration_index(ts.family("all_neg_Kn", 5))
    assert index == 4 and len(witness) == 5
    assert ts.frustration_bounds(ts.family("all_neg_Kn", 5), 2) == (4, 10, 12)


def test_petersen_classes():
    classes = ts.switching_iso_classes(ts.family("petersen", 10))
    assert len(classes) == 6
    assert sum(c["class_size"] for c in classes) == 64
    assert [c["frustration"] for c in classes] == [0, 1, 2, 2, 3, 3]


def test_switching_and_symmetry():
    g = ts.family("Kn_minus", 4)
    h = ts.switch(g, [1, 3])
    assert ts.canonical_signature(g) == ts.canonical_signature(h)
    assert ts.switching_equivalent(g, h) is not None
    assert ts.is_sign_symmetric(g)
    ev = ts.eigenvalues(g)
    assert ev == pytest.approx([-(5**0.5), -1, 1, 5**0.5])


def test_errors_carry_a_name():
    with pytest.raises(ts.TokensignError) as err:
        ts.family("foo", 5)
    assert err.value.name == "UnknownFamily"


def test_sweep():
    result = ts.verify_sweep(ts.claim_ids(), 5, 0)
    assert all(failed == 0 for _, failed in result.values())


@pytest.mark.skipif(not os.environ.get("TOKENSIGN_CLI"), reason="command-line tool not built")
def test_cli_json_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    cli = os.environ["TOKENSIGN_CLI"]

    def run(*args):
        out = subprocess.run([cli, *args, "--format", "json"], check=True, capture_output=True, text=True)
        return json.loads(out.stdout)

    level = run("unbalance", "--family", "Kn_minus", "--n", "5")
    for key in ("ell", "ell_n_minus_1", "ell_n"):
        jsonschema.validate(level[key], RATIONAL)
    assert Fraction(int(level["ell"]["num"]), int(level["ell"]["den"])) == Fraction(132, 323)

    token = run("token", "--example", "balanced_paw", "--k", "2")
    jsonschema.validate(token, GRAPH)
    assert token["n"] == 6 and token["m"] == 8
