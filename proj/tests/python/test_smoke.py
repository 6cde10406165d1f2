"""Smoke tests for the python module: a handful of known-value checks."""

import pytest

import vworks

CHAIN3 = {"n": 3, "leq": [[0, 1], [1, 2]]}
STEP_FRAME = {"variant": "classical", "carrier": {"n": 2, "leq": []}, "succ": [[1], []]}


def test_convex_hyperspace_of_the_chain():
    h = vworks.hyperspace(CHAIN3, "convex")
    assert len(h["elems"]) == 7
    assert [0, 2] not in h["elems"]  # the only non-convex subset
    assert h["order"]["n"] == 7


def test_upper_hyperspace_of_a_v():
    v = {"n": 3, "leq": [[0, 1], [0, 2]]}
    h = vworks.hyperspace(v, "upper")
    assert sorted(map(tuple, h["elems"])) == [(), (0, 1, 2), (1,), (1, 2), (2,)]


def test_classical_needs_a_discrete_base():
    with pytest.raises(vworks.WorkbenchError):
        vworks.hyperspace(CHAIN3, "classical")


def test_closures():
    assert vworks.up_closure(CHAIN3, [1]) == [1, 2]
    assert vworks.down_closure(CHAIN3, [1]) == [0, 1]
    assert vworks.convex_closure(CHAIN3, [0, 2]) == [0, 1, 2]
    assert vworks.opposite(CHAIN3)["n"] == 3


def test_dualize_box_table():
    alg = vworks.dualize(STEP_FRAME)
    assert alg["atoms"] == 2
    assert alg["box"] == [2, 2, 3, 3]


def test_framify_round_trip():
    alg = vworks.dualize(STEP_FRAME)
    frame = vworks.framify(alg)
    assert frame["succ"] == [[1], []]
    report = vworks.check_axioms(alg)
    assert report["ok"]


def test_bisim_blocks():
    part = vworks.bisim(STEP_FRAME)
    assert part["blocks"] == [[0], [1]]
    dead = {"variant": "classical", "carrier": {"n": 3, "leq": []}, "succ": [[], [], []]}
    assert vworks.bisim(dead)["blocks"] == [[0, 1, 2]]


def test_chain_sizes():
    chain = vworks.chain("classical", 3)
    assert [level["size"] for level in chain["levels"]] == [1, 2, 4, 16]
    assert not chain["convergence"]["converged"]


def test_generation_report():
    rep = vworks.generation({"n": 2, "leq": [[0, 1]]}, "upper")
    assert rep["ok"]


def test_compose_terms_box_substitution():
    lhs = {"arity": ["p"], "term": {"op": "box", "args": [{"var": "p"}]}}
    bot = {"arity": [], "term": {"op": "bot"}}
    out = vworks.compose_terms(lhs, [bot], "10")
    assert out["rank"] == 1
    assert out["elements"] == [[]]  # boxhat of bottom holds only the empty subset


def test_check_runs_a_suite():
    rep = vworks.check(suite="onestep", seed=7, trials=20)
    assert rep["ok"]
    assert rep["seed"] == 7


def test_dot_export():
    dot = vworks.hyperspace_dot({"n": 2, "leq": [[0, 1]]}, "upper")
    assert "digraph" in dot
    assert "{0,1}" in dot
