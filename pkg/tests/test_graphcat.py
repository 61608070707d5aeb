from __future__ import annotations

import itertools
import json
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from critdyn.graphcat import (
    FunctionalGraph, canonical_code, catalog, classify, contains_subgraph, is_isomorphic,
    verify_hasse_closure,
)
from critdyn.graphcat.catalog import CatalogIntegrityError, load_catalog_document
from critdyn.graphcat.hasse import add_cycle
from critdyn.mapexpr import parse_map
from critdyn.p1dyn import preperiodic_graph

CAT = catalog()


def nxg(g: FunctionalGraph):
    d = nx.DiGraph()
    d.add_nodes_from(range(g.n))
    d.add_edges_from(enumerate(g.succ))     # self-loops kept
    return d


def permuted(g: FunctionalGraph, perm):
    inv = {old: new for new, old in enumerate(perm)}
    return FunctionalGraph([inv[g.succ[old]] for old in perm])


def brute_isomorphic(g, h):
    if g.n != h.n:
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(perm[g.succ[v]] == h.succ[perm[v]] for v in range(g.n)):
            return True
    return False


functional = st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n, max_size=n)).map(
    FunctionalGraph)


def test_single_fixed_point_code_is_relabeling_invariant():
    assert canonical_code(FunctionalGraph([0])) == canonical_code(FunctionalGraph.from_edges([("x", "x")]))


def test_r3p5_code_under_random_permutations():
    g = CAT["R3P5"].graph
    rng = random.Random(5)
    for _ in range(25):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = permuted(g, perm)
        assert canonical_code(h) == CAT["R3P5"].code
        assert nx.is_isomorphic(nxg(g), nxg(h))


def test_r3p3_and_r3p4_differ():
    assert canonical_code(CAT["R3P3"].graph) != canonical_code(CAT["R3P4"].graph)


@given(functional)
def test_code_invariant_under_all_small_permutations(g):
    if g.n > 6:
        perms = [random.Random(g.n).sample(range(g.n), g.n) for _ in range(20)]
    else:
        perms = itertools.permutations(range(g.n))
    code = canonical_code(g)
    for perm in perms:
        assert canonical_code(permuted(g, list(perm))) == code


@given(functional, functional)
def test_isomorphism_agrees_with_brute_force_and_networkx(g, h):
    expected = brute_isomorphic(g, h)
    assert is_isomorphic(g, h) == expected == nx.is_isomorphic(nxg(g), nxg(h))


def test_isomorphism_examples():
    assert is_isomorphic(CAT["R3P1"].graph, CAT["R3P1"].graph)
    assert is_isomorphic(preperiodic_graph(parse_map("(2*z^2-z-1)/(2*z^2)").phi), CAT["R3P1"].graph)
    assert not is_isomorphic(CAT["N3E2"].graph, CAT["N3M3"].graph)


@pytest.mark.parametrize("big,small,expected", [
    ("R3P2", "R3P1", True), ("R3P5", "R3P4", True), ("R3P1", "R3P2", False),
])
def test_containment_examples(big, small, expected):
    assert contains_subgraph(CAT[big].graph, CAT[small].graph) is expected


def test_containment_matches_networkx_monomorphism():
    ids = sorted(CAT)
    for a, b in itertools.product(ids, ids):
        G, H = CAT[a].graph, CAT[b].graph
        if H.n > G.n:
            continue
        oracle = nx.algorithms.isomorphism.DiGraphMatcher(nxg(G), nxg(H)).subgraph_is_monomorphic()
        assert contains_subgraph(G, H) == oracle, (a, b)


def test_containment_is_transitive_on_catalog():
    ids = sorted(CAT)
    rel = {(a, b) for a in ids for b in ids if contains_subgraph(CAT[a].graph, CAT[b].graph)}
    for a, b in rel:
        for c in ids:
            if (b, c) in rel:
                assert (a, c) in rel


def test_classify_examples():
    g = preperiodic_graph(parse_map("(5*z^2-7*z+2)/(5*z^2)").phi)
    assert classify(g).exact == "R3P3"
    # R3P3 plus a fixed point with one extra preimage
    ext = add_cycle(CAT["R3P3"].graph, 1)
    cl = classify(ext)
    assert cl.status == "admits" and cl.admits
    assert classify(CAT["R3P0"].graph.extend([])).exact == "R3P0"
    assert classify(FunctionalGraph([0, 0])).status == "unknown"


def test_catalog_shape():
    assert len(CAT) == 15
    assert sorted(e.genus for e in CAT.values() if e.kind == "inadmissible") == [1, 1, 1, 2, 2, 2, 3, 5, 6]
    sizes = {k: len(v.graph) for k, v in CAT.items() if v.kind == "realizable"}
    assert sizes == {"R3P0": 4, "R3P1": 5, "R3P2": 7, "R3P3": 7, "R3P4": 9, "R3P5": 11}


def test_catalog_checksum_detects_tampering():
    doc = load_catalog_document()
    doc["entries"][0]["edges"] = doc["entries"][0]["edges"][:-1]
    with pytest.raises(CatalogIntegrityError):
        load_catalog_document(json.dumps(doc))


def test_every_realizable_entry_is_realized_by_its_example():
    for e in CAT.values():
        if e.example:
            assert is_isomorphic(preperiodic_graph(parse_map(e.example).phi), e.graph)


def test_hasse_closure_examples():
    rep = verify_hasse_closure()
    assert rep.ok and not rep.uncovered
    rows = {(r.source, r.step): r for r in rep.rows}
    assert rows[("R3P1", "add 2-cycle")].detail == "R3P4"
    assert rows[("R3P2", "add 1-cycle")].outcome == "contains" and "N3E1" in rows[("R3P2", "add 1-cycle")].detail
    leaf_steps = [r for r in rep.rows if r.source == "R3P5" and "preimage" in r.step]
    assert any({"N3H2", "N3H3"} & set(r.detail.split(",")) for r in leaf_steps)
    assert any("no rational periods > 2" in a or "length 1 or 2" in a for a in rep.assumptions)


def test_graph_json_round_trip():
    g = CAT["N3H2"].graph
    assert FunctionalGraph.from_json(json.dumps(g.to_json())).succ == g.succ
    with pytest.raises(ValueError):
        FunctionalGraph.from_json({"vertices": 0, "successor": []})
