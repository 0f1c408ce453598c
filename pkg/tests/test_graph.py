from fractions import Fraction as F
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from fractw.dimacs import format_dimacs_rb, parse_dimacs_rb, read_witness, write_witness
from fractw.errors import BadParams, ParseError, SizeGuard
from fractw.generators import clique_graph, cycle_graph, cycle_witness, generate, kneser_graph
from fractw.graph import (ANY, BLUE, BLUE_ONLY, RED, EliminationWitness, RBGraph, clique_witness,
                          max_clique, maximal_cliques, min_fill_witness, verify_witness)


def to_nx(g: RBGraph, color_filter=ANY) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, c in g.edges() if color_filter == ANY or c == BLUE)
    return h


@st.composite
def rb_graphs(draw, max_n=11):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    g = RBGraph(n)
    for (u, v), pick in zip(pairs, draw(st.lists(st.sampled_from("-RB"), min_size=len(pairs),
                                                  max_size=len(pairs)))):
        if pick != "-":
            g.add_edge(u, v, pick)
    return g


def test_max_clique_examples():
    assert max_clique(clique_graph(5), BLUE_ONLY) == 5
    assert max_clique(cycle_graph(5), BLUE_ONLY) == 2
    petersen, _ = kneser_graph(5, 2)
    assert max_clique(petersen, BLUE_ONLY) == 2


def test_max_clique_red_edges_only_count_for_any():
    g = RBGraph(3, [(0, 1, RED), (1, 2, BLUE), (0, 2, BLUE)])
    assert max_clique(g, ANY) == 3
    assert max_clique(g, BLUE_ONLY) == 2
    assert max_clique(g, BLUE_ONLY, vertices=[0, 1]) == 1


def test_max_clique_guard(monkeypatch):
    g = RBGraph(70)
    with pytest.raises(SizeGuard):
        max_clique(g)
    assert max_clique(g, limit=None) == 1
    monkeypatch.setenv("FRACTW_CLIQUE_LIMIT", "5")
    with pytest.raises(SizeGuard):
        max_clique(RBGraph(6))


@settings(max_examples=150)
@given(rb_graphs())
def test_max_clique_matches_networkx(g):
    for f in (ANY, BLUE_ONLY):
        expected = max((len(c) for c in nx.find_cliques(to_nx(g, f))), default=0)
        assert max_clique(g, f) == expected
    assert max_clique(g, BLUE_ONLY) <= max_clique(g, ANY)


@settings(max_examples=100)
@given(rb_graphs(max_n=9))
def test_maximal_cliques_match_networkx(g):
    ours = sorted(sorted(c) for c in maximal_cliques(g, BLUE_ONLY))
    theirs = sorted(sorted(c) for c in nx.find_cliques(to_nx(g, BLUE_ONLY))) if g.n else []
    assert ours == theirs
    mis = sorted(sorted(c) for c in maximal_cliques(g, BLUE_ONLY, complement=True))
    comp = nx.complement(to_nx(g, BLUE_ONLY))
    assert mis == (sorted(sorted(c) for c in nx.find_cliques(comp)) if g.n else [])


def test_edges_are_simple_and_single_labelled():
    g = RBGraph(3)
    g.add_edge(0, 1, RED)
    with pytest.raises(ValueError):
        g.add_edge(0, 0, BLUE)
    with pytest.raises(ValueError):
        g.add_edge(1, 0, BLUE)
    assert g.color(1, 0) == RED
    assert g.blue_subgraph().m == 0


def test_verify_witness_examples():
    for t in range(1, 6):
        assert verify_witness(clique_graph(t + 1), clique_witness(t + 1))
    assert verify_witness(cycle_graph(5), cycle_witness(5))
    k4 = clique_graph(4)
    bad = EliminationWitness(list(range(4)), {0: (), 1: (0,), 2: (0, 1), 3: (0, 1, 2)}, 2)
    verdict = verify_witness(k4, bad)
    assert not verdict and "width" in verdict.detail


def test_verify_witness_reports_violations():
    c5 = cycle_graph(5)
    w = cycle_witness(5)
    w.back[4] = (3,)  # drops the closing edge 0-4
    assert "not covered" in verify_witness(c5, w).detail
    w = cycle_witness(5)
    w.back[2] = (1, 3)  # 3 comes later
    assert "not earlier" in verify_witness(c5, w).detail
    g = RBGraph(3, [(0, 2, BLUE), (1, 2, BLUE)])
    w = EliminationWitness([0, 1, 2], {0: (), 1: (), 2: (0, 1)}, 2)
    assert "not a clique" in verify_witness(g, w).detail


@settings(max_examples=80)
@given(rb_graphs(max_n=10))
def test_min_fill_witness_is_valid(g):
    w = min_fill_witness(g)
    assert verify_witness(g, w)
    assert w.width >= max_clique(g) - 1


def test_generate_examples():
    k4 = generate("clique", 4)
    assert (k4.n, k4.graph.m, k4.chif_lb, k4.clique_no) == (4, 6, 4, 4)
    c5 = generate("cycle", 5)
    assert (c5.n, c5.chif_lb, c5.clique_no, c5.width) == (5, F(5, 2), 2, 2)
    kn = generate("kneser", 5, 2)
    assert (kn.n, kn.graph.m, kn.chif_lb) == (10, 15, F(5, 2))
    for gadget in (k4, c5, kn):
        gadget.check()


def test_generate_rejects_bad_params():
    for args in (("clique", 0), ("cycle", 2), ("kneser", 3, 2), ("kneser", 5, 0)):
        with pytest.raises(BadParams):
            generate(*args)


@pytest.mark.parametrize("n", range(2, 9))
def test_kneser_clique_number_is_floor(n):
    for k in range(1, n // 2 + 1):
        cert = generate("kneser", n, k)
        assert cert.clique_no == n // k
        assert max_clique(cert.graph, BLUE_ONLY, limit=None) == n // k
        assert verify_witness(cert.graph, cert.witness)


def test_kneser_edges_join_disjoint_sets():
    g, labels = kneser_graph(6, 2)
    for i, j in combinations(range(g.n), 2):
        assert g.has_edge(i, j) == (not labels[i] & labels[j])


def test_dimacs_examples():
    g = parse_dimacs_rb("p edge 2 1\ne 1 2 R\n")
    assert g.n == 2 and g.color(0, 1) == RED
    g = parse_dimacs_rb("c plain file\np edge 3 2\ne 1 2\ne 2 3 B\n")
    assert g.color(0, 1) == BLUE and g.color(1, 2) == BLUE


@pytest.mark.parametrize("text, line", [
    ("p edge 2 1\ne 1 3 R\n", 2),
    ("p edge 2 1\ne 1 2 X\n", 2),
    ("e 1 2\n", 1),
    ("p edge 2 1\nc ok\nq 1 2\n", 3),
    ("p edge 2 1\ne 1 1\n", 2),
    ("p edge x 1\n", 1),
])
def test_dimacs_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_dimacs_rb(text)
    assert info.value.line == line


def test_dimacs_edge_count_must_match_header():
    with pytest.raises(ParseError):
        parse_dimacs_rb("p edge 3 2\ne 1 2\n")


@given(rb_graphs())
def test_dimacs_round_trip(g):
    assert parse_dimacs_rb(format_dimacs_rb(g, ("round trip",))) == g


def test_witness_file_round_trip(tmp_path):
    w = cycle_witness(7)
    path = tmp_path / "c7.witness.json"
    write_witness(w, path)
    assert '"1"' in path.read_text()  # vertices are 1-based on disk
    back = read_witness(path)
    assert back.order == w.order and back.width == w.width
    assert {v: tuple(b) for v, b in back.back.items()} == w.back
    path.write_text("{}")
    with pytest.raises(ParseError):
        read_witness(path)
