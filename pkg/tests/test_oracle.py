from fractions import Fraction as F
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from fractw.errors import TooLarge, WitnessInvalid
from fractw.exact import ColorSet, cs_intersect
from fractw.generators import (clique_graph, cycle_graph, cycle_witness, generate, kneser_graph,
                               mycielski_graph)
from fractw.graph import BLUE, BLUE_ONLY, RED, EliminationWitness, RBGraph, max_clique, min_fill_witness
from fractw.oracle import Tableau, bfold_color, certify_gadget, chif_exact, chromatic_number, enumerate_mis

GROTZSCH = mycielski_graph(cycle_graph(5))

FIXTURES = (
    [(f"K{r}", clique_graph(r), F(r)) for r in range(1, 7)]
    + [(f"C{2 * k + 1}", cycle_graph(2 * k + 1), F(2 * k + 1, k)) for k in range(1, 5)]
    + [("Kneser(5,2)", kneser_graph(5, 2)[0], F(5, 2))]
)


def scipy_chif(g: RBGraph) -> float:
    """Covering LP with columns from networkx and the HiGHS solver."""
    blue = nx.Graph([(u, v) for u, v, c in g.edges() if c == BLUE])
    blue.add_nodes_from(range(g.n))
    cols = list(nx.find_cliques(nx.complement(blue)))
    A = [[-1.0 if v in S else 0.0 for S in cols] for v in range(g.n)]
    res = linprog([1.0] * len(cols), A_ub=A, b_ub=[-1.0] * g.n, bounds=(0, None), method="highs")
    assert res.status == 0
    return res.fun


def assert_proper(g, assign, b):
    for v, s in assign.items():
        assert len(s) == b
    for u, v, c in g.edges():
        if c == BLUE:
            assert not assign[u] & assign[v]


def test_enumerate_mis_examples():
    assert enumerate_mis(clique_graph(4)) == [frozenset({i}) for i in range(4)]
    c5 = enumerate_mis(cycle_graph(5))
    assert len(c5) == 5 and all(len(s) == 2 for s in c5)
    assert enumerate_mis(RBGraph(3)) == [frozenset({0, 1, 2})]


def test_enumerate_mis_ignores_red_edges():
    g = RBGraph(3, [(0, 1, RED), (1, 2, BLUE)])
    assert sorted(map(sorted, enumerate_mis(g))) == [[0, 1], [0, 2]]


def test_guard_and_env(monkeypatch):
    with pytest.raises(TooLarge):
        enumerate_mis(RBGraph(31))
    with pytest.raises(TooLarge):
        chif_exact(cycle_graph(31))
    monkeypatch.setenv("FRACTW_GUARD_N", "4")
    with pytest.raises(TooLarge):
        chif_exact(cycle_graph(5))
    with pytest.raises(TooLarge):
        bfold_color(cycle_graph(5), 5, 2)


@pytest.mark.parametrize("name, g, expected", FIXTURES, ids=[f[0] for f in FIXTURES])
def test_chif_fixtures(name, g, expected):
    cert = chif_exact(g)
    assert cert.value == expected
    assert sum(cert.primal) == sum(cert.dual) == expected
    cert.check(g)
    assert scipy_chif(g) == pytest.approx(float(expected), abs=1e-9)


def test_c5_dual_is_uniform_half():
    cert = chif_exact(cycle_graph(5))
    assert cert.dual == [F(1, 2)] * 5


def test_grotzsch_and_c7_gadgets():
    cert = certify_gadget(GROTZSCH, min_fill_witness(GROTZSCH))
    assert (cert.chif_lb, cert.clique_no) == (F(29, 10), 2)
    assert cert.width == min_fill_witness(GROTZSCH).width
    c7 = certify_gadget(cycle_graph(7), cycle_witness(7))
    assert c7.chif_lb == F(7, 3)
    k5 = certify_gadget(clique_graph(5), generate("clique", 5).witness)
    assert (k5.chif_lb, k5.clique_no) == (5, 5)
    assert generate("mycielski", generate("cycle", 5)).chif_lb == F(29, 10)


def test_certify_gadget_rejects_bad_witness():
    with pytest.raises(WitnessInvalid):
        certify_gadget(clique_graph(4), EliminationWitness([0, 1, 2, 3], {}, 1))


def test_certificate_coloring_realizes_value():
    for _, g, expected in FIXTURES + [("Grotzsch", GROTZSCH, F(29, 10))]:
        cert = chif_exact(g)
        phi = cert.coloring()
        assert all(phi[v].measure == 1 for v in range(g.n))
        for u, v, c in g.edges():
            assert phi[u].isdisjoint(phi[v])
        union = ColorSet.of()
        for s in phi.values():
            union = union | s
        assert union.measure <= expected


def test_tableau_small_lp():
    # max y0 + y1 s.t. y0 + 2 y1 <= 4, 3 y0 + y1 <= 6  ->  (8/5, 6/5), value 14/5
    tab = Tableau([[F(1), F(2)], [F(3), F(1)]], [F(4), F(6)], [F(1), F(1)])
    assert tab.solve() == "optimal"
    assert tab.primal() == [F(8, 5), F(6, 5)]
    assert tab.value == F(14, 5)


def test_bfold_examples():
    c5 = cycle_graph(5)
    found = bfold_color(c5, 5, 2)
    assert found is not None
    assert_proper(c5, found, 2)
    assert bfold_color(c5, 4, 2) is None
    for _, g, _ in FIXTURES:
        chi = chromatic_number(g)
        assign = bfold_color(g, chi, 1)
        assert assign is not None
        assert_proper(g, assign, 1)


def test_chromatic_numbers():
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(kneser_graph(5, 2)[0]) == 3
    assert chromatic_number(GROTZSCH) == 4


@pytest.mark.parametrize("name, g, expected", FIXTURES, ids=[f[0] for f in FIXTURES])
def test_sandwich_and_rational_consistency(name, g, expected):
    value = chif_exact(g).value
    assert max_clique(g, BLUE_ONLY) <= value <= chromatic_number(g)
    p, q = value.numerator, value.denominator
    if q <= 3:
        assign = bfold_color(g, p, q)
        assert assign is not None
        assert_proper(g, assign, q)
        if p > q:
            assert bfold_color(g, p - 1, q) is None


@st.composite
def blue_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return RBGraph(n, [(u, v, BLUE) for (u, v), k in zip(pairs, keep) if k])


@settings(max_examples=60, deadline=None)
@given(blue_graphs())
def test_random_graphs_match_scipy_and_duality(g):
    cert = chif_exact(g)
    cert.check(g)
    assert float(cert.value) == pytest.approx(scipy_chif(g), abs=1e-7)
    assert max_clique(g, BLUE_ONLY) <= cert.value <= chromatic_number(g)


target_cells = st.lists(st.integers(0, 59), min_size=1, max_size=12, unique=True)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["C5", "C7", "Kneser", "Grotzsch"]), target_cells)
def test_scaled_overlap_never_exceeds_inverse_chif(which, cells):
    """Any unit target meets some vertex's set in at most 1/chi_f."""
    g = {"C5": cycle_graph(5), "C7": cycle_graph(7), "Kneser": kneser_graph(5, 2)[0],
         "Grotzsch": GROTZSCH}[which]
    cert = chif_exact(g)
    span = cert.value
    # a measure-1 target built from equal pieces of [0, span)
    piece = span / 60
    raw = ColorSet.from_pairs((c * piece, (c + 1) * piece) for c in cells)
    scale = 1 / raw.measure
    target = ColorSet.from_pairs((lo * scale, hi * scale) for lo, hi in raw.intervals)
    assert target.measure == 1
    phi = cert.coloring()
    least = min(cs_intersect(phi[v], target).measure for v in range(g.n))
    assert least <= 1 / cert.value
