import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from fractw.alice import GreedyAlice, RandomAlice
from fractw.bob import (AdversaryBob, AdversaryPlan, RandomBob, default_registry,
                        execute_adversary, in_theorem_range, plan_corollary1, plan_theorem3,
                        random_bob, verify_inclusion_exclusion)
from fractw.bounds import lb_corollary1
from fractw.errors import BadRange, ClaimViolated
from fractw.exact import ColorSet
from fractw.game import GameConfig, alice_move, bob_move, check_bob_move, play_game, start_game
from fractw.generators import GadgetCert, clique_graph, generate
from fractw.graph import BLUE, RED, clique_witness, verify_witness


def test_corollary1_plans():
    assert plan_corollary1(2, 2).guaranteed_bound == F(5, 2)
    plan = plan_corollary1(5, 4)
    assert [g.name for g in plan.gadgets] == ["K4", "K3"]
    assert plan.guaranteed_bound == F(65, 12)
    for t in range(2, 9):
        assert plan_corollary1(t, t).guaranteed_bound == t + 1 - F(1, t)


def test_theorem3_plans():
    c5 = [generate("cycle", 5)]
    plan = plan_theorem3(4, 3, c5)
    assert [g.name for g in plan.gadgets] == ["K3", "K2"]
    assert plan.guaranteed_bound == F(25, 6)
    plan = plan_theorem3(3, 2, c5)
    assert [g.name for g in plan.gadgets] == ["C5", "K1"]
    assert plan.guaranteed_bound == F(13, 5)
    assert plan_corollary1(3, 2).guaranteed_bound == F(5, 2)


def test_default_registry_plans():
    reg = default_registry()
    expected = {(3, 2): F(13, 5), (5, 3): F(64, 15), (7, 4): F(361, 60), (9, 5): F(469, 60)}
    for (t, w), bound in expected.items():
        assert plan_theorem3(t, w, reg).guaranteed_bound == bound
    for g in reg:
        g.check()


def test_out_of_range():
    with pytest.raises(BadRange):
        plan_corollary1(4, 2)
    with pytest.raises(BadRange):
        plan_theorem3(4, 2)
    assert not in_theorem_range(4, 2) and in_theorem_range(5, 3)


def test_plan_rejects_infeasible_gadgets():
    with pytest.raises(BadRange):
        AdversaryPlan(3, 2, (generate("clique", 3), generate("clique", 1)))
    with pytest.raises(BadRange):
        AdversaryPlan(3, 2, (generate("clique", 2),))


def test_plan_turn_count():
    plan = plan_corollary1(5, 4)
    # v_1 + K4, v_2 + K3, then 2*4-5-1 = 2 final vertices
    assert plan.N == 5 + 4 + 2
    assert plan.config == GameConfig(5, 4, 11)


@pytest.mark.parametrize("t,omega", [(t, w) for t in range(2, 8) for w in range(2, t + 1)
                                     if 2 * w >= t + 1])
def test_corollary1_vs_greedy(t, omega):
    plan = plan_corollary1(t, omega)
    rep = execute_adversary(plan, None, GreedyAlice())
    assert rep.union_measure >= plan.guaranteed_bound == lb_corollary1(t, omega)
    assert verify_inclusion_exclusion(rep)
    assert len(rep.kprime) == t + 1
    for c in rep.claims:
        # pigeonhole: m disjoint unit sets share at most 1 with phi(v_i)
        assert sum(c.overlaps.values()) <= 1
        assert c.min_overlap <= 1 / c.q


def test_kprime_edge_colors():
    plan = plan_corollary1(5, 4)
    state = play_game(plan.config, GreedyAlice(), AdversaryBob(plan))
    rep = state.report
    matched = {frozenset((c.u, c.v)) for c in rep.claims}
    for i, a in enumerate(rep.kprime):
        for b in rep.kprime[i + 1:]:
            want = RED if frozenset((a, b)) in matched else BLUE
            assert state.graph.color(a, b) == want
    assert rep.roles == ["u1", "v1", "u2", "v2", "w1", "w2"]
    assert verify_witness(state.graph, state.witness)


@pytest.mark.parametrize("t,omega", [(3, 2), (5, 3), (6, 4), (7, 4)])
@pytest.mark.parametrize("seed", range(3))
def test_theorem3_vs_random_alice(t, omega, seed):
    plan = plan_theorem3(t, omega, default_registry())
    state = play_game(plan.config, RandomAlice(), AdversaryBob(plan), seed)
    rep = state.report
    assert rep.union_measure >= plan.guaranteed_bound
    assert verify_inclusion_exclusion(rep)
    assert state.total_used.measure >= rep.union_measure


def test_inclusion_exclusion_detects_tampering():
    plan = plan_corollary1(3, 2)
    rep = execute_adversary(plan, None, GreedyAlice())
    rep.union_measure += F(1, 7)
    assert not verify_inclusion_exclusion(rep)
    rep = execute_adversary(plan, None, GreedyAlice())
    rep.sets[-1] = rep.sets[0] | rep.sets[1]
    verdict = verify_inclusion_exclusion(rep)
    assert not verdict and "TripleOverlap" in verdict.detail


def test_claim_violated_on_overstated_gadget():
    fake = GadgetCert("K2*", clique_graph(2), clique_witness(2), F(10), 2, "bogus")
    plan = AdversaryPlan(3, 3, (fake,))
    with pytest.raises(ClaimViolated):
        execute_adversary(plan, None, GreedyAlice())


def test_execute_on_prepared_state():
    plan = plan_corollary1(2, 2)
    with pytest.raises(BadRange):
        execute_adversary(plan, start_game(GameConfig(2, 2, 99), GreedyAlice()), GreedyAlice())
    alice = GreedyAlice()
    state = start_game(plan.config, alice)
    rep = execute_adversary(plan, state, alice)
    assert rep.union_measure == F(5, 2)


def test_random_bob_rejects_blue_triangle():
    s = start_game(GameConfig(2, 2), GreedyAlice())
    v = bob_move(s, [0, 1], [BLUE, RED])
    alice_move(s, ColorSet.of((5, 6)))
    for seed in range(40):
        nbrs, colors = random_bob(s, seed)
        check_bob_move(s, nbrs, colors)
        if sorted(nbrs) == sorted([0, v]):
            assert colors != [BLUE, BLUE]


def test_random_bob_all_red_fallback_and_determinism():
    s = start_game(GameConfig(3, 2), GreedyAlice())
    assert random_bob(s, 9) == random_bob(s, 9)
    bob = RandomBob(max_tries=0)
    bob.start(s, random.Random(0))
    nbrs, colors = bob.move(s)
    assert colors == [RED] * len(nbrs)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.data(), st.integers(0, 10**6))
def test_random_bob_moves_are_legal(t, data, seed):
    omega = data.draw(st.integers(2, t))
    state = play_game(GameConfig(t, omega), RandomAlice(), RandomBob(turns=15), seed)
    assert state.turn == 15


@pytest.mark.parametrize("t", range(2, 14))
def test_theorem3_dominates_corollary1(t):
    reg = default_registry() + [generate("clique", m) for m in range(1, t + 1)]
    for omega in range((t + 2) // 2, t + 1):
        assert plan_theorem3(t, omega, reg).guaranteed_bound >= plan_corollary1(t, omega).guaranteed_bound
