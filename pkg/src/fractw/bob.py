"""Bob strategies: a random legal baseline and the recursive clique adversary.

The adversary runs ``t - omega + 1`` iterations. Iteration i adds v_i Blue to
everything in U = {u_1, v_1, ..., u_{i-1}, v_{i-1}}, then plays gadget_i with
every gadget vertex Red to v_i and Blue to U, and keeps the gadget vertex u_i
whose colors overlap v_i's least. Finally 2*omega - t - 1 vertices w_j are
joined Blue to all of K' so far. K' = {u_i, v_i, w_j} is a (t+1)-clique whose
only Red edges are the u_i v_i, so its color union is at least
t + 1 - sum_i 1/q_i where q_i is gadget_i's certified fractional chromatic
number.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import BadRange, BlueCliqueViolation, ClaimViolated, FractwError
from .exact import ColorSet, cs_intersect, cs_union_all, fmt, max_depth, rational_to_json
from .generators import GadgetCert, generate
from .graph import BLUE, BLUE_ONLY, RED, Verdict
from .game import GameConfig, GameState, check_bob_move, drive, start_game


class BoundViolated(FractwError, RuntimeError):
    pass


class RandomBob:
    """Uniformly random clique, random edge colors, rejection on blue K_{omega+1}.

    Each game draws its own Blue-edge probability so that both sparse and
    Blue-heavy boards are exercised.
    """

    name = "random"

    def __init__(self, turns: int | None = None, max_tries: int = 32):
        self._turns = turns
        self.max_tries = max_tries

    def turns(self, config: GameConfig) -> int:
        return self._turns if self._turns is not None else 2 * config.t + 8

    def start(self, state: GameState, rng: random.Random) -> None:
        self.rng = rng
        self.p_blue = rng.uniform(0.2, 1.0)
        self.rejected = 0

    def move(self, state: GameState) -> tuple[list[int], list[str]]:
        rng, t = self.rng, state.t
        nbrs: list[int] = []
        for _ in range(self.max_tries):
            x = rng.randrange(state.graph.n)
            base = list(range(t)) if x < t else sorted((*state.witness.back[x], x))
            size = t if rng.random() < 0.6 else rng.randint(0, t)
            nbrs = sorted(rng.sample(base, min(size, len(base))))
            colors = [BLUE if rng.random() < self.p_blue else RED for _ in nbrs]
            try:
                check_bob_move(state, nbrs, colors)
            except BlueCliqueViolation:
                self.rejected += 1
                continue
            return nbrs, colors
        return nbrs, [RED] * len(nbrs)


def random_bob(state: GameState, seed) -> tuple[list[int], list[str]]:
    bob = RandomBob()
    bob.start(state, random.Random(seed))
    return bob.move(state)


def in_theorem_range(t: int, omega: int) -> bool:
    return 2 <= omega <= t and 2 * omega >= t + 1


@dataclass(frozen=True)
class AdversaryPlan:
    t: int
    omega: int
    gadgets: tuple[GadgetCert, ...]
    name: str = "thm3"

    def __post_init__(self):
        if not in_theorem_range(self.t, self.omega):
            raise BadRange(f"need (t+1)/2 <= omega <= t, got t={self.t}, omega={self.omega}")
        if len(self.gadgets) != self.t - self.omega + 1:
            raise BadRange(f"expected {self.t - self.omega + 1} gadgets, got {len(self.gadgets)}")
        for i, gd in enumerate(self.gadgets, 1):
            if gd.width > self.t - 2 * i + 1 or gd.clique_no > self.omega - i + 1:
                raise BadRange(f"gadget {gd.name} infeasible at iteration {i}: width {gd.width}, "
                               f"clique {gd.clique_no}")

    @property
    def final_vertices(self) -> int:
        return 2 * self.omega - self.t - 1

    @property
    def N(self) -> int:
        return sum(1 + gd.n for gd in self.gadgets) + self.final_vertices

    @property
    def guaranteed_bound(self) -> Fraction:
        return self.t + 1 - sum((1 / gd.chif_lb for gd in self.gadgets), Fraction(0))

    @property
    def config(self) -> GameConfig:
        return GameConfig(self.t, self.omega, self.N)


def plan_corollary1(t: int, omega: int) -> AdversaryPlan:
    if not in_theorem_range(t, omega):
        raise BadRange(f"need (t+1)/2 <= omega <= t, got t={t}, omega={omega}")
    gadgets = tuple(generate("clique", omega - i + 1) for i in range(1, t - omega + 2))
    return AdversaryPlan(t, omega, gadgets, "cor1")


def plan_theorem3(t: int, omega: int, registry: Sequence[GadgetCert] = ()) -> AdversaryPlan:
    """Per iteration, the feasible gadget with the largest certified chi_f
    (fewest vertices on ties); the clique K_{omega-i+1} is always a candidate."""
    if not in_theorem_range(t, omega):
        raise BadRange(f"need (t+1)/2 <= omega <= t, got t={t}, omega={omega}")
    chosen = []
    for i in range(1, t - omega + 2):
        width, clique = t - 2 * i + 1, omega - i + 1
        cands = [generate("clique", clique)]
        cands += [g for g in registry if g.width <= width and g.clique_no <= clique]
        chosen.append(max(cands, key=lambda g: (g.chif_lb, -g.n)))
    return AdversaryPlan(t, omega, tuple(chosen), "thm3")


def default_registry() -> list[GadgetCert]:
    c5 = generate("cycle", 5)
    return [c5, generate("cycle", 7), generate("kneser", 5, 2), generate("mycielski", c5)]


@dataclass
class ClaimRecord:
    iteration: int
    gadget: str
    q: Fraction
    v: int
    u: int
    min_overlap: Fraction
    overlaps: dict[int, Fraction]

    def to_json(self) -> dict:
        return {"iteration": self.iteration, "gadget": self.gadget, "q": rational_to_json(self.q),
                "v": self.v, "u": self.u, "min_overlap": rational_to_json(self.min_overlap)}


@dataclass
class ForcedBoundReport:
    t: int
    omega: int
    kprime: list[int]
    roles: list[str]
    sets: list[ColorSet]
    union_measure: Fraction
    guaranteed_bound: Fraction
    overlaps: list[Fraction]
    claims: list[ClaimRecord] = field(default_factory=list)
    total_used: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "t": self.t, "omega": self.omega,
            "kprime": self.kprime, "roles": self.roles,
            "union_measure": rational_to_json(self.union_measure),
            "guaranteed_bound": rational_to_json(self.guaranteed_bound),
            "overlaps": [rational_to_json(x) for x in self.overlaps],
            "claims": [c.to_json() for c in self.claims],
            "total_used": None if self.total_used is None else rational_to_json(self.total_used),
        }

    def summary(self) -> dict:
        return {"kprime_measure": fmt(self.union_measure),
                "guaranteed_bound": fmt(self.guaranteed_bound),
                "kprime_measure_approx": float(self.union_measure)}


class AdversaryBob:
    """Executes an :class:`AdversaryPlan` move by move against any Alice."""

    def __init__(self, plan: AdversaryPlan):
        self.plan = plan
        self.name = plan.name

    def turns(self, config: GameConfig) -> int:
        return self.plan.N

    def start(self, state: GameState, rng=None) -> None:
        if (state.t, state.omega) != (self.plan.t, self.plan.omega):
            raise BadRange("game config does not match the plan")
        self.claims: list[ClaimRecord] = []
        self._script = self._moves(state)

    def move(self, state: GameState):
        return next(self._script)

    def finish(self, state: GameState) -> ForcedBoundReport:
        try:
            next(self._script)
        except StopIteration as stop:
            return stop.value
        raise RuntimeError("adversary script has moves left after the last turn")

    def _moves(self, state: GameState):
        plan = self.plan
        U: list[int] = []
        roles: list[str] = []
        for i, gadget in enumerate(plan.gadgets, 1):
            yield list(U), [BLUE] * len(U)
            v_i = state.latest
            ids: dict[int, int] = {}
            for x in gadget.witness.order:
                back = gadget.witness.back.get(x, ())
                nbrs = U + [v_i] + [ids[b] for b in back]
                colors = [BLUE] * len(U) + [RED] + \
                    [BLUE if gadget.graph.has_edge(x, b, BLUE_ONLY) else RED for b in back]
                yield nbrs, colors
                ids[x] = state.latest
            # resumed only after Alice colored the last gadget vertex
            self.claims.append(self._claim(state, i, gadget, v_i, ids))
            U += [self.claims[-1].u, v_i]
            roles += [f"u{i}", f"v{i}"]
        for j in range(1, plan.final_vertices + 1):
            yield list(U), [BLUE] * len(U)
            U.append(state.latest)
            roles.append(f"w{j}")
        return self._report(state, U, roles)

    def _claim(self, state, i, gadget, v_i, ids) -> ClaimRecord:
        target = state.phi[v_i]
        overlaps = {ids[x]: cs_intersect(state.phi[ids[x]], target).measure for x in range(gadget.n)}
        u = min(overlaps, key=lambda y: (overlaps[y], y))
        rec = ClaimRecord(i, gadget.name, gadget.chif_lb, v_i, u, overlaps[u], overlaps)
        if rec.min_overlap > 1 / gadget.chif_lb:
            raise ClaimViolated(f"iteration {i}: least overlap {fmt(rec.min_overlap)} > "
                                f"1/{fmt(gadget.chif_lb)} on gadget {gadget.name}")
        return rec

    def _report(self, state, kprime, roles) -> ForcedBoundReport:
        plan = self.plan
        sets = [state.phi[x] for x in kprime]
        union = cs_union_all(sets).measure
        overlaps = [cs_intersect(state.phi[c.u], state.phi[c.v]).measure for c in self.claims]
        rep = ForcedBoundReport(plan.t, plan.omega, list(kprime), roles, sets, union,
                                plan.guaranteed_bound, overlaps, list(self.claims),
                                state.total_used.measure)
        if union < rep.guaranteed_bound:
            raise BoundViolated(f"K' measure {fmt(union)} below {fmt(rep.guaranteed_bound)}")
        return rep


def execute_adversary(plan: AdversaryPlan, state: GameState | None, alice) -> ForcedBoundReport:
    """Run ``plan`` against ``alice``. ``state`` may be a Turn-0 board of the
    matching config (initial clique already colored), or ``None`` for a fresh one."""
    if state is None:
        state = start_game(plan.config, alice)
    if state.config.N != plan.N:
        raise BadRange(f"state has N={state.config.N}, plan needs {plan.N}")
    bob = AdversaryBob(plan)
    bob.start(state)
    drive(state, alice, bob)
    return state.report


def verify_inclusion_exclusion(report: ForcedBoundReport) -> Verdict:
    """No point lies in three K' sets, only matched u_i v_i pairs meet, and the
    union equals t + 1 minus the matched overlaps."""
    depth, where = max_depth(report.sets)
    if depth >= 3:
        return Verdict(False, f"TripleOverlap at {fmt(where)} (depth {depth})")
    matched = {frozenset((c.u, c.v)) for c in report.claims}
    for (a, sa), (b, sb) in combinations(zip(report.kprime, report.sets), 2):
        if frozenset((a, b)) not in matched and not sa.isdisjoint(sb):
            return Verdict(False, f"blue pair {a}-{b} overlaps")
    expected = report.t + 1 - sum(report.overlaps, Fraction(0))
    if len(report.kprime) != report.t + 1:
        return Verdict(False, f"K' has {len(report.kprime)} vertices, expected {report.t + 1}")
    if report.union_measure != expected:
        return Verdict(False, f"union {fmt(report.union_measure)} != {fmt(expected)}")
    return Verdict(True)
