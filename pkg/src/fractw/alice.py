"""Alice strategies: the greedy palette strategy, a random baseline, and the
strategy read off a precomputed coloring of the universal graph."""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import PaletteExhausted
from .exact import ColorSet, cs_subtract, cs_take_leftmost, cs_union_all
from .graph import BLUE, BLUE_ONLY, RED, RBGraph, max_clique


def palette_size(t: int, omega: int) -> int:
    return t * t + omega - 1


def greedy_initial_clique(t: int, omega: int | None = None) -> list[frozenset[int]]:
    """t palette sets pairwise meeting exactly in color 1, lowest indices first."""
    return [frozenset({1, *range(2 + i * (t - 1), 2 + (i + 1) * (t - 1))}) for i in range(t)]


def greedy_respond(t: int, omega: int, neighborhood: Sequence[tuple[frozenset[int], str]]) -> frozenset[int]:
    """Palette colors for a new vertex whose t neighbours carry ``(gamma, edge color)``.

    Each Red neighbour u passes on its lowest color appearing in no other
    neighbour's set; the remaining ``l = #Blue`` slots take the lowest colors
    not used anywhere in the neighbourhood.
    """
    top = palette_size(t, omega)
    sets = [g for g, _ in neighborhood]
    inherited = []
    for idx, (g, c) in enumerate(neighborhood):
        if c != RED:
            continue
        others = set().union(*(s for j, s in enumerate(sets) if j != idx))
        private = sorted(g - others)
        if not private:
            raise PaletteExhausted(f"red neighbour with colors {sorted(g)} has no private color")
        inherited.append(private[0])
    # a private color of u lies in no other neighbour's set, so these are distinct
    assert len(set(inherited)) == len(inherited)
    forbidden = set().union(*sets)
    need = t - len(inherited)
    fresh = []
    for c in range(1, top + 1):
        if len(fresh) == need:
            break
        if c not in forbidden:
            fresh.append(c)
    if len(fresh) < need:
        raise PaletteExhausted(f"only {len(fresh)} of {need} colors free in palette 1..{top}")
    return frozenset(inherited + fresh)


class GreedyAlice:
    """Greedy palette strategy: every vertex gets t of the cells
    ``[(i-1)/t, i/t)``, ``1 <= i <= t^2 + omega - 1``."""

    name = "greedy"

    def __init__(self):
        self.gamma: dict[int, frozenset[int]] = {}

    def start(self, config, rng=None) -> None:
        self.t, self.omega = config.t, config.omega
        self.gamma = {}
        self.max_color = 0
        self._initial = greedy_initial_clique(self.t, self.omega)

    def color(self, state, v: int) -> ColorSet:
        t = self.t
        if v < t:
            gamma = self._initial[v]
        else:
            nbhd = [(self.gamma[u], state.graph.color(u, v)) for u in state.witness.back[v]]
            gamma = greedy_respond(t, self.omega, nbhd)
        self.gamma[v] = gamma
        self.max_color = max(self.max_color, max(gamma))
        return ColorSet.cells(gamma, t)

    def audit(self, graph: RBGraph) -> None:
        top = palette_size(self.t, self.omega)
        for v, g in self.gamma.items():
            assert len(g) == self.t and max(g) <= top, f"bad gamma at {v}: {sorted(g)}"
        for u, v, c in graph.edges():
            if u in self.gamma and v in self.gamma:
                shared = len(self.gamma[u] & self.gamma[v])
                assert shared == (0 if c == BLUE else 1), f"edge {u}-{v} ({c}) shares {shared}"

    def dump(self) -> str:
        return json.dumps({str(v): sorted(g) for v, g in sorted(self.gamma.items())})


@dataclass(frozen=True)
class ColorCountResult:
    status: str              # "holds" | "hypothesis_violated" | "bound_violated"
    count: int | None = None
    bound: int | None = None
    blue_clique: int | None = None
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status == "holds"


def lemma2_check(K: RBGraph, gamma: Mapping[int, frozenset[int]] | Sequence[frozenset[int]]) -> ColorCountResult:
    """Count the colors on a red/blue clique whose vertices carry t-sets.

    The hypotheses are: every vertex has exactly t = |K| colors, Blue pairs are
    disjoint and Red pairs share exactly one color. The count is then compared
    with t^2 - t + (blue clique number of K).
    """
    t = K.n
    sets = [frozenset(gamma[v]) for v in range(t)]
    for v, s in enumerate(sets):
        if len(s) != t:
            return ColorCountResult("hypothesis_violated", detail=f"vertex {v} has {len(s)} colors")
    for u, v in combinations(range(t), 2):
        c = K.color(u, v)
        shared = len(sets[u] & sets[v])
        if c is None:
            return ColorCountResult("hypothesis_violated", detail=f"{u}-{v} is not an edge")
        if c == BLUE and shared:
            return ColorCountResult("hypothesis_violated", detail=f"blue pair {u}-{v} shares {shared}")
        if c == RED and shared != 1:
            return ColorCountResult("hypothesis_violated", detail=f"red pair {u}-{v} shares {shared}")
    w = max_clique(K, BLUE_ONLY, limit=None)
    count = len(frozenset().union(*sets))
    bound = t * t - t + w
    status = "holds" if count <= bound else "bound_violated"
    return ColorCountResult(status, count, bound, w)


def _free_cells(blocked: ColorSet, t: int, ncells: int) -> list[int]:
    taken = set()
    for lo, hi in blocked.intervals:
        taken.update(range(math.floor(lo * t) + 1, math.ceil(hi * t) + 1))
    return [i for i in range(1, ncells + 1) if i not in taken]


def random_alice(state, v: int, seed=None, rng: random.Random | None = None) -> ColorSet:
    """A uniformly random measure-1 set of 1/t cells in [0, t+1) avoiding Blue
    neighbours. At most t Blue back-neighbours leave at least t free cells
    whenever their sets are cell-aligned; otherwise the leftmost free unit is
    taken."""
    rng = rng or random.Random(seed)
    t = state.config.t
    blocked = cs_union_all(state.phi[u] for u in state.graph.blue_neighbors(v) if u in state.phi)
    free = _free_cells(blocked, t, t * (t + 1))
    if len(free) >= t:
        return ColorSet.cells(rng.sample(free, t), t)
    room = cs_subtract(ColorSet.of((0, t + 1)), blocked)
    return cs_take_leftmost(room, 1)


class RandomAlice:
    name = "random"

    def start(self, config, rng=None) -> None:
        self.rng = rng or random.Random(0)

    def color(self, state, v: int) -> ColorSet:
        return random_alice(state, v, rng=self.rng)


class UniversalAlice:
    """Alice playing from a fixed coloring ``psi`` of the universal t-tree H.

    Each Bob vertex is matched to the child of the corresponding clique of H
    created in the same round with the same edge colors, and receives its
    ``psi`` set.
    """

    name = "universal"

    def __init__(self, config, psi: Mapping[int, ColorSet] | None = None):
        from .game import color_graph_via_alice, materialize_universal

        self.H, self.witness, self.index = materialize_universal(config)
        if psi is None:
            blue = self.H.blue_subgraph()
            psi = color_graph_via_alice(blue, self.witness, config.omega, t=config.t)
        self.psi = dict(psi)

    def start(self, config, rng=None) -> None:
        self.image: dict[int, int] = {}

    def color(self, state, v: int) -> ColorSet:
        t = state.config.t
        if v < t:
            self.image[v] = v
        else:
            back = state.witness.back[v]
            K = tuple(sorted(self.image[u] for u in back))
            by_image = {self.image[u]: state.graph.color(u, v) for u in back}
            colors = tuple(by_image[x] for x in K)
            self.image[v] = self.index[(state.turn, K, colors)]
        return self.psi[self.image[v]]
