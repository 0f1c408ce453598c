"""Referee for the online red/blue fractional coloring game.

Bob grows a t-tree one vertex at a time, coloring the new edges Red or Blue
and never creating an all-Blue K_{omega+1}. Alice answers each new vertex with
a measure-1 ColorSet that must avoid the sets of its Blue neighbours. The
referee owns the GameState and records every accepted move, so a transcript
replays to the identical state.

Vertex ids are insertion indices; ids ``0..t-1`` are the initial Red K_t.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Protocol, Sequence

from .errors import (BadParams, BlueCliqueViolation, BlueConflict, CliqueTooLarge, Forfeit,
                     GameOver, NoExtension, NotAClique, OutOfTurn, RefereeError, TooLarge,
                     WitnessInvalid, WrongMeasure)
from .exact import EMPTY, ONE, ColorSet, cs_union, fmt
from .graph import (BLUE, BLUE_ONLY, EDGE_COLORS, RED, EliminationWitness, RBGraph,
                    max_clique, verify_witness)


@dataclass(frozen=True)
class GameConfig:
    t: int
    omega: int
    N: int | None = None

    def __post_init__(self):
        if self.t < 1:
            raise BadParams("t must be >= 1")
        # t = 1 admits omega = 2 only: a forest never holds a triangle
        if not 2 <= self.omega <= max(self.t, 2):
            raise BadParams(f"need 2 <= omega <= t, got t={self.t}, omega={self.omega}")
        if self.N is not None and self.N < 0:
            raise BadParams("N must be >= 0")

    @property
    def ceiling(self) -> Fraction:
        return self.t + Fraction(self.omega - 1, self.t)

    def to_json(self) -> dict:
        return {"t": self.t, "omega": self.omega, "N": self.N}


@dataclass(frozen=True)
class BobMove:
    nbrs: tuple[int, ...]
    colors: tuple[str, ...]

    def to_json(self) -> dict:
        return {"bob": {"nbrs": list(self.nbrs), "colors": list(self.colors)}}


@dataclass(frozen=True)
class AliceMove:
    color_set: ColorSet

    def to_json(self) -> dict:
        return {"alice": {"set": self.color_set.to_json()}}


@dataclass
class GameState:
    config: GameConfig
    graph: RBGraph
    witness: EliminationWitness
    phi: dict[int, ColorSet] = field(default_factory=dict)
    turn: int = 0
    total_used: ColorSet = EMPTY
    moves: list = field(default_factory=list)
    pending: list[int] = field(default_factory=list)
    seed: object = None
    players: tuple[str, str] = ("", "")
    report: object = None

    @property
    def t(self) -> int:
        return self.config.t

    @property
    def omega(self) -> int:
        return self.config.omega

    @property
    def latest(self) -> int:
        return self.graph.n - 1

    def transcript(self) -> "GameTranscript":
        return GameTranscript(self.config, tuple(self.moves), self.seed, *self.players)

    def same_as(self, other: "GameState") -> bool:
        return (self.graph == other.graph and self.phi == other.phi
                and self.total_used == other.total_used and self.turn == other.turn
                and self.witness.back == other.witness.back)


@dataclass(frozen=True)
class GameTranscript:
    config: GameConfig
    moves: tuple
    seed: object = None
    alice: str = ""
    bob: str = ""

    def header(self) -> dict:
        return {"config": self.config.to_json(), "seed": self.seed,
                "alice": self.alice, "bob": self.bob}

    def to_jsonl(self) -> str:
        lines = [json.dumps(self.header(), sort_keys=True)]
        lines += [json.dumps(m.to_json(), sort_keys=True) for m in self.moves]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "GameTranscript":
        rows = [json.loads(line) for line in text.splitlines() if line.strip()]
        head, body = rows[0], rows[1:]
        cfg = GameConfig(**head["config"])
        moves = []
        for row in body:
            if "bob" in row:
                moves.append(BobMove(tuple(row["bob"]["nbrs"]), tuple(row["bob"]["colors"])))
            elif "alice" in row:
                moves.append(AliceMove(ColorSet.from_json(row["alice"]["set"])))
            else:
                raise ValueError(f"unknown transcript row {row}")
        return cls(cfg, tuple(moves), head.get("seed"), head.get("alice", ""), head.get("bob", ""))


class AliceStrategy(Protocol):
    name: str

    def start(self, config: GameConfig, rng: random.Random) -> None: ...

    def color(self, state: GameState, v: int) -> ColorSet: ...


class BobStrategy(Protocol):
    name: str

    def turns(self, config: GameConfig) -> int: ...

    def start(self, state: GameState, rng: random.Random) -> None: ...

    def move(self, state: GameState) -> tuple[Sequence[int], Sequence[str]]: ...


def new_state(config: GameConfig) -> GameState:
    """Board at Turn 0: a Red K_t, all vertices still uncolored."""
    t = config.t
    g = RBGraph(t)
    back = {}
    for i in range(t):
        for j in range(i):
            g.add_edge(j, i, RED)
        back[i] = tuple(range(i))
    w = EliminationWitness(list(range(t)), back, t)
    return GameState(config, g, w, pending=list(range(t)))


def complete_clique_lemma4(state: GameState, neighbors: Sequence[int]) -> tuple[int, ...]:
    """Extend a clique of the host t-tree to a t-clique.

    The newest vertex v of the clique has its closed back-neighbourhood as a
    (t+1)-clique containing the whole clique; dropping the highest-indexed
    vertex outside the clique gives the lowest-indexed extension.
    """
    t = state.t
    K = set(neighbors)
    if len(K) > t:
        raise NotAClique(f"{len(K)} neighbours exceed t={t}")
    if not K:
        return tuple(range(t))
    v = max(K)
    closed = set(range(t)) if v < t else set(state.witness.back[v]) | {v}
    if not K <= closed:
        raise NoExtension(f"clique {sorted(K)} is not inside N[{v}]")
    extra = sorted(closed - K)[: t - len(K)]
    return tuple(sorted(K | set(extra)))


def check_bob_move(state: GameState, neighbors: Sequence[int], colors: Sequence[str]):
    """Validate a Bob move without applying it; returns the completed
    neighbourhood and its edge colors."""
    cfg = state.config
    if state.pending:
        raise OutOfTurn(f"vertex {state.pending[0]} is still uncolored")
    if cfg.N is not None and state.turn >= cfg.N:
        raise GameOver(f"all {cfg.N} turns have been played")
    nbrs = [int(u) for u in neighbors]
    colors = list(colors)
    if len(nbrs) != len(colors):
        raise NotAClique("one edge color per neighbour is required")
    if len(set(nbrs)) != len(nbrs):
        raise NotAClique("repeated neighbour")
    if any(c not in EDGE_COLORS for c in colors):
        raise BadParams(f"edge colors must be R or B, got {colors}")
    if any(not 0 <= u < state.graph.n for u in nbrs):
        raise NotAClique("unknown neighbour")
    if len(nbrs) > cfg.t:
        raise NotAClique(f"{len(nbrs)} neighbours exceed t={cfg.t}")
    if not state.graph.is_clique(nbrs):
        raise NotAClique(f"{sorted(nbrs)} is not a clique")
    full = complete_clique_lemma4(state, nbrs)
    given = dict(zip(nbrs, colors))
    cmap = {u: given.get(u, RED) for u in full}
    blue = [u for u in full if cmap[u] == BLUE]
    if len(blue) >= cfg.omega and max_clique(state.graph, BLUE_ONLY, blue, limit=None) >= cfg.omega:
        raise BlueCliqueViolation(f"new vertex would close a blue K_{cfg.omega + 1}")
    return full, cmap


def bob_move(state: GameState, neighbors: Sequence[int], colors: Sequence[str]) -> int:
    full, cmap = check_bob_move(state, neighbors, colors)
    v = state.graph.add_vertex()
    for u in full:
        state.graph.add_edge(u, v, cmap[u])
    state.witness.order.append(v)
    state.witness.back[v] = full
    state.turn += 1
    state.pending.append(v)
    state.moves.append(BobMove(full, tuple(cmap[u] for u in full)))
    return v


def alice_move(state: GameState, color_set: ColorSet) -> None:
    if not state.pending:
        raise OutOfTurn("no uncolored vertex")
    v = state.pending[0]
    if color_set.measure != ONE:
        raise WrongMeasure(f"vertex {v} got measure {fmt(color_set.measure)}, expected 1")
    for u in state.graph.blue_neighbors(v):
        if u in state.phi and not color_set.isdisjoint(state.phi[u]):
            raise BlueConflict(f"vertex {v} overlaps blue neighbour {u}")
    state.pending.pop(0)
    state.phi[v] = color_set
    state.total_used = cs_union(state.total_used, color_set)
    state.moves.append(AliceMove(color_set))


def audit(state: GameState) -> None:
    """Assert every GameState invariant; used by the test-suite after each turn."""
    g = state.graph
    for v, s in state.phi.items():
        assert s.measure == 1, f"vertex {v} has measure {s.measure}"
    for u, v, c in g.edges():
        if c == BLUE and u in state.phi and v in state.phi:
            assert state.phi[u].isdisjoint(state.phi[v]), f"blue edge {u}-{v} shares colors"
    assert max_clique(g, BLUE_ONLY, limit=None) <= state.omega, "blue clique too large"
    verdict = verify_witness(g, state.witness)
    assert verdict, verdict.detail
    for v in range(g.n):
        if v >= state.t:
            assert len(state.witness.back[v]) == state.t
            assert g.is_clique(state.witness.back[v])
    union = EMPTY
    for s in state.phi.values():
        union = cs_union(union, s)
    assert union == state.total_used, "total_used out of sync"
    assert set(state.phi) | set(state.pending) == set(range(g.n))


def _guard(player: str, fn, *args):
    try:
        return fn(*args)
    except RefereeError as exc:
        raise Forfeit(player, exc) from exc


def start_game(config: GameConfig, alice: AliceStrategy, rng: random.Random | None = None) -> GameState:
    """Fresh board with the initial K_t colored by Alice (Turn 0)."""
    state = new_state(config)
    alice.start(config, rng or random.Random(0))
    for v in list(state.pending):
        alice_move(state, alice.color(state, v))
    return state


def drive(state: GameState, alice: AliceStrategy, bob: BobStrategy) -> GameState:
    """Play the remaining turns of ``state``; referee errors become forfeits."""
    N = state.config.N
    while state.turn < N:
        nbrs, colors = bob.move(state)
        v = _guard("bob", bob_move, state, nbrs, colors)
        _guard("alice", alice_move, state, alice.color(state, v))
    finish = getattr(bob, "finish", None)
    if finish is not None:
        state.report = finish(state)
    return state


def play_game(config: GameConfig, alice: AliceStrategy, bob: BobStrategy, seed=0) -> GameState:
    rng_alice = random.Random(f"alice:{seed}")
    rng_bob = random.Random(f"bob:{seed}")
    if config.N is None:
        config = replace(config, N=bob.turns(config))
    state = new_state(config)
    state.seed = seed
    state.players = (alice.name, bob.name)
    alice.start(config, rng_alice)
    for v in list(state.pending):
        _guard("alice", alice_move, state, alice.color(state, v))
    bob.start(state, rng_bob)
    return drive(state, alice, bob)


def run_game(config: GameConfig, alice: AliceStrategy, bob: BobStrategy, seed=0) -> GameTranscript:
    return play_game(config, alice, bob, seed).transcript()


def replay(transcript: GameTranscript) -> GameState:
    state = new_state(transcript.config)
    state.seed = transcript.seed
    state.players = (transcript.alice, transcript.bob)
    for mv in transcript.moves:
        if isinstance(mv, BobMove):
            bob_move(state, mv.nbrs, mv.colors)
        else:
            alice_move(state, mv.color_set)
    return state


def extract_blue_subgraph(game) -> tuple[RBGraph, EliminationWitness]:
    """Blue subgraph of a finished game plus the width-t witness of its host."""
    state = replay(game) if isinstance(game, GameTranscript) else game
    w = state.witness
    return state.graph.blue_subgraph(), EliminationWitness(list(w.order), dict(w.back), w.width)


def color_graph_via_alice(g: RBGraph, w: EliminationWitness, omega: int,
                          alice: AliceStrategy | None = None, t: int | None = None) -> dict[int, ColorSet]:
    """Fractionally color ``g`` by replaying its witness as Bob moves.

    A Red K_t (the padding clique) is played first; each vertex of ``g`` then
    arrives with its witness back set as neighbours, Blue where ``g`` has an
    edge and Red otherwise, and Alice answers.
    """
    verdict = verify_witness(g, w)
    if not verdict:
        raise WitnessInvalid(verdict.detail)
    if t is None:
        t = max(w.width, omega)
    if w.width > t:
        raise WitnessInvalid(f"witness width {w.width} exceeds host width {t}")
    cn = max_clique(g, BLUE_ONLY, limit=None)
    if cn > omega:
        raise CliqueTooLarge(f"clique number {cn} exceeds omega={omega}")
    if alice is None:
        from .alice import GreedyAlice

        alice = GreedyAlice()
    config = GameConfig(t, omega, N=g.n)
    state = start_game(config, alice)
    gid = {}
    for x in w.order:
        back = w.back.get(x, ())
        nbrs = [gid[b] for b in back]
        colors = [BLUE if g.has_edge(x, b, BLUE_ONLY) else RED for b in back]
        gid[x] = bob_move(state, nbrs, colors)
        alice_move(state, alice.color(state, gid[x]))
    return {x: state.phi[gid[x]] for x in range(g.n)}


UNIVERSAL_MAX_T = 3
UNIVERSAL_MAX_N = 2


def materialize_universal(config: GameConfig) -> tuple[RBGraph, EliminationWitness, dict]:
    """The edge-colored t-tree holding every legal N-turn game as a subgraph.

    Round i adds, for every t-clique K present at the start of the round, one
    child per Red/Blue coloring of its edges to K, skipping children that
    would close a blue K_{omega+1}. Returns the graph, its witness and an index
    ``(round, K, colors) -> vertex``.
    """
    t, N = config.t, config.N or 0
    if t > UNIVERSAL_MAX_T or N > UNIVERSAL_MAX_N:
        raise TooLarge(f"universal graph limited to t <= {UNIVERSAL_MAX_T}, N <= {UNIVERSAL_MAX_N}")
    state = new_state(replace(config, N=None))
    g, w = state.graph, state.witness
    cliques = [tuple(range(t))]
    index = {}
    for rnd in range(1, N + 1):
        for K in list(cliques):
            for colors in product((RED, BLUE), repeat=t):
                blue = [u for u, c in zip(K, colors) if c == BLUE]
                if len(blue) >= config.omega and \
                        max_clique(g, BLUE_ONLY, blue, limit=None) >= config.omega:
                    continue
                v = g.add_vertex()
                for u, c in zip(K, colors):
                    g.add_edge(u, v, c)
                w.order.append(v)
                w.back[v] = K
                index[(rnd, K, colors)] = v
                cliques.extend(tuple(sorted(set(K) - {x} | {v})) for x in K)
    return g, w, index
