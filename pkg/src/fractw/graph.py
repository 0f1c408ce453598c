"""Red/blue edge-colored graphs, elimination witnesses and clique search."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import SizeGuard

RED = "R"
BLUE = "B"
EDGE_COLORS = (RED, BLUE)

ANY = "any"
BLUE_ONLY = "blue"

DEFAULT_CLIQUE_LIMIT = 64


class RBGraph:
    """Simple undirected graph on vertices ``0..n-1`` with Red/Blue edge labels.

    The game engine grows graphs in place through :meth:`add_vertex` and
    :meth:`add_edge`; everything else treats them as read-only values.
    """

    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int, str]] = ()):
        self.adj: list[dict[int, str]] = [dict() for _ in range(n)]
        for u, v, c in edges:
            self.add_edge(u, v, c)

    @property
    def n(self) -> int:
        return len(self.adj)

    def add_vertex(self) -> int:
        self.adj.append({})
        return len(self.adj) - 1

    def add_edge(self, u: int, v: int, color: str = BLUE) -> None:
        if color not in EDGE_COLORS:
            raise ValueError(f"edge color must be R or B, got {color!r}")
        if u == v:
            raise ValueError("loops are not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        if v in self.adj[u]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        self.adj[u][v] = color
        self.adj[v][u] = color

    def color(self, u: int, v: int) -> str | None:
        return self.adj[u].get(v)

    def has_edge(self, u: int, v: int, color_filter: str = ANY) -> bool:
        c = self.adj[u].get(v)
        if c is None:
            return False
        return color_filter == ANY or c == BLUE

    def neighbors(self, v: int, color: str | None = None) -> list[int]:
        return sorted(u for u, c in self.adj[v].items() if color is None or c == color)

    def red_neighbors(self, v: int) -> list[int]:
        return self.neighbors(v, RED)

    def blue_neighbors(self, v: int) -> list[int]:
        return self.neighbors(v, BLUE)

    def edges(self) -> Iterator[tuple[int, int, str]]:
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v, self.adj[u][v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def blue_subgraph(self) -> "RBGraph":
        return RBGraph(self.n, ((u, v, BLUE) for u, v, c in self.edges() if c == BLUE))

    def induced(self, vertices: Iterable[int]) -> "RBGraph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        g = RBGraph(len(vs))
        for u in vs:
            for w, c in self.adj[u].items():
                if w in index and index[u] < index[w]:
                    g.add_edge(index[u], index[w], c)
        return g

    def is_clique(self, vertices: Iterable[int], color_filter: str = ANY) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b, color_filter) for a, b in combinations(vs, 2))

    def copy(self) -> "RBGraph":
        g = RBGraph()
        g.adj = [dict(a) for a in self.adj]
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, RBGraph) and self.adj == other.adj

    def __repr__(self) -> str:
        return f"RBGraph(n={self.n}, m={self.m})"


def clique_limit() -> int:
    return int(os.environ.get("FRACTW_CLIQUE_LIMIT", DEFAULT_CLIQUE_LIMIT))


def _masks(g: RBGraph, color_filter: str, vertices: list[int]) -> list[int]:
    index = {v: i for i, v in enumerate(vertices)}
    masks = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for u, c in g.adj[v].items():
            if u in index and (color_filter == ANY or c == BLUE):
                masks[i] |= 1 << index[u]
    return masks


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _max_clique_masks(masks: list[int]) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        # pivot on the candidate with most neighbours inside cand
        pivot = max(_bits(cand), key=lambda u: bin(cand & masks[u]).count("1"))
        for v in list(_bits(cand & ~masks[pivot])):
            if size + bin(cand).count("1") <= best:
                return
            expand(size + 1, cand & masks[v])
            cand &= ~(1 << v)

    expand(0, (1 << len(masks)) - 1)
    return best


def max_clique(g: RBGraph, color_filter: str = ANY, vertices: Iterable[int] | None = None,
               limit: int | None = -1) -> int:
    """Exact clique number of ``g`` (or of the subgraph induced by ``vertices``).

    ``color_filter=BLUE_ONLY`` ignores red edges. ``limit`` guards the vertex
    count: ``-1`` means the configured default, ``None`` disables the guard.
    """
    vs = list(range(g.n)) if vertices is None else list(vertices)
    if limit == -1:
        limit = clique_limit()
    if limit is not None and len(vs) > limit:
        raise SizeGuard(f"max_clique on {len(vs)} vertices exceeds guard {limit}")
    if not vs:
        return 0
    return _max_clique_masks(_masks(g, color_filter, vs))


def maximal_cliques(g: RBGraph, color_filter: str = ANY,
                    complement: bool = False) -> Iterator[frozenset[int]]:
    """Bron-Kerbosch with pivoting. With ``complement=True`` the cliques of the
    complement are produced, i.e. the maximal independent sets."""
    vs = list(range(g.n))
    masks = _masks(g, color_filter, vs)
    full = (1 << g.n) - 1
    if complement:
        masks = [(~m & full) & ~(1 << i) for i, m in enumerate(masks)]

    def bk(r: int, p: int, x: int):
        if not p and not x:
            yield frozenset(_bits(r))
            return
        pivot = max(_bits(p | x), key=lambda u: bin(p & masks[u]).count("1"))
        for v in list(_bits(p & ~masks[pivot])):
            bit = 1 << v
            yield from bk(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    if g.n == 0:
        return
    yield from bk(0, full, 0)


@dataclass
class EliminationWitness:
    """Construction order plus back-neighbour sets certifying width.

    ``back[v]`` lists the neighbours of ``v`` that come earlier in ``order``,
    in the chordal completion. The completion's edges are exactly the pairs
    ``(v, b)`` with ``b in back[v]``; a valid witness makes every back set a
    clique there and covers every edge of the graph, so the graph is a
    partial ``width``-tree.
    """

    order: list[int]
    back: dict[int, tuple[int, ...]]
    width: int

    def completion_edges(self) -> set[frozenset[int]]:
        return {frozenset((v, b)) for v, bs in self.back.items() for b in bs}

    def to_json(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {
            "order": [v + off for v in self.order],
            "back": {str(v + off): [b + off for b in self.back.get(v, ())] for v in self.order},
            "width": self.width,
        }

    @classmethod
    def from_json(cls, data: dict, one_based: bool = True) -> "EliminationWitness":
        off = 1 if one_based else 0
        order = [int(v) - off for v in data["order"]]
        back = {int(k) - off: tuple(int(b) - off for b in bs) for k, bs in data["back"].items()}
        for v in order:
            back.setdefault(v, ())
        return cls(order=order, back=back, width=int(data["width"]))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


VALID = Verdict(True)


def verify_witness(g: RBGraph, w: EliminationWitness) -> Verdict:
    if sorted(w.order) != list(range(g.n)):
        return Verdict(False, "order is not a permutation of the vertices")
    if w.width < 0:
        return Verdict(False, "negative width")
    pos = {v: i for i, v in enumerate(w.order)}
    extra = set(w.back) - set(pos)
    if extra:
        return Verdict(False, f"back sets given for unknown vertices {sorted(extra)}")
    completion = w.completion_edges()
    for v in w.order:
        bs = w.back.get(v, ())
        if len(set(bs)) != len(bs):
            return Verdict(False, f"vertex {v} lists a back-neighbour twice")
        if len(bs) > w.width:
            return Verdict(False, f"vertex {v} has {len(bs)} back-neighbours > width {w.width}")
        for b in bs:
            if b not in pos or pos[b] >= pos[v]:
                return Verdict(False, f"back-neighbour {b} of {v} is not earlier in the order")
        for a, b in combinations(bs, 2):
            if frozenset((a, b)) not in completion:
                return Verdict(False, f"back set of {v} is not a clique: {a}-{b} missing")
    for u, v, _ in g.edges():
        if frozenset((u, v)) not in completion:
            return Verdict(False, f"edge {u}-{v} is not covered by the witness")
    return VALID


def clique_witness(m: int) -> EliminationWitness:
    return EliminationWitness(list(range(m)), {i: tuple(range(i)) for i in range(m)}, max(m - 1, 0))


def _eliminate(g: RBGraph, score) -> EliminationWitness:
    nbrs = {v: set(g.adj[v]) for v in range(g.n)}
    remaining = set(range(g.n))
    elim: list[int] = []
    back: dict[int, tuple[int, ...]] = {}
    while remaining:
        v = min(remaining, key=lambda x: (*score(nbrs, x), x))
        ns = nbrs[v]
        for a, b in combinations(ns, 2):
            nbrs[a].add(b)
            nbrs[b].add(a)
        back[v] = tuple(sorted(ns))
        for u in ns:
            nbrs[u].discard(v)
        remaining.discard(v)
        elim.append(v)
        del nbrs[v]
    order = elim[::-1]
    width = max((len(b) for b in back.values()), default=0)
    return EliminationWitness(order, back, width)


def _fill_score(nbrs, v):
    ns = list(nbrs[v])
    return sum(1 for a, b in combinations(ns, 2) if b not in nbrs[a]), len(ns)


def _degree_score(nbrs, v):
    return (len(nbrs[v]),)


def min_fill_witness(g: RBGraph) -> EliminationWitness:
    """A valid (not necessarily optimal) witness: the narrower of min-fill and
    min-degree elimination."""
    return min((_eliminate(g, _fill_score), _eliminate(g, _degree_score)), key=lambda w: w.width)
