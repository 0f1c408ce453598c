"""Named graph families and certified gadgets for Bob's constructions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BadParams
from .graph import (BLUE, BLUE_ONLY, EliminationWitness, RBGraph, clique_witness,
                    max_clique, min_fill_witness, verify_witness)


@dataclass(frozen=True)
class GadgetCert:
    """An all-Blue graph with a width witness, clique number and a certified
    lower bound on its fractional chromatic number."""

    name: str
    graph: RBGraph
    witness: EliminationWitness
    chif_lb: Fraction
    clique_no: int
    source: str = "closed-form"

    @property
    def width(self) -> int:
        return self.witness.width

    @property
    def n(self) -> int:
        return self.graph.n

    def check(self) -> None:
        v = verify_witness(self.graph, self.witness)
        if not v:
            raise BadParams(f"gadget {self.name}: {v.detail}")
        if any(c != BLUE for _, _, c in self.graph.edges()):
            raise BadParams(f"gadget {self.name} has red edges")
        cn = max_clique(self.graph, BLUE_ONLY, limit=None)
        if cn != self.clique_no:
            raise BadParams(f"gadget {self.name}: clique number {cn} != {self.clique_no}")


def clique_graph(m: int) -> RBGraph:
    return RBGraph(m, ((i, j, BLUE) for i, j in combinations(range(m), 2)))


def cycle_graph(n: int) -> RBGraph:
    return RBGraph(n, ((i, (i + 1) % n, BLUE) for i in range(n)))


def kneser_graph(n: int, k: int) -> tuple[RBGraph, list[frozenset[int]]]:
    labels = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    g = RBGraph(len(labels))
    for i, j in combinations(range(len(labels)), 2):
        if not labels[i] & labels[j]:
            g.add_edge(i, j, BLUE)
    return g, labels


def mycielski_graph(base: RBGraph) -> RBGraph:
    n = base.n
    g = RBGraph(2 * n + 1)
    for a, b, _ in base.edges():
        g.add_edge(a, b, BLUE)
        g.add_edge(n + a, b, BLUE)
        g.add_edge(n + b, a, BLUE)
    for i in range(n):
        g.add_edge(n + i, 2 * n, BLUE)
    return g


def cycle_witness(n: int) -> EliminationWitness:
    back = {0: ()}
    if n > 1:
        back[1] = (0,)
    for i in range(2, n):
        back[i] = (0, i - 1)
    return EliminationWitness(list(range(n)), back, min(n - 1, 2))


def generate(kind: str, *params) -> GadgetCert:
    """Build a certified gadget.

    ``kind`` is one of ``clique`` (m), ``cycle`` (n), ``kneser`` (n, k) or
    ``mycielski`` (a base GadgetCert or RBGraph). The Mycielski lower bound
    comes from the exact oracle; the others are closed forms.
    """
    kind = kind.lower()
    if kind == "clique":
        (m,) = params
        if m < 1:
            raise BadParams("Clique(m) needs m >= 1")
        return GadgetCert(f"K{m}", clique_graph(m), clique_witness(m), Fraction(m), m)
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise BadParams("Cycle(n) needs n >= 3")
        q = Fraction(n, n // 2) if n % 2 else Fraction(2)
        return GadgetCert(f"C{n}", cycle_graph(n), cycle_witness(n), q, 3 if n == 3 else 2)
    if kind == "kneser":
        n, k = params
        if k < 1 or 2 * k > n:
            raise BadParams("Kneser(n, k) needs 1 <= k <= n/2")
        g, _ = kneser_graph(n, k)
        return GadgetCert(f"Kneser({n},{k})", g, min_fill_witness(g), Fraction(n, k), n // k)
    if kind == "mycielski":
        (base,) = params
        base_graph = base.graph if isinstance(base, GadgetCert) else base
        name = f"M({base.name})" if isinstance(base, GadgetCert) else "M(G)"
        g = mycielski_graph(base_graph)
        from .oracle import certify_gadget

        cert = certify_gadget(g, min_fill_witness(g))
        return GadgetCert(name, g, cert.witness, cert.chif_lb, cert.clique_no, "oracle")
    raise BadParams(f"unknown graph kind {kind!r}")
