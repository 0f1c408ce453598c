"""Exact fractional chromatic number via the independent-set covering LP.

The LP is solved in its packing (dual) form

    max sum_v y_v   s.t.  sum_{v in S} y_v <= 1  for every maximal independent S,

whose slack basis is feasible at the origin, so no phase one is needed. The
optimal tableau yields both the fractional clique ``y`` and the covering
weights ``x_S`` (the reduced costs of the slacks); the two are checked
against each other before a certificate is returned.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import BadParams, TooLarge, WitnessInvalid
from .exact import ColorSet, fmt, rational_to_json
from .graph import BLUE, BLUE_ONLY, RBGraph, max_clique, maximal_cliques, verify_witness

DEFAULT_GUARD_N = 30


def guard_n() -> int:
    return int(os.environ.get("FRACTW_GUARD_N", DEFAULT_GUARD_N))


def enumerate_mis(g: RBGraph, limit: int | None = None) -> list[frozenset[int]]:
    """All maximal independent sets of the blue subgraph of ``g``."""
    limit = guard_n() if limit is None else limit
    if g.n > limit:
        raise TooLarge(f"{g.n} vertices exceeds the oracle guard of {limit}")
    sets = list(maximal_cliques(g, BLUE_ONLY, complement=True))
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


class Tableau:
    """Dense rational tableau for ``max c.y, A y <= b, y >= 0`` with ``b >= 0``.

    Columns ``0..n-1`` are structural, ``n..n+m-1`` are slacks. Pivoting uses
    Bland's rule, so the method terminates without cycling.
    """

    def __init__(self, A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
        self.m = len(A)
        self.n = len(c)
        if any(x < 0 for x in b):
            raise ValueError("slack basis requires b >= 0")
        width = self.n + self.m
        self.rows = []
        for i, row in enumerate(A):
            r = list(row) + [Fraction(0)] * self.m + [b[i]]
            r[self.n + i] = Fraction(1)
            self.rows.append(r)
        # objective row holds reduced costs z_j - c_j; optimal when all >= 0
        self.obj = [-x for x in c] + [Fraction(0)] * self.m + [Fraction(0)]
        self.basis = [self.n + i for i in range(self.m)]
        self.width = width
        self.pivots = 0

    def _entering(self) -> int | None:
        for j in range(self.width):
            if self.obj[j] < 0:
                return j
        return None

    def _leaving(self, j: int) -> int | None:
        best = None
        for i, row in enumerate(self.rows):
            if row[j] > 0:
                key = (row[-1] / row[j], self.basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        return None if best is None else best[1]

    def pivot(self, i: int, j: int) -> None:
        row = self.rows[i]
        p = row[j]
        if p != 1:
            self.rows[i] = row = [x / p for x in row]
        nz = [k for k, x in enumerate(row) if x]
        for r in range(self.m):
            if r != i:
                f = self.rows[r][j]
                if f:
                    tgt = self.rows[r]
                    for k in nz:
                        tgt[k] -= f * row[k]
        f = self.obj[j]
        if f:
            for k in nz:
                self.obj[k] -= f * row[k]
        self.basis[i] = j
        self.pivots += 1

    def solve(self) -> str:
        while True:
            j = self._entering()
            if j is None:
                return "optimal"
            i = self._leaving(j)
            if i is None:
                return "unbounded"
            self.pivot(i, j)

    def primal(self) -> list[Fraction]:
        y = [Fraction(0)] * self.n
        for i, bv in enumerate(self.basis):
            if bv < self.n:
                y[bv] = self.rows[i][-1]
        return y

    def dual(self) -> list[Fraction]:
        return self.obj[self.n:self.n + self.m]

    @property
    def value(self) -> Fraction:
        return self.obj[-1]


@dataclass
class ChifCertificate:
    """Optimal covering weights ``primal`` and fractional clique ``dual``."""

    value: Fraction
    columns: list[frozenset[int]]
    primal: list[Fraction]
    dual: list[Fraction]
    n: int
    pivots: int = 0

    def check(self, g: RBGraph) -> None:
        """Raise AssertionError unless both certificates are feasible with equal value."""
        assert all(x >= 0 for x in self.primal), "negative column weight"
        assert all(y >= 0 for y in self.dual), "negative vertex weight"
        for v in range(self.n):
            cover = sum((x for S, x in zip(self.columns, self.primal) if v in S), Fraction(0))
            assert cover >= 1, f"vertex {v} covered only {cover}"
        for S in self.columns:
            assert not any(g.has_edge(a, b, BLUE_ONLY) for a, b in combinations(sorted(S), 2)), \
                f"column {sorted(S)} is not independent"
            assert sum(self.dual[v] for v in S) <= 1, f"dual violated on {sorted(S)}"
        assert sum(self.primal) == self.value, "primal value mismatch"
        assert sum(self.dual) == self.value, "dual value mismatch"

    def coloring(self) -> dict[int, ColorSet]:
        """Fractional coloring realising ``value``: column ``S`` owns a block of
        length ``x_S``; each vertex keeps the first unit of its blocks."""
        blocks = []
        start = Fraction(0)
        for S, x in zip(self.columns, self.primal):
            if x:
                blocks.append((S, start, start + x))
                start += x
        out = {}
        for v in range(self.n):
            need = Fraction(1)
            pairs = []
            for S, lo, hi in blocks:
                if v in S and need > 0:
                    take = min(hi - lo, need)
                    pairs.append((lo, lo + take))
                    need -= take
            out[v] = ColorSet.from_pairs(pairs)
        return out

    def to_json(self) -> dict:
        return {
            "value": fmt(self.value),
            "value_exact": rational_to_json(self.value),
            "primal": [{"set": sorted(S), "weight": fmt(x)}
                       for S, x in zip(self.columns, self.primal) if x],
            "dual": {str(v): fmt(y) for v, y in enumerate(self.dual) if y},
        }


def chif_exact(g: RBGraph, limit: int | None = None) -> ChifCertificate:
    """Exact fractional chromatic number of the blue subgraph of ``g``."""
    if g.n == 0:
        return ChifCertificate(Fraction(0), [], [], [], 0)
    cols = enumerate_mis(g, limit)
    A = [[Fraction(1) if v in S else Fraction(0) for v in range(g.n)] for S in cols]
    tab = Tableau(A, [Fraction(1)] * len(cols), [Fraction(1)] * g.n)
    status = tab.solve()
    if status != "optimal":  # pragma: no cover - bounded by construction
        raise RuntimeError(f"packing LP reported {status}")
    cert = ChifCertificate(tab.value, cols, tab.dual(), tab.primal(), g.n, tab.pivots)
    cert.check(g)
    return cert


def bfold_color(g: RBGraph, k: int, b: int, limit: int | None = None,
                max_nodes: int = 2_000_000) -> dict[int, frozenset[int]] | None:
    """A (k, b)-coloring of the blue subgraph: ``b`` colors out of ``1..k`` per
    vertex, disjoint across edges. Returns ``None`` after exhaustive search."""
    limit = guard_n() if limit is None else limit
    if g.n > limit:
        raise TooLarge(f"{g.n} vertices exceeds the search guard of {limit}")
    if b < 1 or k < 0:
        raise BadParams("need b >= 1 and k >= 0")
    if g.n == 0:
        return {}
    if k < b:
        return None
    nbrs = [set(g.blue_neighbors(v)) for v in range(g.n)]
    # largest-degree-first, then prefer vertices adjacent to already placed ones
    order: list[int] = []
    left = set(range(g.n))
    while left:
        v = max(left, key=lambda u: (len(nbrs[u] & set(order)), len(nbrs[u]), -u))
        order.append(v)
        left.discard(v)
    palette = list(combinations(range(1, k + 1), b))
    assign: dict[int, frozenset[int]] = {}
    nodes = 0

    def go(idx: int, used_max: int) -> bool:
        nonlocal nodes
        if idx == len(order):
            return True
        nodes += 1
        if nodes > max_nodes:
            raise TooLarge(f"(k,b)=({k},{b}) search exceeded {max_nodes} nodes")
        v = order[idx]
        taken = set()
        for u in nbrs[v]:
            if u in assign:
                taken |= assign[u]
        for combo in palette:
            # colors above used_max are interchangeable: only try the first fresh one
            fresh = [c for c in combo if c > used_max]
            if fresh and fresh != list(range(used_max + 1, used_max + 1 + len(fresh))):
                continue
            if taken.intersection(combo):
                continue
            assign[v] = frozenset(combo)
            if go(idx + 1, max(used_max, combo[-1])):
                return True
            del assign[v]
        return False

    return dict(assign) if go(0, 0) else None


def chromatic_number(g: RBGraph, limit: int | None = None) -> int:
    k = 0
    while bfold_color(g, k, 1, limit) is None:
        k += 1
    return k


def certify_gadget(g: RBGraph, witness, limit: int | None = None):
    """Certify ``g`` as a gadget: exact chi_f (dual-checked) and clique number."""
    from .generators import GadgetCert

    v = verify_witness(g, witness)
    if not v:
        raise WitnessInvalid(v.detail)
    blue = g.blue_subgraph()
    cert = chif_exact(blue, limit)
    cn = max_clique(blue, BLUE_ONLY, limit=None)
    return GadgetCert(f"G{blue.n}", blue, witness, cert.value, cn, "oracle")
