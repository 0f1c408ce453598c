"""DIMACS-RB text format and witness JSON files.

    c comment
    p edge <n> <m>
    e <u> <v> R|B        (1-indexed; a missing label means Blue)
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .graph import BLUE, EDGE_COLORS, EliminationWitness, RBGraph


def parse_dimacs_rb(text: str) -> RBGraph:
    g = None
    declared_m = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if g is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer sizes in {line!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative sizes", lineno)
            g = RBGraph(n)
        elif parts[0] == "e":
            if g is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) not in (3, 4):
                raise ParseError(f"bad edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            color = parts[3].upper() if len(parts) == 4 else BLUE
            if color not in EDGE_COLORS:
                raise ParseError(f"edge label must be R or B, got {parts[3]!r}", lineno)
            if not (1 <= u <= g.n and 1 <= v <= g.n):
                raise ParseError(f"endpoint out of range 1..{g.n}", lineno)
            try:
                g.add_edge(u - 1, v - 1, color)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if g is None:
        raise ParseError("missing problem line")
    if declared_m != g.m:
        raise ParseError(f"header declares {declared_m} edges, found {g.m}")
    return g


def format_dimacs_rb(g: RBGraph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1} {c}" for u, v, c in g.edges()]
    return "\n".join(lines) + "\n"


def read_dimacs_rb(path) -> RBGraph:
    return parse_dimacs_rb(Path(path).read_text())


def write_dimacs_rb(g: RBGraph, path, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(format_dimacs_rb(g, comments))


def read_witness(path) -> EliminationWitness:
    try:
        data = json.loads(Path(path).read_text())
        return EliminationWitness.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad witness file {path}: {exc}") from None


def write_witness(w: EliminationWitness, path) -> None:
    Path(path).write_text(json.dumps(w.to_json(), sort_keys=True) + "\n")
