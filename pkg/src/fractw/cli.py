"""``fractw`` command line.

Exit codes: 0 ok, 2 usage or input error, 3 strategy forfeit, 4 size guard,
1 failed verification.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .alice import GreedyAlice, RandomAlice
from .bob import AdversaryBob, RandomBob, default_registry, plan_corollary1, plan_theorem3
from .bounds import bound_table, registry_base, trivial_base
from .dimacs import read_dimacs_rb, write_dimacs_rb, write_witness
from .errors import BadParams, Forfeit, ParseError, TooLarge
from .exact import fmt
from .game import GameConfig, extract_blue_subgraph, materialize_universal, play_game
from .graph import BLUE_ONLY, max_clique, verify_witness
from .oracle import chif_exact

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FORFEIT, EXIT_GUARD = 0, 1, 2, 3, 4

ALICES = {"greedy": GreedyAlice, "random": RandomAlice}
BOBS = ("random", "cor1", "thm3")


def _bob(name: str, t: int, omega: int, turns: int | None):
    if name == "random":
        return RandomBob(turns)
    if name == "cor1":
        return AdversaryBob(plan_corollary1(t, omega))
    return AdversaryBob(plan_theorem3(t, omega, default_registry()))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_play(args) -> int:
    bob = _bob(args.bob, args.t, args.omega, args.turns)
    cfg = GameConfig(args.t, args.omega)
    state = play_game(cfg, ALICES[args.alice](), bob, seed=args.seed)
    summary = {
        "t": args.t, "omega": args.omega, "N": state.config.N, "seed": args.seed,
        "alice": args.alice, "bob": args.bob,
        "total": fmt(state.total_used.measure),
        "total_approx": float(state.total_used.measure),
        "ceiling": fmt(cfg.ceiling),
    }
    if state.report is not None:
        summary.update(state.report.summary())
    if args.out:
        Path(args.out).write_text(state.transcript().to_jsonl())
    text = _dump(summary)
    if args.summary:
        Path(args.summary).write_text(text + "\n")
    print(text)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.plan == "cor1":
        plan = plan_corollary1(args.t, args.omega)
    else:
        plan = plan_theorem3(args.t, args.omega, default_registry())
    state = play_game(plan.config, GreedyAlice(), AdversaryBob(plan), seed=0)
    g, w = extract_blue_subgraph(state)
    verdict = verify_witness(g, w)
    cn = max_clique(g, BLUE_ONLY, limit=None)
    prefix = Path(args.out)
    write_dimacs_rb(g, prefix.with_suffix(".dimacs"),
                    (f"blue subgraph of {plan.name} adversary vs greedy, t={args.t} omega={args.omega}",))
    write_witness(w, prefix.with_suffix(".witness.json"))
    print(_dump({"vertices": g.n, "edges": g.m, "width": w.width, "witness_valid": verdict.ok,
                 "clique_number": cn, "kprime_measure": fmt(state.report.union_measure),
                 "guaranteed_bound": fmt(plan.guaranteed_bound)}))
    return EXIT_OK if verdict.ok and cn <= args.omega else EXIT_FAIL


def cmd_chif(args) -> int:
    g = read_dimacs_rb(args.path)
    cert = chif_exact(g.blue_subgraph())
    if args.cert:
        Path(args.cert).write_text(_dump(cert.to_json()) + "\n")
    print(fmt(cert.value))
    return EXIT_OK


def cmd_bounds(args) -> int:
    base = registry_base(default_registry()) if args.registry else trivial_base
    rows = bound_table(args.tmax, base, t_min=args.tmin)
    records = [{
        "t": r.t, "omega": r.omega,
        "ub_thm1": fmt(r.ub_thm1),
        "lb_cor1": None if r.lb_cor1 is None else fmt(r.lb_cor1),
        "lb_thm3": None if r.lb_thm3 is None else fmt(r.lb_thm3),
        "ub_thm1_approx": float(r.ub_thm1),
        "lb_cor1_approx": None if r.lb_cor1 is None else float(r.lb_cor1),
        "eq1_approx": r.eq1_approx,
    } for r in rows]
    if args.format == "json":
        print(json.dumps(records, sort_keys=True))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import CHECKS, run_suite

    if args.suite != "all" and args.suite not in CHECKS:
        print(f"unknown suite {args.suite!r}; choose from all, {', '.join(CHECKS)}", file=sys.stderr)
        return EXIT_USAGE
    results = run_suite(args.suite, args.scale)
    for r in results:
        print(r.line())
    if args.json:
        Path(args.json).write_text(_dump([r.to_json() for r in results]) + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_universal(args) -> int:
    H, w, _ = materialize_universal(GameConfig(args.t, args.omega, args.N))
    if args.out:
        prefix = Path(args.out)
        write_dimacs_rb(H, prefix.with_suffix(".dimacs"))
        write_witness(w, prefix.with_suffix(".witness.json"))
    blue = H.blue_subgraph()
    print(_dump({"vertices": H.n, "edges": H.m, "blue_edges": blue.m,
                 "blue_clique_number": max_clique(blue, BLUE_ONLY, limit=None)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fractw", description="Online fractional coloring game on partial t-trees")
    sub = p.add_subparsers(dest="cmd", required=True)

    play = sub.add_parser("play", help="play one game and print a summary")
    play.add_argument("-t", type=int, required=True, help="treewidth t")
    play.add_argument("-w", "--omega", type=int, required=True, help="clique bound omega")
    play.add_argument("--alice", choices=sorted(ALICES), default="greedy")
    play.add_argument("--bob", choices=BOBS, default="random")
    play.add_argument("--seed", type=int, default=0)
    play.add_argument("-N", "--turns", type=int, default=None, help="turns for the random Bob (default 2t+8)")
    play.add_argument("--out", help="write the transcript (JSON lines) here")
    play.add_argument("--summary", help="write the summary JSON here")
    play.set_defaults(func=cmd_play)

    con = sub.add_parser("construct", help="blue subgraph of an adversary game as DIMACS-RB + witness")
    con.add_argument("-t", type=int, required=True)
    con.add_argument("-w", "--omega", type=int, required=True)
    con.add_argument("--plan", choices=("cor1", "thm3"), default="cor1")
    con.add_argument("--out", required=True, help="output prefix")
    con.set_defaults(func=cmd_construct)

    chif = sub.add_parser("chif", help="exact fractional chromatic number of a DIMACS-RB file")
    chif.add_argument("path")
    chif.add_argument("--cert", help="write the primal/dual certificate JSON here")
    chif.set_defaults(func=cmd_chif)

    bnd = sub.add_parser("bounds", help="table of upper and lower bounds on f(t, omega)")
    bnd.add_argument("--tmax", type=int, default=10)
    bnd.add_argument("--tmin", type=int, default=2)
    bnd.add_argument("--format", choices=("csv", "json"), default="csv")
    bnd.add_argument("--registry", action="store_true", help="use certified gadgets as recursion base")
    bnd.set_defaults(func=cmd_bounds)

    ver = sub.add_parser("verify", help="run the acceptance checks")
    ver.add_argument("--suite", default="all")
    ver.add_argument("--scale", choices=("desk", "quick"), default="desk")
    ver.add_argument("--json", help="write a machine-readable report here")
    ver.set_defaults(func=cmd_verify)

    uni = sub.add_parser("universal", help="materialize the universal t-tree (t <= 3, N <= 2)")
    uni.add_argument("-t", type=int, required=True)
    uni.add_argument("-w", "--omega", type=int, required=True)
    uni.add_argument("-N", type=int, required=True)
    uni.add_argument("--out", help="output prefix")
    uni.set_defaults(func=cmd_universal)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Forfeit as exc:
        print(f"forfeit: {exc}", file=sys.stderr)
        return EXIT_FORFEIT
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (BadParams, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
