"""Fuzz greedy Alice against random Bob and report the smallest slack to
t + (omega - 1)/t per (t, omega).

    python3 scripts/theorem1_fuzz.py --tmax 6 --games 200
"""
import argparse

from fractw.alice import GreedyAlice
from fractw.bob import RandomBob
from fractw.exact import fmt
from fractw.game import GameConfig, play_game


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tmax", type=int, default=6)
    ap.add_argument("--games", type=int, default=200)
    ap.add_argument("--turns", type=int, default=None)
    args = ap.parse_args()
    for t in range(2, args.tmax + 1):
        for omega in range(2, t + 1):
            cfg = GameConfig(t, omega)
            worst = min(cfg.ceiling - play_game(cfg, GreedyAlice(), RandomBob(args.turns), seed).total_used.measure
                        for seed in range(args.games))
            print(f"t={t} omega={omega} ceiling={fmt(cfg.ceiling)} min_slack={fmt(worst)}")


if __name__ == "__main__":
    main()
