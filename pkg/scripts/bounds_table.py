"""Print upper and lower bounds on f(t, omega) side by side, as decimals.

    python3 scripts/bounds_table.py --tmax 12 --registry
"""
import argparse

from fractw.bob import default_registry
from fractw.bounds import bound_table, registry_base, trivial_base


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tmax", type=int, default=10)
    ap.add_argument("--registry", action="store_true")
    args = ap.parse_args()
    base = registry_base(default_registry()) if args.registry else trivial_base
    print(f"{'t':>3} {'w':>3} {'upper':>9} {'cor1':>9} {'recursive':>9} {'gap':>7}")
    for r in bound_table(args.tmax, base):
        if r.lb_thm3 is None:
            continue
        gap = float(r.ub_thm1 - r.lb_thm3)
        print(f"{r.t:>3} {r.omega:>3} {float(r.ub_thm1):9.4f} {float(r.lb_cor1):9.4f} "
              f"{float(r.lb_thm3):9.4f} {gap:7.4f}")


if __name__ == "__main__":
    main()
