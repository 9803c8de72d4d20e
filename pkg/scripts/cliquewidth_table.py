"""Exact clique-width of the named graphs and small walls, with timings."""
import argparse
import time

from bipfree.cliquewidth import cliquewidth_exact, cliquewidth_oracle
from bipfree.constructions import from_name, make_wall

NAMES = ["P_4", "P_5", "C_4", "C_5", "C_6", "C_7", "K_{1,5}", "S_{1,2,3}", "2P_3", "3P_2",
         "K_{1,3}+P_2", "P_1+S_{1,1,3}", "P_2+P_4", "K_5"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--oracle", action="store_true", help="cross-check graphs up to 7 vertices")
    args = ap.parse_args()
    rows = [(name, from_name(name)) for name in NAMES] + [("wall(2)", make_wall(2))]
    rows = [(name, g) for name, g in rows if g.n <= 12]
    print(f"{'graph':16} {'n':>3} {'m':>3} {'cwd':>4} {'secs':>7}  oracle")
    for name, g in rows:
        t = time.perf_counter()
        w = cliquewidth_exact(g).width
        dt = time.perf_counter() - t
        o = cliquewidth_oracle(g) if args.oracle and g.n <= 7 else ""
        print(f"{name:16} {g.n:3d} {len(g.edges):3d} {w:4d} {dt:7.2f}  {o}")


if __name__ == "__main__":
    main()
