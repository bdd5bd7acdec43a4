"""Print graph counts and max conflict-free chromatic number for n = 1..N (both modes)."""

import argparse
import time

from cfgeo.graph import CLOSED, OPEN
from cfgeo.solver import CENSUS_MAX_N, cf_chromatic_number, nonisomorphic_graphs


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=6, help=f"at most {CENSUS_MAX_N}")
    a = p.parse_args()
    print(f"{'n':>2} {'graphs':>7} {'closed':>6} {'open':>5} {'time':>7}")
    for n in range(1, min(a.max_n, CENSUS_MAX_N) + 1):
        t = time.perf_counter()
        gs = nonisomorphic_graphs(n)
        closed = max(cf_chromatic_number(g, CLOSED).k for g in gs)
        opens = [cf_chromatic_number(g, OPEN) for g in gs]
        open_max = max((r.k for r in opens if r is not None), default="none")
        print(f"{n:>2} {len(gs):>7} {closed:>6} {open_max!s:>5} {time.perf_counter() - t:6.1f}s")


if __name__ == "__main__":
    main()
