"""Stress the strip greedy and the 6/4-color strip compositions on random instances.

    python3 scripts/strip_stress.py --instances 2000 --max-n 300
"""

import argparse
import random
import time
from dataclasses import dataclass

from cfgeo.generators import random_instance
from cfgeo.geometry import SQRT3, UNIT_DISK, UNIT_SQUARE, build_intersection_graph
from cfgeo.graph import verify_cf
from cfgeo.strips import color_unit_disks, color_unit_squares, greedy_strip_coloring


@dataclass(frozen=True)
class StressConfig:
    instances: int = 1000
    max_n: int = 200
    seed: int = 0


def run(cfg: StressConfig) -> None:
    rows = []
    for label, kind, colorer, tall in (
        ("greedy, disks, height sqrt3", UNIT_DISK, None, False),
        ("6-color disks", UNIT_DISK, color_unit_disks, True),
        ("4-color squares", UNIT_SQUARE, color_unit_squares, True),
    ):
        t = time.perf_counter()
        failures, colors_used = 0, [0] * 7
        for i in range(cfg.instances):
            r = random.Random(cfg.seed * 1_000_003 + i)
            n = r.randint(1, cfg.max_n)
            width = max(2, n // r.choice([1, 2, 4, 8]))
            height = r.choice([2, 5, 20]) if tall else SQRT3
            inst = random_instance(kind, n, width, height, r.getrandbits(32))
            if colorer is None:
                res = greedy_strip_coloring(inst)
                g, c = res.graph, res.coloring
            else:
                g, c = build_intersection_graph(inst), colorer(inst)
            failures += not verify_cf(g, c).valid
            colors_used[len(c.used_colors)] += 1
        dt = time.perf_counter() - t
        rows.append((label, failures, colors_used, dt))
    for label, failures, used, dt in rows:
        hist = " ".join(f"{k}:{v}" for k, v in enumerate(used) if v)
        print(f"{label:30s} failures={failures:<4d} colors_used {{{hist}}}  {dt:6.1f}s")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", type=int, default=StressConfig.instances)
    p.add_argument("--max-n", type=int, default=StressConfig.max_n)
    p.add_argument("--seed", type=int, default=StressConfig.seed)
    a = p.parse_args()
    run(StressConfig(a.instances, a.max_n, a.seed))


if __name__ == "__main__":
    main()
