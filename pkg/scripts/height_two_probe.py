"""Search for unit-disk instances of height <= 2 on which the 2-color greedy fails.

Two colors at height 2 is open; the greedy is only proven up to sqrt(3).
Each failure is checked against the exact solver, which tells a greedy
weakness apart from a genuine counterexample to 2-colorability.
"""

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from cfgeo import formats
from cfgeo.generators import random_instance
from cfgeo.geometry import SQRT3, UNIT_DISK, instance_height, le_height
from cfgeo.graph import verify_cf
from cfgeo.solver import BudgetExceeded, is_cf_k_colorable
from cfgeo.strips import greedy_strip_coloring


@dataclass(frozen=True)
class ProbeConfig:
    instances: int = 5000
    max_n: int = 40
    seed: int = 1
    budget: int = 200_000
    dump: str | None = None


def run(cfg: ProbeConfig) -> None:
    tried = above_sqrt3 = greedy_fail = not_2_colorable = unknown = 0
    for i in range(cfg.instances):
        r = random.Random(cfg.seed * 7919 + i)
        n = r.randint(2, cfg.max_n)
        inst = random_instance(UNIT_DISK, n, max(2, n // r.choice([1, 2, 3])), 2, r.getrandbits(32))
        tried += 1
        if le_height(instance_height(inst), SQRT3):
            continue
        above_sqrt3 += 1
        res = greedy_strip_coloring(inst, experimental=True)
        if verify_cf(res.graph, res.coloring).valid:
            continue
        greedy_fail += 1
        try:
            exact = is_cf_k_colorable(res.graph, 2, budget=cfg.budget)
        except BudgetExceeded:
            unknown += 1
            continue
        if exact is None:
            not_2_colorable += 1
            print(f"instance {i}: NOT 2-colorable (n={n})")
            if cfg.dump:
                with open(f"{cfg.dump}-{i}.inst", "w") as fh:
                    fh.write(formats.dump_instance(inst))
    print(f"tried {tried}, height in (sqrt3, 2]: {above_sqrt3}")
    print(f"greedy failures {greedy_fail}, of which not 2-colorable {not_2_colorable}, undecided {unknown}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", type=int, default=ProbeConfig.instances)
    p.add_argument("--max-n", type=int, default=ProbeConfig.max_n)
    p.add_argument("--seed", type=int, default=ProbeConfig.seed)
    p.add_argument("--budget", type=int, default=ProbeConfig.budget)
    p.add_argument("--dump", help="write counterexamples to <prefix>-<i>.inst")
    a = p.parse_args()
    run(ProbeConfig(a.instances, a.max_n, a.seed, a.budget, a.dump))


if __name__ == "__main__":
    main()
