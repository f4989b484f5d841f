"""
Timing decide and solve on large trees
======================================

"""

import time

from domreconf import ClassEvidence, decide, solve
from domreconf.generators import GenSpec, generate

tree = ClassEvidence("tree")

for n in (1_000, 10_000, 100_000):
    inst = generate(GenSpec("tree", n, seed=0, k_policy="slack")).instance
    t0 = time.perf_counter()
    d = decide(inst, tree)
    t1 = time.perf_counter()
    _, seq = solve(inst, tree)
    t2 = time.perf_counter()
    print(f"n={n:>7}  {d}  decide {t1 - t0:.3f}s  solve {t2 - t1:.3f}s  {len(seq)} moves")
