"""
Moving a dominating set along a path
====================================

"""

# a path on seven vertices and two dominating sets of it
from domreconf import DsrInstance, apply, decide, oracle_reachable, solve, verify
from domreconf.graph import path_graph

g = path_graph(7)
source = frozenset({0, 3, 6})
target = frozenset({1, 2, 4, 6})

# with room for one extra token the instance is solvable
inst = DsrInstance(g, source, target, 4)
print(decide(inst))

# the exhaustive search finds a shortest sequence
best = oracle_reachable(inst)
for step in apply(best.sequence):
    print(sorted(v + 1 for v in step))

# solve goes through a minimum dominating set instead; longer but linear time
answer, seq = solve(inst)
print(answer, len(seq), "moves")
print(verify(inst, seq))

# at k = 3 the source is minimal and already full, so nothing can move
tight = DsrInstance(g, source, frozenset({1, 4, 6}), 3)
print(decide(tight))
print(oracle_reachable(tight).reachable)
