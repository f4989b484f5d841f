"""
Vertex cover reconfiguration inside dominating set reconfiguration
==================================================================

"""

from domreconf.generators import GenSpec, generate
from domreconf.graph import is_bipartite
from domreconf.reconfig import oracle_reachable
from domreconf.reductions import (
    normalize_sequence,
    reduce_split_to_bipartite_dsr,
    reduce_vcr_to_dsr,
    reduce_vcr_to_split_dsr,
    vcr_oracle,
)

vcr = generate(GenSpec("vcr", 6, seed=4, k_policy="slack")).instance
print("covers", sorted(vcr.source), sorted(vcr.target), "k =", vcr.k)
print("cover reachable:", vcr_oracle(vcr).reachable)

# one gadget vertex per edge; three times as many edges
dsr, rmap = reduce_vcr_to_dsr(vcr)
print(vcr.graph.m, "edges ->", dsr.graph.m)
res = oracle_reachable(dsr)
print("dominating set reachable:", res.reachable)

# a sequence on the bigger graph maps back onto original vertices only
if res.reachable:
    back = normalize_sequence(res.sequence, rmap, dsr.graph)
    print([str(m) for m in back.moves])

# the split version keeps the original vertices as a clique
split, smap = reduce_vcr_to_split_dsr(vcr)
print("split reachable:", oracle_reachable(split).reachable)

# dropping the clique edges and adding x - y gives a bipartite graph, k + 1
b = frozenset(range(split.graph.n)) - smap.clique
bip, _ = reduce_split_to_bipartite_dsr(split, (smap.clique, b))
print("bipartite:", is_bipartite(bip.graph), "k =", bip.k)
print("bipartite reachable:", oracle_reachable(bip).reachable)
