"""
Canonical minimum dominating sets
=================================

"""

from domreconf import (
    cograph_canonical,
    cotree_decompose,
    interval_cells,
    label_interval,
    label_tree,
    transform_tree,
    tree_cells,
)
from domreconf.generators import GenSpec, generate
from domreconf.graph import cycle_graph
from domreconf.intervals import IntervalRepresentation, intersection_graph

# trees: labels 1, 2, 3 from the leaves up; vertices labelled 2 form the set
gen = generate(GenSpec("tree", 12, seed=3))
t = gen.instance.graph
lab = label_tree(t)
print("labels", lab.label)
cells = tree_cells(lab)
for w, cell in zip(cells.order, cells.cells):
    print("cell of", w + 1, "->", sorted(v + 1 for v in cell))

# any dominating set reaches the canonical one, one cell at a time
d = gen.instance.source
seq = transform_tree(t, cells, d)
print(len(d), "tokens,", len(seq), "moves")

# intervals: the same idea, sweeping by right endpoint
rep = IntervalRepresentation.from_pairs([(0, 2), (1, 4), (3, 6), (5, 8), (7, 9)])
ilab = label_interval(intersection_graph(rep), rep)
print("interval labels", ilab.label)
print("cells", [sorted(c) for c in interval_cells(ilab).cells])

# cographs: one universal vertex, or a pair across the top join
c4 = cycle_graph(4)
can = cograph_canonical(c4, cotree_decompose(c4))
print("C4 canonical", sorted(can.canonical), "split", [sorted(s) for s in can.split])
