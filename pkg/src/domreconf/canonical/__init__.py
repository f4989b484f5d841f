from .cograph import CographCanonical, cograph_canonical, cograph_choices, transform_cograph
from .interval import (
    IntervalCells,
    IntervalLabeling,
    interval_canonical,
    interval_cells,
    label_interval,
    transform_interval,
)
from .tree import TreeCells, TreeLabeling, label_tree, transform_tree, tree_canonical, tree_cells
