import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cographs, interval_graphs, trees
from oracles import dominates, domination_number, valid_walk, walk
from domreconf.canonical import (
    cograph_canonical,
    interval_cells,
    label_interval,
    label_tree,
    transform_cograph,
    transform_interval,
    transform_tree,
    tree_cells,
)
from domreconf.canonical.cells import cell_transform
from domreconf.cotree import cotree_decompose
from domreconf.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from domreconf.intervals import IntervalRepresentation, intersection_graph


def random_dominating(g, rng):
    d = {v for v in range(g.n) if rng.random() < 0.4}
    for v in range(g.n):
        if not ({v} | set(g.neighbors(v))) & d:
            d.add(rng.choice([v, *g.neighbors(v)]))
    return frozenset(d)


def touched_once(seq):
    vs = [mv.vertex for mv in seq.moves]
    return len(vs) == len(set(vs))


# trees

SPIDER = Graph(
    13,
    [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (5, 7), (1, 8), (8, 9), (9, 10), (10, 11), (11, 12)],
)


def test_p4_labels_and_cells():
    lab = label_tree(path_graph(4), root=0)
    assert lab.label == (2, 3, 2, 1)
    assert lab.V2 == {0, 2}
    cells = tree_cells(lab)
    assert cells.order == (2, 0)
    assert cells.cells == ({2, 3}, {0, 1})


def test_p2_and_single_vertex():
    lab = label_tree(path_graph(2), root=0)
    assert lab.label == (2, 1)
    assert tree_cells(lab).cells == ({0, 1},)
    assert label_tree(Graph(1)).V2 == {0}


def test_star_rooted_at_leaf():
    lab = label_tree(star_graph(3), root=1)
    assert lab.label[0] == 2 and lab.label[1] == 3
    assert lab.V2 == {0}
    assert domination_number(star_graph(3)) == 1


def test_spider_five_cells():
    lab = label_tree(SPIDER)
    cells = tree_cells(lab)
    assert len(cells.cells) == 5
    assert cells.order == (3, 5, 11, 8, 0)
    assert [sorted(c) for c in cells.cells] == [[3, 4], [5, 6, 7], [11, 12], [8, 9, 10], [0, 1, 2]]
    assert len(lab.V2) == domination_number(SPIDER)


def test_label_tree_errors():
    with pytest.raises(ValueError):
        label_tree(cycle_graph(4))
    with pytest.raises(ValueError):
        label_tree(star_graph(3), root=0)


def test_tree_transform_examples():
    t = path_graph(4)
    cells = tree_cells(label_tree(t))
    assert len(transform_tree(t, cells, {0, 2}).moves) == 0
    seq = transform_tree(t, cells, {1, 2})
    assert walk(seq.start, seq.moves)[-1] == {0, 2}
    assert valid_walk(t, {1, 2}, seq.moves, {0, 2}, 3)
    s = star_graph(3)
    leaves = {1, 2, 3}
    seq = transform_tree(s, tree_cells(label_tree(s)), leaves)
    assert valid_walk(s, leaves, seq.moves, {0}, 4)
    with pytest.raises(ValueError):
        transform_tree(t, cells, {0})


@given(trees(12), st.integers(0, 10**6))
def test_tree_labeling_invariants(t, seed):
    lab = label_tree(t)
    v2 = lab.V2
    assert dominates(t, v2)
    for v in range(t.n):
        p = lab.parent[v]
        if v != lab.root and lab.label[v] == 1:
            assert lab.label[p] == 2
        if lab.label[v] == 3 and v != lab.root:
            assert any(lab.label[c] == 2 for c in lab.children(v))
    cells = tree_cells(lab)
    assert sorted(v for c in cells.cells for v in c) == list(range(t.n))
    for w, c in zip(cells.order, cells.cells):
        assert c & v2 == {w}
    d = random_dominating(t, random.Random(seed))
    assert all(c & d for c in cells.cells)
    seq = transform_tree(t, cells, d)
    assert valid_walk(t, d, seq.moves, v2, len(d) + 1)
    assert touched_once(seq)


@given(trees(9))
def test_tree_canonical_is_minimum(t):
    assert len(label_tree(t).V2) == domination_number(t)


# intervals

P3_REP = IntervalRepresentation.from_pairs([(0, 1), (0.5, 1.5), (1.2, 2)])
# two overlapping blocks; v2 and v5 end up labelled 2
CHAIN_REP = IntervalRepresentation.from_pairs([(0, 2), (1, 4), (3, 6), (5, 8), (7, 9)])


def test_p3_interval_labels():
    lab = label_interval(path_graph(3), P3_REP)
    assert lab.label == (1, 2, 3)
    assert interval_cells(lab).cells == ({0, 1, 2},)
    seq = transform_interval(path_graph(3), interval_cells(lab), {0, 2})
    assert valid_walk(path_graph(3), {0, 2}, seq.moves, {1}, 3)


def test_single_interval():
    lab = label_interval(Graph(1), IntervalRepresentation.from_pairs([(0, 1)]))
    assert lab.label == (2,)


def test_interval_chain_two_cells():
    g = intersection_graph(CHAIN_REP)
    lab = label_interval(g, CHAIN_REP)
    assert lab.label == (1, 2, 3, 1, 2)
    cells = interval_cells(lab)
    assert cells.order == (1, 4)
    assert cells.cells == ({0, 1}, {2, 3, 4})
    assert domination_number(g) == 2


def test_interval_errors():
    with pytest.raises(ValueError):
        label_interval(complete_graph(2), IntervalRepresentation.from_pairs([(0, 1), (2, 3)]))
    two = IntervalRepresentation.from_pairs([(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        label_interval(Graph(2), two)


@given(interval_graphs(10), st.integers(0, 10**6))
def test_interval_invariants(pair, seed):
    g, rep = pair
    lab = label_interval(g, rep)
    v2 = lab.V2
    assert dominates(g, v2)
    rights = [lab.rep.right[w] for w in lab.order]
    assert rights == sorted(rights) and len(set(rights)) == len(rights)
    cells = interval_cells(lab)
    assert sorted(v for c in cells.cells for v in c) == list(range(g.n))
    for w, c in zip(cells.order, cells.cells):
        assert c & v2 == {w}
    d = random_dominating(g, random.Random(seed))
    assert all(c & d for c in cells.cells)
    seq = transform_interval(g, cells, d)
    assert valid_walk(g, d, seq.moves, v2, len(d) + 1)
    assert touched_once(seq)


@given(interval_graphs(9))
def test_interval_canonical_is_minimum(pair):
    g, rep = pair
    assert len(label_interval(g, rep).V2) == domination_number(g)


@given(interval_graphs(10))
def test_interval_labels_depend_only_on_order(pair):
    g, rep = pair
    squashed = IntervalRepresentation.from_pairs((3 * a + 7, 3 * b + 7) for a, b in rep.pairs())
    assert label_interval(g, rep).label == label_interval(g, squashed).label


# cographs


def test_cograph_canonical_examples():
    assert cograph_canonical(complete_graph(2), cotree_decompose(complete_graph(2))).canonical == {0}
    c4 = cycle_graph(4)
    can = cograph_canonical(c4, cotree_decompose(c4))
    assert can.canonical == {0, 1} and can.universal is None
    assert can.split == ({0, 2}, {1, 3})
    assert cograph_canonical(Graph(1), cotree_decompose(Graph(1))).canonical == {0}
    with pytest.raises(ValueError):
        cograph_canonical(Graph(2), cotree_decompose(Graph(2)))


def test_cograph_transform_examples():
    star = star_graph(4)
    can = cograph_canonical(star, cotree_decompose(star))
    seq = transform_cograph(star, can, {1, 2, 3, 4})
    assert [str(m) for m in seq.moves] == ["+0", "-1", "-2", "-3", "-4"]
    assert valid_walk(star, {1, 2, 3, 4}, seq.moves, {0}, 5)

    c4 = cycle_graph(4)
    can = cograph_canonical(c4, cotree_decompose(c4))
    seq = transform_cograph(c4, can, {0, 2})
    assert valid_walk(c4, {0, 2}, seq.moves, {0, 1}, 3)
    assert not transform_cograph(c4, can, {0, 1}).moves


def test_cograph_step_two_may_be_empty():
    # d = {a-side vertex, b}: nothing to drop in step 2
    c4 = cycle_graph(4)
    can = cograph_canonical(c4, cotree_decompose(c4))
    seq = transform_cograph(c4, can, {2, 1})
    assert valid_walk(c4, {1, 2}, seq.moves, {0, 1}, 3)


@given(cographs(10), st.integers(0, 10**6))
def test_cograph_invariants(pair, seed):
    g, ct = pair
    can = cograph_canonical(g, ct)
    assert dominates(g, can.canonical)
    d = random_dominating(g, random.Random(seed))
    seq = transform_cograph(g, can, d)
    assert valid_walk(g, d, seq.moves, can.canonical, len(d) + 1)
    counts = {}
    for mv in seq.moves:
        counts[mv.vertex] = counts.get(mv.vertex, 0) + 1
    assert max(counts.values(), default=0) <= 2
    if can.universal is None:
        # the set after steps (1)-(2) is no larger than d
        side_a, side_b = can.split
        a, b = can.a, can.b
        if len(d & side_a) < len(d & side_b):
            side_a, side_b, a, b = side_b, side_a, b, a
        mid = set(d) | {b}
        pool = d & (side_a - {a}) if len(d & side_a) >= 2 else d & (side_b - {b})
        if pool:
            mid.discard(min(pool))
        assert dominates(g, mid) and len(mid) <= len(d)
        assert frozenset(mid) in walk(d, seq.moves)


@given(cographs(9))
def test_cograph_canonical_is_minimum(pair):
    g, ct = pair
    assert len(cograph_canonical(g, ct).canonical) == domination_number(g)


def test_cell_transform_order():
    seq = cell_transform(({0, 1}, {2, 3}), (1, 2), frozenset({0, 3}))
    assert [str(m) for m in seq.moves] == ["+1", "-0", "+2", "-3"]
