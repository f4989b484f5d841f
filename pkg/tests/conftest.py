import sys
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from domreconf.generators import random_cotree, random_interval_representation, random_tree
from domreconf.cotree import evaluate_cotree
from domreconf.graph import Graph
from domreconf.intervals import intersection_graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


@st.composite
def dominating_pairs(draw, graph_strategy):
    """A graph with a dominating set built by adding random vertices to a random base."""
    g = draw(graph_strategy)
    d = set(draw(st.sets(st.integers(0, g.n - 1))))
    for v in range(g.n):
        if not ({v} | set(g.neighbors(v))) & d:
            d.add(draw(st.sampled_from([v, *g.neighbors(v)])))
    return g, frozenset(d)


def seeded(strategy_fn, max_n):
    """Strategy from a seeded generator, so shrinking works on (n, seed)."""
    return st.builds(
        lambda n, seed: strategy_fn(n, random.Random(seed)),
        st.integers(1, max_n),
        st.integers(0, 2**32),
    )


def trees(max_n=12):
    return seeded(random_tree, max_n)


def cographs(max_n=10):
    return st.builds(
        lambda n, seed: (lambda ct: (evaluate_cotree(ct, n), ct))(random_cotree(n, random.Random(seed))),
        st.integers(1, max_n),
        st.integers(0, 2**32),
    )


def interval_graphs(max_n=10):
    def build(n, seed):
        rep = random_interval_representation(n, random.Random(seed))
        return intersection_graph(rep), rep

    return st.builds(build, st.integers(1, max_n), st.integers(0, 2**32))


@pytest.fixture
def p7_instance():
    """Path v1..v7 with a five-move shortest walk at k = 4."""
    from domreconf.graph import path_graph
    from domreconf.reconfig import DsrInstance

    return DsrInstance(path_graph(7), frozenset({0, 3, 6}), frozenset({1, 2, 4, 6}), 4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
