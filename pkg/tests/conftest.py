"""Shared fixtures: the kinship corpus files and a random-graph builder."""

from __future__ import annotations

import numpy as np
import pytest

from qcorolla.corolla import ConverseRegistry, CorollaGraph
from qcorolla.qusym import vocabulary_from_symbols

KINSHIP_VOCAB = """\
# kinship node vocabulary
person:Bob
person:Alice
person:Mary
"""

KINSHIP_REGISTRY = """\
# converse predicate pairs with total entanglement weight (bits)
kin:ParentOf <-> kin:ChildOf = 0.4
kin:HusbandOf <-> kin:WifeOf = 1.0
"""

KINSHIP_TRIPLES = """\
person:Bob kin:ParentOf person:Alice .
person:Alice kin:ChildOf person:Bob .
person:Bob kin:HusbandOf person:Mary .
person:Mary kin:WifeOf person:Bob .
"""


@pytest.fixture
def kinship_paths(tmp_path):
    """(vocab, registry, triples) files for the Bob/Alice/Mary corpus."""
    vocab = tmp_path / "vocabulary.txt"
    registry = tmp_path / "registry.txt"
    triples = tmp_path / "triples.nt"
    vocab.write_text(KINSHIP_VOCAB, encoding="utf-8")
    registry.write_text(KINSHIP_REGISTRY, encoding="utf-8")
    triples.write_text(KINSHIP_TRIPLES, encoding="utf-8")
    return vocab, registry, triples


def build_kinship_graph() -> CorollaGraph:
    """The kinship corpus built directly through the graph API."""
    voc = vocabulary_from_symbols(["person:Bob", "person:Alice", "person:Mary"])
    registry = ConverseRegistry()
    registry.register_converse("kin:ParentOf", "kin:ChildOf", 0.4)
    registry.register_converse("kin:HusbandOf", "kin:WifeOf", 1.0)
    graph = CorollaGraph(voc, registry)
    graph.join(
        graph.make_corolla("person:Bob", "kin:ParentOf"),
        graph.make_corolla("person:Alice", "kin:ChildOf"),
    )
    graph.join(
        graph.make_corolla("person:Bob", "kin:HusbandOf"),
        graph.make_corolla("person:Mary", "kin:WifeOf"),
    )
    return graph


@pytest.fixture
def kinship_graph() -> CorollaGraph:
    return build_kinship_graph()


def build_random_graph(n_triples: int, seed: int) -> CorollaGraph:
    """A random multigraph with ``n_triples`` distinct edges."""
    rng = np.random.default_rng(seed)
    node_symbols = [f"ns:N{i:03d}" for i in range(100)]
    voc = vocabulary_from_symbols(node_symbols)
    registry = ConverseRegistry()
    forwards = []
    for k in range(40):
        weight = float(rng.uniform(0.0, 1.0))
        registry.register_converse(f"rel:F{k:02d}", f"rel:B{k:02d}", weight)
        forwards.append(f"rel:F{k:02d}")
    graph = CorollaGraph(voc, registry)
    keys = set()
    while len(keys) < n_triples:
        s = node_symbols[rng.integers(len(node_symbols))]
        p = forwards[rng.integers(len(forwards))]
        o = node_symbols[rng.integers(len(node_symbols))]
        if (s, p, o) in keys:
            continue
        keys.add((s, p, o))
        left = graph.make_corolla(s, p)
        right = graph.make_corolla(o, registry.converse_name(p))
        graph.join(left, right)
    return graph


@pytest.fixture(scope="session")
def large_random_graph() -> CorollaGraph:
    """One 10^4-triple graph shared by the heavyweight structural checks."""
    return build_random_graph(10_000, seed=20260810)
