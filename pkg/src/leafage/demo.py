"""Bundled worked example: a small chordal graph with nine maximal cliques.

The graph ships with a known clique tree whose host has five leaves; one
augmenting-path iteration brings it to four, which is optimal.  The CLI's
``repro`` subcommand replays that run with a printed trace.
"""

from __future__ import annotations

from .cliquetrees import CliqueTree
from .graphs import Graph, chordal_cliques, parse_graph

DEMO_EDGE_LIST = """\
# Worked example: 11 vertices, 15 edges, chordal.
e e d
e f d
e d k
e f a
e d a
e d c
e k c
e a c
e a h
e a g
e a b
e c b
e c i
e c j
e b i
"""

# The shipped starting tree, as unordered pairs of clique member sets.
_DEMO_TREE_PAIRS = [
    ("de", "adf"),
    ("adf", "acd"),
    ("acd", "cdk"),
    ("abc", "ag"),
    ("abc", "ah"),
    ("abc", "acd"),
    ("bci", "cj"),
    ("abc", "bci"),
]


def demo_graph() -> Graph:
    return parse_graph(DEMO_EDGE_LIST)


def demo_clique_tree() -> CliqueTree:
    """The five-leaf starting clique tree of the demo graph."""
    cliques = chordal_cliques(demo_graph())
    index = {"".join(sorted(c)): i for i, c in enumerate(cliques)}
    edges = frozenset(
        (min(index[a], index[b]), max(index[a], index[b]))
        for a, b in _DEMO_TREE_PAIRS
    )
    return CliqueTree(cliques, edges)
