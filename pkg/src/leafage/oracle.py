"""Brute-force ground truth: clique-tree enumeration and corpus generation."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterator

from .cliquetrees import CliqueTree
from .graphs import Graph, chordal_cliques, clique_graph

DEFAULT_TREE_LIMIT = 10**6


class OracleLimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured tree cap."""


def tree_limit() -> int:
    return int(os.environ.get("LEAFAGE_ORACLE_LIMIT", DEFAULT_TREE_LIMIT))


def enumerate_clique_trees(g: Graph, limit: int | None = None) -> Iterator[CliqueTree]:
    """All clique trees of ``g``, each exactly once, in canonical order.

    Spanning trees of the clique graph are generated by edge
    inclusion/exclusion with connectivity pruning; path containment is
    checked incrementally on every newly connected clique pair, so invalid
    branches die early.  Raises :class:`OracleLimitError` past the cap.
    """
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    cap = tree_limit() if limit is None else limit
    cliques = chordal_cliques(g)
    cg = clique_graph(cliques)
    k = len(cliques)
    if k == 1:
        yield CliqueTree(cliques, frozenset())
        return
    edge_list = cg.edges()
    adj: dict[int, set[int]] = {i: set() for i in range(k)}
    component: dict[int, set[int]] = {i: {i} for i in range(k)}
    chosen: list[tuple[int, int]] = []
    count = 0

    def tree_path(src: int, dst: int) -> list[int]:
        stack = [(src, -1)]
        prev = {src: -1}
        while stack:
            node, par = stack.pop()
            if node == dst:
                out = [node]
                while prev[out[-1]] != -1:
                    out.append(prev[out[-1]])
                return out
            for w in adj[node]:
                if w != par:
                    prev[w] = node
                    stack.append((w, node))
        raise AssertionError("nodes not connected in partial forest")

    def containment_ok(a: int, b: int) -> bool:
        # Check all pairs newly joined by edge (a, b); once a pair is
        # connected its path never changes, so violations are permanent.
        for x in component[a]:
            for y in component[b]:
                common = cliques[x] & cliques[y]
                if not common:
                    continue
                for node in tree_path(x, y):
                    if not common <= cliques[node]:
                        return False
        return True

    def can_connect(idx: int) -> bool:
        parent = {}

        def find(v: int) -> int:
            while parent.get(v, v) != v:
                v = parent[v]
            return v

        for a, b in chosen + edge_list[idx:]:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        root = find(0)
        return all(find(i) == root for i in range(k))

    def generate(idx: int) -> Iterator[CliqueTree]:
        nonlocal count
        if len(chosen) == k - 1:
            count += 1
            if count > cap:
                raise OracleLimitError(
                    f"clique-tree enumeration exceeded {cap} trees"
                )
            yield CliqueTree(cliques, frozenset(chosen))
            return
        if idx == len(edge_list) or not can_connect(idx):
            return
        a, b = edge_list[idx]
        if component[a] is not component[b]:
            adj[a].add(b)
            adj[b].add(a)
            if containment_ok(a, b):
                merged = component[a] | component[b]
                saved_a, saved_b = component[a], component[b]
                for node in merged:
                    component[node] = merged
                chosen.append((a, b))
                yield from generate(idx + 1)
                chosen.pop()
                for node in saved_a:
                    component[node] = saved_a
                for node in saved_b:
                    component[node] = saved_b
            adj[a].discard(b)
            adj[b].discard(a)
        yield from generate(idx + 1)

    yield from generate(0)


@dataclass(frozen=True)
class OracleResult:
    """Exact optima with witnesses: (min host leaves, min vl, joint)."""

    leafage: int
    vertex_leafage: int
    witness_trees: tuple[CliqueTree, CliqueTree, CliqueTree]
    tree_count: int


def oracle_optima(g: Graph, limit: int | None = None) -> OracleResult:
    """Exact leafage and vertex leafage over the full clique-tree enumeration."""
    vertices = list(g.vertices)
    best_leaf: tuple[int, CliqueTree] | None = None
    best_vl: tuple[int, CliqueTree] | None = None
    best_joint: tuple[tuple[int, int], CliqueTree] | None = None
    count = 0
    for tree in enumerate_clique_trees(g, limit):
        count += 1
        leaves = len(tree.leaves())
        vl = tree.max_vertex_leaf_count(vertices)
        if best_leaf is None or leaves < best_leaf[0]:
            best_leaf = (leaves, tree)
        if best_vl is None or vl < best_vl[0]:
            best_vl = (vl, tree)
        if best_joint is None or (leaves, vl) < best_joint[0]:
            best_joint = ((leaves, vl), tree)
    assert best_leaf and best_vl and best_joint
    # A tree optimal for both criteria simultaneously must exist.
    assert best_joint[0] == (best_leaf[0], best_vl[0]), (
        "no enumerated tree achieves both minima simultaneously"
    )
    return OracleResult(
        leafage=best_leaf[0],
        vertex_leafage=best_vl[0],
        witness_trees=(best_leaf[1], best_vl[1], best_joint[1]),
        tree_count=count,
    )


def random_chordal(n: int, density: float = 0.5, seed: int = 0) -> Graph:
    """Random connected chordal graph on ``n`` vertices, deterministic per seed.

    Built by sampling a random host tree and one random connected subtree per
    vertex and taking the intersection graph, so chordality holds by
    construction; resampling continues until the result is connected.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    names = [f"v{i:02d}" for i in range(n)]
    for _ in range(1000):
        hosts = rng.randint(max(1, (3 * n) // 4), n)
        host_adj: dict[int, set[int]] = {0: set()}
        for node in range(1, hosts):
            attach = rng.randrange(node)
            host_adj.setdefault(node, set()).add(attach)
            host_adj[attach].add(node)
        subtrees: dict[str, set[int]] = {}
        for name in names:
            nodes = {rng.randrange(hosts)}
            frontier = set().union(*(host_adj[x] for x in nodes)) - nodes
            while frontier and rng.random() < density:
                nodes.add(rng.choice(sorted(frontier)))
                frontier = set().union(*(host_adj[x] for x in nodes)) - nodes
            subtrees[name] = nodes
        edges = [
            (a, b)
            for i, a in enumerate(names)
            for b in names[i + 1:]
            if subtrees[a] & subtrees[b]
        ]
        g = Graph.from_edges(names, edges)
        if g.is_connected():
            return g
    raise RuntimeError(f"could not generate a connected instance for seed {seed}")
