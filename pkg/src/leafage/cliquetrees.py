"""Clique trees, tree models, minimal-model contraction, and leaf statistics."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import CliqueGraph, Graph, chordal_cliques


@dataclass(frozen=True)
class CliqueTree:
    """Tree on the maximal cliques of a chordal graph.

    ``cliques`` is the canonical clique list; node ids are positions in it.
    ``edges`` holds ``(i, j)`` pairs with ``i < j``.
    """

    cliques: tuple[frozenset[str], ...]
    edges: frozenset[tuple[int, int]]

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def degree(self, i: int) -> int:
        return sum(1 for a, b in self.edges if i in (a, b))

    def leaves(self) -> list[int]:
        # A single-node tree has no leaves by convention.
        if len(self.cliques) == 1:
            return []
        return [i for i in range(len(self.cliques)) if self.degree(i) == 1]

    def path(self, src: int, dst: int) -> list[int]:
        """Node sequence of the unique src-dst path."""
        prev: dict[int, int | None] = {src: None}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == dst:
                out = []
                node: int | None = u
                while node is not None:
                    out.append(node)
                    node = prev[node]
                out.reverse()
                return out
            for w in self.neighbors(u):
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        raise ValueError(f"no path between nodes {src} and {dst}")

    def vertex_nodes(self, u: str) -> list[int]:
        """Ids of the cliques containing vertex ``u`` (the subtree of ``u``)."""
        return [i for i, c in enumerate(self.cliques) if u in c]

    def vertex_leaf_count(self, u: str) -> int:
        """Leaves of the subtree induced by the cliques containing ``u``."""
        nodes = self.vertex_nodes(u)
        if len(nodes) <= 1:
            return 0
        node_set = set(nodes)
        return sum(
            1
            for i in nodes
            if sum(1 for w in self.neighbors(i) if w in node_set) == 1
        )

    def max_vertex_leaf_count(self, vertices: Iterable[str]) -> int:
        return max((self.vertex_leaf_count(u) for u in vertices), default=0)


def path_containment_violation(
    t: CliqueTree,
) -> tuple[int, int, int] | None:
    """First triple (i, j, k) where clique k on the i-j path misses i & j."""
    n = len(t.cliques)
    for i in range(n):
        for j in range(i + 1, n):
            common = t.cliques[i] & t.cliques[j]
            if not common:
                continue
            for k in t.path(i, j):
                if not common <= t.cliques[k]:
                    return (i, j, k)
    return None


def _is_tree(n: int, edges: frozenset[tuple[int, int]]) -> bool:
    if len(edges) != n - 1:
        return False
    if n == 1:
        return True
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def verify_clique_tree(g: Graph, t: CliqueTree) -> tuple[bool, tuple[int, int, int] | None]:
    """Check that ``t`` is a clique tree of ``g``.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is a
    path-containment violation.  Raises when the node set does not match the
    maximal cliques of ``g`` or the edge set is not a tree over intersecting
    cliques.
    """
    expected = chordal_cliques(g)
    if t.cliques != expected:
        raise ValueError("tree nodes are not the canonical maximal cliques of the graph")
    if not _is_tree(len(t.cliques), t.edges):
        raise ValueError("edge set is not a spanning tree")
    for a, b in t.edges:
        if not t.cliques[a] & t.cliques[b]:
            raise ValueError(f"tree edge ({a}, {b}) joins disjoint cliques")
    witness = path_containment_violation(t)
    return (witness is None, witness)


def build_clique_tree(cg: CliqueGraph) -> CliqueTree:
    """Maximum-weight spanning tree of the clique graph, validated.

    Kruskal on intersection sizes with canonical tie-breaking; for a chordal
    graph this always yields a clique tree, and the path-containment property
    is re-checked before returning.
    """
    k = len(cg.cliques)
    if k == 1:
        return CliqueTree(cg.cliques, frozenset())
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for i, j in sorted(cg.weights, key=lambda e: (-cg.weights[e], e)):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
    if len(chosen) != k - 1:
        raise ValueError("clique graph is disconnected")
    tree = CliqueTree(cg.cliques, frozenset(chosen))
    violation = path_containment_violation(tree)
    assert violation is None, f"spanning tree construction violated containment: {violation}"
    return tree


@dataclass(frozen=True)
class TreeModel:
    """Host tree plus one connected subtree of it per graph vertex.

    Host node ids are opaque strings, decoupled from clique ids so that
    non-minimal models are representable.
    """

    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    subtrees: Mapping[str, frozenset[str]]

    def node_neighbors(self, x: str) -> list[str]:
        out = []
        for a, b in self.edges:
            if a == x:
                out.append(b)
            elif b == x:
                out.append(a)
        return sorted(out)

    def host_leaf_count(self) -> int:
        if len(self.nodes) == 1:
            return 0
        return sum(1 for x in self.nodes if len(self.node_neighbors(x)) == 1)

    def subtree_leaf_count(self, u: str) -> int:
        nodes = self.subtrees[u]
        if len(nodes) <= 1:
            return 0
        return sum(
            1
            for x in nodes
            if sum(1 for w in self.node_neighbors(x) if w in nodes) == 1
        )


@dataclass(frozen=True)
class LeafReport:
    host_leaves: int
    per_vertex_leaves: Mapping[str, int]
    max_vertex_leaves: int


def model_from_clique_tree(t: CliqueTree) -> TreeModel:
    """Tree model defined by a clique tree: vertex u spans {C : u in C}."""
    width = max(3, len(str(len(t.cliques))))
    names = tuple(f"n{i:0{width}d}" for i in range(len(t.cliques)))
    edges = frozenset(
        (names[a], names[b]) if names[a] < names[b] else (names[b], names[a])
        for a, b in t.edges
    )
    vertices = sorted(set().union(*t.cliques))
    subtrees = {
        u: frozenset(names[i] for i, c in enumerate(t.cliques) if u in c)
        for u in vertices
    }
    return TreeModel(names, edges, subtrees)


def is_tree_model(g: Graph, m: TreeModel) -> bool:
    """Whether ``m`` is a valid tree model of ``g``."""
    if not _host_is_tree(m):
        return False
    if sorted(m.subtrees) != list(g.vertices):
        return False
    for u in g.vertices:
        nodes = m.subtrees[u]
        if not nodes or not _is_connected_in_host(m, nodes):
            return False
    for i, u in enumerate(g.vertices):
        for v in g.vertices[i + 1:]:
            intersects = bool(m.subtrees[u] & m.subtrees[v])
            if intersects != g.has_edge(u, v):
                return False
    return True


def _host_is_tree(m: TreeModel) -> bool:
    if len(m.edges) != len(m.nodes) - 1:
        return False
    return len(m.nodes) <= 1 or _is_connected_in_host(m, frozenset(m.nodes))


def _is_connected_in_host(m: TreeModel, nodes: frozenset[str]) -> bool:
    start = next(iter(nodes))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for w in m.node_neighbors(x):
            if w in nodes and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(nodes)


def _contract_edge(m: TreeModel, edge: tuple[str, str]) -> TreeModel:
    keep, drop = min(edge), max(edge)
    nodes = tuple(x for x in m.nodes if x != drop)
    new_edges = set()
    for a, b in m.edges:
        a2 = keep if a == drop else a
        b2 = keep if b == drop else b
        if a2 != b2:
            new_edges.add((a2, b2) if a2 < b2 else (b2, a2))
    subtrees = {
        u: frozenset(keep if x == drop else x for x in s)
        for u, s in m.subtrees.items()
    }
    return TreeModel(nodes, frozenset(new_edges), subtrees)


def contract_to_minimal(g: Graph, m: TreeModel) -> TreeModel:
    """Contract host edges while the intersection graph stays equal to ``g``.

    Edges are scanned in canonical order and the first admissible one is
    contracted; the result is a minimal model whose nodes biject with the
    maximal cliques.  Host and per-vertex leaf counts never increase.
    """
    if not is_tree_model(g, m):
        raise ValueError("input is not a tree model of the graph")
    before_host = m.host_leaf_count()
    before_vertex = {u: m.subtree_leaf_count(u) for u in g.vertices}
    changed = True
    while changed:
        changed = False
        for edge in sorted(m.edges):
            candidate = _contract_edge(m, edge)
            if is_tree_model(g, candidate):
                m = candidate
                changed = True
                break
    assert m.host_leaf_count() <= before_host
    assert all(m.subtree_leaf_count(u) <= before_vertex[u] for u in g.vertices)
    _assert_minimal(g, m)
    return m


def _assert_minimal(g: Graph, m: TreeModel) -> None:
    # Minimality certificate: node -> {u : node in subtree(u)} must be a
    # bijection onto the maximal cliques.
    realized = [
        frozenset(u for u in g.vertices if x in m.subtrees[u]) for x in m.nodes
    ]
    expected = chordal_cliques(g)
    assert sorted(realized, key=lambda c: tuple(sorted(c))) == list(expected), (
        "contracted model nodes do not biject with the maximal cliques"
    )
    assert len(set(realized)) == len(realized)


def leaf_report(m: TreeModel) -> LeafReport:
    per_vertex = {u: m.subtree_leaf_count(u) for u in sorted(m.subtrees)}
    return LeafReport(
        host_leaves=m.host_leaf_count(),
        per_vertex_leaves=per_vertex,
        max_vertex_leaves=max(per_vertex.values(), default=0),
    )


@dataclass(frozen=True)
class BranchingSets:
    """Nodes of degree >= 3 in a tree and the edges incident to them."""

    high_nodes: frozenset[int]
    incident_edges: frozenset[tuple[int, int]]


def branching_sets(t: CliqueTree) -> BranchingSets:
    high = frozenset(i for i in range(len(t.cliques)) if t.degree(i) >= 3)
    incident = frozenset(e for e in t.edges if e[0] in high or e[1] in high)
    if len(t.cliques) >= 2:
        # Branching nodes are bounded by the leaf count; the edge set is
        # recorded but deliberately not bounded the same way (a star already
        # has more branching edges than leaves minus two).
        assert len(high) <= len(t.leaves()) - 2 or not high
    return BranchingSets(high, incident)
