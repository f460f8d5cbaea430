"""Token assignments and augmenting-path leafage minimization.

A token assignment gives every maximal clique a multiset of vertex subsets.
Clique trees induce the assignment mapping each clique to its intersections
with its tree neighbours; moving tokens along shortest augmenting paths
lowers the host leaf count one at a time without ever increasing any
vertex's subtree leaf count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping

from .cliquetrees import CliqueTree, path_containment_violation

Token = frozenset[str]


def _token_key(s: Token) -> tuple[str, ...]:
    return tuple(sorted(s))


@dataclass(frozen=True)
class TokenAssignment:
    """Per-clique multisets of vertex subsets.

    ``tokens[i]`` is stored as a tuple sorted by token key, so tuple equality
    is multiset equality.
    """

    cliques: tuple[frozenset[str], ...]
    tokens: Mapping[int, tuple[Token, ...]]

    @classmethod
    def create(
        cls,
        cliques: tuple[frozenset[str], ...],
        tokens: Mapping[int, tuple[Token, ...]],
    ) -> "TokenAssignment":
        normal = {
            i: tuple(sorted(tokens.get(i, ()), key=_token_key))
            for i in range(len(cliques))
        }
        for i, toks in normal.items():
            for s in toks:
                if not s:
                    raise ValueError(f"empty token at clique {i}")
                if not s <= cliques[i]:
                    raise ValueError(
                        f"token {sorted(s)} is not a subset of clique {sorted(cliques[i])}"
                    )
        return cls(cliques, normal)

    def size(self, i: int) -> int:
        return len(self.tokens[i])

    def total(self) -> int:
        return sum(len(t) for t in self.tokens.values())

    def degrees(self, u: str | None = None) -> dict[int, int]:
        """|tokens(C)| per clique, or restricted to tokens containing ``u``.

        With ``u`` given, only cliques containing ``u`` are reported; for
        assignments arising from clique trees the values equal host-tree and
        subtree degrees.
        """
        if u is None:
            return {i: len(toks) for i, toks in self.tokens.items()}
        return {
            i: sum(1 for s in toks if u in s)
            for i, toks in self.tokens.items()
            if u in self.cliques[i]
        }

    def leaf_count(self) -> int:
        """Host leaves of any realizing tree: cliques holding one token."""
        if len(self.cliques) == 1:
            return 0
        return sum(1 for toks in self.tokens.values() if len(toks) == 1)

    def vertex_leaf_count(self, u: str) -> int:
        degs = self.degrees(u)
        return sum(1 for d in degs.values() if d == 1)


@dataclass(frozen=True)
class TokenMove:
    """One token carried from one clique to another."""

    from_clique: int
    to_clique: int
    token: Token


@dataclass(frozen=True)
class AugmentingPath:
    moves: tuple[TokenMove, ...]

    def clique_sequence(self) -> tuple[int, ...]:
        return tuple([self.moves[0].from_clique] + [m.to_clique for m in self.moves])


def tokens_from_tree(t: CliqueTree) -> TokenAssignment:
    """Assignment mapping each clique to its intersections with tree neighbours."""
    tokens = {
        i: tuple(t.cliques[i] & t.cliques[j] for j in t.neighbors(i))
        for i in range(len(t.cliques))
    }
    return TokenAssignment.create(t.cliques, tokens)


def apply_move(ta: TokenAssignment, mv: TokenMove) -> TokenAssignment:
    """Remove one instance of the token at the source, add one at the target."""
    src = list(ta.tokens[mv.from_clique])
    try:
        src.remove(mv.token)
    except ValueError:
        raise ValueError(
            f"token {sorted(mv.token)} absent at clique {mv.from_clique}"
        ) from None
    tokens = dict(ta.tokens)
    tokens[mv.from_clique] = tuple(src)
    if mv.to_clique != mv.from_clique:
        tokens[mv.to_clique] = ta.tokens[mv.to_clique] + (mv.token,)
    else:
        tokens[mv.from_clique] = tuple(src) + (mv.token,)
    return TokenAssignment.create(ta.cliques, tokens)


def apply_path(ta: TokenAssignment, path: AugmentingPath) -> TokenAssignment:
    for mv in path.moves:
        ta = apply_move(ta, mv)
    return ta


def find_realizing_tree(ta: TokenAssignment) -> CliqueTree | None:
    """Exact search for a clique tree whose neighbour intersections equal ``ta``.

    An edge between cliques i and j consumes one token equal to their
    intersection from each side; a full pairing must form a spanning tree
    satisfying path containment.  Backtracking over the candidate pairs in
    canonical order makes the result deterministic.
    """
    cliques = ta.cliques
    k = len(cliques)
    if k == 1:
        return CliqueTree(cliques, frozenset()) if ta.total() == 0 else None
    if ta.total() != 2 * (k - 1):
        return None

    remaining = {i: Counter(ta.tokens[i]) for i in range(k)}
    candidates: list[tuple[int, int, Token]] = []
    for i in range(k):
        for j in range(i + 1, k):
            common = cliques[i] & cliques[j]
            if common and remaining[i][common] and remaining[j][common]:
                candidates.append((i, j, common))

    if len(candidates) < k - 1:
        return None
    # Per-clique availability of candidate edges by token value.
    avail: dict[int, Counter] = {i: Counter() for i in range(k)}
    for i, j, s in candidates:
        avail[i][s] += 1
        avail[j][s] += 1
    for i in range(k):
        for s, need in remaining[i].items():
            if avail[i][s] < need:
                return None

    chosen: list[tuple[int, int]] = []
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def search(idx: int) -> CliqueTree | None:
        if len(chosen) == k - 1:
            tree = CliqueTree(cliques, frozenset(chosen))
            if path_containment_violation(tree) is None:
                return tree
            return None
        if idx == len(candidates) or len(chosen) + len(candidates) - idx < k - 1:
            return None
        i, j, s = candidates[idx]
        ri, rj = find(i), find(j)
        if remaining[i][s] and remaining[j][s] and ri != rj:
            remaining[i][s] -= 1
            remaining[j][s] -= 1
            avail[i][s] -= 1
            avail[j][s] -= 1
            parent[ri] = rj
            chosen.append((i, j))
            found = search(idx + 1)
            chosen.pop()
            parent[ri] = ri
            remaining[i][s] += 1
            remaining[j][s] += 1
            avail[i][s] += 1
            avail[j][s] += 1
            if found is not None:
                return found
        # Leave the edge out; both endpoints must still be satisfiable.
        avail[i][s] -= 1
        avail[j][s] -= 1
        ok = avail[i][s] >= remaining[i][s] and avail[j][s] >= remaining[j][s]
        found = search(idx + 1) if ok else None
        avail[i][s] += 1
        avail[j][s] += 1
        return found

    return search(0)


def is_realizable(ta: TokenAssignment) -> bool:
    return find_realizing_tree(ta) is not None


def shortest_augmenting_path(ta: TokenAssignment) -> AugmentingPath | None:
    """Minimum-length augmenting path of ``ta``, canonical tie-break.

    A path starts at a clique holding >= 3 tokens, passes through cliques
    holding exactly 2, ends at a clique holding exactly 1, visits distinct
    cliques, and every single move must alone produce a realizable
    assignment (all conditions are evaluated against ``ta`` itself).  Among
    shortest paths the lexicographically least clique-id sequence wins, and
    each move carries the least feasible token.
    """
    k = len(ta.cliques)
    sizes = {i: ta.size(i) for i in range(k)}
    starts = sorted(i for i in range(k) if sizes[i] >= 3)
    if not starts:
        return None

    move_cache: dict[tuple[int, int], Token | None] = {}

    def feasible_token(src: int, dst: int) -> Token | None:
        key = (src, dst)
        if key not in move_cache:
            result = None
            for s in sorted(set(ta.tokens[src]), key=_token_key):
                if not s <= ta.cliques[dst]:
                    continue
                moved = apply_move(ta, TokenMove(src, dst, s))
                if find_realizing_tree(moved) is not None:
                    result = s
                    break
            move_cache[key] = result
        return move_cache[key]

    def extend(path: list[int], length: int) -> list[int] | None:
        if len(path) == length + 1:
            return list(path)
        last = path[-1]
        final = len(path) == length
        for nxt in range(k):
            if nxt in path:
                continue
            want = 1 if final else 2
            if sizes[nxt] != want:
                continue
            if feasible_token(last, nxt) is None:
                continue
            path.append(nxt)
            found = extend(path, length)
            path.pop()
            if found is not None:
                return found
        return None

    for length in range(1, k):
        for start in starts:
            found = extend([start], length)
            if found is not None:
                moves = tuple(
                    TokenMove(a, b, feasible_token(a, b))
                    for a, b in zip(found, found[1:])
                )
                return AugmentingPath(moves)
    return None


@dataclass(frozen=True)
class IterationRecord:
    """Trace entry for one augmenting-path application."""

    path: AugmentingPath
    leaves_before: int
    leaves_after: int


def minimize_leafage(t: CliqueTree) -> CliqueTree:
    tree, _ = minimize_leafage_with_trace(t)
    return tree


def minimize_leafage_with_trace(t: CliqueTree) -> tuple[CliqueTree, list[IterationRecord]]:
    """Iterate shortest augmenting paths until none exists.

    The returned tree has the minimum possible host leaf count, and for every
    vertex its subtree leaf count never exceeds the input tree's.  Each
    iteration reduces the host leaf count by exactly one and keeps the
    assignment realizable; both facts are asserted.
    """
    vertices = sorted(set().union(*t.cliques))
    ta = tokens_from_tree(t)
    tree = t
    trace: list[IterationRecord] = []
    while True:
        path = shortest_augmenting_path(ta)
        if path is None:
            break
        before = ta.leaf_count()
        before_vertex = {u: ta.vertex_leaf_count(u) for u in vertices}
        ta = apply_path(ta, path)
        next_tree = find_realizing_tree(ta)
        assert next_tree is not None, "assignment after augmenting path is unrealizable"
        tree = next_tree
        after = ta.leaf_count()
        assert after == before - 1
        assert all(ta.vertex_leaf_count(u) <= before_vertex[u] for u in vertices)
        trace.append(IterationRecord(path, before, after))
    return tree, trace
