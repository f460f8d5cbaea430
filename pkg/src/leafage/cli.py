"""Command-line interface.

Subcommands wrap the library one-to-one and print deterministic JSON, DOT,
or plain text.  Exit codes: 0 success, 1 negative decision (non-chordal
input, bound exceeded), 2 usage or format error, 3 oracle limit exceeded.
"""

from __future__ import annotations

import json
import sys

import click

from .cliquetrees import (
    CliqueTree,
    TreeModel,
    branching_sets,
    build_clique_tree,
    leaf_report,
)
from .demo import demo_clique_tree, demo_graph
from .gadget import build_gadget, parse_clause_file, verify_reduction
from .graphs import (
    Graph,
    GraphFormatError,
    PerfectEliminationOrder,
    check_chordal,
    chordal_cliques,
    clique_graph,
    format_edge_list,
    parse_graph,
)
from .oracle import OracleLimitError, oracle_optima
from .tokens import minimize_leafage_with_trace, tokens_from_tree
from .vertex_leafage import (
    NoFeasibleBranchingError,
    simultaneous_optimum,
    vertex_leafage_bounded,
)

EXIT_NEGATIVE = 1
EXIT_FORMAT = 2
EXIT_LIMIT = 3


def _read_graph(file) -> Graph:
    try:
        return parse_graph(file.read())
    except GraphFormatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FORMAT)


def _clique_label(c: frozenset[str]) -> str:
    return ",".join(sorted(c))


def _tree_edges_json(t: CliqueTree) -> list[list[str]]:
    return sorted(
        sorted([_clique_label(t.cliques[a]), _clique_label(t.cliques[b])])
        for a, b in t.edges
    )


def _emit(data) -> None:
    click.echo(json.dumps(data, indent=2))


def _dot_model(m: TreeModel) -> str:
    lines = ["graph model {"]
    for x in m.nodes:
        members = sorted(u for u, s in m.subtrees.items() if x in s)
        lines.append(f'  "{x}" [label="{",".join(members)}"];')
    for a, b in sorted(m.edges):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


@click.group()
def main() -> None:
    """Leafage and vertex leafage of chordal graphs."""


@main.command()
@click.argument("graph_file", type=click.File("r"))
def check(graph_file) -> None:
    """Test chordality; print an elimination order or a witness cycle."""
    g = _read_graph(graph_file)
    result = check_chordal(g)
    if isinstance(result, PerfectEliminationOrder):
        click.echo("chordal")
        click.echo(" ".join(result.order))
    else:
        click.echo("not chordal")
        click.echo(" ".join(result))
        sys.exit(EXIT_NEGATIVE)


@main.command()
@click.argument("graph_file", type=click.File("r"))
def leafage(graph_file) -> None:
    """Minimum host-tree leaf count, with witness tree and iteration trace."""
    g = _read_graph(graph_file)
    try:
        cliques = chordal_cliques(g)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NEGATIVE)
    if not g.is_connected():
        click.echo("error: graph is disconnected", err=True)
        sys.exit(EXIT_FORMAT)
    start = build_clique_tree(clique_graph(cliques))
    tree, trace = minimize_leafage_with_trace(start)
    iterations = [
        {
            "path": [
                [
                    _clique_label(tree.cliques[mv.from_clique]),
                    _clique_label(tree.cliques[mv.to_clique]),
                    ",".join(sorted(mv.token)),
                ]
                for mv in rec.path.moves
            ],
            "leaves_before": rec.leaves_before,
            "leaves_after": rec.leaves_after,
        }
        for rec in trace
    ]
    _emit(
        {
            "leafage": len(tree.leaves()),
            "tree_edges": _tree_edges_json(tree),
            "iterations": iterations,
        }
    )


@main.command(name="vertex-leafage")
@click.argument("graph_file", type=click.File("r"))
@click.option("--ell", type=int, default=None, help="Skip graphs whose leafage exceeds this bound.")
@click.option(
    "--budget-mode",
    type=click.Choice(["safe", "paper"]),
    default="safe",
    show_default=True,
    help="Branching-set enumeration budget.",
)
def vertex_leafage(graph_file, ell, budget_mode) -> None:
    """Exact vertex leafage with a certificate tree."""
    g = _read_graph(graph_file)
    try:
        cert = vertex_leafage_bounded(g, ell=ell, budget_mode=budget_mode)
    except NoFeasibleBranchingError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NEGATIVE)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NEGATIVE)
    if cert is None:
        click.echo(f"error: leafage exceeds the bound {ell}", err=True)
        sys.exit(EXIT_NEGATIVE)
    tree = cert.tree
    branch = branching_sets(tree).incident_edges
    _emit(
        {
            "leafage": len(tree.leaves()),
            "vertex_leafage": cert.value,
            "tree_edges": _tree_edges_json(tree),
            "per_vertex_leaves": {u: cert.per_vertex[u] for u in sorted(cert.per_vertex)},
            "branch_edge_set": sorted(
                sorted([_clique_label(tree.cliques[a]), _clique_label(tree.cliques[b])])
                for a, b in branch
            ),
        }
    )


@main.command()
@click.argument("graph_file", type=click.File("r"))
@click.option("--dot", is_flag=True, help="Emit the host tree in DOT format.")
def model(graph_file, dot) -> None:
    """Tree model optimal for leafage and vertex leafage simultaneously."""
    g = _read_graph(graph_file)
    try:
        m, tree = simultaneous_optimum(g)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NEGATIVE)
    if dot:
        click.echo(_dot_model(m), nl=False)
        return
    report = leaf_report(m)
    _emit(
        {
            "leafage": report.host_leaves,
            "vertex_leafage": report.max_vertex_leaves,
            "nodes": list(m.nodes),
            "edges": sorted(list(e) for e in m.edges),
            "subtrees": {u: sorted(m.subtrees[u]) for u in sorted(m.subtrees)},
        }
    )


@main.group()
def gadget() -> None:
    """NAE-SAT reduction gadget tools."""


@gadget.command(name="build")
@click.argument("clause_file", type=click.File("r"))
def gadget_build(clause_file) -> None:
    """Build the split graph of a clause file; print it as an edge list."""
    try:
        inst = parse_clause_file(clause_file.read())
        gg = build_gadget(inst)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FORMAT)
    click.echo(format_edge_list(gg.graph), nl=False)


@gadget.command(name="verify")
@click.argument("clause_file", type=click.File("r"))
def gadget_verify(clause_file) -> None:
    """Check solvability against the gadget's exact vertex leafage."""
    try:
        inst = parse_clause_file(clause_file.read())
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FORMAT)
    try:
        report = verify_reduction(inst)
    except OracleLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_LIMIT)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FORMAT)
    _emit(report)


@main.command()
@click.argument("graph_file", type=click.File("r"))
def oracle(graph_file) -> None:
    """Brute-force enumeration: exact optima with witness trees."""
    g = _read_graph(graph_file)
    try:
        result = oracle_optima(g)
    except OracleLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_LIMIT)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NEGATIVE)
    leaf_tree, vl_tree, joint = result.witness_trees
    _emit(
        {
            "leafage": result.leafage,
            "vertex_leafage": result.vertex_leafage,
            "tree_count": result.tree_count,
            "witness_trees": {
                "min_leafage": _tree_edges_json(leaf_tree),
                "min_vertex_leafage": _tree_edges_json(vl_tree),
                "joint": _tree_edges_json(joint),
            },
        }
    )


@main.command()
def repro() -> None:
    """Replay the bundled worked example with a printed trace."""
    g = demo_graph()
    tree = demo_clique_tree()
    click.echo("maximal cliques:")
    for i, c in enumerate(tree.cliques):
        click.echo(f"  {i}: {_clique_label(c)}")
    ta = tokens_from_tree(tree)
    click.echo("token assignment of the starting tree:")
    for i in range(len(tree.cliques)):
        toks = " ".join("{" + ",".join(sorted(s)) + "}" for s in ta.tokens[i])
        click.echo(f"  {_clique_label(tree.cliques[i])}: {toks}")
    click.echo(f"host leaves: {len(tree.leaves())}")
    click.echo(f"subtree leaves of vertex a: {tree.vertex_leaf_count('a')}")
    final, trace = minimize_leafage_with_trace(tree)
    for step, rec in enumerate(trace, start=1):
        moves = "; ".join(
            f"{_clique_label(tree.cliques[mv.from_clique])} -> "
            f"{_clique_label(tree.cliques[mv.to_clique])} "
            f"carrying {{{','.join(sorted(mv.token))}}}"
            for mv in rec.path.moves
        )
        click.echo(
            f"iteration {step}: {moves} "
            f"(leaves {rec.leaves_before} -> {rec.leaves_after})"
        )
    click.echo(f"final host leaves: {len(final.leaves())}")
    click.echo(f"final subtree leaves of vertex a: {final.vertex_leaf_count('a')}")


if __name__ == "__main__":
    main()
