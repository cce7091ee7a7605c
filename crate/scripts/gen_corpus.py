#!/usr/bin/env python3
"""Regenerates the graph6 corpora under crates/fair-coalitions/data/.

Outputs, one graph6 string per line, sorted:
  graphs_n{1..7}.g6   every graph of that order up to isomorphism
  trees_n{2..9}.g6    every tree of that order up to isomorphism
  cubic_n{4,6,8,10}.g6  every 3-regular graph of that order up to
                        isomorphism, disconnected ones included

Known counts are asserted so regeneration failures are loud.
"""

import itertools
from collections import defaultdict
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

OUT = Path(__file__).resolve().parent.parent / "crates" / "fair-coalitions" / "data"

ATLAS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
TREE_COUNTS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 6, 10: 21}  # all; connected are 1, 2, 5, 19
CUBIC_CONNECTED = {4: 1, 6: 2, 8: 5, 10: 19}


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def write_lines(name: str, lines: list[str]) -> None:
    path = OUT / name
    path.write_text("\n".join(sorted(lines)) + "\n")
    print(f"wrote {path} ({len(lines)} graphs)")


def atlas_by_order() -> dict[int, list[nx.Graph]]:
    by_order = defaultdict(list)
    for g in graph_atlas_g():
        if g.number_of_nodes() >= 1:
            by_order[g.number_of_nodes()].append(g)
    return by_order


def gen_atlas() -> None:
    for n, graphs in sorted(atlas_by_order().items()):
        assert len(graphs) == ATLAS_COUNTS[n], (n, len(graphs))
        write_lines(f"graphs_n{n}.g6", [g6(g) for g in graphs])


def gen_trees() -> None:
    for n in range(2, 10):
        trees = list(nx.nonisomorphic_trees(n))
        assert len(trees) == TREE_COUNTS[n], (n, len(trees))
        write_lines(f"trees_n{n}.g6", [g6(t) for t in trees])


def invariant(g: nx.Graph) -> tuple:
    """Cheap isomorphism-stable fingerprint used to bucket candidates."""
    tri = nx.triangles(g)
    eigs = tuple(round(x, 6) for x in sorted(nx.adjacency_spectrum(g).real))
    return (
        g.number_of_nodes(),
        tuple(sorted(tri.values())),
        nx.is_bipartite(g),
        eigs,
    )


def cubic_graphs(n: int) -> list[nx.Graph]:
    """Backtracking enumeration of labeled cubic graphs with N(0) = {1,2,3},
    deduplicated up to isomorphism via invariant buckets plus VF2."""
    reps: dict[tuple, list[nx.Graph]] = defaultdict(list)

    adj = [set() for _ in range(n)]

    def register() -> None:
        g = nx.Graph()
        g.add_nodes_from(range(n))
        for u in range(n):
            for v in adj[u]:
                if v > u:
                    g.add_edge(u, v)
        key = invariant(g)
        bucket = reps[key]
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)

    def extend(v: int) -> None:
        if v == n:
            register()
            return
        need = 3 - len(adj[v])
        if need == 0:
            extend(v + 1)
            return
        candidates = [u for u in range(v + 1, n) if len(adj[u]) < 3]
        if len(candidates) < need:
            return
        for chosen in itertools.combinations(candidates, need):
            for u in chosen:
                adj[v].add(u)
                adj[u].add(v)
            # Degrees of vertices <= v are final once we advance.
            extend(v + 1)
            for u in chosen:
                adj[v].discard(u)
                adj[u].discard(v)

    # Symmetry breaking: vertex 0 is adjacent to exactly 1, 2, 3.
    for u in (1, 2, 3):
        adj[0].add(u)
        adj[u].add(0)
    extend(1)

    return [g for bucket in reps.values() for g in bucket]


def gen_cubic() -> None:
    for n in (4, 6, 8, 10):
        graphs = cubic_graphs(n)
        connected = [g for g in graphs if nx.is_connected(g)]
        assert len(graphs) == CUBIC_COUNTS[n], (n, len(graphs))
        assert len(connected) == CUBIC_CONNECTED[n], (n, len(connected))
        write_lines(f"cubic_n{n}.g6", [g6(g) for g in graphs])


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    gen_atlas()
    gen_trees()
    gen_cubic()


if __name__ == "__main__":
    main()
