"""Redundant-edge removal and connected-component decomposition.

An edge is redundant when it lies in no matching of maximum cardinality
r1 (the term rank).  Such an edge contributes to no maximal minor of the
underlying matrix, so removing it changes nothing about the zero set.
The subgraph left after removing every redundant edge drives the final
controllability verdict through its connected components.

Classification test: edge (r, c) lies in some r1-matching iff the graph
with vertices r and c deleted still has a matching of size r1 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraph import _UNMATCHED, WeightedBigraph, _augment, _max_matching_pairs

__all__ = [
    "ReducedGraph",
    "Component",
    "edge_is_redundant",
    "remove_redundant_edges",
    "connected_components",
]


@dataclass(frozen=True)
class ReducedGraph:
    """A graph with all redundant edges removed.

    ``graph`` keeps exactly the edges that occur in at least one matching of
    cardinality ``base_rank`` in the original graph; ``redundant`` lists the
    removed (r, c, weight) triples.
    """

    graph: WeightedBigraph
    redundant: tuple[tuple[int, int, int], ...]
    base_rank: int


@dataclass(frozen=True)
class Component:
    """A maximal connected subgraph: sorted vertex lists plus its edges."""

    r_vertices: tuple[int, ...]
    c_vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=0)


def edge_is_redundant(g: WeightedBigraph, edge: tuple[int, int], rank: int) -> bool:
    """True iff ``edge`` lies in no matching of cardinality ``rank``.

    ``rank`` must be the term rank of ``g``.  Pure and independent per edge,
    so calls may run concurrently.
    """
    r, c = edge
    if not g.has_edge(r, c):
        raise ValueError(f"edge ({r},{c}) not present in graph")
    pair_r = [_UNMATCHED] * g.r_count
    pair_c = [_UNMATCHED] * g.c_count
    size = _augment(g.r_adj, g.r_count, pair_r, pair_c, skip_r=r, skip_c=c, stop_at=rank - 1)
    return size < rank - 1


def _strip_endpoints(pair_r, pair_c, r: int, c: int):
    """Copy a matching, dropping any pair that touches row r or column c."""
    pr = list(pair_r)
    pc = list(pair_c)
    if pr[r] != _UNMATCHED:
        pc[pr[r]] = _UNMATCHED
        pr[r] = _UNMATCHED
    if pc[c] != _UNMATCHED:
        pr[pc[c]] = _UNMATCHED
        pc[c] = _UNMATCHED
    return pr, pc


def remove_redundant_edges(g: WeightedBigraph, optimized: bool = False) -> ReducedGraph:
    """Classify every edge against matchings of size term_rank(g) and drop the redundant ones.

    The result is independent of edge processing order and of the
    ``optimized`` flag.  With ``optimized`` set, two shortcuts are applied:
    whenever an edge is certified non-redundant by completing it to a
    full-rank matching, every edge of that matching is marked non-redundant
    at once, and redundant edges are removed from the working graph
    immediately so later searches traverse less.  Neither shortcut can
    change the outcome: removed edges lie in no full-rank matching, so the
    set of full-rank matchings (which defines the classification) is
    untouched.
    """
    rank, base_pair_r = _max_matching_pairs(g)
    base_pair_c = [_UNMATCHED] * g.c_count
    for r, c in enumerate(base_pair_r):
        if c != _UNMATCHED:
            base_pair_c[c] = r

    kept: list[tuple[int, int, int]] = []
    removed: list[tuple[int, int, int]] = []

    if not optimized:
        for r, c, w in g.edges:
            if base_pair_r[r] == c:
                kept.append((r, c, w))  # edge of the base maximum matching
                continue
            pr, pc = _strip_endpoints(base_pair_r, base_pair_c, r, c)
            size = _augment(g.r_adj, g.r_count, pr, pc, skip_r=r, skip_c=c, stop_at=rank - 1)
            (removed if size < rank - 1 else kept).append((r, c, w))
    else:
        adj = [list(cs) for cs in g.r_adj]
        non_redundant = {(r, c) for r, c in enumerate(base_pair_r) if c != _UNMATCHED}
        for r, c, w in g.edges:
            if (r, c) in non_redundant:
                kept.append((r, c, w))
                continue
            pr, pc = _strip_endpoints(base_pair_r, base_pair_c, r, c)
            size = _augment(adj, g.r_count, pr, pc, skip_r=r, skip_c=c, stop_at=rank - 1)
            if size < rank - 1:
                removed.append((r, c, w))
                adj[r].remove(c)
            else:
                kept.append((r, c, w))
                non_redundant.add((r, c))
                non_redundant.update((rr, cc) for rr, cc in enumerate(pr) if cc != _UNMATCHED)

    reduced = WeightedBigraph(g.r_count, g.c_count, sorted(kept))
    return ReducedGraph(graph=reduced, redundant=tuple(sorted(removed)), base_rank=rank)


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins so component ids are stable
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def connected_components(rg: ReducedGraph) -> list[Component]:
    """Connected components of the reduced graph, isolated vertices included.

    Vertices are numbered rows first, then columns; components are returned
    ordered by their smallest vertex number.
    """
    g = rg.graph
    dsu = _DisjointSet(g.r_count + g.c_count)
    for r, c, _ in g.edges:
        dsu.union(r, g.r_count + c)

    groups: dict[int, list[int]] = {}
    for v in range(g.r_count + g.c_count):
        groups.setdefault(dsu.find(v), []).append(v)
    edges_by_root: dict[int, list[tuple[int, int, int]]] = {}
    for e in g.edges:
        edges_by_root.setdefault(dsu.find(e[0]), []).append(e)

    components = []
    for root in sorted(groups):
        members = groups[root]
        rows = tuple(v for v in members if v < g.r_count)
        cols = tuple(v - g.r_count for v in members if v >= g.r_count)
        components.append(Component(rows, cols, tuple(edges_by_root.get(root, ()))))
    return components


