"""Edge-weighted bipartite graphs, maximum matching, and matching enumeration.

A p-by-v pattern becomes the bipartite graph G = (R, C; E): one R-vertex per
row, one C-vertex per column, one edge per nonzero entry, weighted by the
entry degree.  A weight of 0 is still an edge (constant entry); no edge means
the entry is identically zero.

Graph values are immutable after construction and all functions here are
pure, so they are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardLimitError
from .patterns import PolyPattern

__all__ = [
    "WeightedBigraph",
    "Matching",
    "build_graph",
    "max_matching",
    "term_rank",
    "matchings_of_size",
]

_UNMATCHED = -1
_INF = float("inf")


class WeightedBigraph:
    """Bipartite graph with non-negative integer edge weights.

    Edges are unique per (row vertex, column vertex) pair and kept sorted, so
    two graphs built from the same edge set compare equal regardless of input
    order, and every algorithm below is deterministic.
    """

    __slots__ = ("r_count", "c_count", "edges", "r_adj", "c_adj", "_weights")

    def __init__(self, r_count: int, c_count: int, edges):
        if r_count < 1 or c_count < 1:
            raise ValueError(f"vertex counts must be positive, got {r_count}, {c_count}")
        self.r_count = r_count
        self.c_count = c_count
        weights: dict[tuple[int, int], int] = {}
        for r, c, w in edges:
            if not (0 <= r < r_count and 0 <= c < c_count):
                raise ValueError(f"edge ({r},{c}) out of range")
            if w < 0:
                raise ValueError(f"edge ({r},{c}) has negative weight {w}")
            if (r, c) in weights:
                raise ValueError(f"duplicate edge ({r},{c})")
            weights[(r, c)] = w
        self._weights = weights
        self.edges = tuple((r, c, w) for (r, c), w in sorted(weights.items()))
        r_adj = [[] for _ in range(r_count)]
        c_adj = [[] for _ in range(c_count)]
        for r, c, _ in self.edges:
            r_adj[r].append(c)
            c_adj[c].append(r)
        self.r_adj = tuple(tuple(cs) for cs in r_adj)
        self.c_adj = tuple(tuple(rs) for rs in c_adj)

    def has_edge(self, r: int, c: int) -> bool:
        return (r, c) in self._weights

    def weight(self, r: int, c: int) -> int:
        return self._weights[(r, c)]

    def __eq__(self, other):
        if not isinstance(other, WeightedBigraph):
            return NotImplemented
        return (self.r_count, self.c_count, self.edges) == (other.r_count, other.c_count, other.edges)

    def __hash__(self):
        return hash((self.r_count, self.c_count, self.edges))

    def __repr__(self):
        return f"WeightedBigraph({self.r_count}x{self.c_count}, {len(self.edges)} edges)"


@dataclass(frozen=True)
class Matching:
    """A set of edges no two of which share a vertex."""

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        rows = [r for r, _ in self.pairs]
        cols = [c for _, c in self.pairs]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("matching pairs share a vertex")

    def __len__(self):
        return len(self.pairs)

    def sorted_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    def r_set(self) -> frozenset[int]:
        return frozenset(r for r, _ in self.pairs)

    def c_set(self) -> frozenset[int]:
        return frozenset(c for _, c in self.pairs)


def build_graph(pattern: PolyPattern) -> WeightedBigraph:
    """Graph of a pattern: one edge per entry, weight = entry degree."""
    return WeightedBigraph(pattern.rows, pattern.cols, pattern.sorted_entries())


def _augment(
    adj,
    r_count: int,
    pair_r: list[int],
    pair_c: list[int],
    skip_r: int = -1,
    skip_c: int = -1,
    stop_at: int | None = None,
) -> int:
    """Grow a matching to maximum cardinality by shortest augmenting paths.

    ``pair_r``/``pair_c`` hold the current (valid) matching and are updated
    in place.  Vertices ``skip_r``/``skip_c`` are treated as deleted.  If
    ``stop_at`` is given, augmentation stops early once the matching reaches
    that size.  Returns the final matching size.  Deterministic: free rows
    are scanned in ascending order, adjacency lists are sorted.
    """
    size = sum(1 for r in range(r_count) if r != skip_r and pair_r[r] != _UNMATCHED)
    dist = [0.0] * r_count

    def bfs() -> bool:
        queue = []
        for r in range(r_count):
            if r == skip_r:
                dist[r] = _INF
            elif pair_r[r] == _UNMATCHED:
                dist[r] = 0.0
                queue.append(r)
            else:
                dist[r] = _INF
        found = _INF
        head = 0
        while head < len(queue):
            r = queue[head]
            head += 1
            if dist[r] >= found:
                continue
            for c in adj[r]:
                if c == skip_c:
                    continue
                r2 = pair_c[c]
                if r2 == _UNMATCHED:
                    found = dist[r] + 1
                elif dist[r2] == _INF:
                    dist[r2] = dist[r] + 1
                    queue.append(r2)
        return found != _INF

    def dfs(root: int) -> bool:
        # Iterative so benchmark-sized graphs cannot exhaust the stack.
        frames = [(root, iter(adj[root]))]
        chosen: list[int] = []  # chosen[d]: column frame d used to reach frame d+1
        while frames:
            r, it = frames[-1]
            descended = False
            for c in it:
                if c == skip_c:
                    continue
                r2 = pair_c[c]
                if r2 == _UNMATCHED:
                    pair_r[r] = c
                    pair_c[c] = r
                    for d in range(len(frames) - 2, -1, -1):
                        rr = frames[d][0]
                        cc = chosen[d]
                        pair_r[rr] = cc
                        pair_c[cc] = rr
                    return True
                if dist[r2] == dist[r] + 1:
                    frames.append((r2, iter(adj[r2])))
                    chosen.append(c)
                    descended = True
                    break
            if not descended:
                dist[r] = _INF
                frames.pop()
                if chosen:
                    chosen.pop()
        return False

    while (stop_at is None or size < stop_at) and bfs():
        for r in range(r_count):
            if r != skip_r and pair_r[r] == _UNMATCHED and dfs(r):
                size += 1
                if stop_at is not None and size >= stop_at:
                    break
    return size


def _max_matching_pairs(g: WeightedBigraph, skip_r: int = -1, skip_c: int = -1) -> tuple[int, list[int]]:
    pair_r = [_UNMATCHED] * g.r_count
    pair_c = [_UNMATCHED] * g.c_count
    size = _augment(g.r_adj, g.r_count, pair_r, pair_c, skip_r, skip_c)
    return size, pair_r


def max_matching(g: WeightedBigraph) -> Matching:
    """A maximum-cardinality matching of g (deterministic for a fixed graph)."""
    _, pair_r = _max_matching_pairs(g)
    return Matching(frozenset((r, c) for r, c in enumerate(pair_r) if c != _UNMATCHED))


def term_rank(g: WeightedBigraph) -> int:
    """Size of a maximum matching: the generic rank of any matrix with this pattern."""
    size, _ = _max_matching_pairs(g)
    return size


def matchings_of_size(g: WeightedBigraph, k: int, max_rows: int = 8) -> list[Matching]:
    """All matchings of cardinality exactly k, in lexicographic order.

    Exponential by design; intended as a small-instance test oracle, hence
    the row-count guard.
    """
    if g.r_count > max_rows:
        raise GuardLimitError(f"matching enumeration guarded at {max_rows} rows, graph has {g.r_count}")
    if k < 0:
        raise ValueError(f"matching size must be non-negative, got {k}")
    results: list[tuple[tuple[int, int], ...]] = []
    chosen: list[tuple[int, int]] = []
    used_cols = [False] * g.c_count

    def rec(row: int):
        if len(chosen) == k:
            results.append(tuple(chosen))
            return
        if row == g.r_count or len(chosen) + (g.r_count - row) < k:
            return
        for c in g.r_adj[row]:
            if not used_cols[c]:
                used_cols[c] = True
                chosen.append((row, c))
                rec(row + 1)
                chosen.pop()
                used_cols[c] = False
        rec(row + 1)  # leave this row unmatched

    rec(0)
    results.sort()
    return [Matching(frozenset(pairs)) for pairs in results]
