"""Structural verdicts: generic nonsingularity, generic unimodularity, controllability.

The controllability question for a differential-algebraic system with a
given sparsity pattern reduces to a purely combinatorial check: build the
weighted bipartite graph of the pattern, drop every redundant edge, and
inspect the connected components.  The system is structurally controllable
exactly when every component with equally many row and column vertices has
all edge weights zero (a square all-constant block is generically
invertible; a square block with a degree >= 1 entry contributes roots that
every maximal minor shares).

Rank-deficient and tall (p > v) patterns run through the same path, with
redundancy defined against matchings of size r1 = term rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraph import WeightedBigraph, build_graph, matchings_of_size, term_rank
from .errors import GuardLimitError, ZeroTermRankError
from .patterns import PolyPattern
from .reduction import ReducedGraph, connected_components, remove_redundant_edges

__all__ = [
    "CONTROLLABLE",
    "UNCONTROLLABLE",
    "ComponentSummary",
    "Witness",
    "AnalysisReport",
    "generic_nonsingular",
    "generic_unimodular",
    "forced_subset_criterion",
    "analyze",
    "analyze_reduction",
    "criteria_equivalent",
]

CONTROLLABLE = "structurally controllable"
UNCONTROLLABLE = "structurally uncontrollable"


@dataclass(frozen=True)
class ComponentSummary:
    """Row/column vertex lists of one component plus its largest edge weight."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    max_weight: int


@dataclass(frozen=True)
class Witness:
    """Proof of uncontrollability: a square component with a weighted edge."""

    component: int  # index into AnalysisReport.components
    edge: tuple[int, int]
    weight: int


@dataclass(frozen=True)
class AnalysisReport:
    verdict: str
    minimal: bool
    term_rank: int
    redundant_edges: tuple[tuple[int, int], ...]
    components: tuple[ComponentSummary, ...]
    witness: Witness | None

    @property
    def controllable(self) -> bool:
        return self.verdict == CONTROLLABLE


def generic_nonsingular(pattern: PolyPattern) -> bool:
    """True iff a square pattern admits a perfect matching (generic determinant nonzero)."""
    if pattern.rows != pattern.cols:
        raise ValueError(f"nonsingularity requires a square pattern, got {pattern.rows}x{pattern.cols}")
    return term_rank(build_graph(pattern)) == pattern.rows


def generic_unimodular(pattern: PolyPattern) -> bool:
    """True iff the generic determinant of a square pattern is a nonzero constant.

    Holds exactly when a perfect matching exists and every non-redundant
    edge has weight zero: each surviving determinant term is then constant
    and, the entries being independent, the terms cannot cancel.
    """
    if pattern.rows != pattern.cols:
        raise ValueError(f"unimodularity requires a square pattern, got {pattern.rows}x{pattern.cols}")
    g = build_graph(pattern)
    if term_rank(g) != pattern.rows:
        return False
    rg = remove_redundant_edges(g)
    return all(w == 0 for _, _, w in rg.graph.edges)


def forced_subset_criterion(pattern: PolyPattern, max_rows: int = 8) -> bool:
    """Decide generic zero-set emptiness by exhausting row subsets.

    A row subset is *forced* when every row-saturating matching sends it to
    one and the same column set; the criterion holds iff every forced subset
    touches only weight-zero edges in the reduced graph.  Exponential in the
    row count (all subsets against all saturating matchings), hence guarded;
    this is the reference oracle for the component-based verdict.
    """
    g = build_graph(pattern)
    if g.r_count > max_rows:
        raise GuardLimitError(f"subset criterion guarded at {max_rows} rows, pattern has {g.r_count}")
    if term_rank(g) != g.r_count:
        raise ValueError("subset criterion requires full row term rank")
    rg = remove_redundant_edges(g)
    # Saturating matchings of the reduced graph are exactly those of g.
    images = [dict(m.sorted_pairs()) for m in matchings_of_size(rg.graph, g.r_count, max_rows)]

    heavy_rows = {r for r, _, w in rg.graph.edges if w >= 1}
    if not heavy_rows:
        return True
    rows = range(g.r_count)
    for mask in range(1, 1 << g.r_count):
        subset = [r for r in rows if mask >> r & 1]
        if not any(r in heavy_rows for r in subset):
            continue
        first = frozenset(images[0][r] for r in subset)
        if all(frozenset(img[r] for r in subset) == first for img in images[1:]):
            return False  # forced subset with a weighted edge attached
    return True


def analyze_reduction(g: WeightedBigraph, rg: ReducedGraph) -> AnalysisReport:
    """Assemble the verdict report from a graph and its reduction."""
    comps = connected_components(rg)
    summaries = tuple(ComponentSummary(c.r_vertices, c.c_vertices, c.max_weight()) for c in comps)

    witness = None
    for idx, comp in enumerate(comps):
        if len(comp.r_vertices) != len(comp.c_vertices):
            continue
        offending = sorted((r, c) for r, c, w in comp.edges if w >= 1)
        if offending:
            edge = offending[0]
            witness = Witness(component=idx, edge=edge, weight=rg.graph.weight(*edge))
            break

    return AnalysisReport(
        verdict=UNCONTROLLABLE if witness else CONTROLLABLE,
        minimal=rg.base_rank == g.r_count,
        term_rank=rg.base_rank,
        redundant_edges=tuple((r, c) for r, c, _ in rg.redundant),
        components=summaries,
        witness=witness,
    )


def analyze(pattern: PolyPattern, optimized: bool = False) -> AnalysisReport:
    """Full structural-controllability analysis of a pattern.

    Raises ZeroTermRankError for a pattern with no entries: with no
    effective equation present there is nothing to decide.
    """
    g = build_graph(pattern)
    if not g.edges:
        raise ZeroTermRankError("pattern has no entries; no equations effectively present")
    rg = remove_redundant_edges(g, optimized=optimized)
    return analyze_reduction(g, rg)


def criteria_equivalent(pattern: PolyPattern, max_rows: int = 8) -> bool:
    """Cross-check: subset criterion and component verdict must always agree."""
    return forced_subset_criterion(pattern, max_rows) == analyze(pattern).controllable
