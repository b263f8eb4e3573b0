"""Canonical catalog of the 18 isomorphism classes of graphs on at most 4
vertices, each with the closed-form spectrum of its group, the search bound
used by the verification command, and small spectrum members the search is
expected to realize at that bound.

Entries are keyed by a canonical representative edge list; lookup is by
isomorphism, not by labelling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_isomorphic
from .spectra import (
    FOUR_N0,
    FOUR_SQUARES,
    FULL_N0,
    ODD_UNION_4N0,
    ONE_EDGE_FAMILY,
    R_INFINITY_ONLY,
    TWO_EDGE_FAMILY,
    TWO_N0,
    TWO_ODD_UNION_8N0,
    TWO_SQUARES,
    Z1,
    SpectrumForm,
)


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    description: str
    graph: Graph
    form: SpectrumForm
    part: int  # 1 = up to three vertices, 2 = four vertices
    verify_bound: int
    expected_small: tuple[int, ...]

    @property
    def is_r_infinity(self) -> bool:
        return self.form == R_INFINITY_ONLY


def _g(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges)


CATALOG: tuple[CatalogEntry, ...] = (
    # one and two vertices
    CatalogEntry("K1", "single vertex", _g(1, []), Z1, 1, 3, (2,)),
    CatalogEntry("N22", "two vertices, no edge", _g(2, []), TWO_N0, 1, 3, (2, 4, 6)),
    CatalogEntry("K2", "single edge", _g(2, [(0, 1)]), FULL_N0, 1, 3, (1, 2, 3)),
    # three vertices
    CatalogEntry("N32", "three vertices, no edges", _g(3, []), ODD_UNION_4N0, 1, 3, (1, 3, 4)),
    CatalogEntry(
        "K2_plus_point", "an edge plus an isolated vertex", _g(3, [(0, 1)]), TWO_SQUARES, 1, 3, (2, 6, 8)
    ),
    CatalogEntry("P3", "path on three vertices", _g(3, [(0, 1), (1, 2)]), FOUR_N0, 1, 3, (4, 8)),
    CatalogEntry("K3", "triangle", _g(3, [(0, 1), (0, 2), (1, 2)]), FULL_N0, 1, 3, (1, 2, 3)),
    # four vertices
    CatalogEntry("N42", "four vertices, no edges", _g(4, []), FULL_N0, 2, 1, (1, 2)),
    CatalogEntry("one_edge", "one edge, two isolated vertices", _g(4, [(0, 1)]), ONE_EDGE_FAMILY, 2, 2, (4, 8)),
    CatalogEntry(
        "two_edges", "two disjoint edges", _g(4, [(0, 1), (2, 3)]), TWO_EDGE_FAMILY, 2, 2, (2, 4, 6)
    ),
    CatalogEntry(
        "P3_plus_point", "path on three plus an isolated vertex", _g(4, [(0, 1), (1, 2)]), R_INFINITY_ONLY, 2, 2, ()
    ),
    CatalogEntry(
        "K3_plus_point", "triangle plus an isolated vertex",
        _g(4, [(0, 1), (0, 2), (1, 2)]), TWO_ODD_UNION_8N0, 2, 1, (2, 6, 8)
    ),
    CatalogEntry("star", "one vertex joined to three", _g(4, [(0, 1), (0, 2), (0, 3)]), TWO_ODD_UNION_8N0, 2, 1, (2, 6, 8)),
    CatalogEntry("P4", "path on four vertices", _g(4, [(0, 1), (1, 2), (2, 3)]), R_INFINITY_ONLY, 2, 2, ()),
    CatalogEntry(
        "paw", "triangle with a pendant vertex",
        _g(4, [(0, 1), (0, 2), (0, 3), (1, 2)]), FOUR_SQUARES, 2, 2, (4, 12)
    ),
    CatalogEntry("C4", "cycle on four vertices", _g(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), TWO_N0, 2, 2, (2, 4, 6)),
    CatalogEntry(
        "diamond", "complete graph minus one edge",
        _g(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]), TWO_N0, 2, 2, (2, 4)
    ),
    CatalogEntry(
        "K4", "complete graph", _g(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), FULL_N0, 2, 1, (1, 2)
    ),
)


def lookup_catalog(g: Graph) -> CatalogEntry | None:
    """Catalog entry whose representative is isomorphic to ``g``, if any."""
    if g.n > 4:
        return None
    for entry in CATALOG:
        if entry.graph.n == g.n and is_isomorphic(entry.graph, g):
            return entry
    return None
