"""Sandpile groups via the cone construction.

For a connected non-complete graph G, attach an apex q joined to every
vertex v by tr(v) - deg(v) parallel edges.  The Laplacian of the resulting
multigraph H, with q's row and column deleted, is exactly the
transmission-adjacency matrix of G.  Its invariant factors therefore give
the sandpile group of H, and their product counts H's spanning trees.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .exact import AbelianGroup, SnfResult, snf
from .graphs import Graph, distance_profile
from .matrices import IntMatrix, MatrixKind, build


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph stored as a symmetric multiplicity matrix."""

    n: int
    mult: tuple[tuple[int, ...], ...]

    def laplacian(self) -> IntMatrix:
        degs = [sum(row) for row in self.mult]
        return [
            [degs[u] if u == v else -self.mult[u][v] for v in range(self.n)]
            for u in range(self.n)
        ]


def cone_graph(g: Graph) -> Multigraph:
    """G plus an apex joined to each v with multiplicity tr(v) - deg(v).

    Complete graphs are rejected: every multiplicity would be zero and the
    apex would be isolated.
    """
    if g.is_complete():
        raise ValueError("cone apex would be isolated")
    profile = distance_profile(g)
    n = g.n
    weights = [t - d for t, d in zip(profile.tr, profile.deg)]
    rows = []
    for u in range(n):
        rows.append(tuple(
            ((g.adj[u] >> v) & 1) for v in range(n)
        ) + (weights[u],))
    rows.append(tuple(weights) + (0,))
    return Multigraph(n + 1, tuple(rows))


def sandpile_group(g: Graph) -> tuple[AbelianGroup, int]:
    """Sandpile group of the cone over g, and the cone's spanning-tree count."""
    if g.is_complete():
        raise ValueError("cone apex would be isolated")
    result = snf(build(g, MatrixKind.Atr))
    trees = 1
    for f in result.factors:
        trees *= f
    group = AbelianGroup(
        torsion=tuple(f for f in result.factors if f > 1),
        free_rank=result.zeros,
    )
    return group, trees


def reduced_laplacian(h: Multigraph, q: int) -> IntMatrix:
    """Laplacian of ``h`` with row and column ``q`` deleted."""
    lap = h.laplacian()
    keep = [i for i in range(h.n) if i != q]
    return [[lap[i][j] for j in keep] for i in keep]


def cross_check(g: Graph) -> bool:
    """Verify the cone identity on ``g``: the apex-reduced Laplacian of the
    cone equals the transmission-adjacency matrix entrywise, and the cone
    Laplacian's SNF is that matrix's SNF extended by one zero.

    Returns False (with a note on stderr) instead of raising on mismatch.
    """
    if g.is_complete():
        raise ValueError("cone apex would be isolated")
    h = cone_graph(g)
    atr = build(g, MatrixKind.Atr)
    reduced = reduced_laplacian(h, g.n)
    if reduced != atr:
        print("cone cross-check: reduced Laplacian differs entrywise", file=sys.stderr)
        return False
    full = snf(h.laplacian())
    expected = snf(atr)
    if full != SnfResult(expected.factors, expected.zeros + 1, expected.n + 1):
        print("cone cross-check: SNF mismatch", file=sys.stderr)
        return False
    return True
