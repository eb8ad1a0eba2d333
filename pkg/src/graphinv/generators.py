"""Isomorphism-free generation of free trees and small connected graphs.

Both generators grow graphs level by level (attach a new vertex to every
possible neighbourhood of every graph one size down) and reject duplicates
with a canonical certificate.  Growing is exhaustive because deleting a
leaf of a tree, or any non-cut vertex of a connected graph, lands back in
the previous level.

Certificates: trees use the classic rooted-at-centroid encoding; general
graphs use an individualisation-refinement search for the minimum
upper-triangle bitmask over all relabellings, with twin pruning so that
highly symmetric graphs (stars, complete multipartite) stay cheap.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graphs import Graph

TREE_MAX_VERTICES = 16
CONNECTED_MAX_VERTICES = 8


# ---------------------------------------------------------------------------
# Canonical certificate for arbitrary graphs (used up to ~10 vertices).

def _refine(n: int, nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Stable colour refinement: split classes by neighbour-colour multisets.

    Returned colours are dense ranks ordered by (old colour, multiset), so
    the class order is isomorphism-invariant.
    """
    ncolors = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs[v])))
            for v in range(n)
        ]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [rank[k] for k in keys]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    # Swapping u and v is an automorphism iff they agree off {u, v}.
    mask = ~((1 << u) | (1 << v))
    return (adj[u] & mask) == (adj[v] & mask)


def canonical_key(g: Graph) -> tuple[int, int]:
    """(n, canonical upper-triangle bitmask): equal iff graphs isomorphic."""
    n = g.n
    if n == 1:
        return 1, 0
    adj = g.adj
    nbrs = [g.neighbors(u) for u in range(n)]
    colors = _refine(n, nbrs, [adj[u].bit_count() for u in range(n)])
    best: int | None = None

    def leaf_mask(colors: list[int]) -> int:
        # Discrete colouring: colour rank is the new position.
        vert_at = [0] * n
        for v in range(n):
            vert_at[colors[v]] = v
        mask = 0
        bit = 0
        for i in range(n):
            row = adj[vert_at[i]]
            for j in range(i + 1, n):
                if (row >> vert_at[j]) & 1:
                    mask |= 1 << bit
                bit += 1
        return mask

    def dfs(colors: list[int]) -> None:
        nonlocal best
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = None
        for c in sorted(counts):
            if counts[c] > 1:
                target = c
                break
        if target is None:
            mask = leaf_mask(colors)
            if best is None or mask < best:
                best = mask
            return
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(adj, u, v) for u in tried):
                continue
            tried.append(v)
            branched = [2 * c for c in colors]
            branched[v] -= 1
            dfs(_refine(n, nbrs, branched))

    dfs(colors)
    assert best is not None
    return n, best


# ---------------------------------------------------------------------------
# Free trees: centroid certificate plus leaf-extension growth.

def tree_certificate(g: Graph):
    """Canonical encoding of a free tree, rooted at its centroid(s)."""
    n = g.n
    if n == 1:
        return (1,)
    size = [1] * n
    parent = [-1] * n
    order: list[int] = []
    stack = [0]
    seen = 1
    while stack:
        u = stack.pop()
        order.append(u)
        for w in g.neighbors(u):
            if not (seen >> w) & 1:
                seen |= 1 << w
                parent[w] = u
                stack.append(w)
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    centroids = []
    for u in range(n):
        heaviest = n - size[u]
        for w in g.neighbors(u):
            if w != parent[u]:
                heaviest = max(heaviest, size[w])
        if heaviest <= n // 2:
            centroids.append(u)

    def encode(v: int, banned: int):
        subs = sorted(encode(w, v) for w in g.neighbors(v) if w != banned)
        return tuple(subs)

    if len(centroids) == 1:
        return 1, encode(centroids[0], -1)
    c1, c2 = centroids
    return 2, tuple(sorted((encode(c1, c2), encode(c2, c1))))


@lru_cache(maxsize=None)
def _tree_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[object, Graph] = {}
    for small in _tree_level(n - 1):
        for v in range(n - 1):
            rows = list(small.adj) + [1 << v]
            rows[v] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            cert = tree_certificate(g)
            if cert not in found:
                found[cert] = g
    return tuple(found[c] for c in sorted(found))


def generate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of free trees on n vertices."""
    if not 1 <= n <= TREE_MAX_VERTICES:
        raise ValueError(f"tree generation supports 1 <= n <= {TREE_MAX_VERTICES}")
    yield from _tree_level(n)


# ---------------------------------------------------------------------------
# Connected graphs on up to 8 vertices.

@lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[tuple[int, int], Graph] = {}
    for small in _connected_level(n - 1):
        for nbhd in range(1, 1 << (n - 1)):
            rows = [small.adj[u] | (((nbhd >> u) & 1) << (n - 1)) for u in range(n - 1)]
            rows.append(nbhd)
            g = Graph(n, tuple(rows))
            key = canonical_key(g)
            if key not in found:
                found[key] = g
    return tuple(found[k] for k in sorted(found))


def generate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs.

    Built-in up to 8 vertices; larger corpora should be ingested as graph6
    lines from an external generator.
    """
    if not 1 <= n <= CONNECTED_MAX_VERTICES:
        raise ValueError(
            f"built-in generation supports 1 <= n <= {CONNECTED_MAX_VERTICES}; "
            "supply larger corpora as graph6 input"
        )
    yield from _connected_level(n)
