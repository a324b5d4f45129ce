"""Canonical forms and isomorphism tests for small graphs.

The canonical form of a graph is the lexicographically smallest
lower-triangular adjacency encoding over all n! relabelings, found by
positional backtracking with prefix pruning and twin skipping (two unused
vertices whose swap is an automorphism explore one branch).  Graphs here
are tiny -- the formulas feeding this module explode combinatorially long
before isomorphism does -- so brute force with pruning beats carrying a
partition-refinement engine.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .errors import SizeBoundError
from .graphs import Graph, adjacency_masks

DEFAULT_MAX_VERTICES = 12


class CanonicalForm(NamedTuple):
    """Totally ordered by (vertex count, edge count, edge list)."""

    n: int
    size: int
    edges: tuple[tuple[int, int], ...]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> CanonicalForm:
    """Canonical form; equal for two graphs iff they are isomorphic."""
    if g.n > max_vertices:
        raise SizeBoundError(
            f"graph on {g.n} vertices exceeds the canonical-form bound {max_vertices}"
        )
    n = g.n
    if n == 0:
        return CanonicalForm(0, 0, ())
    adj = adjacency_masks(g)
    # heuristic: looped then high-degree vertices first, to find a strong
    # incumbent early; correctness comes from the exhaustive prefix-pruned search
    base_order = sorted(
        range(n), key=lambda v: (-(adj[v] >> v & 1), -adj[v].bit_count(), v)
    )
    best: list[int] | None = None
    placed: list[int] = []
    rows: list[int] = []
    used = [False] * n

    def rec() -> None:
        nonlocal best
        i = len(placed)
        if i == n:
            if best is None or rows < best:
                best = rows.copy()
            return
        reps: list[int] = []
        for v in base_order:
            if used[v]:
                continue
            twin = False
            for w in reps:
                others = ~((1 << v) | (1 << w))
                if (adj[v] & others) == (adj[w] & others) and (
                    adj[v] >> v & 1
                ) == (adj[w] >> w & 1):
                    twin = True
                    break
            if twin:
                continue
            reps.append(v)
            row = 0
            for u in placed:
                row = (row << 1) | (adj[v] >> u & 1)
            row = (row << 1) | (adj[v] >> v & 1)
            rows.append(row)
            viable = True
            if best is not None:
                for a, b in zip(rows, best):
                    if a != b:
                        viable = a < b
                        break
            if viable:
                used[v] = True
                placed.append(v)
                rec()
                placed.pop()
                used[v] = False
            rows.pop()

    rec()
    assert best is not None
    edges = []
    for i, row in enumerate(best):
        if row & 1:
            edges.append((i, i))
        for j in range(i):
            if row >> (i - j) & 1:
                edges.append((j, i))
    edges.sort()
    return CanonicalForm(n, len(edges), tuple(edges))


def canonical_graph(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """The canonical representative of g's isomorphism class."""
    cf = canonical_form(g, max_vertices)
    return Graph(cf.n, cf.edges)


def are_isomorphic(g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if _profile(g) != _profile(h):
        return False
    return canonical_form(g, max_vertices) == canonical_form(h, max_vertices)


def _profile(g: Graph) -> tuple:
    adj = adjacency_masks(g)
    return tuple(sorted((adj[v].bit_count(), adj[v] >> v & 1) for v in range(g.n)))
