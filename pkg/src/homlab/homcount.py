"""Exact homomorphism counting.

hom(F, G) is the number of maps V(F) -> V(G) sending every edge to an edge
and every loop to a loop (an edge may land on a loop).  The count factors
over the connected components of F, and each component is counted by
backtracking over a breadth-first vertex order rooted at a maximum-degree
vertex.  Candidate images are adjacency bitmasks intersected over the
already-assigned neighbors, so arbitrary-precision counts come out exactly
and overflow is impossible.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, adjacency_masks, connected_components, loop_mask


@lru_cache(maxsize=1 << 14)
def _components(f: Graph) -> tuple[Graph, ...]:
    return tuple(connected_components(f))


@lru_cache(maxsize=1 << 14)
def _plan(comp: Graph) -> tuple[tuple[tuple[int, ...], bool], ...]:
    """BFS order from the max-degree vertex.

    Returns, per position, the positions of earlier-placed neighbors and
    whether the vertex carries a loop.  Each non-root vertex of a connected
    component has at least one earlier neighbor, which keeps the candidate
    masks tight.
    """
    adj = adjacency_masks(comp)
    deg = [adj[v].bit_count() for v in range(comp.n)]
    root = max(range(comp.n), key=lambda v: (deg[v], -v))
    order = [root]
    seen = 1 << root
    frontier = [root]
    while frontier:
        nxt = []
        for v in sorted(frontier, key=lambda v: (-deg[v], v)):
            m = adj[v] & ~seen
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                seen |= b
                nxt.append(u)
        nxt.sort(key=lambda v: (-deg[v], v))
        order.extend(nxt)
        frontier = nxt
    pos = {v: i for i, v in enumerate(order)}
    plan = []
    for v in order:
        earlier = tuple(
            sorted(pos[u] for u in range(comp.n) if u != v and adj[v] >> u & 1 and pos[u] < pos[v])
        )
        plan.append((earlier, bool(adj[v] >> v & 1)))
    return tuple(plan)


def _count_component(
    comp: Graph, gadj: list[int], gloops: int, full: int, early_exit: bool
) -> int:
    plan = _plan(comp)
    m = len(plan)
    images = [0] * m

    def rec(i: int) -> int:
        earlier, has_loop = plan[i]
        cand = full
        for j in earlier:
            cand &= gadj[images[j]]
        if has_loop:
            cand &= gloops
        if i == m - 1:
            return (1 if cand else 0) if early_exit else cand.bit_count()
        total = 0
        while cand:
            b = cand & -cand
            images[i] = b.bit_length() - 1
            cand ^= b
            sub = rec(i + 1)
            if early_exit and sub:
                return 1
            total += sub
        return total

    return rec(0)


def hom(f: Graph, g: Graph) -> int:
    """Exact number of homomorphisms f -> g (1 for the empty f)."""
    comps = _components(f)
    if not comps:
        return 1
    if g.n == 0:
        return 0
    gadj = adjacency_masks(g)
    gloops = loop_mask(g)
    full = (1 << g.n) - 1
    total = 1
    for comp in comps:
        c = _count_component(comp, gadj, gloops, full, early_exit=False)
        if c == 0:
            return 0
        total *= c
    return total


def hom_vector(fs, g: Graph) -> list[int]:
    return [hom(f, g) for f in fs]


def is_colourable(f: Graph, k: Graph) -> bool:
    """True iff some homomorphism f -> k exists (early-exit search)."""
    comps = _components(f)
    if not comps:
        return True
    if k.n == 0:
        return False
    kadj = adjacency_masks(k)
    kloops = loop_mask(k)
    full = (1 << k.n) - 1
    return all(
        _count_component(comp, kadj, kloops, full, early_exit=True) for comp in comps
    )


def homomorphically_equivalent(f: Graph, k: Graph) -> bool:
    return is_colourable(f, k) and is_colourable(k, f)
