"""Finite undirected graphs with optional loops, and constructions on them.

Vertices are the contiguous integers 0..n-1.  Edges are unordered pairs
{u, v}; the pair {v, v} encodes a loop at v.  Graphs are immutable and
hashable, so they can be shared across threads and used as cache keys.
All constructions produce deterministic labelings (products are indexed
row-major, unions shift the right operand by the left operand's order),
so tests can assert labeled equality rather than mere isomorphism.

Text format (bit-exact): one line of whitespace-separated tokens, first
the decimal vertex count, then one ``u-v`` token per edge with
0 <= u <= v < n.  ``render_graph`` emits edges sorted by (u, v);
``parse_graph`` accepts any order but rejects duplicates.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphParseError

Edge = tuple[int, int]


class Graph:
    """Immutable graph on {0..n-1} with a set of normalized (u <= v) edges."""

    __slots__ = ("n", "edges", "_eset", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise ValueError(f"edge endpoint out of range: {u}-{v} with n={n}")
            norm.add((u, v))
        self.n = n
        self.edges = tuple(sorted(norm))
        self._eset = frozenset(norm)
        self._hash = hash((n, self.edges))

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._eset == other._eset
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph({render_graph(self)!r})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._eset if u <= v else (v, u) in self._eset

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges)

    def loops(self) -> tuple[int, ...]:
        return tuple(u for u, v in self.edges if u == v)


def adjacency_masks(g: Graph) -> list[int]:
    """Per-vertex neighbor bitmasks; a loop sets the vertex's own bit."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def loop_mask(g: Graph) -> int:
    m = 0
    for u, v in g.edges:
        if u == v:
            m |= 1 << u
    return m


def degree(g: Graph, v: int) -> int:
    """Number of distinct vertices adjacent to v (a loop contributes itself)."""
    mask = 0
    for a, b in g.edges:
        if a == v:
            mask |= 1 << b
        if b == v:
            mask |= 1 << a
    return mask.bit_count()


_TOKEN_RE = re.compile(r"\S+")
_EDGE_RE = re.compile(r"(\d+)-(\d+)$")


def parse_graph(text: str) -> Graph:
    """Parse the graph text format; errors report the character offset."""
    tokens = [(m.group(), m.start()) for m in _TOKEN_RE.finditer(text)]
    if not tokens:
        raise GraphParseError("expected vertex count", 0)
    head, pos = tokens[0]
    if not head.isdigit():
        raise GraphParseError(f"expected vertex count, got {head!r}", pos)
    n = int(head)
    seen = set()
    edges = []
    for tok, pos in tokens[1:]:
        m = _EDGE_RE.match(tok)
        if not m:
            raise GraphParseError(f"expected edge token 'u-v', got {tok!r}", pos)
        u, v = int(m.group(1)), int(m.group(2))
        if u > v:
            raise GraphParseError(f"edge {tok!r} must satisfy u <= v", pos)
        if v >= n:
            raise GraphParseError(f"endpoint {v} out of range for n={n}", pos)
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge {tok!r}", pos)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def render_graph(g: Graph) -> str:
    return " ".join([str(g.n)] + [f"{u}-{v}" for u, v in g.edges])


class VertexPartition:
    """Disjoint nonempty blocks covering {0..n-1}, ordered by minimum element."""

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        blks = [frozenset(b) for b in blocks]
        if any(not b for b in blks):
            raise ValueError("empty block in partition")
        seen: set[int] = set()
        for b in blks:
            for v in b:
                if v < 0 or v >= n:
                    raise ValueError(f"partition element {v} out of range for n={n}")
                if v in seen:
                    raise ValueError(f"element {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            raise ValueError("partition does not cover all vertices")
        self.n = n
        self.blocks = tuple(sorted(blks, key=min))

    @classmethod
    def discrete(cls, n: int) -> "VertexPartition":
        return cls(n, [[v] for v in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, VertexPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        shown = [sorted(b) for b in self.blocks]
        return f"VertexPartition({self.n}, {shown})"


def _require_simple(g: Graph, op: str) -> None:
    if not g.is_simple():
        raise ValueError(f"{op} is defined for simple graphs only (input has a loop)")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g + h: h's vertices are shifted up by g.n."""
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


def disjoint_union_all(graphs: Iterable[Graph]) -> Graph:
    total = 0
    edges = []
    for g in graphs:
        edges.extend((u + total, v + total) for u, v in g.edges)
        total += g.n
    return Graph(total, edges)


def categorical_product(g: Graph, h: Graph) -> Graph:
    """g x h on pairs (row-major index a*h.n + b); edges need both coordinates adjacent."""
    edges = []
    for a, ap in _sym_pairs(g):
        for b, bp in _sym_pairs(h):
            edges.append((a * h.n + b, ap * h.n + bp))
    return Graph(g.n * h.n, edges)


def _sym_pairs(g: Graph) -> Iterator[Edge]:
    # ordered versions of each edge, loops once per direction pair
    for u, v in g.edges:
        yield u, v
        if u != v:
            yield v, u


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """g . h: copy of h inside each g-fiber, complete join along edges of g."""
    _require_simple(g, "lexicographic product")
    _require_simple(h, "lexicographic product")
    edges = []
    for a in range(g.n):
        for u, v in h.edges:
            edges.append((a * h.n + u, a * h.n + v))
    for a, ap in g.edges:
        for u in range(h.n):
            for v in range(h.n):
                edges.append((a * h.n + u, ap * h.n + v))
    return Graph(g.n * h.n, edges)


def complement(g: Graph) -> Graph:
    """Simple complement: non-loop pairs flipped."""
    _require_simple(g, "complement")
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    return Graph(g.n, edges)


def full_complement(g: Graph) -> Graph:
    """Flip every pair including loops; an involution on all graphs."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def add_loops(g: Graph) -> Graph:
    """Attach a loop to every vertex of a simple graph."""
    _require_simple(g, "add_loops")
    return Graph(g.n, list(g.edges) + [(v, v) for v in range(g.n)])


def quotient(f: Graph, p: VertexPartition) -> Graph:
    """Simple quotient by a partition: blocks become vertices, no loops emitted.

    Blocks are labeled 0..k-1 in order of their minimum original vertex.
    """
    _require_simple(f, "quotient")
    if p.n != f.n:
        raise ValueError(f"partition is over {p.n} vertices, graph has {f.n}")
    index = {}
    for i, b in enumerate(p.blocks):
        for v in b:
            index[v] = i
    edges = set()
    for u, v in f.edges:
        iu, iv = index[u], index[v]
        if iu != iv:
            edges.add((min(iu, iv), max(iu, iv)))
    return Graph(len(p.blocks), edges)


def contraction_quotient(f: Graph, contracted: Iterable[Sequence[int]]) -> Graph:
    """Contract the edge set L: vertices become the components of (V, L).

    Edges of E(f) - L survive between (or within!) the merged classes, so the
    result may contain loops.  Classes are labeled 0..k-1 in order of their
    minimum original vertex; contracting the empty set returns f itself.
    """
    _require_simple(f, "contraction quotient")
    cset = set()
    for u, v in contracted:
        if u > v:
            u, v = v, u
        if not f.has_edge(u, v):
            raise ValueError(f"contracted pair {u}-{v} is not an edge of the graph")
        cset.add((u, v))
    parent = list(range(f.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in cset:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    classes: dict[int, list[int]] = {}
    for v in range(f.n):
        classes.setdefault(find(v), []).append(v)
    ordered = sorted(classes.values(), key=min)
    index = {}
    for i, cls in enumerate(ordered):
        for v in cls:
            index[v] = i
    edges = []
    for u, v in f.edges:
        if (u, v) not in cset:
            edges.append((index[u], index[v]))
    return Graph(len(ordered), edges)


def connected_components(g: Graph) -> list[Graph]:
    """Component subgraphs, each relabeled to 0..k-1, ordered by minimum vertex."""
    adj = adjacency_masks(g)
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= adj[b.bit_length() - 1]
                m ^= b
            frontier = nxt & unseen & ~comp
            comp |= frontier
        unseen &= ~comp
        members = [v for v in range(g.n) if comp >> v & 1]
        relabel = {v: i for i, v in enumerate(members)}
        edges = [
            (relabel[u], relabel[v]) for u, v in g.edges if comp >> u & 1 and comp >> v & 1
        ]
        comps.append(Graph(len(members), edges))
    return comps


def triangle_set(f: Graph, edge: Sequence[int]) -> frozenset[int]:
    """Vertices forming a triangle with the given edge."""
    _require_simple(f, "triangle_set")
    u, v = edge
    if not f.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge of the graph")
    return frozenset(
        w for w in range(f.n) if f.has_edge(u, w) and f.has_edge(v, w)
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertices, relabeled in ascending order."""
    members = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(members)}
    keep = set(members)
    edges = [
        (relabel[u], relabel[v]) for u, v in g.edges if u in keep and v in keep
    ]
    return Graph(len(members), edges)


def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All partitions of {0..n-1} via restricted growth strings."""
    if n == 0:
        yield []
        return
    a = [0] * n
    while True:
        k = max(a) + 1
        blocks: list[list[int]] = [[] for _ in range(k)]
        for i, bi in enumerate(a):
            blocks[bi].append(i)
        yield blocks
        i = n - 1
        while i > 0:
            if a[i] <= max(a[:i]):
                a[i] += 1
                for j in range(i + 1, n):
                    a[j] = 0
                break
            i -= 1
        else:
            return


def _block_connected(adj: list[int], block: list[int]) -> bool:
    mask = 0
    for v in block:
        mask |= 1 << v
    start = 1 << block[0]
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & mask & ~reach
        reach |= frontier
    return reach == mask


def connected_partitions(f: Graph) -> Iterator[VertexPartition]:
    """Partitions of V(f) all of whose blocks induce connected subgraphs."""
    _require_simple(f, "connected_partitions")
    adj = adjacency_masks(f)
    for blocks in set_partitions(f.n):
        if all(_block_connected(adj, b) for b in blocks):
            yield VertexPartition(f.n, blocks)


# -- convenience constructors -----------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def all_simple_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graphs_with_loops(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, loops allowed."""
    pairs = list(combinations(range(n), 2)) + [(v, v) for v in range(n)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_simple_graph(rng, n: int, p: float = 0.5) -> Graph:
    return Graph(
        n, [e for e in combinations(range(n), 2) if rng.random() < p]
    )
