"""Independent brute-force oracles the library is checked against.

These deliberately avoid the library's own search/canonicalization paths:
hom counts come from enumerating every vertex map, isomorphism from
enumerating every permutation.
"""

from itertools import permutations, product

from homlab.graphs import Graph, all_simple_graphs


def hom_by_enumeration(f: Graph, g: Graph) -> int:
    count = 0
    for img in product(range(g.n), repeat=f.n):
        if all(g.has_edge(img[u], img[v]) for u, v in f.edges):
            count += 1
    return count


def isomorphic_by_permutation(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    for perm in permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g.edges):
            return True
    return False


def min_relabeled_edges(g: Graph):
    best = None
    for perm in permutations(range(g.n)):
        edges = tuple(
            sorted(
                (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges
            )
        )
        if best is None or edges < best:
            best = edges
    return (g.n, best)


def simple_iso_class_reps(n: int) -> list[Graph]:
    reps: dict = {}
    for g in all_simple_graphs(n):
        reps.setdefault(min_relabeled_edges(g), g)
    return list(reps.values())


def relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
