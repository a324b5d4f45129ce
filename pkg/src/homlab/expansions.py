"""Symbolic expansions of homomorphism counts into exact linear combinations.

Each expansion rewrites hom(F, <construction of G, H>) as a linear
combination of plain hom counts, so the construction never has to be
applied to the right-hand graph:

  disjoint union    hom(F, G + H)  = sum over component subsets I of
                                     hom(F_I, G) * hom(F_{rest}, H)
  full complement   hom(F, fc(G))  = sum over spanning subgraphs F' of
                                     (-1)^{|E(F')|} hom(F', G)
  looped target     hom(F, G + all loops) = sum over L subset of E(F) of
                                     hom(F contract L, G)
  complement        hom(F, comp(G)) = the previous two composed
  lexicographic     hom(F, G . H)  = sum over connected partitions R of
                                     hom(F/R, G) * hom(union of F[R], H)

Coefficients are exact rationals; grouping by isomorphism type merges
terms and drops cancellations, preserving evaluation everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .canon import canonical_form, canonical_graph
from .graphs import (
    Graph,
    connected_components,
    connected_partitions,
    contraction_quotient,
    disjoint_union_all,
    induced_subgraph,
    quotient,
)
from .graphs import add_loops, complement, disjoint_union, full_complement, lexicographic_product
from .homcount import hom


@dataclass(frozen=True)
class LinComb:
    """Formal sum of coeff * hom(graph, -) terms, evaluated at one graph."""

    terms: tuple[tuple[Graph, Fraction], ...]

    def evaluate(self, g: Graph) -> Fraction:
        return sum((c * hom(t, g) for t, c in self.terms), Fraction(0))

    def grouped(self) -> "LinComb":
        buckets: dict = {}
        for t, c in self.terms:
            key = canonical_form(t)
            rep, acc = buckets.get(key, (None, Fraction(0)))
            buckets[key] = (rep if rep is not None else canonical_graph(t), acc + c)
        kept = sorted(
            ((key, rep, acc) for key, (rep, acc) in buckets.items() if acc != 0)
        )
        return LinComb(tuple((rep, acc) for _, rep, acc in kept))

    def coefficient_of(self, g: Graph) -> Fraction:
        key = canonical_form(g)
        return sum(
            (c for t, c in self.terms if canonical_form(t) == key), Fraction(0)
        )


@dataclass(frozen=True)
class PairLinComb:
    """Formal sum of coeff * hom(left, -) * hom(right, =) terms on graph pairs."""

    terms: tuple[tuple[Graph, Graph, Fraction], ...]

    def evaluate(self, g: Graph, h: Graph) -> Fraction:
        return sum((c * hom(l, g) * hom(r, h) for l, r, c in self.terms), Fraction(0))

    def grouped(self) -> "PairLinComb":
        buckets: dict = {}
        for l, r, c in self.terms:
            key = (canonical_form(l), canonical_form(r))
            rep, acc = buckets.get(key, (None, Fraction(0)))
            buckets[key] = (
                rep if rep is not None else (canonical_graph(l), canonical_graph(r)),
                acc + c,
            )
        kept = sorted(
            ((key, rep, acc) for key, (rep, acc) in buckets.items() if acc != 0)
        )
        return PairLinComb(tuple((rep[0], rep[1], acc) for _, rep, acc in kept))


def group_by_isomorphism(lc: LinComb) -> LinComb:
    """Merge isomorphic terms, summing coefficients and dropping zeros."""
    return lc.grouped()


def _require_simple(f: Graph, what: str) -> None:
    if not f.is_simple():
        raise ValueError(f"{what} expands simple graphs only")


def expand_disjoint_union(f: Graph) -> PairLinComb:
    """One term per subset of F's components, in subset-bitmask order."""
    _require_simple(f, "disjoint-union expansion")
    comps = connected_components(f)
    r = len(comps)
    terms = []
    for mask in range(1 << r):
        left = disjoint_union_all(c for i, c in enumerate(comps) if mask >> i & 1)
        right = disjoint_union_all(c for i, c in enumerate(comps) if not mask >> i & 1)
        terms.append((left, right, Fraction(1)))
    return PairLinComb(tuple(terms))


def expand_full_complement(f: Graph) -> LinComb:
    """Spanning subgraphs signed by edge parity (inclusion-exclusion)."""
    _require_simple(f, "full-complement expansion")
    edges = f.edges
    terms = []
    for mask in range(1 << len(edges)):
        sub = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        terms.append((Graph(f.n, sub), Fraction(-1) ** len(sub)))
    return LinComb(tuple(terms))


def expand_looped(f: Graph) -> LinComb:
    """One contraction quotient per edge subset, all with coefficient one."""
    _require_simple(f, "looped-target expansion")
    edges = f.edges
    terms = []
    for mask in range(1 << len(edges)):
        contracted = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        terms.append((contraction_quotient(f, contracted), Fraction(1)))
    return LinComb(tuple(terms))


def expand_complement(f: Graph) -> LinComb:
    """Composition: spanning subgraphs, then contractions of each.

    After grouping, every retained graph is reachable from F by edge
    deletions and contractions.
    """
    _require_simple(f, "complement expansion")
    edges = f.edges
    terms = []
    for mask in range(1 << len(edges)):
        sub_edges = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        sub = Graph(f.n, sub_edges)
        sign = Fraction(-1) ** len(sub_edges)
        for lmask in range(1 << len(sub_edges)):
            contracted = [sub_edges[i] for i in range(len(sub_edges)) if lmask >> i & 1]
            terms.append((contraction_quotient(sub, contracted), sign))
    return LinComb(tuple(terms))


def expand_lexicographic(f: Graph) -> PairLinComb:
    """One term per partition of V(F) into connected blocks."""
    _require_simple(f, "lexicographic expansion")
    terms = []
    for part in connected_partitions(f):
        left = quotient(f, part)
        right = disjoint_union_all(induced_subgraph(f, b) for b in part.blocks)
        terms.append((left, right, Fraction(1)))
    return PairLinComb(tuple(terms))


IDENTITY_NAMES = (
    "disjoint_union",
    "full_complement",
    "looped",
    "complement",
    "lexicographic",
)

_PAIR_IDENTITIES = {"disjoint_union", "lexicographic"}


def identity_takes_pair(name: str) -> bool:
    return name in _PAIR_IDENTITIES


def expand_identity(name: str, f: Graph):
    if name == "disjoint_union":
        return expand_disjoint_union(f)
    if name == "full_complement":
        return expand_full_complement(f)
    if name == "looped":
        return expand_looped(f)
    if name == "complement":
        return expand_complement(f)
    if name == "lexicographic":
        return expand_lexicographic(f)
    raise ValueError(f"unknown identity {name!r}; expected one of {IDENTITY_NAMES}")


def identity_sides(name: str, f: Graph, g: Graph, h: Graph | None = None):
    """(direct hom count on the constructed graph, expansion evaluation)."""
    if identity_takes_pair(name):
        if h is None:
            raise ValueError(f"identity {name!r} needs a second right-hand graph")
        expansion = expand_identity(name, f).grouped()
        if name == "disjoint_union":
            lhs = hom(f, disjoint_union(g, h))
        else:
            lhs = hom(f, lexicographic_product(g, h))
        return lhs, expansion.evaluate(g, h)
    expansion = expand_identity(name, f).grouped()
    if name == "full_complement":
        lhs = hom(f, full_complement(g))
    elif name == "looped":
        lhs = hom(f, add_loops(g))
    else:
        lhs = hom(f, complement(g))
    return lhs, expansion.evaluate(g)


def verify_identity(name: str, f: Graph, g: Graph, h: Graph | None = None) -> bool:
    lhs, rhs = identity_sides(name, f, g, h)
    return lhs == rhs


def inclusion_exclusion(sets: list[int], universe_size: int) -> int:
    """Size of the intersection of complements, via the alternating sum.

    ``sets`` are bitmasks inside {0..universe_size-1}.  The direct count
    (complement of the union) double-checks the formula under ``assert``.
    """
    full = (1 << universe_size) - 1
    for s in sets:
        if s & ~full:
            raise ValueError("set contains elements outside the universe")
    k = len(sets)
    value = universe_size
    for imask in range(1, 1 << k):
        inter = full
        for i in range(k):
            if imask >> i & 1:
                inter &= sets[i]
        value += (-1) ** imask.bit_count() * inter.bit_count()
    union = 0
    for s in sets:
        union |= s
    assert value == universe_size - union.bit_count()
    return value
