"""Essentially finite graph classes and their indistinguishability closures.

A class spec is a finite list of simple generator graphs, optionally closed
under finite disjoint unions.  Members are encoded as exact integer
multiplicity vectors over the finite basis of connected component types,
which turns closure questions into exact rational linear algebra:

* membership of K in the closure reduces to the K-colourable part of the
  class and then to a span test of component-multiplicity vectors,
* a class is distinguishing-closed iff no K has its vector inside the span
  of the K-colourable part's vectors while staying outside the class, and
* when a span test fails, an integer separating vector z converts into an
  explicit witness pair (H, H') with identical hom counts from every
  generator but different hom counts from K.

For union-closed specs the generator vectors already span the vectors of
all members (a union's vector is the sum of its parts), so span tests only
ever see the generators; this is asserted in the tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .canon import canonical_form, canonical_graph
from .errors import ProbeSearchError, SizeBoundError
from .graphs import (
    Graph,
    all_simple_graphs,
    categorical_product,
    connected_components,
    disjoint_union_all,
    parse_graph,
    random_simple_graph,
    render_graph,
)
from .homcount import hom, is_colourable
from .linalg import (
    clear_denominators,
    cone_extreme_rays,
    det_int,
    dot,
    integer_kernel_basis,
    lcm_denominators,
    mat_vec,
    nullspace,
    orthogonal_complement,
    rank,
    solve_combination,
    solve_square,
)

ComponentBasis = tuple[Graph, ...]
ClassVector = tuple[int, ...]


@dataclass(frozen=True)
class GraphClassSpec:
    """Finite generators plus a union-closure flag.

    ``union_closed`` means the class is every finite disjoint union of
    generators (with at least one part); otherwise it is the bare list.
    """

    generators: tuple[Graph, ...]
    union_closed: bool


def _iso_key(g: Graph):
    """Isomorphism key via component canonical forms.

    Works for arbitrarily large disjoint unions as long as every component
    fits the canonical-form bound.
    """
    return tuple(sorted(canonical_form(c) for c in connected_components(g)))


def make_class_spec(generators: Iterable[Graph], union_closed: bool) -> GraphClassSpec:
    """Normalize: generators deduplicated up to isomorphism, sorted canonically."""
    by_key = {}
    for g in generators:
        if not g.is_simple():
            raise ValueError("class generators must be simple graphs")
        if g.n == 0:
            raise ValueError("class generators must be nonempty graphs")
        by_key.setdefault(_iso_key(g), g)
    gens = tuple(by_key[k] for k in sorted(by_key))
    return GraphClassSpec(gens, union_closed)


def parse_class_spec(text: str) -> GraphClassSpec:
    """Line 1 is ``union-closed`` or ``finite``; each further line one graph."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty class spec")
    head = lines[0]
    if head == "union-closed":
        union_closed = True
    elif head == "finite":
        union_closed = False
    else:
        raise ValueError(f"first line must be 'union-closed' or 'finite', got {head!r}")
    gens = [parse_graph(ln) for ln in lines[1:]]
    if not gens:
        raise ValueError("class spec needs at least one generator")
    return make_class_spec(gens, union_closed)


def render_class_spec(spec: GraphClassSpec) -> str:
    head = "union-closed" if spec.union_closed else "finite"
    return "\n".join([head] + [render_graph(g) for g in spec.generators])


def component_basis(spec: GraphClassSpec, extra: Iterable[Graph] = ()) -> ComponentBasis:
    """Sorted, deduplicated component types of the generators plus extras."""
    by_key = {}
    for g in list(spec.generators) + list(extra):
        for comp in connected_components(g):
            rep = canonical_graph(comp)
            by_key[canonical_form(comp)] = rep
    return tuple(by_key[k] for k in sorted(by_key))


def vectorize(f: Graph, basis: ComponentBasis) -> ClassVector:
    """Component type multiplicities of f over the basis."""
    index = {canonical_form(c): i for i, c in enumerate(basis)}
    counts = [0] * len(basis)
    for comp in connected_components(f):
        key = canonical_form(comp)
        if key not in index:
            raise ValueError(
                f"component not in basis: {render_graph(canonical_graph(comp))}"
            )
        counts[index[key]] += 1
    return tuple(counts)


def unvectorize(vec: ClassVector, basis: ComponentBasis) -> Graph:
    parts = []
    for count, comp in zip(vec, basis):
        parts.extend([comp] * count)
    return disjoint_union_all(parts)


def restrict_to_colourable(spec: GraphClassSpec, k: Graph) -> GraphClassSpec:
    """Keep the generators admitting a homomorphism into k.

    A union is k-colourable iff every summand is, so the union-closure flag
    carries over unchanged.
    """
    kept = tuple(g for g in spec.generators if is_colourable(g, k))
    return GraphClassSpec(kept, spec.union_closed)


@dataclass(frozen=True)
class SpanCertificate:
    """Either rational coefficients writing the target in the span, or an
    integer vector orthogonal to every input but not to the target."""

    in_span: bool
    coefficients: Optional[tuple[Fraction, ...]]
    separator: Optional[tuple[int, ...]]


def span_membership(vectors: Sequence[ClassVector], target: ClassVector) -> SpanCertificate:
    dim = len(target)
    for v in vectors:
        if len(v) != dim:
            raise ValueError("dimension mismatch between vectors and target")
    alpha = solve_combination(vectors, target)
    if alpha is not None:
        return SpanCertificate(True, tuple(alpha), None)
    for base in orthogonal_complement(vectors, dim):
        if dot(base, target) != 0:
            z = tuple(clear_denominators(base))
            for v in vectors:
                assert dot(z, v) == 0
            assert dot(z, target) != 0
            return SpanCertificate(False, None, z)
    raise AssertionError("target outside the span but no separator found")


@dataclass(frozen=True)
class ClosureDecision:
    member: bool
    certificate: SpanCertificate
    basis: ComponentBasis
    restricted: GraphClassSpec


def in_closure(spec: GraphClassSpec, k: Graph) -> ClosureDecision:
    """Does the class's indistinguishability relation pin down hom(k, -)?

    Restricts to the k-colourable part, then runs the span test of the
    component-multiplicity vectors over the joint component basis.
    """
    if not k.is_simple():
        raise ValueError("closure membership is defined for simple graphs")
    restricted = restrict_to_colourable(spec, k)
    basis = component_basis(restricted, extra=[k])
    vectors = [vectorize(g, basis) for g in restricted.generators]
    target = vectorize(k, basis)
    cert = span_membership(vectors, target)
    return ClosureDecision(cert.in_span, cert, basis, restricted)


def class_membership(spec: GraphClassSpec, k: Graph) -> bool:
    """Is k literally a member (up to isomorphism)?

    Union-closed specs decide by bounded nonnegative-integer feasibility:
    every generator contributes at least one component, so no coefficient
    can exceed the largest multiplicity in k's vector.
    """
    if not k.is_simple():
        raise ValueError("class membership is defined for simple graphs")
    if not spec.union_closed:
        kk = _iso_key(k)
        return any(_iso_key(g) == kk for g in spec.generators)
    if k.n == 0:
        return False
    basis = component_basis(spec)
    try:
        target = vectorize(k, basis)
    except ValueError:
        return False
    vecs = [vectorize(g, basis) for g in spec.generators]
    limit = max(target)

    def feasible(remaining: ClassVector, i: int) -> bool:
        if all(x == 0 for x in remaining):
            return True
        if i == len(vecs):
            return False
        vec = vecs[i]
        top = min(
            (r // v for r, v in zip(remaining, vec) if v), default=limit
        )
        for count in range(min(top, limit), -1, -1):
            rest = tuple(r - count * v for r, v in zip(remaining, vec))
            if all(x >= 0 for x in rest) and feasible(rest, i + 1):
                return True
        return False

    return feasible(target, 0)


@dataclass(frozen=True)
class HdVerdict:
    """Outcome of the distinguishing-closedness check."""

    status: str  # "closed" | "violation" | "no-violation-up-to"
    witness: Optional[Graph]
    bound: int


def hd_closed_check(spec: GraphClassSpec, bound: int) -> HdVerdict:
    """Search unions over the component basis for a closedness violation.

    A violation is a candidate K whose vector lies in the span of the
    K-colourable generators' vectors while K itself is not a member.
    Candidates take every component multiplicity up to ``bound``.  When no
    violation exists in the box, ``closed`` is claimed only for union-closed
    specs passing the exactness certificate below; otherwise the verdict
    stays the honest ``no-violation-up-to``.
    """
    if bound <= 0:
        raise ValueError("bound must be positive")
    basis = component_basis(spec)
    gen_vecs = [vectorize(g, basis) for g in spec.generators]
    candidates = sorted(
        (vec for vec in product(range(bound + 1), repeat=len(basis)) if any(vec)),
        key=lambda vec: (sum(vec), vec),
    )
    for vec in candidates:
        k = unvectorize(vec, basis)
        restricted = restrict_to_colourable(spec, k)
        vectors = [vectorize(g, basis) for g in restricted.generators]
        cert = span_membership(vectors, vec)
        if cert.in_span and not class_membership(spec, k):
            return HdVerdict("violation", k, bound)
    if spec.union_closed and _closedness_certificate(spec, basis, gen_vecs):
        return HdVerdict("closed", None, bound)
    return HdVerdict("no-violation-up-to", None, bound)


def _closedness_certificate(
    spec: GraphClassSpec, basis: ComponentBasis, gen_vecs: list[ClassVector]
) -> bool:
    """Sound (incomplete) proof that no violation exists at any multiplicity.

    For each support set of component types, the candidates sharing it see a
    fixed colourable generator subset S.  Every nonnegative integer vector in
    W = {x in span(S) : x zero off the support} must be a nonnegative integer
    combination of S.  That holds whenever

      (a) the S vectors are linearly independent (coefficients unique),
      (b) a lattice basis of W's integer points has integer coefficients, and
      (c) every extreme ray of the pointed cone {x in W : x >= 0} has
          nonnegative coefficients.

    Any failure leaves the bounded verdict in place.
    """
    m = len(basis)
    for size in range(1, m + 1):
        for support in combinations(range(m), size):
            l_graph = disjoint_union_all(basis[i] for i in support)
            s_vecs = [
                vec
                for g, vec in zip(spec.generators, gen_vecs)
                if is_colourable(g, l_graph)
            ]
            if not s_vecs:
                continue
            if rank(s_vecs) != len(s_vecs):
                return False
            # W: coefficient directions u with (A u) zero off the support
            off = [i for i in range(m) if i not in support]
            constraint_rows = [[Fraction(vec[i]) for vec in s_vecs] for i in off]
            if constraint_rows:
                u_basis = nullspace(constraint_rows)
            else:
                u_basis = [
                    [Fraction(int(i == j)) for j in range(len(s_vecs))]
                    for i in range(len(s_vecs))
                ]
            if not u_basis:
                continue
            w_basis = [
                [
                    sum(u[j] * s_vecs[j][i] for j in range(len(s_vecs)))
                    for i in range(m)
                ]
                for u in u_basis
            ]
            # (b) integer points of W decompose integrally over the S vectors
            complement_rows = orthogonal_complement(w_basis, m)
            int_rows = [clear_denominators(row) for row in complement_rows]
            for lattice_vec in integer_kernel_basis(int_rows, m):
                alpha = solve_combination(s_vecs, lattice_vec)
                if alpha is None or any(a.denominator != 1 for a in alpha):
                    return False
            # (c) extreme rays of {x in W : x >= 0} have nonnegative coefficients
            ray_constraints = [
                [w_basis[j][i] for j in range(len(w_basis))] for i in range(m)
            ]
            for ray in cone_extreme_rays(ray_constraints, len(w_basis)):
                x_ray = [
                    sum(ray[j] * w_basis[j][i] for j in range(len(w_basis)))
                    for i in range(m)
                ]
                alpha = solve_combination(s_vecs, x_ray)
                if alpha is None or any(a < 0 for a in alpha):
                    return False
    return True


def finite_generating_subclass(spec: GraphClassSpec) -> list[Graph]:
    """A finite member subset whose hom counts decide the whole relation.

    For every subset of component types, the members colourable into that
    subset's union contribute their vectors; a spanning subset of those
    members is kept.  The union over all subsets generates the class's
    indistinguishability relation.
    """
    basis = component_basis(spec)
    if len(basis) > 12:
        raise SizeBoundError("component basis too large (> 12) for subset enumeration")
    chosen: dict = {}
    gens = list(spec.generators)
    for size in range(1, len(basis) + 1):
        for support in combinations(range(len(basis)), size):
            l_graph = disjoint_union_all(basis[i] for i in support)
            members = [g for g in gens if is_colourable(g, l_graph)]
            kept_vecs: list[ClassVector] = []
            for g in members:
                vec = vectorize(g, basis)
                if rank(kept_vecs + [vec]) > len(kept_vecs):
                    kept_vecs.append(vec)
                    chosen[_iso_key(g)] = g
    result = [chosen[k] for k in sorted(chosen)]
    for g in gens:
        l_graph = disjoint_union_all(connected_components(g))
        relevant = [vectorize(f, basis) for f in result if is_colourable(f, l_graph)]
        if solve_combination(relevant, vectorize(g, basis)) is None:
            raise AssertionError("generating subclass misses a generator's vector")
    return result


@dataclass(frozen=True)
class HomIndDecision:
    equivalent: bool
    distinguisher: Optional[Graph]
    counts: Optional[tuple[int, int]]


def homind_decide(spec: GraphClassSpec, g: Graph, h: Graph) -> HomIndDecision:
    """Equality of hom counts from every class member, decided finitely."""
    for f in finite_generating_subclass(spec):
        cg, ch = hom(f, g), hom(f, h)
        if cg != ch:
            return HomIndDecision(False, f, (cg, ch))
    return HomIndDecision(True, None, None)


def cancellation_admits(spec: GraphClassSpec, k: Graph) -> bool:
    """True iff every generator maps into k (then producting by k cancels)."""
    if not k.is_simple():
        raise ValueError("cancellation is defined for simple graphs")
    return all(is_colourable(g, k) for g in spec.generators)


@dataclass(frozen=True)
class ProbeReport:
    trials: int
    passes: int
    counterexample: Optional[tuple[Graph, Graph]]

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def cancellation_probe(
    spec: GraphClassSpec, k: Graph, trials: int, size: int, seed: int = 0
) -> ProbeReport:
    """Sample pairs (G, H) and assert: equal hom counts from the generators
    into G x k and H x k  iff  equal hom counts from the k-colourable
    generators into G and H."""
    if trials <= 0 or size <= 0:
        raise ValueError("trials and size must be positive")
    rng = random.Random(seed)
    restricted = restrict_to_colourable(spec, k)
    passes = 0
    for _ in range(trials):
        g = random_simple_graph(rng, rng.randint(1, size))
        h = random_simple_graph(rng, rng.randint(1, size))
        gk = categorical_product(g, k)
        hk = categorical_product(h, k)
        lhs = all(hom(f, gk) == hom(f, hk) for f in spec.generators)
        rhs = all(hom(f, g) == hom(f, h) for f in restricted.generators)
        if lhs != rhs:
            return ProbeReport(trials, passes, (g, h))
        passes += 1
    return ProbeReport(trials, passes, None)


@dataclass(frozen=True)
class WitnessPair:
    h: Graph
    h_prime: Graph
    probes: tuple[Graph, ...]
    t: Fraction
    scale: int


def _probe_candidates(rng: random.Random):
    """Simple graphs in increasing order, iso-deduplicated, seed-shuffled per size.

    Sizes up to 4 are exhaustive; larger sizes are sampled.  Hom vectors of
    pairwise non-isomorphic connected graphs are linearly independent over
    graphs of at most their order, so the greedy rank selection terminates.
    """
    for n in range(1, 13):
        seen = set()
        reps = []
        if n <= 4:
            pool = list(all_simple_graphs(n))
        else:
            pool = [random_simple_graph(rng, n) for _ in range(60)]
        for g in pool:
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                reps.append(canonical_graph(g))
        rng.shuffle(reps)
        yield from reps


def witness_pair(spec: GraphClassSpec, k: Graph, seed: int = 0) -> WitnessPair:
    """Explicit pair agreeing with every generator and disagreeing on k.

    Requires k outside the closure.  Builds a probe family whose hom matrix
    against the component basis is invertible, perturbs the all-ones recipe
    along the separator direction by powers t = 1 + 2^-i until the perturbed
    recipe stays positive, clears denominators, and assembles both disjoint
    unions.  When the class has non-k-colourable generators both sides are
    multiplied by k, which zeroes those counts without affecting the rest.
    Postconditions are re-verified by direct hom counting before returning.
    """
    decision = in_closure(spec, k)
    if decision.member:
        raise ValueError("witness is impossible: the graph is in the closure")
    basis = decision.basis
    z = decision.certificate.separator
    assert z is not None
    rng = random.Random(seed)

    probes: list[Graph] = []
    columns: list[list[int]] = []
    for cand in _probe_candidates(rng):
        col = [hom(c, cand) for c in basis]
        if not any(col):
            continue
        if rank([list(c) for c in columns] + [col]) > len(columns):
            probes.append(cand)
            columns.append(col)
        if len(probes) == len(basis):
            break
    if len(probes) < len(basis):
        raise ProbeSearchError("could not assemble an invertible probe family")
    matrix = [[columns[j][i] for j in range(len(probes))] for i in range(len(basis))]
    if det_int(matrix) == 0:
        raise ProbeSearchError("probe family hom matrix is singular")

    s = [Fraction(1)] * len(probes)
    for attempt in range(3):
        p = mat_vec(matrix, s)
        assert all(x > 0 for x in p)
        for i in range(65):
            t = 1 + Fraction(1, 2**i)
            p_prime = [t**zc * pc for zc, pc in zip(z, p)]
            s_prime = solve_square(matrix, p_prime)
            if all(x > 0 for x in s_prime):
                return _assemble_witness(spec, k, decision, probes, s, s_prime, t)
        s = [Fraction(rng.randint(1, 9)) for _ in probes]
    raise ProbeSearchError("no positive perturbed recipe found within the retry budget")


def _assemble_witness(spec, k, decision, probes, s, s_prime, t) -> WitnessPair:
    lam = lcm_denominators(list(s) + list(s_prime))
    counts = [int(lam * x) for x in s]
    counts_prime = [int(lam * x) for x in s_prime]
    h = disjoint_union_all(
        g for g, c in zip(probes, counts) for _ in range(c)
    )
    h_prime = disjoint_union_all(
        g for g, c in zip(probes, counts_prime) for _ in range(c)
    )
    if len(decision.restricted.generators) < len(spec.generators):
        h = categorical_product(h, k)
        h_prime = categorical_product(h_prime, k)
    for g in spec.generators:
        if hom(g, h) != hom(g, h_prime):
            raise AssertionError("witness postcondition failed on a generator")
    if hom(k, h) == hom(k, h_prime):
        raise AssertionError("witness postcondition failed: k does not distinguish")
    return WitnessPair(h, h_prime, tuple(probes), t, lam)
