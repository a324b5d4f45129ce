"""The package's acceptance checks, runnable from tests or ``homlab selftest``.

Every check is exact (integer or rational equality, tolerance zero); checks
with a stated runtime budget fail when they exceed it.  Each criterion's
oracle is independent of the code path it validates: direct hom counts
against symbolic expansions, adjacency-power traces against the decision
procedure, and so on.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional

from .canon import canonical_form
from .classes import (
    cancellation_admits,
    cancellation_probe,
    hd_closed_check,
    homind_decide,
    in_closure,
    make_class_spec,
    witness_pair,
)
from .expansions import (
    IDENTITY_NAMES,
    expand_identity,
    identity_takes_pair,
)
from .fo import CountExists, And, Bottom, Edge, Eq, Exists, Forall, Not, Or, Top
from .fo import check_self_complementarity, default_corpus
from .graphs import (
    Graph,
    add_loops,
    all_simple_graphs,
    complement,
    complete_graph,
    contraction_quotient,
    cycle_graph,
    disjoint_union,
    disjoint_union_all,
    full_complement,
    lexicographic_product,
    path_graph,
    random_simple_graph,
    star_graph,
    triangle_set,
)
from .homcount import hom, hom_vector


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: Optional[float]


def _run(number: int, name: str, limit: Optional[float], body: Callable[[], str]) -> CriterionResult:
    start = time.perf_counter()
    try:
        detail = body()
        passed = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    seconds = time.perf_counter() - start
    if passed and limit is not None and seconds > limit:
        passed = False
        detail += f" [exceeded {limit:.0f}s budget: {seconds:.1f}s]"
    return CriterionResult(number, name, passed, detail, seconds, limit)


_K1 = complete_graph(1)
_K2 = complete_graph(2)
_K3 = complete_graph(3)
_P3 = path_graph(3)
_K2_P3 = disjoint_union(_K2, _P3)
_K1_LOOP = Graph(1, [(0, 0)])


def criterion_1() -> CriterionResult:
    """Looped-target expansion of the triangle, confirmed on every small graph."""

    def body() -> str:
        from .expansions import expand_looped

        grouped = expand_looped(_K3).grouped()
        actual = {canonical_form(t): c for t, c in grouped.terms}
        expected = {
            canonical_form(_K3): 1,
            canonical_form(_K2): 3,
            canonical_form(_K1_LOOP): 3,
            canonical_form(_K1): 1,
        }
        assert actual == expected, f"grouped triangle expansion wrong: {grouped.terms}"
        checked = 0
        for n in range(7):
            for g in all_simple_graphs(n):
                lhs = hom(_K3, add_loops(g))
                rhs = hom(_K3, g) + 3 * hom(_K2, g) + hom(_K1, g)
                assert lhs == rhs, f"triangle looped identity fails on {g!r}"
                checked += 1
        return f"coefficients 1,3,3,1 and {checked} graphs checked"

    return _run(1, "looped triangle expansion", 5.0, body)


def _identity_lhs(name: str, f: Graph, g: Graph, h: Optional[Graph]) -> int:
    if name == "disjoint_union":
        return hom(f, disjoint_union(g, h))
    if name == "lexicographic":
        return hom(f, lexicographic_product(g, h))
    if name == "full_complement":
        return hom(f, full_complement(g))
    if name == "looped":
        return hom(f, add_loops(g))
    return hom(f, complement(g))


def criterion_2() -> CriterionResult:
    """All five expansion identities, exhaustively small plus 500 random cases."""

    def body() -> str:
        checked = 0
        small_f = [g for n in range(5) for g in all_simple_graphs(n)]
        small_gh = [g for n in range(4) for g in all_simple_graphs(n)]
        for name in IDENTITY_NAMES:
            for f in small_f:
                expansion = expand_identity(name, f).grouped()
                if identity_takes_pair(name):
                    for g in small_gh:
                        for h in small_gh:
                            assert _identity_lhs(name, f, g, h) == expansion.evaluate(
                                g, h
                            ), f"{name} fails on F={f!r} G={g!r} H={h!r}"
                            checked += 1
                else:
                    for g in small_gh:
                        assert _identity_lhs(name, f, g, None) == expansion.evaluate(
                            g
                        ), f"{name} fails on F={f!r} G={g!r}"
                        checked += 1
        rng = random.Random(271828)
        for name in IDENTITY_NAMES:
            for _ in range(100):
                f = random_simple_graph(rng, rng.randint(1, 5))
                g = random_simple_graph(rng, rng.randint(1, 4))
                expansion = expand_identity(name, f).grouped()
                if identity_takes_pair(name):
                    h = random_simple_graph(rng, rng.randint(1, 4))
                    assert _identity_lhs(name, f, g, h) == expansion.evaluate(g, h)
                else:
                    assert _identity_lhs(name, f, g, None) == expansion.evaluate(g)
                checked += 1
        return f"{checked} instances, zero mismatches"

    return _run(2, "expansion identity suites", 120.0, body)


def criterion_3() -> CriterionResult:
    """Triangle/contraction edge-count identity on every edge, n <= 6."""

    def body() -> str:
        checked = 0
        for n in range(2, 7):
            for g in all_simple_graphs(n):
                for e in g.edges:
                    lhs = len(triangle_set(g, e))
                    rhs = g.num_edges - contraction_quotient(g, [e]).num_edges - 1
                    assert lhs == rhs, f"triangle identity fails on {g!r} edge {e}"
                    checked += 1
        return f"{checked} edges checked"

    return _run(3, "triangle contraction identity", None, body)


def criterion_4() -> CriterionResult:
    """Closedness checks on the two-component example family."""

    def body() -> str:
        spec_a = make_class_spec([_K2_P3], union_closed=True)
        verdict_a = hd_closed_check(spec_a, bound=3)
        assert verdict_a.status == "closed", f"(a) expected closed, got {verdict_a}"

        spec_b = make_class_spec([_K2_P3, _K2], union_closed=True)
        verdict_b = hd_closed_check(spec_b, bound=3)
        assert verdict_b.status == "violation", f"(b) expected violation, got {verdict_b}"
        assert canonical_form(verdict_b.witness) == canonical_form(_P3), (
            f"(b) expected the path witness, got {verdict_b.witness!r}"
        )

        f3 = make_class_spec(
            [
                disjoint_union_all([_K2] * a + [_P3] * b)
                for a in range(1, 4)
                for b in range(1, a + 1)
            ],
            union_closed=True,
        )
        f4 = make_class_spec(
            [
                disjoint_union_all([_K2] * a + [_P3] * b)
                for b in range(1, 4)
                for a in range(1, b + 1)
            ],
            union_closed=True,
        )
        agree = 0
        for a, b in product(range(4), repeat=2):
            if a == b == 0:
                continue
            k = disjoint_union_all([_K2] * a + [_P3] * b)
            d3 = in_closure(f3, k).member
            d4 = in_closure(f4, k).member
            assert d3 == d4, f"(c) closures disagree on {a}*K2+{b}*P3"
            if a >= 1 and b >= 1:
                assert d3, f"(c) {a}*K2+{b}*P3 must lie in both closures"
            agree += 1
        return f"(a) closed, (b) violation at the 3-path, (c) {agree} candidates agree"

    return _run(4, "closedness example family", 30.0, body)


def criterion_5() -> CriterionResult:
    """Witness pair for the non-member edge, re-verified and seed-stable."""

    def body() -> str:
        spec = make_class_spec([_K2_P3], union_closed=True)
        w = witness_pair(spec, _K2, seed=11)
        left = hom(_K2_P3, w.h)
        right = hom(_K2_P3, w.h_prime)
        assert left == right, "witness pair must agree on the generator"
        assert hom(_K2, w.h) != hom(_K2, w.h_prime), "witness pair must split on K2"
        again = witness_pair(spec, _K2, seed=11)
        assert again.h == w.h and again.h_prime == w.h_prime, "seed must reproduce"
        return (
            f"|V|={w.h.n}/{w.h_prime.n}, generator count {left}, "
            f"hom(K2,-): {hom(_K2, w.h)} vs {hom(_K2, w.h_prime)}"
        )

    return _run(5, "witness generation", 60.0, body)


def _adjacency_matrix(g: Graph) -> list[list[int]]:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] += 1
        if u != v:
            a[v][u] += 1
    return a


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [
        [sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)
    ]


def _trace_power(g: Graph, k: int) -> int:
    a = _adjacency_matrix(g)
    m = a
    for _ in range(k - 1):
        m = _mat_mul(m, a)
    return sum(m[i][i] for i in range(g.n))


def criterion_6() -> CriterionResult:
    """Cycle-count equivalence of the 4-star and the square plus a point."""

    def body() -> str:
        cycles = [cycle_graph(k) for k in range(3, 9)]
        spec = make_class_spec(cycles, union_closed=False)
        g = star_graph(4)
        h = disjoint_union(cycle_graph(4), _K1)
        decision = homind_decide(spec, g, h)
        assert decision.equivalent, f"expected equivalence, got {decision}"
        for k in range(3, 9):
            tg, th = _trace_power(g, k), _trace_power(h, k)
            assert tg == th, f"trace oracle splits at k={k}"
            assert hom(cycle_graph(k), g) == tg, f"hom/trace mismatch at k={k}"
        return "equivalent over the six cycle lengths, trace oracle agrees"

    return _run(6, "cycle indistinguishability decision", 5.0, body)


def criterion_7() -> CriterionResult:
    """Complement-transform semantics over the whole built-in corpus."""

    def body() -> str:
        corpus = default_corpus()
        assert len(corpus) == 20
        kinds = {type(node) for phi in corpus for node in _walk(phi)}
        for required in (Bottom, Top, Eq, Edge, Not, And, Or, Exists, Forall, CountExists):
            assert required in kinds, f"corpus misses constructor {required.__name__}"
        report = check_self_complementarity(corpus, max_n=4)
        assert report.passed, f"counterexample: {report.counterexample}"
        return f"{report.checks} evaluations, zero counterexamples"

    return _run(7, "logic complement transform", 60.0, body)


def _walk(phi):
    yield phi
    match phi:
        case Not(body) | Exists(_, body) | Forall(_, body) | CountExists(_, _, body):
            yield from _walk(body)
        case And(l, r) | Or(l, r):
            yield from _walk(l)
            yield from _walk(r)
        case _:
            pass


_CANCELLATION_CASES = [
    # (generators, union_closed, K, expected admits)
    ([_K2, _K3], True, _K2, False),
    ([_K2, _K3], True, _K3, True),
    ([cycle_graph(5), cycle_graph(7)], False, _K3, True),
    ([_K3], False, _K2, False),
    ([cycle_graph(6)], False, _K2, True),
    ([cycle_graph(5)], False, _K2, False),
    ([_K1], False, _K1, True),
    ([_P3, _K2_P3], True, _K2, True),
    ([complete_graph(4)], False, _K3, False),
    ([disjoint_union(_K2, _K3)], False, cycle_graph(5), False),
]


def criterion_8() -> CriterionResult:
    """Colourability criterion versus the product-equivalence probe."""

    def body() -> str:
        disagreements = 0
        for i, (gens, union_closed, k, expected) in enumerate(_CANCELLATION_CASES):
            spec = make_class_spec(gens, union_closed)
            admits = cancellation_admits(spec, k)
            assert admits == expected, f"case {i}: admits={admits}, expected {expected}"
            report = cancellation_probe(spec, k, trials=100, size=5, seed=1000 + i)
            if not report.passed:
                disagreements += 1
        assert disagreements == 0, f"{disagreements} probe counterexamples"
        return f"{len(_CANCELLATION_CASES)} specs x 100 trials, zero disagreements"

    return _run(8, "cancellation laws", None, body)


def criterion_9() -> CriterionResult:
    """Hom-vector equality over a minor-closed family forces equal order."""

    def body() -> str:
        gens = [
            _K1,
            disjoint_union(_K1, _K1),
            _K2,
            disjoint_union_all([_K1] * 3),
            disjoint_union(_K2, _K1),
            _P3,
        ]
        spec = make_class_spec(gens, union_closed=True)
        rng = random.Random(314159)
        equal_vector_pairs = 0
        for i in range(200):
            g = random_simple_graph(rng, rng.randint(1, 5))
            if i % 2 == 0:
                perm = list(range(g.n))
                rng.shuffle(perm)
                h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
            else:
                h = random_simple_graph(rng, rng.randint(1, 5))
            if hom_vector(spec.generators, g) == hom_vector(spec.generators, h):
                equal_vector_pairs += 1
                assert g.n == h.n, f"equal vectors but |V| {g.n} != {h.n}"
        assert equal_vector_pairs >= 100, "sampling produced too few equal-vector pairs"
        return f"{equal_vector_pairs}/200 pairs had equal vectors, all with equal order"

    return _run(9, "order determination sanity", None, body)


ALL_CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
)


def run_all() -> list[CriterionResult]:
    return [c() for c in ALL_CRITERIA]
