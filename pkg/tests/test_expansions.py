import random
from fractions import Fraction

import pytest

from homlab.canon import canonical_form
from homlab.expansions import (
    LinComb,
    expand_complement,
    expand_disjoint_union,
    expand_full_complement,
    expand_lexicographic,
    expand_looped,
    group_by_isomorphism,
    inclusion_exclusion,
    verify_identity,
)
from homlab.graphs import (
    Graph,
    all_graphs_with_loops,
    all_simple_graphs,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    random_simple_graph,
)
from homlab.homcount import hom
from oracles import simple_iso_class_reps

K1 = complete_graph(1)
K2 = complete_graph(2)
K3 = complete_graph(3)
P3 = path_graph(3)
LOOP = Graph(1, [(0, 0)])


def as_coeff_dict(lincomb):
    return {canonical_form(t): c for t, c in lincomb.terms}


class TestDisjointUnionExpansion:
    def test_single_vertex(self):
        terms = expand_disjoint_union(K1).terms
        assert len(terms) == 2
        keys = {(l.n, r.n) for l, r, _ in terms}
        assert keys == {(1, 0), (0, 1)}
        g, h = cycle_graph(4), complete_graph(3)
        assert expand_disjoint_union(K1).evaluate(g, h) == g.n + h.n

    def test_one_component_two_subsets(self):
        assert len(expand_disjoint_union(K3).terms) == 2

    def test_two_k2_square(self):
        f = disjoint_union(K2, K2)
        expansion = expand_disjoint_union(f)
        assert len(expansion.terms) == 4
        g, h = cycle_graph(5), path_graph(4)
        assert expansion.evaluate(g, h) == (2 * g.num_edges + 2 * h.num_edges) ** 2


class TestFullComplementExpansion:
    def test_no_edges_single_term(self):
        assert expand_full_complement(K1).terms == ((K1, Fraction(1)),)

    def test_k2_two_terms(self):
        d = as_coeff_dict(expand_full_complement(K2))
        assert d == {canonical_form(K2): -1, canonical_form(Graph(2)): 1}

    def test_k2_closed_form(self):
        for g in all_graphs_with_loops(3):
            assert expand_full_complement(K2).evaluate(g) == g.n * g.n - hom(K2, g)

    def test_k3_term_count_and_signs(self):
        lc = expand_full_complement(K3)
        assert len(lc.terms) == 8
        assert sum(1 for _, c in lc.terms if c == -1) == 4  # odd-size edge subsets

    def test_verifies_on_loop_bearing_targets(self):
        for g in all_graphs_with_loops(3):
            assert verify_identity("full_complement", K3, g)


class TestLoopedExpansion:
    def test_k1_k2(self):
        assert expand_looped(K1).terms == ((K1, Fraction(1)),)
        # contracting the sole edge leaves no residual edge, hence no loop:
        # hom(K2, G with loops added) = hom(K2, G) + hom(K1, G)
        d = as_coeff_dict(expand_looped(K2).grouped())
        assert d == {canonical_form(K2): 1, canonical_form(K1): 1}
        for g in all_simple_graphs(3):
            assert hom(K2, Graph(g.n, list(g.edges) + [(v, v) for v in range(g.n)])) \
                == hom(K2, g) + hom(K1, g)

    def test_k3_grouped_coefficients(self):
        d = as_coeff_dict(expand_looped(K3).grouped())
        assert d == {
            canonical_form(K3): 1,
            canonical_form(K2): 3,
            canonical_form(LOOP): 3,
            canonical_form(K1): 1,
        }

    def test_diagonal_coefficient_is_one(self):
        # F itself only arises from the empty contraction set
        for n in range(6):
            for f in simple_iso_class_reps(n):
                grouped = expand_looped(f).grouped()
                assert grouped.coefficient_of(f) == 1


class TestComplementExpansion:
    def test_k1(self):
        assert expand_complement(K1).grouped().terms == ((K1, Fraction(1)),)

    def test_k2_grouped(self):
        d = as_coeff_dict(expand_complement(K2).grouped())
        assert d == {
            canonical_form(Graph(2)): 1,
            canonical_form(K2): -1,
            canonical_form(K1): -1,
        }

    def test_k2_closed_form(self):
        for g in all_simple_graphs(4):
            n = g.n
            assert expand_complement(K2).evaluate(g) == n * n - n - 2 * g.num_edges

    def test_k3_into_its_complement(self):
        assert expand_complement(K3).evaluate(K3) == 0

    def test_edge_deletion_coefficient_sign_and_nonzero(self):
        # coefficient of F minus one edge equals (-1)^(|E|-1) times the number
        # of edges whose deletion gives an isomorphic graph
        for n in range(2, 6):
            for f in simple_iso_class_reps(n):
                if not f.edges:
                    continue
                grouped = expand_complement(f).grouped()
                seen = set()
                for e in f.edges:
                    deleted = Graph(f.n, [x for x in f.edges if x != e])
                    key = canonical_form(deleted)
                    if key in seen:
                        continue
                    seen.add(key)
                    same = sum(
                        1
                        for e2 in f.edges
                        if canonical_form(Graph(f.n, [x for x in f.edges if x != e2]))
                        == key
                    )
                    coeff = grouped.coefficient_of(deleted)
                    assert coeff == Fraction(-1) ** (f.num_edges - 1) * same
                    assert coeff != 0


class TestLexicographicExpansion:
    def test_k1(self):
        terms = expand_lexicographic(K1).terms
        assert len(terms) == 1 and terms[0][0] == K1 and terms[0][1] == K1

    def test_k2_closed_form(self):
        expansion = expand_lexicographic(K2)
        assert len(expansion.terms) == 2
        g, h = path_graph(4), cycle_graph(5)
        expected = 2 * g.num_edges * h.n * h.n + g.n * 2 * h.num_edges
        assert expansion.evaluate(g, h) == expected

    def test_k3_bell_number_terms(self):
        assert len(expand_lexicographic(K3).terms) == 5


class TestGrouping:
    def test_merges_relabelings(self):
        other_k2 = Graph(2, [(0, 1)])
        lc = LinComb(((K2, Fraction(1)), (other_k2, Fraction(1))))
        assert lc.grouped().terms == ((K2, Fraction(2)),)

    def test_cancellation_drops_terms(self):
        lc = LinComb(((K2, Fraction(1)), (K2, Fraction(-1))))
        assert lc.grouped().terms == ()

    def test_group_by_isomorphism_alias(self):
        lc = LinComb(((K2, Fraction(1)), (K2, Fraction(2))))
        assert group_by_isomorphism(lc).terms == ((K2, Fraction(3)),)

    def test_grouping_preserves_evaluation(self):
        rng = random.Random(42)
        pool = [g for n in range(1, 5) for g in all_simple_graphs(n)]
        for _ in range(200):
            terms = tuple(
                (rng.choice(pool), Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
                for _ in range(rng.randint(0, 6))
            )
            lc = LinComb(terms)
            grouped = lc.grouped()
            for _ in range(5):
                g = random_simple_graph(rng, rng.randint(0, 4))
                assert lc.evaluate(g) == grouped.evaluate(g)

    def test_grouped_pairwise_non_isomorphic_nonzero(self):
        grouped = expand_complement(complete_graph(4)).grouped()
        keys = [canonical_form(t) for t, _ in grouped.terms]
        assert len(keys) == len(set(keys))
        assert all(c != 0 for _, c in grouped.terms)


class TestVerifyIdentity:
    @pytest.mark.parametrize("name", ["looped", "complement", "full_complement"])
    def test_single_identities_small(self, name):
        for f in [K1, K2, K3, P3]:
            for g in all_simple_graphs(3):
                assert verify_identity(name, f, g)

    @pytest.mark.parametrize("name", ["disjoint_union", "lexicographic"])
    def test_pair_identities_small(self, name):
        gs = [Graph(0), K1, K2, Graph(2)]
        for f in [K1, K3, disjoint_union(K2, K1)]:
            for g in gs:
                for h in gs:
                    assert verify_identity(name, f, g, h)

    def test_missing_h_rejected(self):
        with pytest.raises(ValueError):
            verify_identity("disjoint_union", K2, K2)

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError):
            verify_identity("nonsense", K2, K2)


class TestInclusionExclusion:
    def test_no_sets(self):
        assert inclusion_exclusion([], 5) == 5

    def test_one_set(self):
        assert inclusion_exclusion([0b110], 5) == 3

    def test_two_sets(self):
        assert inclusion_exclusion([0b0110, 0b1100], 4) == 1

    def test_rejects_overflow(self):
        with pytest.raises(ValueError):
            inclusion_exclusion([0b100], 2)

    def test_random_against_direct(self):
        rng = random.Random(3)
        for _ in range(200):
            size = rng.randint(0, 8)
            sets = [rng.randrange(1 << size) for _ in range(rng.randint(0, 4))]
            union = 0
            for s in sets:
                union |= s
            assert inclusion_exclusion(sets, size) == size - union.bit_count()
