import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from homlab.errors import GraphParseError
from homlab.graphs import (
    Graph,
    VertexPartition,
    add_loops,
    all_graphs_with_loops,
    all_simple_graphs,
    categorical_product,
    complement,
    complete_graph,
    connected_components,
    connected_partitions,
    contraction_quotient,
    cycle_graph,
    disjoint_union,
    disjoint_union_all,
    full_complement,
    lexicographic_product,
    parse_graph,
    path_graph,
    quotient,
    render_graph,
    set_partitions,
    star_graph,
    triangle_set,
)
from oracles import isomorphic_by_permutation

K1 = complete_graph(1)
K2 = complete_graph(2)
K3 = complete_graph(3)
P3 = path_graph(3)
LOOP = Graph(1, [(0, 0)])


class TestParse:
    def test_triangle(self):
        assert parse_graph("3 0-1 1-2 0-2") == K3

    def test_single_loop(self):
        assert parse_graph("1 0-0") == LOOP

    def test_isolated_vertices(self):
        assert parse_graph("2") == Graph(2)

    def test_any_edge_order_accepted(self):
        assert parse_graph("4 0-1 1-2 2-3 0-3") == cycle_graph(4)

    def test_render_sorts_edges(self):
        assert render_graph(cycle_graph(4)) == "4 0-1 0-3 1-2 2-3"

    def test_roundtrip_is_identity_on_canonical_text(self):
        for g in [K3, P3, LOOP, Graph(0), Graph(5, [(0, 4), (1, 1)])]:
            assert parse_graph(render_graph(g)) == g

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "vertex count"),
            ("x 0-1", "vertex count"),
            ("3 0-1 junk", "edge token"),
            ("3 1-0", "u <= v"),
            ("3 0-3", "out of range"),
            ("3 0-1 0-1", "duplicate"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(GraphParseError) as exc:
            parse_graph(text)
        assert fragment in str(exc.value)

    def test_error_reports_position(self):
        with pytest.raises(GraphParseError) as exc:
            parse_graph("3 0-1 9-9")
        assert exc.value.position == 6

    @given(graphs(max_n=7, loops=True))
    @settings(max_examples=150)
    def test_roundtrip_property(self, g):
        assert parse_graph(render_graph(g)) == g


class TestConstructions:
    def test_disjoint_union(self):
        assert disjoint_union(K1, K1) == Graph(2)
        assert disjoint_union(K2, K2) == Graph(4, [(0, 1), (2, 3)])
        assert disjoint_union(K3, LOOP) == Graph(4, [(0, 1), (0, 2), (1, 2), (3, 3)])

    def test_categorical_product_k2_k2(self):
        # row-major: (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
        assert categorical_product(K2, K2) == Graph(4, [(0, 3), (1, 2)])

    def test_categorical_product_unit_loop(self):
        for g in [K3, P3, Graph(3, [(0, 0), (1, 2)])]:
            assert categorical_product(g, LOOP) == g

    def test_categorical_product_k3_k2_is_c6(self):
        assert isomorphic_by_permutation(categorical_product(K3, K2), cycle_graph(6))

    def test_lexicographic_units(self):
        assert isomorphic_by_permutation(lexicographic_product(K2, K1), K2)
        assert lexicographic_product(K1, P3) == P3

    def test_lexicographic_k2_2k1_is_c4(self):
        assert isomorphic_by_permutation(
            lexicographic_product(K2, Graph(2)), cycle_graph(4)
        )

    def test_lexicographic_rejects_loops(self):
        with pytest.raises(ValueError):
            lexicographic_product(LOOP, K2)
        with pytest.raises(ValueError):
            lexicographic_product(K2, LOOP)

    def test_complement(self):
        assert complement(K3) == Graph(3)
        assert complement(Graph(2)) == K2
        assert complement(P3) == Graph(3, [(0, 2)])
        with pytest.raises(ValueError):
            complement(LOOP)

    def test_full_complement(self):
        assert full_complement(K1) == LOOP
        assert full_complement(LOOP) == K1
        assert full_complement(K2) == Graph(2, [(0, 0), (1, 1)])

    def test_add_loops(self):
        assert add_loops(K1) == LOOP
        assert add_loops(Graph(2)) == Graph(2, [(0, 0), (1, 1)])
        assert full_complement(add_loops(K3)) == complement(K3)
        with pytest.raises(ValueError):
            add_loops(LOOP)

    def test_complement_involution_exhaustive(self):
        for n in range(6):
            for g in all_simple_graphs(n):
                assert complement(complement(g)) == g

    def test_full_complement_involution_exhaustive(self):
        for n in range(5):
            for g in all_graphs_with_loops(n):
                assert full_complement(full_complement(g)) == g

    def test_full_complement_loops_vs_complement(self):
        # agreement on labeled graphs, exhaustively small plus sampled n=6
        for n in range(6):
            for g in all_simple_graphs(n):
                assert full_complement(add_loops(g)) == complement(g)
        rng = random.Random(7)
        from homlab.graphs import random_simple_graph

        for _ in range(200):
            g = random_simple_graph(rng, 6)
            assert full_complement(add_loops(g)) == complement(g)


class TestQuotients:
    def test_quotient_discrete_is_identity(self):
        for g in [K3, P3, cycle_graph(5)]:
            assert quotient(g, VertexPartition.discrete(g.n)) == g

    def test_quotient_k3_merge_two(self):
        assert quotient(K3, VertexPartition(3, [[0, 1], [2]])) == K2

    def test_quotient_2k2_cross(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert quotient(g, VertexPartition(4, [[0, 2], [1, 3]])) == K2

    def test_quotient_never_emits_loops(self):
        assert quotient(K2, VertexPartition(2, [[0, 1]])) == K1

    def test_partition_validation(self):
        with pytest.raises(ValueError):
            VertexPartition(3, [[0, 1]])
        with pytest.raises(ValueError):
            VertexPartition(3, [[0, 1], [1, 2]])
        with pytest.raises(ValueError):
            VertexPartition(3, [[0, 1, 2], []])
        with pytest.raises(ValueError):
            VertexPartition(2, [[0, 5]])

    def test_contraction_quotient_examples(self):
        assert contraction_quotient(K3, [(0, 1), (1, 2)]) == LOOP
        assert contraction_quotient(K3, [(0, 1), (1, 2), (0, 2)]) == Graph(1)
        assert contraction_quotient(K3, [(0, 1)]) == K2

    def test_contraction_quotient_empty_set_is_identity(self):
        for n in range(6):
            for g in all_simple_graphs(n):
                assert contraction_quotient(g, []) == g

    def test_contraction_quotient_rejects_non_edges(self):
        with pytest.raises(ValueError):
            contraction_quotient(P3, [(0, 2)])

    def test_contraction_min_vertex_labels(self):
        # contracting 2-3 in the path 0-1-2-3 keeps labels 0,1,2
        g = path_graph(4)
        assert contraction_quotient(g, [(2, 3)]) == path_graph(3)


class TestComponents:
    def test_examples(self):
        comps = connected_components(disjoint_union(K3, K2))
        assert comps == [K3, K2]
        assert connected_components(Graph(3)) == [K1, K1, K1]
        assert connected_components(cycle_graph(6)) == [cycle_graph(6)]

    @given(graphs(max_n=7, loops=True))
    @settings(max_examples=150)
    def test_union_of_components_isomorphic(self, g):
        rebuilt = disjoint_union_all(connected_components(g))
        assert isomorphic_by_permutation(rebuilt, g)


class TestTriangleSet:
    def test_examples(self):
        assert triangle_set(K3, (0, 1)) == frozenset({2})
        assert triangle_set(K2, (0, 1)) == frozenset()
        assert triangle_set(complete_graph(4), (0, 1)) == frozenset({2, 3})

    def test_identity_against_contraction(self):
        k4 = complete_graph(4)
        assert len(triangle_set(k4, (0, 1))) == k4.num_edges - contraction_quotient(
            k4, [(0, 1)]
        ).num_edges - 1

    def test_rejects_non_edge(self):
        with pytest.raises(ValueError):
            triangle_set(P3, (0, 2))


class TestPartitionEnumeration:
    def test_bell_numbers(self):
        for n, bell in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)]:
            assert sum(1 for _ in set_partitions(n)) == bell

    def test_connected_partitions_examples(self):
        assert list(connected_partitions(Graph(2))) == [VertexPartition.discrete(2)]
        assert len(list(connected_partitions(K2))) == 2
        assert len(list(connected_partitions(K3))) == 5

    def test_connected_partitions_path(self):
        # blocks of a path must be intervals: 0|1|2, 01|2, 0|12, 012
        assert len(list(connected_partitions(P3))) == 4

    def test_no_duplicates(self):
        parts = list(connected_partitions(complete_graph(4)))
        assert len(parts) == len(set(parts)) == 15

    def test_blocks_connected(self):
        for part in connected_partitions(star_graph(3)):
            for block in part.blocks:
                sub = [e for e in star_graph(3).edges if set(e) <= block]
                if len(block) > 1:
                    assert sub  # any multi-vertex block of a star touches the hub
