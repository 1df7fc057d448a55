"""Multigraph core: construction, traversal, spanning trees, serialization."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covertower import (
    MultiGraph,
    ValidationError,
    build_graph,
    degree,
    is_connected,
    metric_summary,
    rank_pi1,
    spanning_tree,
)
from covertower.errors import SpecMismatchError

from conftest import bouquet, cycle, figure8, path, theta


def multigraphs(max_vertices: int = 7, max_edges: int = 12):
    """Random small multigraphs with loops and parallel edges."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_vertices))
        edges = draw(
            st.lists(
                st.tuples(
                    st.integers(min_value=0, max_value=n - 1),
                    st.integers(min_value=0, max_value=n - 1),
                ),
                max_size=max_edges,
            )
        )
        return build_graph(n, edges)

    return build()


class TestBuildGraph:
    def test_figure8(self):
        g = figure8()
        assert g.num_vertices == 1
        assert g.num_edges == 2
        assert g.edges == ((0, 0), (0, 0))

    def test_empty(self):
        g = build_graph(0, [])
        assert g.num_vertices == 0
        assert g.num_edges == 0

    def test_theta(self):
        g = theta()
        assert g.num_vertices == 2
        assert g.edges == ((0, 1), (0, 1), (0, 1))

    def test_canonicalizes_orientation(self):
        g = build_graph(3, [(2, 0), (1, 2)])
        assert g.edges == ((0, 2), (1, 2))

    def test_endpoint_out_of_range_names_edge(self):
        with pytest.raises(ValidationError, match="edge 1"):
            build_graph(2, [(0, 1), (0, 5)])

    def test_negative_endpoint_rejected(self):
        with pytest.raises(ValidationError, match="edge 0"):
            build_graph(2, [(-1, 0)])

    def test_labels_length_checked(self):
        with pytest.raises(ValidationError):
            build_graph(2, [(0, 1)], labels=["a"])


class TestDegree:
    def test_figure8_loop_counts_twice(self):
        assert degree(figure8(), 0) == 4

    def test_theta(self):
        assert degree(theta(), 0) == 3
        assert degree(theta(), 1) == 3

    def test_path_endpoint(self):
        assert degree(path(2), 0) == 1

    def test_invalid_vertex(self):
        with pytest.raises(ValidationError):
            degree(path(2), 2)


class TestSpanningTree:
    def test_figure8_all_cotree(self):
        spec = spanning_tree(figure8())
        assert spec.tree_edges == frozenset()
        assert spec.cotree_edges == ((0, 0, 0), (1, 0, 0))
        assert spec.rank == 2

    def test_triangle(self):
        spec = spanning_tree(cycle(3))
        assert spec.tree_edges == frozenset({0, 2})
        assert spec.cotree_edges == ((1, 1, 2),)
        assert spec.rank == 1

    def test_tree_has_empty_cotree(self):
        spec = spanning_tree(path(5))
        assert spec.cotree_edges == ()
        assert spec.tree_edges == frozenset(range(4))

    def test_cotree_directed_low_to_high(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 1)])
        spec = spanning_tree(g)
        for _, tail, head in spec.cotree_edges:
            assert tail <= head

    def test_validate_for_accepts_own_graph(self):
        g = theta()
        spanning_tree(g).validate_for(g)

    def test_validate_for_rejects_foreign_graph(self):
        with pytest.raises(SpecMismatchError):
            spanning_tree(theta()).validate_for(cycle(3))

    @given(multigraphs())
    @settings(max_examples=60, deadline=None)
    def test_idempotent_and_rank_consistent(self, g):
        first = spanning_tree(g)
        second = spanning_tree(g)
        assert first == second
        assert first.rank == rank_pi1(g)
        first.validate_for(g)


class TestConnectivityAndMetrics:
    def test_figure8_connected_diameter0(self):
        assert is_connected(figure8())
        assert metric_summary(figure8()).diameter == 0

    def test_two_isolated_vertices(self):
        g = build_graph(2, [])
        assert not is_connected(g)
        summary = metric_summary(g)
        assert summary.component_count == 2
        assert summary.diameter is None

    def test_four_cycle_diameter(self):
        assert metric_summary(cycle(4)).diameter == 2

    def test_degree_sequence_sorted(self):
        g = build_graph(3, [(0, 1), (0, 1), (0, 2)])
        assert metric_summary(g).degree_sequence == (1, 2, 3)


class TestRank:
    def test_figure8_is_rank_two(self):
        assert rank_pi1(figure8()) == 2

    def test_doubled_four_cycle_is_rank_five(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)] * 2)
        assert rank_pi1(g) == 5  # 8 - 4 + 1, matching #V + 1 on tower levels

    def test_trees_have_rank_zero(self):
        assert rank_pi1(path(6)) == 0

    def test_bouquet_rank_is_loop_count(self):
        assert rank_pi1(bouquet(5)) == 5


class TestProperties:
    @given(multigraphs())
    @settings(max_examples=60, deadline=None)
    def test_handshake(self, g):
        assert sum(g.degrees) == 2 * g.num_edges

    @given(multigraphs())
    @settings(max_examples=60, deadline=None)
    def test_json_roundtrip(self, g):
        assert MultiGraph.from_json(g.to_json()) == g

    def test_json_roundtrip_with_labels(self):
        g = build_graph(2, [(0, 1)], labels=["x", "y"])
        assert MultiGraph.from_json(g.to_json()) == g

    def test_json_deterministic(self):
        g = theta()
        assert g.to_json() == g.to_json()

    def test_json_schema_field(self):
        doc = theta().to_json_dict()
        assert doc["schema"] == 1
        assert doc["vertices"] == 2
        assert doc["edges"] == [[0, 1], [0, 1], [0, 1]]

    def test_json_rejects_bad_schema(self):
        with pytest.raises(ValidationError):
            MultiGraph.from_json('{"schema": 9, "vertices": 1, "edges": []}')

    def test_json_accepts_missing_schema(self):
        g = MultiGraph.from_json('{"vertices": 2, "edges": [[1, 0]]}')
        assert g.edges == ((0, 1),)

    def test_dot_export(self):
        dot = figure8().to_dot()
        assert dot == "graph G {\n  0;\n  0 -- 0;\n  0 -- 0;\n}\n"

    def test_dot_with_labels(self):
        g = build_graph(2, [(0, 1)], labels=['a"b', "c"])
        dot = g.to_dot()
        assert '0 [label="a\\"b"];' in dot
        assert "0 -- 1;" in dot
