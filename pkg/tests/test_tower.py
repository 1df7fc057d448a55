"""Tower iteration: growth bookkeeping, truncation, analysis, serialization."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import pytest

from covertower import (
    DisconnectedGraphError,
    ValidationError,
    build_graph,
    iterate_tower,
)
from covertower.tower import report_to_csv_text, report_to_json_dict

from conftest import cycle, figure8, path, theta


def symbolic_bouquet_counts(levels: int) -> list[tuple[int, int]]:
    """Independent recursion for the two-loop bouquet: V' = V * 2^(V+1)."""
    counts = [(1, 2)]
    for _ in range(levels):
        v, e = counts[-1]
        rank = e - v + 1
        counts.append((v * 2**rank, e * 2**rank))
    return counts


class TestFigure8Tower:
    def test_levels_2_counts(self):
        report = iterate_tower(figure8(), 2, 10**6, seed_description="figure8")
        assert [row.vertex_count for row in report.levels] == [1, 4, 128]
        assert [row.edge_count for row in report.levels] == [2, 8, 256]
        assert not report.truncated
        assert [row.rank for row in report.levels] == [2, 5, 129]

    def test_counts_match_symbolic_recursion(self):
        report = iterate_tower(figure8(), 2, 10**6)
        expected = symbolic_bouquet_counts(2)
        assert [
            (row.vertex_count, row.edge_count) for row in report.levels
        ] == expected

    def test_edge_count_twice_vertex_count(self):
        report = iterate_tower(figure8(), 2, 10**6)
        for row in report.levels:
            assert row.edge_count == 2 * row.vertex_count

    def test_levels_3_truncates_with_predicted_counts(self):
        report = iterate_tower(figure8(), 3, 10**6, seed_description="figure8")
        assert report.truncated
        assert report.truncated_level == 3
        predicted = report.levels[3]
        assert not predicted.constructed
        assert predicted.vertex_count == 128 * 2**129
        assert predicted.edge_count == 256 * 2**129
        assert predicted.vertex_count == symbolic_bouquet_counts(3)[3][0]
        assert predicted.lemma_bound == Fraction(2, 128)

    def test_lemma_bounds_sequence(self):
        report = iterate_tower(figure8(), 3, 10**6)
        bounds = [row.lemma_bound for row in report.levels]
        assert bounds == [None, Fraction(2), Fraction(1, 2), Fraction(1, 64)]

    def test_cheeger_values(self):
        report = iterate_tower(figure8(), 2, 10**6)
        level0, level1, level2 = report.levels
        assert level0.cheeger_value is None  # no bipartition of one vertex
        assert level1.cheeger_value == 2
        assert level1.cheeger_certified == "exact"
        assert level2.cheeger_certified == "upper_bound"
        assert level2.cheeger_value <= Fraction(1, 2)

    def test_lambda1_strictly_decreasing(self):
        report = iterate_tower(figure8(), 2, 10**6)
        lam1 = report.levels[1].lambda1_combinatorial
        lam2 = report.levels[2].lambda1_combinatorial
        assert lam1 == pytest.approx(4.0, abs=1e-9)
        assert lam2 < lam1 - 1e-9

    def test_growth_factor_is_two_to_rank(self):
        report = iterate_tower(figure8(), 3, 10**6)
        for prev, nxt in zip(report.levels, report.levels[1:]):
            factor = 2**prev.rank
            assert nxt.vertex_count == prev.vertex_count * factor
            assert nxt.edge_count == prev.edge_count * factor


class TestOtherSeeds:
    def test_triangle_tower_doubles_cycles(self):
        report = iterate_tower(cycle(3), 3, 10**6, seed_description="cycle:3")
        assert [row.vertex_count for row in report.levels] == [3, 6, 12, 24]
        assert [row.rank for row in report.levels] == [1, 1, 1, 1]
        for row in report.levels:
            assert row.edge_count == row.vertex_count  # cycles stay cycles

    def test_triangle_tower_lemma_tight_where_exact_known(self):
        report = iterate_tower(cycle(3), 3, 10**6)
        for row in report.levels[1:]:
            if row.cheeger_certified == "exact":
                assert row.cheeger_value == row.lemma_bound

    def test_theta_tower_one_step(self):
        report = iterate_tower(theta(), 1, 10**6, seed_description="theta")
        assert report.levels[1].vertex_count == 8  # 2 * 2^2
        assert report.levels[1].edge_count == 12
        assert report.levels[1].lemma_bound == Fraction(1)

    def test_tree_seed_never_grows(self):
        report = iterate_tower(path(3), 4, 100)
        assert [row.vertex_count for row in report.levels] == [3] * 5
        assert not report.truncated
        for row in report.levels[1:]:
            assert row.lemma_bound is None  # rank-0 covers carry no fiber cut

    def test_levels_zero_reports_seed_only(self):
        report = iterate_tower(figure8(), 0, 10**6)
        assert len(report.levels) == 1
        assert report.levels[0].vertex_count == 1

    def test_kinds_selects_lambda_columns(self):
        report = iterate_tower(figure8(), 1, 10**6, kinds=("combinatorial",))
        assert report.levels[1].lambda1_combinatorial == pytest.approx(4.0)
        assert report.levels[1].lambda1_normalized is None

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValidationError):
            iterate_tower(figure8(), 1, 10**6, kinds=("weighted",))


class TestValidation:
    def test_disconnected_seed_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            iterate_tower(build_graph(2, []), 1, 100)

    def test_empty_seed_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            iterate_tower(build_graph(0, []), 1, 100)

    def test_negative_levels_rejected(self):
        with pytest.raises(ValidationError):
            iterate_tower(figure8(), -1, 100)

    def test_nonpositive_cap_rejected(self):
        with pytest.raises(ValidationError):
            iterate_tower(figure8(), 1, 0)


class TestSerialization:
    def test_json_csv_numeric_consistency(self):
        report = iterate_tower(figure8(), 2, 10**6, seed_description="figure8")
        doc = report_to_json_dict(report)
        rows = list(csv.DictReader(io.StringIO(report_to_csv_text(report))))
        assert len(rows) == len(doc["levels"])
        for json_row, csv_row in zip(doc["levels"], rows):
            for key, value in json_row.items():
                cell = csv_row[key]
                if value is None:
                    assert cell == ""
                elif isinstance(value, bool):
                    assert cell == ("true" if value else "false")
                elif isinstance(value, float):
                    assert float(cell) == value
                else:
                    assert str(value) == cell

    def test_big_integers_survive_json(self):
        report = iterate_tower(figure8(), 3, 10**6)
        text = json.dumps(report_to_json_dict(report))
        assert json.loads(text)["levels"][3]["vertices"] == 128 * 2**129

    def test_timings_excluded_by_default(self):
        report = iterate_tower(figure8(), 1, 10**6)
        doc = report_to_json_dict(report)
        assert all("elapsed_seconds" not in level for level in doc["levels"])
        doc_with = report_to_json_dict(report, include_timings=True)
        assert all("elapsed_seconds" in level for level in doc_with["levels"])

    def test_repeated_runs_identical(self):
        first = iterate_tower(figure8(), 2, 10**6, seed_description="figure8")
        second = iterate_tower(figure8(), 2, 10**6, seed_description="figure8")
        assert json.dumps(report_to_json_dict(first)) == json.dumps(
            report_to_json_dict(second)
        )
        assert report_to_csv_text(first) == report_to_csv_text(second)

    def test_fraction_rendering(self):
        report = iterate_tower(figure8(), 2, 10**6)
        doc = report_to_json_dict(report)
        assert doc["levels"][1]["lemma_bound"] == "2"
        assert doc["levels"][2]["lemma_bound"] == "1/2"
