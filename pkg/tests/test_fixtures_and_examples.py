import pytest

from corecorona.fixtures import (
    EXPECTED,
    FixtureValidationError,
    fixture,
    fixture_mismatches,
    fixture_names,
    validate_fixtures,
)
from corecorona.graphs import Graph
from corecorona.worked_examples import format_table, run_worked_examples


def unbroken_path_fig1() -> Graph:
    """The straight-line reading of the fig1 drawing (extra v9-v10 edge)."""
    edges = [
        (1, 5), (2, 5), (3, 5), (3, 4), (4, 5), (5, 6), (5, 7), (7, 8),
        (8, 9), (6, 9), (9, 10), (10, 11), (11, 12), (11, 13), (12, 13),
    ]
    return Graph.from_edges(
        13, [(u - 1, v - 1) for u, v in edges], labels=[f"v{i}" for i in range(1, 14)]
    )


class TestFixtureValidation:
    def test_all_bundled_fixtures_validate(self):
        validate_fixtures()
        for name in fixture_names():
            assert fixture_mismatches(name) == []

    def test_expected_tables_cover_documented_values(self):
        assert EXPECTED["fig1"]["core"] == ("v1", "v2", "v10")
        assert EXPECTED["g2"]["corona"] == ("u2", "u4", "u6", "u7")

    def test_unbroken_path_variant_mismatch_is_surfaced(self):
        diffs = fixture_mismatches("fig1", unbroken_path_fig1())
        assert len(diffs) == 1
        assert "core" in diffs[0] and "v6" in diffs[0]

    def test_validate_raises_with_full_diff(self, monkeypatch):
        import corecorona.fixtures as fx

        monkeypatch.setitem(fx._FIXTURES, "fig1", unbroken_path_fig1)
        with pytest.raises(FixtureValidationError, match="core"):
            validate_fixtures()


class TestWorkedExamples:
    def test_all_rows_pass(self):
        rows, ok = run_worked_examples()
        assert ok and all(r.ok for r in rows)
        assert len(rows) == 12

    def test_table_format(self):
        rows, _ = run_worked_examples()
        table = format_table(rows)
        assert table.count("\n") == len(rows) - 1
        assert "PASS" in table

    def test_perturbed_fixture_reported(self):
        rows, ok = run_worked_examples(fixture_override={"fig1": unbroken_path_fig1()})
        assert not ok
        failing = [r for r in rows if not r.ok]
        assert any("fig1" in r.name and "core" in r.computed for r in failing)
        assert "FAIL" in format_table(rows)
