"""
Tests for the benchmark harness.
"""

import pytest

from secorder.errors import UsageError
from secorder.services.bench_service import parse_range, run_bench


class TestParseRange:
    """Test suite for --n and --c values."""

    def test_forms(self):
        """Test that single values, ranges and lists parse."""
        assert parse_range('5') == [5]
        assert parse_range('2-4') == [2, 3, 4]
        assert parse_range('2,3,8') == [2, 3, 8]
        assert parse_range('1-2,6') == [1, 2, 6]

    def test_errors(self):
        """Test that empty, reversed and non-positive ranges are rejected."""
        for text in ('', 'a', '4-2', '0', '1,-3'):
            with pytest.raises(UsageError):
                parse_range(text)


class TestRunBench:
    """Test suite for seeded benchmark runs."""

    def test_agreement(self):
        """Test that the fast check agrees with the oracle on every compared trial."""
        report = run_bench([2, 3], [3], trials=50, seed=7)
        assert [(row.n, row.c) for row in report.rows] == [(2, 3), (3, 3)]
        for row in report.rows:
            assert row.trials == 50
            assert row.agreements == row.compared == 50
            assert row.status == 'ok'
        assert not report.has_disagreement

    def test_deterministic(self):
        """Test that the same seed reproduces the same agreement counts."""
        first = run_bench([3], [4], trials=20, seed=11).to_dict()['rows'][0]
        second = run_bench([3], [4], trials=20, seed=11).to_dict()['rows'][0]
        assert first['agreements'] == second['agreements']
        assert first['compared'] == second['compared']

    def test_cap_skips_oracle(self):
        """Test that settings over the product cap skip the oracle."""
        report = run_bench([4], [6], trials=10, seed=1, cap=0)
        row = report.rows[0]
        assert row.oracle_skipped == 10
        assert row.compared == 0
        assert row.status == 'oracle-skipped'

    def test_zero_trials(self):
        """Test that zero trials give an empty report."""
        assert run_bench([3], [3], trials=0, seed=0).rows == []

    def test_negative_trials(self):
        """Test that a negative trial count is a usage error."""
        with pytest.raises(UsageError):
            run_bench([3], [3], trials=-1)
