"""Reproduction harness: registry, statuses, budgets, rendering."""

from __future__ import annotations

import json

import pytest

from ordo.report import (
    _BY_CLAIM,
    _REGISTRY,
    STATUS_FLAGGED,
    STATUS_MATCH,
    STATUS_MISMATCH,
    STATUS_SKIPPED,
    TIERS,
    Report,
    ReportEntry,
    _run_one,
    _selected_claims,
    render_table,
    reproduce_all,
)

FLAGGED_CLAIMS = {"martin linear form (3,2)", "cycle count formula (3,4)"}


class TestRegistry:
    def test_claims_unique_and_tiered(self):
        claims = [claim for claim, _, _, _ in _REGISTRY]
        assert len(claims) == len(set(claims))
        assert all(tier in TIERS for _, tier, _, _ in _REGISTRY)
        assert set(claims) == set(_BY_CLAIM)

    def test_tiers_nest(self):
        quick = _selected_claims("quick")
        default = _selected_claims("default")
        long_ = _selected_claims("long")
        assert set(quick) <= set(default) <= set(long_)
        assert len(long_) == len(_REGISTRY)

    def test_flagged_entries(self):
        flagged = {claim for claim, _, f, _ in _REGISTRY if f}
        assert flagged == FLAGGED_CLAIMS
        for claim in FLAGGED_CLAIMS:
            assert _BY_CLAIM[claim][0] == "quick"


class TestRunOne:
    def test_matching_entry(self):
        entry = _run_one("martin linear form (2,3)", seed=0)
        assert entry.status == STATUS_MATCH
        assert entry.expected == entry.computed == "0001110100"
        assert entry.runtime_seconds >= 0

    def test_flagged_entry_never_matches_plainly(self):
        entry = _run_one("martin linear form (3,2)", seed=0)
        assert entry.status == STATUS_FLAGGED
        assert entry.expected == "0022112010"
        assert entry.computed == "0022120110"

    def test_flagged_count_entry(self):
        entry = _run_one("cycle count formula (3,4)", seed=0)
        assert entry.status == STATUS_FLAGGED
        assert entry.expected != entry.computed
        assert "12635683568857645056" in entry.computed


class TestReportObject:
    def _synthetic(self) -> Report:
        return Report(
            generated_at="2026-01-01T00:00:00+00:00",
            tier="quick",
            seed=0,
            entries=[
                ReportEntry("a", "quick", "1", "1", STATUS_MATCH, 0.1),
                ReportEntry("b", "quick", "2", "3", STATUS_MISMATCH, 0.2),
                ReportEntry("c", "quick", "4", "5", STATUS_FLAGGED, 0.3),
                ReportEntry("d", "quick", "", "skipped", STATUS_SKIPPED, 0.0),
            ],
        )

    def test_counts(self):
        report = self._synthetic()
        assert report.counts() == {
            STATUS_MATCH: 1,
            STATUS_MISMATCH: 1,
            STATUS_FLAGGED: 1,
            STATUS_SKIPPED: 1,
        }

    def test_exit_codes(self):
        report = self._synthetic()
        assert report.exit_code == 1  # mismatch dominates
        report.entries[1].status = STATUS_MATCH
        assert report.exit_code == 3  # then skipped
        report.entries[3].status = STATUS_MATCH
        assert report.exit_code == 0  # flagged alone stays green

    def test_json_document(self):
        doc = json.loads(self._synthetic().to_json())
        assert doc["tier"] == "quick"
        assert doc["exit_code"] == 1
        assert doc["summary"][STATUS_MISMATCH] == 1
        assert len(doc["entries"]) == 4
        assert doc["entries"][0]["claim"] == "a"

    def test_render_table(self):
        text = render_table(self._synthetic())
        assert "summary: 1 match, 1 mismatch, 1 flagged-discrepancy, 1 skipped" in text
        # non-matching entries carry expected/computed detail lines
        assert text.count("expected:") == 3
        assert text.count("computed:") == 3


class TestReproduceAll:
    def test_rejects_unknown_tier(self):
        with pytest.raises(ValueError, match="tier"):
            reproduce_all(tier="exhaustive")

    def test_zero_budget_skips_everything(self):
        report = reproduce_all(tier="quick", budget=0.0)
        assert all(e.status == STATUS_SKIPPED for e in report.entries)
        assert report.exit_code == 3
        assert len(report.entries) == len(_selected_claims("quick"))

    def test_zero_budget_parallel(self):
        report = reproduce_all(tier="quick", budget=0.0, jobs=2)
        skipped = [e for e in report.entries if e.status == STATUS_SKIPPED]
        # a worker may win the race for the first entries, the rest skip
        assert len(skipped) >= len(report.entries) - 4
        assert [e.claim for e in report.entries] == _selected_claims("quick")
