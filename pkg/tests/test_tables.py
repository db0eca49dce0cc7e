"""Catalog integrity and the end-to-end verification report."""

import json
from importlib import resources as importlib_resources

import pytest

from lucasaps.apsearch import is_ap, verify_family
from lucasaps.core import Kind, new_params, term
from lucasaps.tables import (
    family_for_pair,
    infinite_family_pairs,
    load_table_entries,
    pair_in_tables,
    verify_tables,
)


class TestCatalogData:
    def test_round_trip(self):
        raw = json.loads(
            importlib_resources.files("lucasaps.resources")
            .joinpath("tables.json")
            .read_text()
        )
        assert json.loads(json.dumps(raw)) == raw

    def test_row_counts(self):
        entries = load_table_entries()
        assert sum(1 for e in entries if e.kind is Kind.FIRST) == 7
        assert sum(1 for e in entries if e.kind is Kind.SECOND) == 6

    def test_every_listed_triple_is_a_progression(self):
        for entry in load_table_entries():
            b_values = [entry.b] if not entry.is_b_row else list(
                range(entry.b_min, entry.b_min + 6)
            )
            for b in b_values:
                params = new_params(entry.a, b)
                for trip in entry.all_triples():
                    vals = [term(params, entry.kind, i) for i in trip]
                    assert is_ap(*vals), (entry.describe_pair(), trip)

    def test_every_family_certifies(self):
        for entry in load_table_entries():
            if entry.is_b_row:
                continue
            params = new_params(entry.a, entry.b)
            for fam in entry.families:
                verify_family(fam, params, entry.kind)

    def test_pair_lookup(self):
        assert pair_in_tables(2, 7, Kind.FIRST)
        assert pair_in_tables(1, 1, Kind.FIRST)
        assert not pair_in_tables(5, 1, Kind.FIRST)
        assert not pair_in_tables(2, 7, Kind.SECOND)
        assert not pair_in_tables(1, 2, Kind.SECOND)


class TestVerifyTables:
    def test_clean_report(self):
        report = verify_tables(12, window=40)
        assert report.ok, report.mismatches
        assert report.checked_pairs > 400
        assert len(report.completions_used) == 2

    def test_rejects_small_cap(self):
        with pytest.raises(ValueError):
            verify_tables(5)

    def test_json_shape(self):
        doc = verify_tables(10, window=30).to_json_dict()
        assert doc["ok"] is True
        assert doc["mismatches"] == []


class TestInfiniteFamilyPairs:
    def test_listed_pairs(self):
        first, second = infinite_family_pairs()
        assert (-1, -2) in first and (-1, -2) in second
        assert (1, 2) in first and (1, 2) not in second
        assert (5, 1) not in first and (5, 1) not in second

    def test_each_pair_has_many_distinct_instances(self):
        first, second = infinite_family_pairs()
        for pairs, kind in ((first, Kind.FIRST), (second, Kind.SECOND)):
            for A, B in pairs:
                fam = family_for_pair(A, B, kind)
                assert fam is not None, (A, B, kind)
                params = new_params(A, B)
                verify_family(fam, params, kind)
                distinct = 0
                for t in range(fam.t_min, 201):
                    k, l, m = fam.instantiate(t)
                    vals = [term(params, kind, i) for i in (k, l, m)]
                    if is_ap(*vals):
                        distinct += 1
                assert distinct >= 50, (A, B, kind, distinct)

    def test_degenerate_family_instance_is_counted_not_fatal(self):
        # value -1 repeats, so one family instance collapses to equal terms
        params = new_params(-1, -2)
        fam = family_for_pair(-1, -2, Kind.FIRST)
        rep = verify_family(fam, params, Kind.FIRST, t_probe=30)
        assert rep.degenerate_ts
        k, l, m = fam.instantiate(rep.degenerate_ts[0])
        vals = {term(params, Kind.FIRST, i) for i in (k, l, m)}
        assert len(vals) < 3
