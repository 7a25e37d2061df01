"""Corpus loading, grid construction, verdict matching, witness replay, and
the coverage checklist."""

import json
from fractions import Fraction

import pytest

from finsum import corpus
from finsum.corpus import (Witness, _build_grid, check_coverage, corpus_dir,
                           load_entries, load_entry, load_manifest, parse_half,
                           run_corpus, run_entry)
from finsum.errors import FormatError
from finsum.field import HalfInt


GOOD_CLOSED = {
    "name": "alt-binom-basic",
    "status": "verified",
    "lhs": {"kind": "closed", "sums": [
        {"coeff": "sign(k)*binom(n, k)/(k + 1)", "lower": "0", "upper": "n"}]},
    "rhs": {"kind": "closed", "expr": "1/(n + 1)"},
    "n": [0, 8],
}

BAD_CLOSED = {
    "name": "alt-binom-off-by-sign",
    "status": "disputed",
    "lhs": {"kind": "closed", "sums": [
        {"coeff": "sign(k)*binom(n, k)/(k + 1)", "lower": "0", "upper": "n"}]},
    "rhs": {"kind": "closed", "expr": "-1/(n + 1)"},
    "n": [1, 8],
    "witness": {"n": 1, "lhs": "1/2", "rhs": "-1/2"},
}

GOOD_POLY = {
    "name": "binomial-theorem-basic",
    "status": "verified",
    "lhs": {"kind": "standard", "terms": [
        {"coeff": "binom(n, k)", "t_exp": [1, 0, 0],
         "base": "1-t", "base_exp": [-1, 1, 0], "lower": "0", "upper": "n"}]},
    "rhs": {"kind": "poly", "expr": "1 + 0*t"},
    "n": [0, 8],
}


class TestParseHalf:
    def test_values(self):
        assert parse_half("3") == HalfInt.from_value(3)
        assert parse_half("-1/2") == HalfInt.from_value(Fraction(-1, 2))
        assert parse_half(2) == HalfInt.from_value(2)


class TestBuildGrid:
    def test_empty_spec(self):
        assert _build_grid(None) == ({},)
        assert _build_grid({}) == ({},)

    def test_cartesian_product(self):
        grid = _build_grid({"u": ["0", "1"], "v": ["0", "1", "2"]})
        assert len(grid) == 6

    def test_inadmissible_rs_pairs_dropped(self):
        grid = _build_grid({"r": ["1", "2"], "s": ["1", "2", "3"]})
        # dropped: (1,2), (1,3), (2,3) have r - s negative integers
        assert len(grid) == 3
        for g in grid:
            assert g["r"].as_fraction() >= g["s"].as_fraction()

    def test_r_alone_is_not_filtered(self):
        grid = _build_grid({"r": ["1", "2", "3"]})
        assert len(grid) == 3


class TestLoadEntry:
    def test_expected_defaults_by_status(self):
        assert load_entry(GOOD_CLOSED).expected == "equal"
        assert load_entry(BAD_CLOSED).expected == "unequal"
        doc = dict(GOOD_CLOSED)
        doc["status"] = "check"
        assert load_entry(doc).expected == "recorded"

    def test_explicit_expected_overrides(self):
        doc = dict(GOOD_CLOSED)
        doc["status"] = "check"
        doc["expected"] = "equal"
        assert load_entry(json.dumps(doc)).expected == "equal"
        doc["expected"] = "sometimes"
        with pytest.raises(FormatError):
            load_entry(doc)

    def test_unequal_requires_witness(self):
        doc = dict(BAD_CLOSED)
        doc.pop("witness")
        with pytest.raises(FormatError):
            load_entry(doc)

    def test_witness_parsing(self):
        doc = dict(BAD_CLOSED)
        doc["witness"] = {"n": 2, "params": {"r": "1/2"},
                         "lhs": "1 - 2*L", "rhs": "0"}
        w = load_entry(doc).witness
        assert isinstance(w, Witness)
        assert w.n == 2
        assert w.params == (("r", HalfInt(1)),)
        assert w.lhs.render() == "1 - 2*L"
        assert w.rhs.is_zero

    def test_n_range_default_and_parity(self):
        doc = dict(GOOD_CLOSED)
        doc.pop("n")
        assert load_entry(doc).n_values == tuple(range(0, 17))
        doc["n"] = [0, 9]
        doc["parity"] = "even"
        assert load_entry(doc).n_values == (0, 2, 4, 6, 8)
        doc["parity"] = "odd"
        assert load_entry(doc).n_values == (1, 3, 5, 7, 9)


class TestRunEntry:
    def test_closed_equal(self):
        report = run_entry(load_entry(GOOD_CLOSED))
        assert report.actual == "equal" and report.matched

    def test_closed_unequal_with_witness(self):
        report = run_entry(load_entry(BAD_CLOSED))
        assert report.actual == "unequal" and report.matched
        assert "n=1" in report.detail

    def test_wrong_witness_fails_matching(self):
        doc = dict(BAD_CLOSED)
        doc["witness"] = {"n": 1, "lhs": "1/2", "rhs": "1/3"}
        report = run_entry(load_entry(doc))
        assert report.actual == "unequal" and not report.matched
        assert "witness" in report.detail

    def test_expected_equal_but_unequal_mismatches(self):
        doc = dict(BAD_CLOSED)
        doc["status"] = "verified"
        doc.pop("witness")
        report = run_entry(load_entry(doc))
        assert report.actual == "unequal" and not report.matched

    def test_recorded_always_matches(self):
        doc = dict(BAD_CLOSED)
        doc["status"] = "check"
        doc["expected"] = "recorded"
        report = run_entry(load_entry(doc))
        assert report.actual == "unequal" and report.matched

    def test_poly_entry(self):
        report = run_entry(load_entry(GOOD_POLY))
        assert report.actual == "equal" and report.matched
        doc = dict(GOOD_POLY)
        doc["rhs"] = {"kind": "poly", "expr": "1 + t"}
        doc["status"] = "check"
        report = run_entry(load_entry(doc))
        assert report.actual == "unequal"
        assert "t^1" in report.detail


class TestShippedCorpus:
    def test_manifest_lists_every_file(self):
        directory = corpus_dir()
        manifest = load_manifest()
        files = {p.name for p in directory.glob("*.json")} - {"manifest.json"}
        assert set(manifest["entries"]) == files
        assert manifest["entries"] == sorted(manifest["entries"])

    def test_entries_all_load(self):
        entries = load_entries()
        assert len(entries) >= 100
        names = [e.name for e in entries]
        assert len(names) == len(set(names))

    def test_env_override(self, tmp_path, monkeypatch):
        (tmp_path / "manifest.json").write_text(json.dumps(
            {"entries": ["only.json"], "paper_equations": []}))
        (tmp_path / "only.json").write_text(json.dumps(GOOD_CLOSED))
        monkeypatch.setenv("FINSUM_CORPUS_DIR", str(tmp_path))
        entries = load_entries()
        assert [e.name for e in entries] == ["alt-binom-basic"]
        assert check_coverage() == []

    def test_coverage_check_passes(self):
        assert check_coverage() == []

    def test_coverage_check_catches_problems(self, tmp_path):
        (tmp_path / "manifest.json").write_text(json.dumps({
            "entries": ["only.json"],
            "paper_equations": [
                {"label": "a", "category": "entry:missing-name"},
                {"label": "a", "category": "definition"},
                {"label": "b", "category": "suite:"},
                {"label": "c", "category": "mystery"},
                {"category": "definition"},
            ]}))
        (tmp_path / "only.json").write_text(json.dumps(GOOD_CLOSED))
        problems = check_coverage(tmp_path)
        assert len(problems) == 5

    def test_run_corpus_subset_parallel(self):
        names = {"binomial-theorem", "alt-recip-shift", "alt-harmonic-shift"}
        reports = run_corpus(names=names, jobs=2)
        assert {r.name for r in reports} == names
        assert all(r.matched for r in reports)
        by_name = {r.name: r for r in reports}
        assert by_name["alt-harmonic-shift"].actual == "unequal"
