"""Corpus loading and batch verification.

A corpus directory holds one JSON document per identity (the identity fields
plus expected verdict, optional witness, and verification grid) and a
``manifest.json`` naming every entry file and carrying the source-equation
checklist used by the coverage check.

The default corpus ships inside the package (``corpus_data/``); the
``FINSUM_CORPUS_DIR`` environment variable overrides it.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import beta, polyverify
from .errors import FormatError
from .field import HalfInt, SymConst
from .model import admissible, load_identity

DEFAULT_DIR = Path(__file__).parent / "corpus_data"

DEFAULT_RS = (Fraction(1, 2), Fraction(1), Fraction(3, 2),
              Fraction(2), Fraction(5, 2), Fraction(3))

EXPECTED = ("equal", "unequal", "recorded")


def corpus_dir(override=None):
    if override:
        return Path(override)
    env = os.environ.get("FINSUM_CORPUS_DIR")
    return Path(env) if env else DEFAULT_DIR


def parse_half(text):
    """A half-integer from command-line / document syntax: '3', '-1/2', '5/2'."""
    return HalfInt.from_value(Fraction(str(text)))


@dataclass(frozen=True)
class Witness:
    n: int
    params: tuple            # sorted ((name, HalfInt), ...)
    lhs: SymConst
    rhs: SymConst


@dataclass(frozen=True)
class CorpusEntry:
    identity: object
    expected: str
    witness: object          # Witness or None
    n_values: tuple
    param_grid: tuple        # tuple of dicts

    @property
    def name(self):
        return self.identity.name


def _build_grid(spec):
    """Cartesian product over the per-parameter value lists, with inadmissible
    (r, s) pairs dropped when both parameters are present."""
    if not spec:
        return ({},)
    names = sorted(spec)
    values = {name: [parse_half(v) for v in spec[name]] for name in names}
    grid = [{}]
    for name in names:
        grid = [dict(g, **{name: v}) for g in grid for v in values[name]]
    if "r" in spec and "s" in spec:
        grid = [g for g in grid if admissible(g["r"], g["s"])]
    return tuple(grid)


def load_entry(document):
    """Parse a corpus document (dict or JSON text) into a CorpusEntry."""
    if isinstance(document, str):
        document = json.loads(document)
    identity = load_identity(document)
    expected = document.get("expected")
    if expected is None:
        expected = {"verified": "equal", "check": "recorded",
                    "disputed": "unequal", "erratum_claimed": "unequal"}[identity.status]
    if expected not in EXPECTED:
        raise FormatError(f"{identity.name}: unknown expected verdict {expected!r}")
    witness = None
    if "witness" in document:
        w = document["witness"]
        witness = Witness(
            n=w["n"],
            params=tuple(sorted((name, parse_half(v)) for name, v in w.get("params", {}).items())),
            lhs=SymConst.parse(w["lhs"]),
            rhs=SymConst.parse(w["rhs"]),
        )
    if expected == "unequal" and witness is None:
        raise FormatError(f"{identity.name}: expected unequal without a witness")
    n_lo, n_hi = document.get("n", [0, 16])
    n_values = range(n_lo, n_hi + 1)
    parity = document.get("parity")
    if parity == "even":
        n_values = [n for n in n_values if n % 2 == 0]
    elif parity == "odd":
        n_values = [n for n in n_values if n % 2 == 1]
    else:
        n_values = list(n_values)
    grid = _build_grid(document.get("grid"))
    return CorpusEntry(identity, expected, witness, tuple(n_values), grid)


def load_manifest(directory=None):
    directory = corpus_dir(directory)
    path = directory / "manifest.json"
    try:
        manifest = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot load manifest {path}: {exc}") from exc
    return manifest


def load_entries(directory=None, names=None, status=None):
    directory = corpus_dir(directory)
    manifest = load_manifest(directory)
    entries = []
    for file_name in manifest["entries"]:
        try:
            entry = load_entry((directory / file_name).read_text())
        except OSError as exc:
            raise FormatError(f"cannot load corpus file {file_name}: {exc}") from exc
        if names and entry.name not in names:
            continue
        if status and entry.identity.status != status:
            continue
        entries.append(entry)
    return entries


@dataclass(frozen=True)
class EntryReport:
    name: str
    status: str
    expected: str
    actual: str              # equal | unequal | undefined
    matched: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "actual": self.actual, "matched": self.matched, "detail": self.detail}


def _point_str(n, params):
    bits = [f"n={n}"] + [f"{name}={val}" for name, val in params]
    return "(" + ", ".join(bits) + ")"


def run_entry(entry):
    identity = entry.identity
    if identity.is_closed:
        cid = beta.from_model(identity)
        report = beta.verify_closed(cid, entry.n_values, entry.param_grid)
        if report.undefined:
            p = report.undefined[0]
            return _finish(entry, "undefined",
                           f"undefined at {_point_str(p.n, p.params)}: {p.error}")
        if report.all_equal:
            return _finish(entry, "equal", "")
        p = report.failures[0]
        detail = f"unequal at {_point_str(p.n, p.params)}: lhs={p.lhs}, rhs={p.rhs}"
        return _finish(entry, "unequal", detail, failure=p)
    # polynomial entry
    for n in entry.n_values:
        rep = polyverify.verify_poly(identity, n)
        if not rep.equal:
            i, lc, rc = rep.first_difference
            detail = f"unequal at n={n}, t^{i}: lhs={lc}, rhs={rc}"
            return _finish(entry, "unequal", detail)
    return _finish(entry, "equal", "")


def _finish(entry, actual, detail, failure=None):
    expected = entry.expected
    if expected == "recorded":
        matched = True
    elif expected == "unequal":
        matched = actual == "unequal" and _witness_holds(entry)
        if actual == "unequal" and not matched:
            detail += " (stored witness not reproduced)"
    else:
        matched = actual == expected
    return EntryReport(entry.name, entry.identity.status, expected, actual, matched, detail)


def _witness_holds(entry):
    """Re-evaluate the stored witness point and compare both exact sides."""
    w = entry.witness
    cid = beta.from_model(entry.identity)
    lhs, rhs = beta.eval_closed(cid, w.n, **dict(w.params))
    return lhs == w.lhs and rhs == w.rhs and lhs != rhs


def run_corpus(directory=None, names=None, status=None, jobs=1):
    entries = load_entries(directory, names=names, status=status)
    if jobs and jobs > 1:
        import concurrent.futures
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_entry, entries))
    else:
        reports = [run_entry(e) for e in entries]
    return reports


def check_coverage(directory=None):
    """Every source display equation must map to an entry, a named test
    suite, a definition, or an explicit out-of-scope item.

    Returns a list of problem strings (empty = pass).
    """
    directory = corpus_dir(directory)
    manifest = load_manifest(directory)
    entry_names = set()
    for file_name in manifest["entries"]:
        entry_names.add(load_entry((directory / file_name).read_text()).name)
    problems = []
    seen = set()
    for item in manifest.get("paper_equations", []):
        label = item.get("label")
        category = item.get("category", "")
        if not label:
            problems.append(f"checklist item without label: {item!r}")
            continue
        if label in seen:
            problems.append(f"duplicate checklist label {label}")
        seen.add(label)
        if category.startswith("entry:"):
            targets = category[len("entry:"):].split(",")
            for target in targets:
                if target not in entry_names:
                    problems.append(f"{label}: names missing entry {target!r}")
        elif category.startswith("suite:"):
            if not category[len("suite:"):]:
                problems.append(f"{label}: empty suite reference")
        elif category not in ("definition", "out-of-scope"):
            problems.append(f"{label}: unknown category {category!r}")
    return problems
