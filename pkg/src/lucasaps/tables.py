"""Built-in progression catalog and end-to-end cross-verification.

The catalog (resources/tables.json) lists, for each kind, every
positive-discriminant pair admitting a three-term progression: fixed pairs
with their sporadic triples and parametric families, and one-parameter rows
where B is free above a threshold.  Rows keep their source orientation;
comparisons canonicalize first.

Two rows carry a "completion": a certified progression the compact row
omits (one is an index twin through a repeated term value, one a plain
sporadic).  Completions are never trusted silently; every verification run
re-proves them with the enumeration engine and lists them in the report.

Verification is strict: for every cataloged pair the certified enumeration
must equal the full catalog description (verbatim plus completions) as a
set of canonical index triples over the probe window, families must match
structurally, and every in-range pair absent from the catalog must come
back as a certified empty enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources as importlib_resources

from .apsearch import APFamily, detect_families, family_instances, is_ap, verify_family
from .certify import certified_enumerate
from .core import Kind, degeneracy_order, new_params, term


@dataclass(frozen=True)
class TableEntry:
    """One catalog row: a fixed pair or a B-free row with its progressions."""

    kind: Kind
    a: int
    b: int | None          # None for B-free rows
    b_min: int | None      # set for B-free rows
    triples: tuple         # source orientation
    families: tuple        # APFamily in source orientation
    completions: tuple = ()  # (triple, note) pairs beyond the compact row

    @property
    def is_b_row(self) -> bool:
        return self.b is None

    def describe_pair(self) -> str:
        if self.is_b_row:
            return f"({self.a}, B), B>={self.b_min}"
        return f"({self.a}, {self.b})"

    def all_triples(self) -> tuple:
        return self.triples + tuple(t for t, _ in self.completions)


def _load_raw() -> dict:
    path = importlib_resources.files("lucasaps.resources").joinpath("tables.json")
    return json.loads(path.read_text())


def load_table_entries() -> list:
    out = []
    raw = _load_raw()
    for key, kind in (("first", Kind.FIRST), ("second", Kind.SECOND)):
        for row in raw[key]:
            fams = tuple(
                APFamily(tuple(f["k"]), tuple(f["l"]), tuple(f["m"]), f["tMin"])
                for f in row["families"]
            )
            completions = tuple(
                (tuple(c["triple"]), c["note"]) for c in row.get("completions", ())
            )
            out.append(
                TableEntry(
                    kind,
                    row["pair"]["A"],
                    row["pair"].get("B"),
                    row["pair"].get("bMin"),
                    tuple(tuple(t) for t in row["triples"]),
                    fams,
                    completions,
                )
            )
    return out


def pair_in_tables(A: int, B: int, kind: Kind) -> bool:
    for entry in load_table_entries():
        if entry.kind is not kind or entry.a != A:
            continue
        if entry.is_b_row and B >= entry.b_min:
            return True
        if not entry.is_b_row and entry.b == B:
            return True
    return False


def _canonical(trip) -> tuple:
    k, l, m = trip
    return (k, l, m) if k < m else (m, l, k)


def _described_triples(params, kind, index_triples, families, window):
    """Canonical index triples asserted by a description, indices <= window."""
    out = set()
    for trip in index_triples:
        canon = _canonical(trip)
        if max(canon) <= window:
            vals = tuple(term(params, kind, i) for i in canon)
            if is_ap(*vals):
                out.add(canon)
    for f in families:
        out |= {t.indices for t in family_instances(f, params, kind, window)}
    return out


@dataclass
class TablesReport:
    b_cap: int
    window: int
    off_grid: int
    checked_pairs: int = 0
    mismatches: list = field(default_factory=list)
    completions_used: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "bCap": self.b_cap,
            "window": self.window,
            "offGrid": self.off_grid,
            "checkedPairs": self.checked_pairs,
            "mismatches": list(self.mismatches),
            "completionsUsed": list(self.completions_used),
        }


def _check_fixed_pair(entry: TableEntry, B: int, report: TablesReport, window: int):
    params = new_params(entry.a, B)
    kind = entry.kind
    label = f"{kind.value} ({entry.a}, {B})"

    for trip in entry.all_triples():
        vals = tuple(term(params, kind, i) for i in trip)
        if not is_ap(*vals):
            report.mismatches.append(f"{label}: listed triple {trip} is not a progression")
            return
    for fam in entry.families:
        verify_family(fam, params, kind, t_probe=40)

    result = certified_enumerate(params, kind)
    if result.status == "inconclusive":
        report.mismatches.append(f"{label}: enumeration inconclusive: {result.diagnostics}")
        return

    table_fams = {f.normalized() for f in entry.families}
    engine_fams = {f.normalized() for f in result.families}
    if table_fams != engine_fams:
        report.mismatches.append(
            f"{label}: families differ: catalog {sorted(f.describe() for f in table_fams)} "
            f"vs engine {sorted(f.describe() for f in engine_fams)}"
        )
        return

    catalog_triples = _described_triples(
        params, kind, entry.all_triples(), entry.families, window
    )
    engine_triples = _described_triples(
        params, kind, [t.indices for t in result.aps], result.families, window
    )
    if catalog_triples != engine_triples:
        report.mismatches.append(
            f"{label}: triples differ: catalog-only {sorted(catalog_triples - engine_triples)} "
            f"engine-only {sorted(engine_triples - catalog_triples)}"
        )
        return
    for trip, note in entry.completions:
        report.completions_used.append(f"{label}: {trip} ({note})")


def verify_tables(b_cap: int = 25, window: int = 60, off_grid: int = 10) -> TablesReport:
    """Cross-verify the catalog against the certified enumeration.

    Checks every fixed pair and every B-free row up to b_cap, and verifies
    that every positive-discriminant pair inside the off_grid box that is
    absent from the catalog has a certified empty enumeration.
    """
    if b_cap < 10:
        raise ValueError("b_cap must be at least 10")
    report = TablesReport(b_cap, window, off_grid)

    for entry in load_table_entries():
        if entry.is_b_row:
            for B in range(entry.b_min, b_cap + 1):
                if degeneracy_order(entry.a, B) is not None:
                    continue
                report.checked_pairs += 1
                _check_fixed_pair(entry, B, report, window)
        else:
            report.checked_pairs += 1
            _check_fixed_pair(entry, entry.b, report, window)

    for kind in (Kind.FIRST, Kind.SECOND):
        for A in range(-off_grid, off_grid + 1):
            for B in range(-off_grid, off_grid + 1):
                if A == 0 or B == 0 or degeneracy_order(A, B) is not None:
                    continue
                if A * A + 4 * B <= 0 or pair_in_tables(A, B, kind):
                    continue
                report.checked_pairs += 1
                params = new_params(A, B)
                result = certified_enumerate(params, kind)
                if result.status != "complete" or result.aps:
                    report.mismatches.append(
                        f"{kind.value} ({A}, {B}): expected a certified empty enumeration, "
                        f"got {result.status} with {[t.indices for t in result.aps]}"
                    )
    return report


def infinite_family_pairs() -> tuple:
    """Coefficient pairs whose sequences contain infinitely many progressions,
    per kind.  Every other pair admits at most finitely many."""
    first = ((1, 1), (-1, 1), (1, 2), (-1, 2), (-1, -2))
    second = ((1, 1), (-1, 1), (-1, 2), (-1, -2))
    return first, second


def family_for_pair(A: int, B: int, kind: Kind, e_max: int = 12):
    """Some verified family witnessing infinitely many progressions.

    Uses divisibility detection first and falls back to catalog patterns
    (the step-two families are not unit-step and are catalog-supplied).
    """
    params = new_params(A, B)
    fams = detect_families(params, kind, e_max)
    if fams:
        return fams[0]
    for entry in load_table_entries():
        if entry.kind is kind and not entry.is_b_row and (entry.a, entry.b) == (A, B):
            if entry.families:
                return entry.families[0]
    return None
