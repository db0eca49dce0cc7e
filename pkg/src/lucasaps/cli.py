"""Command-line interface.

Subcommands cover classification, windowed enumeration, certified
enumeration, family detection, the symbolic small-index solver, catalog
verification, batch grid scans, trinomial factoring and the counting
bound.  All JSON output renders sequence values and other big integers as
decimal strings.  Exit codes: 0 success, 1 invalid input, 2 inconclusive
certification, 3 internal verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from multiprocessing import get_context

from . import __version__
from .apsearch import detect_families, find_aps
from .certify import EngineConfig, EngineMismatchError, certified_enumerate
from .core import (
    DegenerateError,
    Kind,
    ZeroCoefficientError,
    classify,
    degeneracy_order,
    new_params,
)
from .smallcase import DomainFilter, SqueezeUnresolvedError, solve_all
from .special import TrinomialShape, TrinomialSpec, quad_factors, sunit_constant
from .tables import verify_tables

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCONCLUSIVE = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _kind_arg(value: str) -> Kind:
    try:
        return Kind(value)
    except ValueError:
        raise argparse.ArgumentTypeError("kind must be 'first' or 'second'")


def _range_arg(value: str):
    lo, sep, hi = value.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like LO..HI")
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range")
    return lo, hi


def _triple_doc(t) -> dict:
    return {"k": t.k, "l": t.l, "m": t.m, "values": [str(v) for v in t.values]}


def _family_doc(f) -> dict:
    return {
        "k": list(f.k_form),
        "l": list(f.l_form),
        "m": list(f.m_form),
        "tMin": f.t_min,
        "pattern": f.describe(),
    }


def _emit(doc, out_path=None):
    text = json.dumps(doc, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> _Parser:
    parser = _Parser(prog="lucasaps", description=__doc__)
    parser.add_argument("--version", action="version", version=f"lucasaps {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="validate a pair and classify its discriminant")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)

    p = sub.add_parser("enumerate", help="all progressions with indices below a window")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--kind", type=_kind_arg, required=True)
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("certify", help="certified complete enumeration (positive discriminant)")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--kind", type=_kind_arg, required=True)
    p.add_argument("--gap-cap", type=int, default=12)

    p = sub.add_parser("families", help="unit-step families by companion divisibility")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--kind", type=_kind_arg, required=True)
    p.add_argument("--max-exponent", type=int, required=True)

    p = sub.add_parser("smallcases", help="symbolic solver for small largest index")
    p.add_argument("--kind", type=_kind_arg, required=True)
    p.add_argument("--max-index", type=int, default=6)
    p.add_argument("--no-dominant-filter", action="store_true")
    p.add_argument("--grid-check", type=int, metavar="N",
                   help="cross-check against brute enumeration on the |A|,|B| <= N grid")

    p = sub.add_parser("verify-tables", help="cross-verify the progression catalog")
    p.add_argument("--b-cap", type=int, default=25)

    p = sub.add_parser("scan", help="batch scan over a coefficient grid")
    p.add_argument("--a-range", type=_range_arg, required=True)
    p.add_argument("--b-range", type=_range_arg, required=True)
    p.add_argument("--kind", choices=("first", "second", "both"), default="both")
    p.add_argument("--max-index", type=int, default=30)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="csv")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("factor-trinomial", help="monic quadratic factors of a gap trinomial")
    p.add_argument("--shape", choices=[s.value for s in TrinomialShape], required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    sub.add_parser("sunit-bound", help="exact progression-count bound")
    return parser


def _cmd_classify(args) -> int:
    params = new_params(args.A, args.B)
    _emit(
        {
            "A": params.A,
            "B": params.B,
            "discriminant": str(params.D),
            "classification": classify(params).value,
        }
    )
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.max_index < 2:
        raise _UsageError("--max-index must be at least 2")
    params = new_params(args.A, args.B)
    aps = find_aps(params, args.kind, args.max_index)
    if args.format == "json":
        _emit(
            {
                "A": params.A,
                "B": params.B,
                "kind": args.kind.value,
                "maxIndex": args.max_index,
                "aps": [_triple_doc(t) for t in aps],
            }
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["k", "l", "m", "value_k", "value_l", "value_m"])
        for t in aps:
            writer.writerow([t.k, t.l, t.m, *(str(v) for v in t.values)])
    else:
        for t in aps:
            print(f"({t.k}, {t.l}, {t.m}) -> {t.values}")
        print(f"{len(aps)} progression(s) with indices <= {args.max_index}")
    return EXIT_OK


def _cmd_certify(args) -> int:
    params = new_params(args.A, args.B)
    result = certified_enumerate(params, args.kind, EngineConfig(gap_cap=args.gap_cap))
    doc = {
        "A": params.A,
        "B": params.B,
        "kind": args.kind.value,
        "status": result.status,
        "aps": [_triple_doc(t) for t in result.aps],
        "families": [_family_doc(f) for f in result.families],
        "certificate": None,
    }
    if result.certificate is not None:
        cert = result.certificate.to_json_dict()
        cert["complete"] = True
        doc["certificate"] = cert
    if result.status == "inconclusive":
        doc["diagnostics"] = list(result.diagnostics)
        _emit(doc)
        return EXIT_INCONCLUSIVE
    _emit(doc)
    return EXIT_OK


def _cmd_families(args) -> int:
    if args.max_exponent < 3:
        raise _UsageError("--max-exponent must be at least 3")
    params = new_params(args.A, args.B)
    fams = detect_families(params, args.kind, args.max_exponent)
    _emit(
        {
            "A": params.A,
            "B": params.B,
            "kind": args.kind.value,
            "maxExponent": args.max_exponent,
            "families": [_family_doc(f) for f in fams],
        }
    )
    return EXIT_OK


def _cmd_smallcases(args) -> int:
    filt = DomainFilter(dominant=not args.no_dominant_filter)
    solset = solve_all(args.kind, args.max_index, filt)
    doc = solset.to_json_dict()
    if args.grid_check:
        n = args.grid_check
        sym = solset.grid_instances(-n, n, -n, n, max_index=args.max_index)
        brute = set()
        for A in range(-n, n + 1):
            for B in range(-n, n + 1):
                if not filt.admits(A, B):
                    continue
                params = new_params(A, B)
                for t in find_aps(params, args.kind, args.max_index + 1):
                    if t.max_index <= args.max_index:
                        brute.add((A, B, t.indices))
        doc["gridCheck"] = {
            "box": n,
            "symbolic": len(sym),
            "bruteForce": len(brute),
            "equal": sym == brute,
        }
        _emit(doc)
        return EXIT_OK if sym == brute else EXIT_MISMATCH
    _emit(doc)
    return EXIT_OK


def _cmd_verify_tables(args) -> int:
    report = verify_tables(args.b_cap)
    _emit(report.to_json_dict())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _scan_pair(job):
    A, B, kind_name, max_index = job
    row = {
        "A": A,
        "B": B,
        "kind": kind_name,
        "classification": "",
        "ap_count_window": "",
        "family_count": "",
        "certified": "",
        "n0": "",
    }
    if A == 0 or B == 0:
        row["classification"] = "zero_coefficient"
        return row
    order = degeneracy_order(A, B)
    if order is not None:
        row["classification"] = f"degenerate_order_{order}"
        return row
    params = new_params(A, B)
    kind = Kind(kind_name)
    row["classification"] = classify(params).value
    row["ap_count_window"] = len(find_aps(params, kind, max_index))
    row["family_count"] = len(detect_families(params, kind, 12))
    result = certified_enumerate(params, kind)
    row["certified"] = "true" if result.status == "complete" else "false"
    if result.certificate is not None:
        row["n0"] = result.certificate.n0
    return row


_SCAN_COLUMNS = [
    "A", "B", "kind", "classification", "ap_count_window",
    "family_count", "certified", "n0",
]


def _cmd_scan(args) -> int:
    kinds = ("first", "second") if args.kind == "both" else (args.kind,)
    jobs = [
        (A, B, kind, args.max_index)
        for A in range(args.a_range[0], args.a_range[1] + 1)
        for B in range(args.b_range[0], args.b_range[1] + 1)
        for kind in kinds
    ]
    if args.jobs > 1:
        with get_context("fork").Pool(args.jobs) as pool:
            rows = pool.map(_scan_pair, jobs)
    else:
        rows = [_scan_pair(job) for job in jobs]
    rows.sort(key=lambda r: (r["A"], r["B"], r["kind"]))

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_SCAN_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    elif args.format == "json":
        text = json.dumps({"rows": rows}, indent=2) + "\n"
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in _SCAN_COLUMNS}
        lines = ["  ".join(c.ljust(widths[c]) for c in _SCAN_COLUMNS)]
        for r in rows:
            lines.append("  ".join(str(r[c]).ljust(widths[c]) for c in _SCAN_COLUMNS))
        text = "\n".join(lines) + "\n"
    with open(args.out, "w") as fh:
        fh.write(text)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def _cmd_factor_trinomial(args) -> int:
    spec = TrinomialSpec(TrinomialShape(args.shape), args.a, args.b)
    factors = quad_factors(spec)
    _emit(
        {
            "trinomial": spec.describe(),
            "factors": [
                {
                    "p": p,
                    "q": q,
                    "poly": f"X^2{p:+d}X{q:+d}".replace("+0X", "").replace("1X", "X"),
                    "discriminant": p * p - 4 * q,
                }
                for p, q in factors
            ],
        }
    )
    return EXIT_OK


def _cmd_sunit_bound(args) -> int:
    bound = sunit_constant()
    _emit(
        {
            "digitCount": bound.digit_count,
            "leadingDigits": bound.leading_digits,
            "exponent10": bound.exponent10,
            "belowStatedBound": bound.value < 645 * 10 ** (bound.exponent10 - 2),
            "statedBound": "6.45e2340",
            "decimal": bound.decimal_string(),
        }
    )
    return EXIT_OK


_HANDLERS = {
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "certify": _cmd_certify,
    "families": _cmd_families,
    "smallcases": _cmd_smallcases,
    "verify-tables": _cmd_verify_tables,
    "scan": _cmd_scan,
    "factor-trinomial": _cmd_factor_trinomial,
    "sunit-bound": _cmd_sunit_bound,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ZeroCoefficientError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DegenerateError as exc:
        print(
            f"invalid input: degenerate pair ({exc.A}, {exc.B}); "
            f"the root ratio alpha/beta has order {exc.order}",
            file=sys.stderr,
        )
        return EXIT_INVALID
    except SqueezeUnresolvedError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except EngineMismatchError as exc:
        print(f"internal verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
