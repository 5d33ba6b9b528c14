"""Command-line interface.

Subcommands: enumerate, count, verify, sign-vector, rep, explore,
classify.  Exit codes: 0 on success, 1 when a verification or both-method
comparison reports a mismatch, 2 on usage or input errors.
"""

import argparse
import csv
import io
import json
import sys

from . import counting, explorer, kernels, plane, verify
from .linalg import MatrixFormatError, parse_matrix
from .pluecker import ZeroMinorError, sign_vector

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _add_format(parser):
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tnzgr",
        description="Exact stratum enumeration and point-arrangement orbit counting "
        "for totally nonzero matrices (kernel backend: %s)." % kernels.BACKEND,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all strata for m = 2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="attach one integer witness matrix per stratum")
    p.add_argument("--allow-large", action="store_true", help="permit n = 9 or 10")
    _add_format(p)

    p = sub.add_parser("count", help="closed-form and brute-force counts")
    p.add_argument("--what", choices=("strata", "orbits", "antipodal-orbits", "fixed-points"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=None, help="power of the twist (fixed-points only)")
    p.add_argument("--method", choices=("closed-form", "brute-force", "both"), default="closed-form")
    p.add_argument("--allow-large", action="store_true")
    _add_format(p)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--suite", choices=("all",), default="all")
    _add_format(p)

    p = sub.add_parser("sign-vector", help="sign vector of a matrix file")
    p.add_argument("--input", required=True, help="path to a matrix JSON file")
    _add_format(p)

    p = sub.add_parser("rep", help="combinatorial representation of a 2 x n matrix, or a witness for one")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--input", help="path to a matrix JSON file; prints its representation")
    direction.add_argument("--element", help='signed one-line form; prints a witness matrix (use --element=-3,1,2 for leading minus)')
    _add_format(p)

    p = sub.add_parser("explore", help="randomized witness search; persists found strata")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=explorer.DEFAULT_BOUND)
    p.add_argument("--out", required=True, help="store file to write")
    p.add_argument("--resume", default=None, help="existing store file to extend")
    _add_format(p)

    p = sub.add_parser("classify", help="orbit-classify the strata in a store file")
    p.add_argument("--in", dest="store_in", required=True)
    p.add_argument("--group", choices=("sn", "hyper"), required=True)
    _add_format(p)

    return parser


def _emit_rows(fmt, rows, header):
    """rows: list of dicts with header keys, already ordered."""
    if fmt == "json":
        print(json.dumps(rows, indent=2, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        print(buf.getvalue(), end="")
    else:
        for row in rows:
            print(" ".join(str(row[key]) for key in header))


def _emit_one(fmt, row, header):
    """Single-record output: a bare object in json, one row in csv/text."""
    if fmt == "json":
        print(json.dumps(row, indent=2, sort_keys=True))
    else:
        _emit_rows(fmt, [row], header)


def cmd_enumerate(args):
    if args.witness:
        witnesses = plane.stratum_witnesses(args.n, allow_large=args.allow_large)
        rows = sorted(
            ({"signs": t.to_string(), "witness": json.loads(w.to_json())} for t, w in witnesses.items()),
            key=lambda row: row["signs"],
        )
        if args.format == "text":
            for row in rows:
                print(row["signs"], json.dumps(row["witness"]))
        elif args.format == "csv":
            _emit_rows("csv", [{"signs": r["signs"], "witness": json.dumps(r["witness"])} for r in rows], ["signs", "witness"])
        else:
            _emit_rows("json", rows, ["signs", "witness"])
        return EXIT_OK
    strata = plane.enumerate_strata_2d(args.n, allow_large=args.allow_large)
    keys = sorted(t.to_string() for t in strata)
    if args.format == "json":
        print(json.dumps(keys, indent=2))
    else:
        _emit_rows(args.format, [{"signs": k} for k in keys], ["signs"])
    return EXIT_OK


def _count_values(args):
    n, what = args.n, args.what
    closed = brute = None
    if what == "strata":
        if args.method in ("closed-form", "both"):
            closed = counting.count_strata_2d(n)
        if args.method in ("brute-force", "both"):
            brute = len(plane.enumerate_strata_2d(n, allow_large=args.allow_large))
    elif what == "orbits":
        if args.method in ("closed-form", "both"):
            closed = counting.count_generic_orbits_closed_form(n)
        if args.method in ("brute-force", "both"):
            brute = counting.orbit_partition(plane.enumerate_strata_2d(n, allow_large=args.allow_large), "sn", n).orbit_count
    elif what == "antipodal-orbits":
        if n < 2:
            raise ValueError("need n >= 2")
        if args.method in ("closed-form", "both"):
            closed = 1  # the signed relabeling action is transitive for m = 2
        if args.method in ("brute-force", "both"):
            brute = counting.orbit_partition(plane.enumerate_strata_2d(n, allow_large=args.allow_large), "hyperoctahedral", n).orbit_count
    else:
        if args.i is None:
            raise ValueError("fixed-points needs --i")
        if args.method in ("closed-form", "both"):
            closed = counting.fixed_point_count(n, args.i)
        if args.method in ("brute-force", "both"):
            brute = counting.fixed_point_count_bruteforce(n, args.i)
    return closed, brute


def cmd_count(args):
    closed, brute = _count_values(args)
    match = None
    if args.method == "both":
        match = closed == brute
    if args.format == "text":
        if args.method == "both":
            print(f"{closed} / {brute} / {'MATCH' if match else 'MISMATCH'}")
        else:
            print(closed if args.method == "closed-form" else brute)
    else:
        row = {"what": args.what, "n": args.n, "method": args.method}
        if args.i is not None:
            row["i"] = args.i
        if closed is not None:
            row["closed_form"] = closed
        if brute is not None:
            row["brute_force"] = brute
        if match is not None:
            row["match"] = match
        _emit_one(args.format, row, list(row))
    return EXIT_MISMATCH if match is False else EXIT_OK


def cmd_verify(args):
    results = verify.run_all()
    rows = [
        {"criterion": r.key, "result": "PASS" if r.passed else "FAIL", "seconds": round(r.seconds, 2), "detail": r.detail}
        for r in results
    ]
    if args.format == "text":
        width = max(len(r["criterion"]) for r in rows)
        for row in rows:
            print(f"{row['criterion']:<{width}}  {row['result']:<4}  {row['seconds']:>8.2f}s  {row['detail']}")
        failed = sum(1 for r in rows if r["result"] == "FAIL")
        print(f"{len(rows) - failed}/{len(rows)} checks passed")
    else:
        _emit_rows(args.format, rows, ["criterion", "result", "seconds", "detail"])
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def _load_matrix(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_matrix(handle.read())
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from None


def cmd_sign_vector(args):
    mat = _load_matrix(args.input)
    signs = sign_vector(mat).to_string()
    if args.format == "text":
        print(signs)
    else:
        _emit_one(args.format, {"signs": signs, "m": mat.m, "n": mat.n}, ["signs", "m", "n"])
    return EXIT_OK


def cmd_rep(args):
    if args.element is not None:
        from .signedperm import SignedPerm

        rep = SignedPerm.from_text(args.element)
        witness = plane.witness_matrix_for_rep(rep)
        if args.format == "text":
            print(witness.to_json())
        else:
            _emit_one(args.format, {"rep": rep.to_text(), "witness": json.loads(witness.to_json())}, ["rep", "witness"])
        return EXIT_OK
    mat = _load_matrix(args.input)
    rep = plane.combinatorial_rep(mat)
    if args.format == "text":
        print(rep.to_text())
    else:
        _emit_one(args.format, {"rep": rep.to_text(), "n": rep.n}, ["rep", "n"])
    return EXIT_OK


def cmd_explore(args):
    cfg = explorer.SampleConfig(m=args.m, n=args.n, samples=args.samples, seed=args.seed, entry_bound=args.bound)
    store = explorer.load_store_file(args.resume) if args.resume else None
    store, tally = explorer.explore(cfg, store)
    explorer.save_store_file(store, args.out)
    row = {
        "samples": tally.samples,
        "accepted": tally.accepted,
        "rejected": tally.rejected,
        "new_strata": tally.new,
        "seen_again": tally.seen,
        "store_size": len(store),
        "out": args.out,
    }
    if args.format == "text":
        for key, value in row.items():
            print(f"{key}: {value}")
    else:
        _emit_one(args.format, row, list(row))
    return EXIT_OK


def cmd_classify(args):
    store = explorer.load_store_file(args.store_in)
    report = explorer.classify_found(store, args.group)
    lower_bound = store.m >= 3
    row = {
        "group": report.group,
        "m": store.m,
        "n": store.n,
        "strata_classified": len(store),
        "orbit_count": report.orbit_count,
        "orbit_sizes": ",".join(map(str, report.orbit_sizes)),
        "lower_bound_only": lower_bound,
    }
    if args.format == "text":
        for key, value in row.items():
            print(f"{key}: {value}")
        if lower_bound:
            print("note: sampling proves presence only; the orbit count is a lower bound")
    else:
        _emit_one(args.format, row, list(row))
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "verify": cmd_verify,
    "sign-vector": cmd_sign_vector,
    "rep": cmd_rep,
    "explore": cmd_explore,
    "classify": cmd_classify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (MatrixFormatError, ZeroMinorError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
