"""Command-line front end.

Subcommands: ``count`` (closed-form class counts), ``verify`` (oracle vs
formula), ``table13`` (the stored small-rank reference table against the
engine), ``genfun`` (generating-function coefficients for real classes of
GL_n), and ``enumerate`` (label dumps with reality flags).

Exit codes: 0 success / all match, 1 mismatch, 2 usage error, 3 budget or
cap exceeded.  Output is deterministic: identical flags give byte-identical
output.
"""

import argparse
import csv
import json
import math
import sys

from . import counts, labels, oracle, polys
from .errors import BudgetExceeded
from .fields import canonical_nonsquare, constrained_nonsquare, field_for_order

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# the standard desk-scale verification matrix: every group small enough to
# enumerate and classify outright, covering all five families
DESK_MATRIX = (
    ("GL", 2, 2, None), ("GL", 2, 3, None), ("GL", 2, 4, None),
    ("GL", 2, 5, None), ("GL", 2, 7, None),
    ("SL", 2, 3, None), ("SL", 2, 5, None), ("SL", 2, 7, None),
    ("SL", 2, 9, None),
    ("PGL", 2, 3, None), ("PGL", 2, 5, None), ("PGL", 2, 7, None),
    ("PSL", 2, 3, None), ("PSL", 2, 5, None), ("PSL", 2, 7, None),
    ("PSL", 2, 9, None),
    ("GL", 3, 2, None), ("GL", 3, 3, None),
    ("SL", 3, 3, None), ("PSL", 3, 3, None),
    ("GL", 4, 2, None),
    ("SL", 3, 4, None), ("PSL", 3, 4, None),
    ("SLQ", 4, 3, 1), ("SLQ", 4, 3, 2),
)
_DESK_CAP = 12_130_560  # order of the largest desk group, SL_4(3)


def _emit(fmt, payload, rows, text_lines, out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        for row in rows:
            writer.writerow(row)
    else:
        for line in text_lines:
            out.write(line + "\n")


def _group_str(family, n, q, y_order=None):
    s = "%s_%d(%d)" % (family, n, q)
    if family == "SLQ":
        s += "/Y%d" % y_order
    return s


def _budget(args):
    return args.cap if args.cap else counts.DEFAULT_BUDGET


# ---------------------------------------------------------------------------

def cmd_count(args):
    if args.family == "SLQ" and args.y is None:
        raise ValueError("--family SLQ needs --y")
    report = counts.count(args.family, args.n, args.q, args.kind,
                          y_order=args.y, budget=_budget(args))
    payload = report.to_json()
    yval = args.y if args.family == "SLQ" else ""
    rows = [("family", "n", "q", "y", "kind", "regime", "method", "total",
             "nu", "count")]
    for item in payload["per_nu"]:
        rows.append((args.family, args.n, args.q, yval, args.kind,
                     payload["regime"], payload["method"], payload["total"],
                     " ".join(str(p) for p in item["nu"]), item["count"]))
    text = ["%s %s classes: %d  [regime %s, method %s]"
            % (_group_str(args.family, args.n, args.q, args.y), args.kind,
               payload["total"], payload["regime"], payload["method"])]
    for item in payload["per_nu"]:
        if item["count"]:
            text.append("  nu=(%s): %d"
                        % (",".join(str(p) for p in item["nu"]),
                           item["count"]))
    _emit(args.format, payload, rows, text)
    return EXIT_OK


def cmd_verify(args):
    if args.all_desk:
        cap = max(args.cap or 0, oracle.resolve_cap(args.cap), _DESK_CAP)
        runs = [oracle.verify_group(f, n, q, y_order=y, cap=cap)
                for f, n, q, y in DESK_MATRIX]
    else:
        for name in ("family", "n", "q"):
            if getattr(args, name) is None:
                raise ValueError("verify needs --family, --n, --q "
                                 "(or --all-desk)")
        if args.family == "SLQ" and args.y is None:
            raise ValueError("--family SLQ needs --y")
        kinds = None
        if args.kind:
            if args.kind == "zeta_real" and args.family not in ("GL", "SL"):
                raise ValueError(
                    "zeta-real counts are for the matrix groups GL, SL")
            if args.kind == "zeta_real" and args.q % 2 == 0:
                raise ValueError("zeta-real classes need odd q")
            kinds = [args.kind]
        runs = [oracle.verify_group(args.family, args.n, args.q,
                                    y_order=args.y, kinds=kinds,
                                    cap=args.cap)]
    ok = all(r["match"] for r in runs)
    payload = {"runs": runs, "match": ok}
    rows = [("family", "n", "q", "y", "order", "classes", "kind", "oracle",
             "engine", "match")]
    text = []
    for r in runs:
        g = r["group"]
        name = _group_str(g["family"], g["n"], g["q"], g.get("y"))
        text.append("%s: order %d, %d classes"
                    % (name, r["order"], r["classes"]))
        for c in r["checks"]:
            rows.append((g["family"], g["n"], g["q"], g.get("y", ""),
                         r["order"], r["classes"], c["kind"], c["oracle"],
                         c["engine"], c["match"]))
            text.append("  %-14s oracle=%d engine=%d %s"
                        % (c["kind"], c["oracle"], c["engine"],
                           "match" if c["match"] else "MISMATCH"))
    text.append("all match" if ok else "MISMATCH")
    _emit(args.format, payload, rows, text)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_table13(args):
    table = counts.section13_table(args.q, budget=_budget(args))
    ok = all(row["match"] for row in table)
    payload = {"q": args.q, "rows": table, "match": ok}
    rows = [("family", "n", "q", "kind", "reference", "engine", "match",
             "note")]
    for row in table:
        rows.append((row["family"], row["n"], row["q"], row["kind"],
                     row["reference"], row["engine"], row["match"],
                     row.get("note", "")))
    deltas = ", ".join("delta_%d=%d" % (k, math.gcd(args.q - 1, k))
                       for k in (2, 3, 4, 6))
    text = ["reference table at q=%d  (%s)" % (args.q, deltas)]
    for row in table:
        line = ("%-4s n=%d %-14s reference=%-6d engine=%-6d %s"
                % (row["family"], row["n"], row["kind"], row["reference"],
                   row["engine"], "match" if row["match"] else "MISMATCH"))
        if "note" in row:
            line += "  [%s]" % row["note"]
        text.append(line)
    text.append("all match" if ok else "MISMATCH")
    _emit(args.format, payload, rows, text)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_genfun(args):
    coeffs = counts.genfun_real_gl(args.q, terms=args.terms)
    checks = []
    ok = True
    for n, c in enumerate(coeffs):
        direct = counts.real_gl(n, args.q).total
        match = c == direct
        ok = ok and match
        checks.append({"n": n, "coefficient": c, "real_gl": direct,
                       "match": match})
    payload = {"q": args.q, "terms": args.terms, "coefficients": coeffs,
               "checks": checks, "match": ok}
    rows = [("q", "n", "coefficient", "real_gl", "match")]
    for ch in checks:
        rows.append((args.q, ch["n"], ch["coefficient"], ch["real_gl"],
                     ch["match"]))
    text = ["real-class generating function at q=%d: %s"
            % (args.q, coeffs)]
    for ch in checks:
        text.append("  t^%d: %d vs real_gl %d %s"
                    % (ch["n"], ch["coefficient"], ch["real_gl"],
                       "match" if ch["match"] else "MISMATCH"))
    text.append("all match" if ok else "MISMATCH")
    _emit(args.format, payload, rows, text)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_enumerate(args):
    field = field_for_order(args.q)
    zeta = canonical_nonsquare(field) if args.q % 2 == 1 else None
    labs = labels.enumerate_labels(field, args.n, filt=args.filter,
                                   budget=_budget(args))
    header = ("n", "q", "label", "nu", "det", "real", "zeta_real",
              "sl_real", "sl_strongly_real", "psl_strongly_real")
    rows = [header]
    text = []
    count = 0
    out = sys.stdout
    psl_regime = args.n % 4 == 2 and args.q % 4 == 3
    psl_zeta = constrained_nonsquare(field, args.n) if psl_regime else None
    for lab in labs:
        count += 1
        det = labels.label_det(field, lab)
        rec = {"n": args.n, "q": args.q,
               "label": labels.label_to_json(lab),
               "det": det,
               "real": labels.is_real_label(field, lab)}
        if zeta is not None:
            rec["zeta_real"] = labels.is_zeta_real_label(field, lab, zeta)
        if det == field.one:
            rec["sl_real"] = labels.sl_real(lab, args.n, args.q)
            rec["sl_strongly_real"] = labels.sl_strongly_real(field, lab)
            if psl_regime:
                rec["psl_strongly_real"] = labels.psl_strongly_real(
                    field, lab, psl_zeta)
        if args.format == "json":
            json.dump(rec, out, sort_keys=True)
            out.write("\n")
            continue
        label_str = " | ".join(polys.poly_str(field, u) for u in lab)
        nu_str = " ".join(str(p) for p in rec["label"]["nu"])
        if args.format == "csv":
            rows.append((args.n, args.q, label_str, nu_str, det,
                         rec["real"], rec.get("zeta_real", ""),
                         rec.get("sl_real", ""),
                         rec.get("sl_strongly_real", ""),
                         rec.get("psl_strongly_real", "")))
        else:
            flags = ["det=%d" % det,
                     "real" if rec["real"] else "non-real"]
            if rec.get("zeta_real"):
                flags.append("zeta-real")
            if rec.get("sl_real"):
                flags.append("sl-real")
            if rec.get("sl_strongly_real"):
                flags.append("sl-strongly-real")
            if rec.get("psl_strongly_real"):
                flags.append("psl-strongly-real")
            text.append("[%s]  %s" % (label_str, ", ".join(flags)))
    if args.format == "csv":
        _emit("csv", None, rows, None)
    elif args.format == "text":
        text.append("total %d" % count)
        _emit("text", None, None, text)
    return EXIT_OK


# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="realclasses",
        description="Real, strongly real, and zeta-real conjugacy classes "
                    "of the finite linear groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kind=True):
        p.add_argument("--family", choices=sorted(counts.FAMILIES))
        p.add_argument("--n", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--y", type=int,
                       help="order of the central subgroup Y (family SLQ)")
        if kind:
            p.add_argument("--kind", choices=sorted(counts.KINDS))
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--cap", type=int,
                       help="group-size cap / label budget override")

    p = sub.add_parser("count", help="closed-form class counts")
    common(p)
    p.set_defaults(func=cmd_count, kind_default="real")

    p = sub.add_parser("verify", help="brute-force oracle vs formulas")
    common(p)
    p.add_argument("--all-desk", action="store_true",
                   help="run the full desk-scale verification matrix")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table13", help="small-rank reference table vs engine")
    common(p, kind=False)
    p.set_defaults(func=cmd_table13)

    p = sub.add_parser("genfun",
                       help="generating function for real classes of GL_n")
    common(p, kind=False)
    p.add_argument("--terms", type=int, default=8,
                   help="highest power of t to expand (default 8)")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("enumerate", help="dump labels with reality flags")
    common(p, kind=False)
    p.add_argument("--filter", choices=("real", "zeta_real"),
                   help="restrict to real / zeta-real labels")
    p.set_defaults(func=cmd_enumerate)
    return parser


def _validate(args):
    if args.command in ("count", "verify") and not getattr(args, "all_desk",
                                                           False):
        if args.command == "count":
            for name in ("family", "n", "q"):
                if getattr(args, name) is None:
                    raise ValueError("%s needs --family, --n, --q"
                                     % args.command)
    if args.command in ("table13", "genfun", "enumerate"):
        if args.q is None:
            raise ValueError("%s needs --q" % args.command)
    if args.command == "enumerate" and args.n is None:
        raise ValueError("enumerate needs --n")
    if args.command == "count" and args.kind is None:
        args.kind = "real"
    if getattr(args, "n", None) is not None and args.n < 0:
        raise ValueError("--n must be nonnegative")


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except BudgetExceeded as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
