"""Command-line interface.

Exit codes: 0 when no check fails (flags allowed), 1 when any check
fails, 2 on process errors (bad arguments, unreadable manifests, I/O).
"""
from __future__ import annotations

import argparse
import os
import sys

from .audit import AuditOptions, run_audit
from .builtins import builtin_names, list_builtins, load_builtin
from .geometry import GeometryError, koszul_connection, riemann
from .manifest import Manifest, ManifestError, load_manifest
from .paracontact import classify_nullity, compute_h, verify_structure_axioms
from .report import render_json, render_text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parageo",
        description="exact audits of frame-presented pseudo-Riemannian "
                    "manifolds with paracontact structure")
    sub = parser.add_subparsers(dest="command", required=True)

    audit = sub.add_parser("audit", help="run the full audit on a manifest "
                                         "file or builtin")
    audit.add_argument("target", help="manifest path, builtin name, or the "
                                      "word 'builtin' followed by a name")
    audit.add_argument("name", nargs="?", default=None,
                       help="builtin name when target is 'builtin'")
    _report_options(audit)

    check = sub.add_parser("check-structure",
                           help="verify the structure axioms only")
    check.add_argument("target", help="manifest path or builtin name")

    classify = sub.add_parser("classify",
                              help="print the nullity classification")
    classify.add_argument("target", help="manifest path or builtin name")

    builtin = sub.add_parser("builtin", help="describe or audit a builtin "
                                             "manifest")
    builtin.add_argument("name", help="builtin name")
    builtin.add_argument("--audit", action="store_true",
                         help="run the full audit instead of describing")
    _report_options(builtin)

    sub.add_parser("list-builtins", help="list the builtin corpus")
    return parser


def _report_options(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the report to a file "
                                               "instead of stdout")
    p.add_argument("--numeric-samples", type=int, default=10,
                   help="sample count for the sampled-numeric mode")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the sampled-numeric mode")


def _resolve(target: str) -> Manifest:
    if os.path.exists(target):
        return load_manifest(target)
    if target in builtin_names():
        return load_builtin(target)
    raise ManifestError(f"{target!r} is neither a manifest file nor a "
                        "builtin name")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run_audit_command(man: Manifest, args) -> int:
    if args.numeric_samples < 1:
        raise ManifestError("--numeric-samples must be at least 1")
    opts = AuditOptions(numeric_samples=args.numeric_samples, seed=args.seed)
    report = run_audit(man, opts)
    text = render_json(report) if args.format == "json" \
        else render_text(report)
    _emit(text, args.out)
    return report.exit_code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "audit":
            if args.target == "builtin":
                if args.name is None:
                    raise ManifestError("audit builtin needs a builtin name")
                man = load_builtin(args.name)
            elif args.name is not None:
                raise ManifestError("unexpected extra argument "
                                    f"{args.name!r}")
            else:
                man = _resolve(args.target)
            return _run_audit_command(man, args)

        if args.command == "check-structure":
            man = _resolve(args.target)
            if man.structure is None:
                print(f"{man.name}: no structure section declared")
                return 2
            failed = 0
            for outcome in verify_structure_axioms(man.structure):
                mark = "PASS" if outcome.holds else "FAIL"
                print(f"[{mark}] {outcome.name}: {outcome.statement}")
                for w in outcome.witnesses:
                    print(f"    witness: {w}")
                failed += 0 if outcome.holds else 1
            return 1 if failed else 0

        if args.command == "classify":
            man = _resolve(args.target)
            if man.structure is None:
                print(f"{man.name}: no structure section declared")
                return 2
            conn = koszul_connection(man.metric)
            hres = compute_h(man.structure, conn)
            cls = classify_nullity(man.structure, riemann(conn), hres.h)
            print(f"{man.name}: class {cls.cls}")
            print(f"  k = {cls.k}")
            print(f"  mu = {cls.mu}"
                  + (" (indeterminate, pinned to 0)"
                     if cls.mu_indeterminate else ""))
            print(f"  h vanishes: {cls.k_paracontact}")
            for note in cls.notes:
                print(f"  note: {note}")
            for w in cls.witnesses:
                print(f"  witness: {w}")
            return 0

        if args.command == "builtin":
            if args.audit:
                return _run_audit_command(load_builtin(args.name), args)
            man = load_builtin(args.name)
            print(f"name: {man.name}")
            print(f"description: {man.description}")
            print(f"coordinates: {', '.join(man.chart.coords)}")
            d = man.dim
            for i in range(d):
                comps = ", ".join(str(c)
                                  for c in man.metric.frame.vectors[i].comps)
                print(f"e{i + 1} = ({comps})")
            for i in range(d):
                row = ", ".join(str(man.metric.G[i][j]) for j in range(d))
                print(f"g[{i + 1}] = ({row})")
            print(f"structure: {'yes' if man.structure else 'no'}")
            if man.fields:
                print("fields: " + ", ".join(man.fields))
            if man.claims:
                print("claims: " + ", ".join(sorted(man.claims)))
            return 0

        if args.command == "list-builtins":
            for name, description in list_builtins():
                print(f"{name}: {description}")
            return 0

        raise ManifestError(f"unknown command {args.command!r}")
    except (ManifestError, GeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
