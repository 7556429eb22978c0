"""Command-line interface: walkdet, verify sweeps, family chains.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
parse errors.
"""

import argparse
import json
import multiprocessing
import os
import sys

from . import family as family_mod
from . import resultants, verify
from .graphs import (
    Graph6Error,
    enumerate_graphs,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
)
from .matrix import adjacency_det, walk_det
from .reports import TSV_HEADER


class UsageError(Exception):
    pass


def _parse_range(text):
    """"a..b" or "a" as an inclusive integer range."""
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _read_graphs(args):
    """Graphs from --graph, --input (graph6 lines or one edge list), or --sweep."""
    if getattr(args, "sweep", None):
        text = args.sweep.replace(" ", "")
        if not text.startswith("n<="):
            raise UsageError("--sweep expects the form n<=K")
        cap = int(text[3:])
        if not (1 <= cap <= 6):
            raise UsageError("--sweep supports n<=6 at most")
        out = []
        for n in range(1, cap + 1):
            out.extend(enumerate_graphs(n))
        return out
    if args.graph:
        return [graph6_decode(args.graph)]
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError(f"no graphs in {args.input}")
        if lines[0].strip().isdigit():
            return [parse_edge_list(text)]
        return [graph6_decode(ln) for ln in lines]
    raise UsageError("no graph source: use --graph, --input, or --sweep")


def _emit(reports, args):
    out = sys.stdout if not args.out else open(args.out, "w")
    try:
        if args.format == "tsv":
            print(TSV_HEADER, file=out)
            for r in reports:
                print(r.to_tsv(), file=out)
        else:
            for r in reports:
                print(r.to_json(), file=out)
    finally:
        if args.out:
            out.close()


def cmd_walkdet(args):
    try:
        g = _read_graphs(args)[0]
    except (Graph6Error, ValueError, OSError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    det_w = walk_det(g)
    if det_w == 0:
        v2 = "inf"
    else:
        v2, d = 0, det_w
        while d % 2 == 0:
            d //= 2
            v2 += 1
    record = {
        "graph6": graph6_encode(g),
        "n": g.n,
        "detA": str(adjacency_det(g)),
        "detW": str(det_w),
        "v2_detW": str(v2),
    }
    if args.format == "tsv":
        print("\t".join(record))
        print("\t".join(str(v) for v in record.values()))
    else:
        print(json.dumps(record))
    return 0


_GRAPH_CHECKS = {
    "main": lambda g, m, ell, args: verify.verify_main(g, m, ell),
    "charpoly": lambda g, m, ell, args: verify.verify_charpoly_factorization(g, m, ell),
    "spectrum": lambda g, m, ell, args: verify.verify_simple_spectrum_iff(g, m, ell),
    "detA": lambda g, m, ell, args: family_mod.verify_detA_closure(g, m, ell),
    "eigenpairs": lambda g, m, ell, args: verify.numeric_eigenpairs(
        g, m, ell, tol=args.tol_resid
    )[1],
    "vandermonde": lambda g, m, ell, args: verify.numeric_fk_vandermonde(
        g, m, ell, tol=args.tol_rel
    ),
}


def _run_instance(spec):
    kind, payload = spec
    if kind == "res1":
        return resultants.verify_res1(*payload)
    if kind == "res2":
        return resultants.verify_res2(*payload)
    check, g6, m, ell, tol_resid, tol_rel = payload
    ns = argparse.Namespace(tol_resid=tol_resid, tol_rel=tol_rel)
    g = graph6_decode(g6)
    if check == "walkdet-numeric":
        return verify.numeric_walkdet(g, tol=tol_rel)
    return _GRAPH_CHECKS[check](g, m, ell, ns)


def cmd_verify(args):
    try:
        if args.tol_resid <= 0 or args.tol_rel <= 0:
            raise UsageError("tolerances must be positive")
        checks = [c for c in args.checks.split(",") if c]
        for c in checks:
            if c not in _GRAPH_CHECKS and c != "walkdet-numeric":
                raise UsageError(f"unknown check {c!r}")
        m_range = _parse_range(args.m) if args.m else range(2, 6)
        instances = []
        if args.res1 or args.res2:
            for m in m_range:
                ells = (
                    _parse_range(args.ell)
                    if args.ell and args.ell != "all"
                    else range(1, (m + 1) // 2 + 1)
                )
                for ell in ells:
                    if args.res1:
                        instances.append(("res1", (m, ell)))
                    if args.res2:
                        instances.append(("res2", (m, ell)))
        needs_graphs = bool(checks) and not (args.res1 or args.res2) or (
            args.graph or args.input or args.sweep
        )
        if needs_graphs and (args.graph or args.input or args.sweep):
            graphs = _read_graphs(args)
            # these checks need a graph with at least two vertices
            needs_two = {"main", "spectrum"}
            for g in graphs:
                g6 = graph6_encode(g)
                for m in m_range:
                    ells = (
                        _parse_range(args.ell)
                        if args.ell and args.ell != "all"
                        else range(1, (m + 1) // 2 + 1)
                    )
                    for ell in ells:
                        for check in checks:
                            if g.n < 2 and check in needs_two:
                                continue
                            instances.append(
                                (
                                    "graph",
                                    (check, g6, m, ell, args.tol_resid, args.tol_rel),
                                )
                            )
        if not instances:
            raise UsageError("nothing to verify (no graph source and no --res1/--res2)")
    except (Graph6Error, ValueError, OSError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    workers = args.workers
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            reports = pool.map(_run_instance, instances)
    else:
        reports = [_run_instance(spec) for spec in instances]
    if args.sorted:
        reports.sort(key=lambda r: (r.check, r.graph6 or "", r.m or 0, r.ell or 0))
    _emit(reports, args)
    return 1 if any(r.failed for r in reports) else 0


def _parse_steps(text):
    steps = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        m_s, ell_s = part.split(":", 1)
        steps.append(family_mod.FamilyStep(int(m_s), int(ell_s)))
    if not steps:
        raise UsageError("no steps given")
    return steps


def cmd_family(args):
    try:
        g = _read_graphs(args)[0]
        steps = _parse_steps(args.steps)
    except (Graph6Error, ValueError, OSError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    seed_cert = family_mod.f_member(g)
    if not seed_cert.member:
        print(json.dumps(seed_cert.to_dict()))
        print("error: seed graph is not in F", file=sys.stderr)
        return 2
    try:
        chain = family_mod.build_family(g, steps, vertex_budget=args.budget)
    except family_mod.FamilyClosureError as exc:
        print(json.dumps(exc.membership.to_dict()))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for level, (_, cert) in enumerate(chain):
        record = {"level": level, **cert.to_dict()}
        print(json.dumps(record))
    return 0


def _add_common(p):
    p.add_argument("--graph", help="inline graph6 string")
    p.add_argument("--input", help="file with graph6 lines or one edge list")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--out", help="write the report stream to this path")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="walkmat",
        description="Exact walk-matrix determinants of rooted products with paths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_walk = sub.add_parser("walkdet", help="print n, det A, det W, v2(det W)")
    _add_common(p_walk)
    p_walk.set_defaults(func=cmd_walkdet)

    p_ver = sub.add_parser("verify", help="run theorem checks, emit report lines")
    _add_common(p_ver)
    p_ver.add_argument("--sweep", help="all labeled graphs, form n<=K (K<=6)")
    p_ver.add_argument("--m", help="path length range a..b", default="2..5")
    p_ver.add_argument("--ell", help="root range a..b, or 'all' valid", default="all")
    p_ver.add_argument(
        "--checks",
        default="main",
        help="comma list: main,charpoly,spectrum,detA,eigenpairs,vandermonde,walkdet-numeric",
    )
    p_ver.add_argument("--res1", action="store_true", help="resultant identity 1")
    p_ver.add_argument("--res2", action="store_true", help="resultant identity 2")
    p_ver.add_argument("--tol-resid", type=float, default=1e-8)
    p_ver.add_argument("--tol-rel", type=float, default=1e-6)
    p_ver.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("WALKMAT_WORKERS", "1")),
    )
    p_ver.add_argument("--sorted", action="store_true", help="buffer and order output")
    p_ver.set_defaults(func=cmd_verify)

    p_fam = sub.add_parser("family", help="iterated rooted-product chain from a seed")
    _add_common(p_fam)
    p_fam.add_argument("--steps", required=True, help='steps as "m:ell,m:ell,..."')
    p_fam.add_argument("--budget", type=int, default=200, help="vertex budget")
    p_fam.set_defaults(func=cmd_family)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit status 2 for usage errors already
        raise exc
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
