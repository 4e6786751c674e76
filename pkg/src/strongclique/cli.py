"""Command line entry point: ``python -m strongclique <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions as C
from .core import GraphError, format_multigraph, parse_multigraph
from .decompose import check_decomposition, decompose, decomposition_json, parse_weighting

log = logging.getLogger("strongclique")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "gkd":
        con = C.gkd(args.k, args.delta)
    elif fam == "skd":
        con = C.skd(args.k, args.delta)
    elif fam == "blowc5":
        con = C.blown_c5(args.t)
    elif fam == "bipartite-pendant":
        con = C.bipartite_pendant(args.k, args.delta)
    elif fam == "clique-pendant":
        con = C.clique_pendant(args.k, args.delta)
    elif fam == "shannon":
        con = C.shannon_triangle(args.m)
    else:
        con = C.random_series_parallel(args.budget, args.m, args.seed, args.max_instances)
    text = format_multigraph(con.graph)
    claims = ", ".join(f"{k}={v}" for k, v in con.claims.items())
    if claims:
        text = f"# claims: {claims}\n" + text
    _write(text, args.output)
    return 0


def cmd_solve(args) -> int:
    from .solvers import fractional_strong_chromatic_index, strong_chromatic_index, strong_clique_number

    g = parse_multigraph(_read(args.file))
    out = {"n": g.n, "instances": g.size, "max_degree": g.max_degree()}
    omega, witness = strong_clique_number(g)
    out["strong_clique"] = omega
    out["strong_clique_witness"] = [list(x) for x in witness]
    if args.chromatic:
        out["strong_chromatic_index"] = strong_chromatic_index(g, args.limit)[0]
    if args.fractional:
        out["fractional_strong_chromatic_index"] = _q(fractional_strong_chromatic_index(g))
    _write(json.dumps(out, indent=2) + "\n", args.output)
    return 0


def cmd_k4color(args) -> int:
    from .k4color import parse_subset, strong_colour_k4

    g = parse_multigraph(_read(args.file))
    A = parse_subset(Path(args.subset).read_text(), g) if args.subset else None
    col = strong_colour_k4(g, A)
    _write(json.dumps(col.to_json(), indent=2) + "\n", args.output)
    return 0


def cmd_decompose(args) -> int:
    w = parse_weighting(_read(args.file))
    d = decompose(w, method=args.method)
    problems = check_decomposition(d)
    if problems:
        log.error("decomposition invariants failed: %s", "; ".join(problems))
        return 1
    _write(decomposition_json(d) + "\n", args.output)
    return 0


def cmd_fractional(args) -> int:
    from .fractional import assemble, conjecture51_probe, finite_d_trend, reduce_and_colour

    g = parse_multigraph(_read(args.file))
    lam = Fraction(args.lam) if args.lam else Fraction(3, 2) * (args.k - 2)
    parts = reduce_and_colour(g)
    a = assemble(g, parts, lam)
    cert = a.certify()
    out = a.to_json()
    out["certificate"] = {k: (_q(v) if isinstance(v, Fraction) else v) for k, v in cert.items()}
    out["parts"] = [{"delta": _q(pc.reduced.delta), "total": _q(pc.total), "colouring": pc.to_json()} for pc in parts]
    probes = []
    for pc in parts:
        rep = conjecture51_probe(pc.reduced.graph, pc.reduced.A, args.k)
        probes.append(rep.to_json())
    out["conjecture_probes"] = probes
    if args.trend and parts:
        ri = parts[0].reduced
        out["finite_d_trend"] = [{k: (_q(v) if isinstance(v, Fraction) else v) for k, v in row.items()} for row in finite_d_trend(ri.graph, ri.A)]
    _write(json.dumps(out, indent=2) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    from .verify import REGISTRY, reports_json, run_suite, summary, theorem_failures

    if args.claim and args.claim not in REGISTRY:
        log.error("unknown claim %r; known claims: %s", args.claim, ", ".join(REGISTRY))
        return 2
    reports = run_suite(args.suite, args.seed, args.claim, progress=lambda m: log.info("%s", m))
    for r in reports:
        if args.verbose or r.verdict in ("fail", "finding"):
            print(r.line())
    for claim, counts in summary(reports).items():
        print(f"{claim:24s} " + " ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    if args.json:
        Path(args.json).write_text(reports_json(reports) + "\n")
    failed = theorem_failures(reports)
    if failed:
        print(f"{len(failed)} theorem-status check(s) FAILED", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongclique", description="Strong cliques and strong edge-colourings of multigraphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write an explicit family member in the text format")
    c.add_argument("--family", required=True, choices=sorted(C.FAMILIES))
    c.add_argument("--k", type=int, default=4)
    c.add_argument("--delta", type=int, default=5)
    c.add_argument("--t", type=int, default=1)
    c.add_argument("--m", type=int, default=2, help="multiplicity (shannon) or maximum multiplicity (random-sp)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--budget", type=int, default=10, help="edge budget for random-sp")
    c.add_argument("--max-instances", type=int, default=None)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("solve", help="exact strong clique number (and optionally colouring parameters)")
    s.add_argument("file")
    s.add_argument("--chromatic", action="store_true")
    s.add_argument("--fractional", action="store_true")
    s.add_argument("--limit", type=int, default=40)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    k = sub.add_parser("k4color", help="strong-colour a K4-minor-free multigraph with at most 3*Delta_A colours")
    k.add_argument("file")
    k.add_argument("--subset", help="file of 'e u v m' lines: the first m copies of uv form A")
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_k4color)

    d = sub.add_parser("decompose", help="decompose a weighting file into odd-cycle / single-edge parts")
    d.add_argument("file")
    d.add_argument("--method", choices=("peel", "tree"), default="peel")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_decompose)

    f = sub.add_parser("fractional", help="assemble a fractional strong colouring from reduced parts")
    f.add_argument("file")
    f.add_argument("--k", type=int, default=4)
    f.add_argument("--lam", help="lambda as a rational; default (3/2)(k-2)")
    f.add_argument("--trend", action="store_true", help="also report chi_2f(G_D)/D for D = 2, 4, 8 on the first part")
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_fractional)

    v = sub.add_parser("verify", help="run the claim harness")
    v.add_argument("--claim")
    v.add_argument("--suite", choices=("smoke", "full"), default="smoke")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (GraphError, ValueError) as exc:
        log.error("error: %s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
