"""Command-line entry point: ``ablgirth <command> ...``.

Exit codes: 0 success, 1 usage error, 2 unreadable input, 3 search budget
exhausted, 4 certificate verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
from pathlib import Path

from .abelian import abl_oracle, abelian_girth, structural_bound
from .certificates import (
    Certificate,
    CertificateError,
    certificate_from_result,
    read_certificate_text,
    verify_certificate,
    write_certificate,
)
from .experiments import rows_to_csv, run_experiment
from .generators import (
    complete,
    cycle,
    make_barbell,
    make_figure_eight,
    make_theta,
    petersen,
    random_regular,
)
from .girth import girth
from .graph import GraphFormatError, read_edge_list, write_edge_list
from .lps import LpsSearchBudgetExceeded, build_lps, certify_lps_abl
from .moore import certify_abl_upper
from .walks import format_darts

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _fmt(x) -> str:
    return "inf" if x == math.inf else str(int(x))


def _load(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise GraphFormatError(f"{path}: {exc.strerror}") from None


def cmd_girth(args) -> int:
    g = _load(args.graph)
    res = girth(g)
    print(f"girth {_fmt(res.value)}")
    if res.witness is not None:
        print(f"cycle {format_darts(res.witness.steps)}")
    return 0


def cmd_abl(args) -> int:
    g = _load(args.graph)
    cert_path = args.cert or f"{args.graph}.abl.cert"
    if args.mode == "exact":
        res = abelian_girth(g)
        cert = certificate_from_result(res)
        print(f"abl {_fmt(res.value)}")
        print(f"lower {res.lower_bound_used}")
    elif args.mode == "upper":
        w = structural_bound(g)
        if w is None:
            print("no structural witness found", file=sys.stderr)
            return EXIT_BUDGET
        cert = Certificate(w.bound, w)
        print(f"abl <= {w.bound}")
    else:
        max_len = args.max_len if args.max_len is not None else 4 * g.edge_count
        res = abl_oracle(g, max_len)
        if not res.is_finite:
            print(f"abl > {max_len}")
            return EXIT_BUDGET
        cert = certificate_from_result(res)
        print(f"abl {_fmt(res.value)}")
    write_certificate(cert_path, cert, [f"graph {args.graph}"])
    print(f"certificate {cert_path}")
    return 0


def cmd_moore(args) -> int:
    g = _load(args.graph)
    try:
        mc = certify_abl_upper(g, args.vertex)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cert_path = args.cert or f"{args.graph}.moore.cert"
    write_certificate(cert_path, Certificate(mc.bound, mc), [f"graph {args.graph}"])
    limit = (4 if len(mc.walks) == 2 else 6) * mc.h
    print(f"h {mc.h}")
    print(f"meeting vertex {mc.meeting_vertex}")
    print(f"abl <= {mc.bound} (limit {limit})")
    print(f"certificate {cert_path}")
    return 0


def _write_lps(p: int, q: int, out: str, budget: int) -> int:
    lps = build_lps(p, q)
    params = lps.params
    write_edge_list(lps.graph, out, [f"LPS graph p={p} q={q}"])
    rep = certify_lps_abl(lps, budget)
    cert_path = f"{out}.abl.cert"
    if rep.certificate is not None:
        write_certificate(cert_path, Certificate(rep.certificate.bound, rep.certificate), [f"LPS p={p} q={q}"])
    meta = {
        "p": p, "q": q, "n": lps.n, "d": params.degree, "legendre": params.legendre_pq,
        "bipartite": params.bipartite, "r0": params.r0,
        "certificate": cert_path if rep.certificate is not None else None,
        "abl_upper": rep.certificate.bound if rep.certificate is not None else None,
        "abl_limit": rep.bound_limit, "log_bound": round(rep.log_bound, 4),
        "notes": lps.notes(),
    }
    with open(f"{out}.meta.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")
    for note in lps.notes():
        print(f"note: {note}")
    print(f"n {lps.n} d {params.degree} r0 {params.r0}")
    if rep.falsified:
        print(f"no three closed NB walks of length {rep.length} at the identity")
        return 0
    print(f"abl <= {rep.certificate.bound} (8 r0 = {rep.bound_limit}; (16/3) log_p n = {rep.log_bound:.4f})")
    print(f"certificate {cert_path}")
    return 0


def cmd_gen(args) -> int:
    fam = args.family
    p = args.params
    need = {"cycle": 1, "complete": 1, "petersen": 0, "theta": 3, "figure-eight": 2, "barbell": 3, "random-regular": 2, "lps": 2}
    if len(p) != need[fam]:
        raise UsageError(f"{fam} takes {need[fam]} integer parameter(s)")
    if fam == "lps":
        return _write_lps(p[0], p[1], args.out, args.budget)
    if fam == "random-regular":
        if args.seed is None:
            raise UsageError("--seed is required for random families")
        g = random_regular(p[0], p[1], args.seed)
    else:
        ctor = {"cycle": cycle, "complete": complete, "petersen": petersen, "theta": make_theta,
                "figure-eight": make_figure_eight, "barbell": make_barbell}[fam]
        g = ctor(*p)
    comment = f"{fam} {' '.join(map(str, p))}" + (f" seed {args.seed}" if args.seed is not None else "")
    write_edge_list(g, args.out, [comment])
    print(f"wrote {args.out} (v {g.vertex_count}, e {g.edge_count})")
    return 0


def cmd_lps(args) -> int:
    out = args.out or f"lps-{args.p}-{args.q}.graph"
    return _write_lps(args.p, args.q, out, args.budget)


def cmd_verify(args) -> int:
    g = _load(args.graph)
    try:
        text = read_certificate_text(args.cert)
    except OSError as exc:
        raise GraphFormatError(f"{args.cert}: {exc.strerror}") from None
    problems = verify_certificate(text, g)
    if problems:
        for prob in problems:
            print(f"FAIL {prob}")
        return EXIT_VERIFY
    print("OK")
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_experiment(args) -> int:
    if args.family != "random-regular":
        raise UsageError("only the random-regular family is supported")
    seeds = range(args.seed, args.seed + args.seeds)
    if args.cert_dir:
        Path(args.cert_dir).mkdir(parents=True, exist_ok=True)
    rows = run_experiment(args.n, args.d, seeds, args.exact_max_n, args.timing, args.cert_dir, args.workers)
    text = rows_to_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    log_base = args.d - 1
    for n in args.n:
        sub = [r for r in rows if r.n == n]
        ratio = statistics.median(r.moore_bound / math.log2(n) for r in sub)
        print(f"n {n}: median moore_bound/log2(n) {ratio:.4f}; median ratio_abl (log base {log_base}) "
              f"{statistics.median(r.ratio_abl for r in sub):.4f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ablgirth", description="Girth and abelian girth of finite multigraphs.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("girth", help="girth of an edge-list graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_girth)

    s = sub.add_parser("abl", help="abelian girth with a certificate")
    s.add_argument("graph")
    s.add_argument("--mode", choices=["exact", "upper", "oracle"], default="exact")
    s.add_argument("--max-len", type=int, default=None, help="oracle horizon (oracle mode)")
    s.add_argument("--cert", default=None, help="certificate path (default <graph>.abl.cert)")
    s.set_defaults(func=cmd_abl)

    s = sub.add_parser("moore", help="Moore-type abelian girth upper bound")
    s.add_argument("graph")
    s.add_argument("--vertex", type=int, default=0)
    s.add_argument("--cert", default=None)
    s.set_defaults(func=cmd_moore)

    s = sub.add_parser("gen", help="write a graph family in edge-list format")
    s.add_argument("family", choices=["cycle", "complete", "petersen", "theta", "figure-eight", "barbell", "random-regular", "lps"])
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out", required=True)
    s.add_argument("--budget", type=int, default=50_000_000, help="walk-search budget (lps)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("lps", help="build X^{p,q} and certify its abelian girth bound")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--out", default=None)
    s.add_argument("--budget", type=int, default=50_000_000)
    s.set_defaults(func=cmd_lps)

    s = sub.add_parser("verify", help="replay a certificate against a graph")
    s.add_argument("cert")
    s.add_argument("graph")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("experiment", help="sweep random regular graphs to CSV")
    s.add_argument("--family", default="random-regular")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=_int_list, required=True)
    s.add_argument("--seeds", type=int, default=20, help="number of seeds")
    s.add_argument("--seed", type=int, default=0, help="first seed")
    s.add_argument("--csv", default=None)
    s.add_argument("--exact-max-n", type=int, default=20)
    s.add_argument("--timing", action="store_true", help="fill runtime_ms (makes output non-reproducible)")
    s.add_argument("--cert-dir", default=None)
    s.add_argument("--workers", type=int, default=None, help="default: $ABLGIRTH_WORKERS or all cores")
    s.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ablgirth: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, CertificateError) as exc:
        print(f"ablgirth: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LpsSearchBudgetExceeded as exc:
        print(f"ablgirth: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"ablgirth: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
