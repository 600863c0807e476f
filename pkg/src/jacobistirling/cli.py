"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from .exactpoly import format_poly
from .jsnumbers import build_triangle
from .permutations import (JACOBI, LEGENDRE, descents, enumerate_jsp,
                           format_word)
from .posets import TooLarge, build_P_legendre, build_R, linear_extensions, subsets
from .verify import METHODS, SUITES, conjecture, descent_table, run_suite

_METHOD_ALIASES = {"gf": "gf", "rec": "rec", "recurrence": "rec",
                   "enum": "enum", "enumeration": "enum", "posets": "posets"}


class UsageError(Exception):
    pass


def render_table(kind: str, n_max: int, fmt: str) -> str:
    if not 0 <= n_max <= 25:
        raise UsageError("--nmax must lie in 0..25")
    tri = build_triangle(kind, n_max)
    if fmt == "json":
        return json.dumps([{"n": n, "k": k, "poly": p.with_var("z").to_json()}
                           for n, k, p in tri], indent=None) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "poly"])
        for n, k, p in tri:
            writer.writerow([n, k, json.dumps(p.with_var("z").to_json())])
        return buf.getvalue()
    return "".join(f"{n} {k} {format_poly(p)}\n" for n, k, p in tri)


def render_akt(k_max: int, method: str, fmt: str, i_max: int | None = None) -> str:
    method = _METHOD_ALIASES.get(method, method)
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}")
    if k_max < 0:
        raise UsageError("--kmax must be nonnegative")
    table = descent_table(k_max, method)
    keys = sorted(key for key in table if i_max is None or key[1] <= i_max)
    if fmt == "json":
        return "".join(json.dumps({"k": k, "i": i, "A": table[k, i].to_json()}) + "\n"
                       for k, i in keys)
    if fmt == "csv":
        return "k,i,A\n" + "".join(f"{k},{i},{format_poly(table[k, i])}\n" for k, i in keys)
    return "".join(f"A[{k},{i}] = {format_poly(table[k, i])}\n" for k, i in keys)


def _parse_subset(text: str | None) -> frozenset:
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"bad subset {text!r}")


def render_poset(family: str, k: int, S: frozenset, emit: str):
    P = build_R(k, S) if family == "R" else build_P_legendre(k)
    if emit == "covers":
        yield from (f"{a}<{b}\n" for a, b in sorted(P.covers))
    else:
        yield from (" ".join(map(str, w)) + "\n" for w in linear_extensions(P))


def render_jsp(k: int, i: int, stat: str, emit: str):
    if not 0 <= i <= k:
        raise UsageError("need 0 <= i <= k")
    words = (w for S in subsets(k, i) for w in enumerate_jsp(k, S))
    if emit == "words":
        yield from (format_word(w) + "\n" for w in words)
        return
    hist = {}
    for w in words:
        j = descents(w, stat) + 1
        hist[j] = hist.get(j, 0) + 1
    yield from (f"{j} {hist[j]}\n" for j in sorted(hist))


@contextmanager
def _output(path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh
    else:
        yield sys.stdout


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jstirling",
                                     description="Jacobi-Stirling numbers and descent polynomials")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jstab", parents=[common], help="triangle of JS(n,k;z) or js(n,k;z)")
    p.add_argument("--kind", choices=("second", "first"), default="second")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("akt", parents=[common], help="descent polynomials A_{k,i}(t)")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--imax", type=int, default=None, help="only rows with i <= IMAX")
    p.add_argument("--method", default="rec",
                   choices=sorted(_METHOD_ALIASES))
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("poset", parents=[common], help="Jacobi-Stirling (R) or Legendre-Stirling (P) posets")
    p.add_argument("--family", choices=("R", "P"), default="R")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--S", default="", help="comma-separated subset of [k] (family R)")
    p.add_argument("--emit", choices=("covers", "extensions"), default="covers")

    p = sub.add_parser("jsp", parents=[common], help="Jacobi-Stirling permutations")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--stat", choices=(JACOBI, LEGENDRE), default=JACOBI)
    p.add_argument("--emit", choices=("words", "histogram"), default="histogram")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--kmax", type=int, default=None, help="override the suite's default bound")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("conjecture", parents=[common], help="real-rootedness and unimodality of A_{k,i}")
    p.add_argument("--kmax", type=int, default=9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            return _dispatch(args, out)
    except (UsageError, TooLarge, ValueError) as exc:
        print(f"jstirling: error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "jstab":
        out.write(render_table(args.kind, args.nmax, args.format))
    elif cmd == "akt":
        out.write(render_akt(args.kmax, args.method, args.format, args.imax))
    elif cmd == "poset":
        if args.k < 1:
            raise UsageError("--k must be at least 1")
        S = _parse_subset(args.S)
        for line in render_poset(args.family, args.k, S, args.emit):
            out.write(line)
    elif cmd == "jsp":
        for line in render_jsp(args.k, args.i, args.stat, args.emit):
            out.write(line)
    elif cmd == "verify":
        report = run_suite(args.suite, args.kmax)
        out.write((json.dumps(report.to_json()) if args.format == "json" else report.render()) + "\n")
        return 0 if report.ok else 1
    elif cmd == "conjecture":
        if args.kmax < 0:
            raise UsageError("--kmax must be nonnegative")
        report, rows = conjecture(args.kmax)
        if args.format == "json":
            out.write(json.dumps({"report": report.to_json(), "rows": rows}) + "\n")
        else:
            for row in rows:
                out.write(f"A[{row['k']},{row['i']}] real_rooted={row['real_rooted']} "
                          f"unimodal={row['unimodal']}\n")
            out.write(report.render() + "\n")
        return 0 if report.ok else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
