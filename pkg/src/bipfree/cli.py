"""Command-line front end: ``bipfree {classify,free,cliquewidth,gen,verify}``.

Exit codes: 0 success (verdict produced, pattern absent, width bound holds,
suite clean); 1 negative outcome (pattern present, ``--leq`` bound fails,
suite failures); 2 usage, input or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import classifier as clf
from .cliquewidth import cliquewidth_exact, cliquewidth_leq, format_expression
from .constructions import make_basic, make_subdivided_claw, make_wall, subdivide
from .errors import BipfreeError, ParseError
from .freeness import is_free, is_strongly_free, is_weakly_free
from .graph import BWLabelling, LabelledBipartiteGraph
from .graphio import read_graph, serialize_graph
from .suites import DEFAULT_SEED, SUITES, run_suite

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_black(text: str) -> frozenset:
    try:
        return frozenset(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"--black expects comma-separated integers, got {text!r}") from None


def _load(path: str, black: Optional[str], need_labelling: bool):
    try:
        g, lab = read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if black is not None:
        lab = BWLabelling(g.n, _parse_black(black))
        if not lab.is_valid_for(g):
            raise UsageError(f"{path}: --black is not a valid labelling")
    if need_labelling and lab is None:
        raise UsageError(f"{path}: a labelling is required (black line or --black)")
    return g, lab


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _jsonable(x):
    if isinstance(x, tuple):
        return list(x)
    return x


# ---------------------------------------------------------------- commands

def cmd_classify(args) -> int:
    labelled = args.mode != "unlabelled"
    g, lab = _load(args.file, args.black, labelled)
    if labelled:
        if args.opposite:
            lab = lab.opposite()
        v = clf.classify(LabelledBipartiteGraph(g, lab), args.mode)
    else:
        v = clf.classify_unlabelled(g)
    _emit(args, {"mode": args.mode, "verdict": v.decision, "case": v.case,
                 "witness": _jsonable(v.witness)},
          f"{v.decision} ({v.case}) witness={v.witness}")
    return EXIT_OK


def cmd_free(args) -> int:
    host, _ = _load(args.host, None, False)
    labelled = args.mode != "plain"
    h, lab = _load(args.pattern, args.black, labelled)
    if labelled:
        hl = LabelledBipartiteGraph(h, lab)
        res = is_strongly_free(host, hl) if args.mode == "strong" else is_weakly_free(host, hl)
    else:
        res = is_free(host, h)
    lab_out = sorted(res.labelling.black) if res.labelling is not None else None
    _emit(args, {"mode": args.mode, "free": res.free, "embedding": _jsonable(res.embedding),
                 "black": lab_out},
          ("free" if res.free else "present")
          + (f" embedding={res.embedding}" if res.embedding is not None else "")
          + (f" black={lab_out}" if lab_out is not None else ""))
    return EXIT_OK if res.free else EXIT_NEGATIVE


def cmd_cliquewidth(args) -> int:
    g, _ = _load(args.file, None, False)
    if args.leq is not None:
        expr = cliquewidth_leq(g, args.leq)
        width = args.leq if expr is not None else None
        code = EXIT_OK if expr is not None else EXIT_NEGATIVE
    else:
        res = cliquewidth_exact(g)
        width, expr, code = res.width, res.certificate, EXIT_OK
    cert = format_expression(expr) if (args.certificate and expr is not None) else None
    if args.leq is not None:
        text = f"cwd <= {args.leq}: {'yes' if expr is not None else 'no'}"
    else:
        text = f"cwd = {width}"
    if cert is not None:
        text += "\n" + cert
    _emit(args, {"width": width, "certificate": cert}, text)
    return code


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params
    arity = {"path": 1, "cycle": 1, "complete": 1, "star": 1, "claw": 0, "sclaw": 3, "wall": 1}
    if len(params) != arity[kind]:
        raise UsageError(f"gen {kind} takes {arity[kind]} integer argument(s)")
    if kind == "claw":
        g = make_basic("star", 3)
    elif kind == "sclaw":
        g = make_subdivided_claw(*params)
    elif kind == "wall":
        g = make_wall(params[0])
    else:
        g = make_basic(kind, params[0])
    if args.subdivide:
        g = subdivide(g, args.subdivide)
    text = serialize_graph(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = {"max_n": args.max_n, "samples": args.samples, "seed": args.seed}
    rep = run_suite(args.suite, **params)
    if args.json:
        print(json.dumps(rep.to_json()))
    else:
        print(f"{rep.suite}: {rep.checks} checks, {len(rep.failures)} failures "
              f"({rep.duration:.2f}s)")
        for f in rep.failures:
            print(f"FAIL {f.check}: {f.detail}")
            if f.reproducer:
                print(f.reproducer, end="")
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    p = argparse.ArgumentParser(prog="bipfree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="decide bounded clique-width")
    c.add_argument("--mode", required=True, choices=["unlabelled", "strong", "weak"])
    c.add_argument("file")
    c.add_argument("--opposite", action="store_true", help="swap black and white first")
    c.add_argument("--black", help="comma-separated black vertices (overrides the file)")
    c.set_defaults(func=cmd_classify)

    f = sub.add_parser("free", parents=[common], help="test (labelled) induced containment")
    f.add_argument("--mode", required=True, choices=["plain", "strong", "weak"])
    f.add_argument("host")
    f.add_argument("pattern")
    f.add_argument("--black", help="labelling of PATTERN (overrides its file)")
    f.set_defaults(func=cmd_free)

    w = sub.add_parser("cliquewidth", parents=[common], help="exact clique-width")
    w.add_argument("file")
    w.add_argument("--leq", type=int, metavar="K", help="only decide cwd <= K")
    w.add_argument("--certificate", action="store_true", help="print the k-expression")
    w.set_defaults(func=cmd_cliquewidth)

    g = sub.add_parser("gen", help="write a generated graph as a GraphFile")
    g.add_argument("kind", choices=["path", "cycle", "complete", "star", "claw", "sclaw", "wall"])
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--subdivide", type=int, default=0, metavar="K")
    g.add_argument("--out", metavar="FILE")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite",
                       description=f"Suites: {', '.join(SUITES)}. "
                                   f"Randomised suites default to seed {DEFAULT_SEED}.")
    v.add_argument("suite")
    v.add_argument("--max-n", type=int, dest="max_n")
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BipfreeError, OSError) as exc:
        print(f"bipfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
