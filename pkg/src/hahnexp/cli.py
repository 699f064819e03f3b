"""Command line front end: ``hahnexp eval|check|rank|selftest``."""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .chain import StageOverflowError
from .config import Config
from .explog import LogContext, LogDomainError, exp, log
from .parsing import Node, ParseError, parse_expr, render_series
from .series import Series


class EvalError(ValueError):
    def __init__(self, message: str, subexpression: str):
        super().__init__(f"{message} (in {subexpression!r})")
        self.subexpression = subexpression


def evaluate(node: Node, ctx: LogContext, text: str) -> Series:
    """Evaluate a parsed expression; domain errors name the failing subexpression."""
    if node.kind == "const":
        return node.value
    args = [evaluate(a, ctx, text) for a in node.args]
    try:
        if node.kind == "neg":
            return -args[0]
        if node.kind == "add":
            return args[0] + args[1]
        if node.kind == "sub":
            return args[0] - args[1]
        if node.kind == "mul":
            with ctx.backend.scope():
                return args[0] * args[1]
        if node.kind == "log":
            return log(ctx, args[0])
        if node.kind == "exp":
            return exp(ctx, args[0])
    except (LogDomainError, StageOverflowError) as exc:
        raise EvalError(str(exc), text[node.start:node.end].strip()) from exc
    raise ValueError(f"unknown node kind {node.kind!r}")


def _index_set(text: str) -> frozenset:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated indices, got {text!r}")


def _add_config_flags(p: argparse.ArgumentParser):
    d = Config()
    p.add_argument("--taylor-order", type=int, default=d.taylor_order)
    p.add_argument("--max-stage", type=int, default=d.max_stage)
    p.add_argument("--beta", type=int, default=d.beta)
    p.add_argument("--S", dest="S", type=_index_set, default=frozenset(),
                   help="indices i,j,k of fibers lifted to rank one")
    p.add_argument("--scalar", choices=("rational", "decimal"), default=d.scalar)
    p.add_argument("--precision", type=int, default=d.precision)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--samples", type=int, default=d.samples)
    p.add_argument("--n-max", type=int, default=d.n_max)
    p.add_argument("--format", choices=("text", "structured"), default=d.format)
    p.add_argument("--identity-sigma", action="store_true",
                   help="use the identity automorphism (negative control)")
    p.add_argument("--n", type=int, default=d.n, help="iteration depth for 'check iterate'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hahnexp",
        description="Exponential-logarithmic power series over iterated lexicographic powers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    _add_config_flags(p)

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument("suite", choices=checks.SUITES)
    _add_config_flags(p)

    p = sub.add_parser("rank", help="rank experiments")
    p.add_argument("mode", choices=("word", "pairs", "classify"))
    _add_config_flags(p)

    p = sub.add_parser("selftest", help="run every suite")
    _add_config_flags(p)
    return parser


def config_from_args(args) -> Config:
    return Config(taylor_order=args.taylor_order, max_stage=args.max_stage,
                  beta=args.beta, S=args.S, scalar=args.scalar,
                  precision=args.precision, seed=args.seed, samples=args.samples,
                  n_max=args.n_max, format=args.format,
                  identity_sigma=args.identity_sigma, n=args.n)


def emit(reports, cfg: Config, out) -> int:
    if cfg.format == "structured":
        doc = {"config": cfg.echo(), "reports": [r.as_dict() for r in reports],
               "ok": all(r.ok for r in reports)}
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.text() + "\n")
    return 0 if all(r.ok for r in reports) else 1


def cmd_eval(cfg: Config, text: str, out) -> int:
    ctx = cfg.log_context()
    node = parse_expr(text, cfg.backend, cfg.max_stage)
    value = evaluate(node, ctx, text)
    if cfg.format == "structured":
        out.write(json.dumps({"expr": text, "value": render_series(value)}, sort_keys=True) + "\n")
    else:
        out.write(render_series(value) + "\n")
    return 0


def cmd_rank(cfg: Config, mode: str, out) -> int:
    if mode == "word":
        word = checks.rank_word(cfg)
        if cfg.format == "structured":
            out.write(json.dumps({"config": cfg.echo(), "word": word}, sort_keys=True) + "\n")
        else:
            out.write(word + "\n")
        return 0
    rep = checks.rank_pairs(cfg) if mode == "pairs" else checks.rank_classify(cfg)
    return emit([rep], cfg, out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "eval":
            return cmd_eval(cfg, args.expr, out)
        if args.command == "check":
            return emit([checks.run_suite(args.suite, cfg)], cfg, out)
        if args.command == "rank":
            return cmd_rank(cfg, args.mode, out)
        return emit(checks.selftest(cfg), cfg, out)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except (EvalError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
