"""Command-line front end: ``skeinpoly {eval,batch,reduce,check}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import reduce_to_band_form
from .braid import BraidParseError, BraidWord, closure_components, parse
from .checks import run_suites
from .evaluator import (
    SPECS,
    eval_fixed_mu_alexander,
    eval_fixed_mu_skein,
    eval_general,
)
from .rings import LaurentPoly, NotInteger

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
INVARIANTS = ("homfly", "jones", "alexander")


@dataclass
class JobConfig:
    command: str
    invariant: str = "all"
    algorithm: str = "general"
    braid: str | None = None
    strands: int | None = None
    input: str | None = None
    format: str = "text"
    seed: int = 0
    cases: int = 100
    oracles: bool = False

    def __post_init__(self):
        if self.algorithm == "fixed-mu" and self.invariant == "all":
            raise ValueError("--algorithm fixed-mu needs a single --invariant")

    def selected(self) -> list[str]:
        return list(INVARIANTS) if self.invariant == "all" else [self.invariant]


def evaluate(beta: BraidWord, name: str, algorithm: str = "general") -> LaurentPoly:
    spec = SPECS[name]
    if algorithm == "general":
        return eval_general(beta, spec)
    if name == "alexander":
        return eval_fixed_mu_alexander(beta)
    return eval_fixed_mu_skein(beta, spec)


def _parse_braid(cfg: JobConfig) -> BraidWord:
    return parse(cfg.braid or "", cfg.strands)


def cmd_eval(cfg: JobConfig, out=None) -> int:
    out = out or sys.stdout
    beta = _parse_braid(cfg)
    mu = closure_components(beta)
    values = {name: evaluate(beta, name, cfg.algorithm) for name in cfg.selected()}
    if cfg.format == "json":
        record = {"braid": beta.to_json(), "strands": beta.n, "crossings": len(beta),
                  "mu": mu, "algorithm": cfg.algorithm}
        record.update({name: {"text": v.to_text(), **v.to_json()} for name, v in values.items()})
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        # polynomial first so the value is the leading field of each line
        for name, v in values.items():
            print(f"{v.to_text()}\t{name} strands={beta.n} crossings={len(beta)} mu={mu}",
                  file=out)
    return EXIT_OK


def _batch_line(line: str) -> BraidWord:
    text = line.strip()
    strands = None
    if text.startswith("strands="):
        head, _, text = text.partition(" ")
        try:
            strands = int(head[len("strands="):].rstrip(":,"))
        except ValueError:
            raise BraidParseError(f"bad strands prefix {head!r}") from None
    return parse(text, strands)


def cmd_batch(cfg: JobConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    if cfg.input is None:
        raise ValueError("batch needs --input")
    status = EXIT_OK
    with open(cfg.input) as fh:
        lines = fh.read().splitlines()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            beta = _batch_line(line)
        except (BraidParseError, ValueError) as exc:
            print(f"line {lineno}: {exc}", file=err)
            status = max(status, EXIT_INPUT)
            continue
        record = {"input": line.strip(), "strands": beta.n, "mu": closure_components(beta)}
        try:
            for name in cfg.selected():
                record[name] = evaluate(beta, name, cfg.algorithm).to_text()
        except NotInteger as exc:
            print(f"line {lineno}: internal invariant violation: {exc}", file=err)
            status = EXIT_INTERNAL
            continue
        print(json.dumps(record), file=out)
    return status


def cmd_reduce(cfg: JobConfig, out=None) -> int:
    out = out or sys.stdout
    beta = _parse_braid(cfg)
    name = "homfly" if cfg.invariant == "all" else cfg.invariant
    if beta.n < 2:
        terms = [{"coefficient": "1", "word": str(beta)}]
        steps: list = []
    else:
        steps = []
        elem = reduce_to_band_form(beta, SPECS[name].rewrite, trace=steps)
        terms = [{"coefficient": t["coeff"], "word": t["word"]} for t in elem.to_json()]
    doc = {"invariant": name, "strands": beta.n, "braid": str(beta),
           "terms": terms, "steps": steps}
    print(json.dumps(doc, indent=None if cfg.format == "json" else 2), file=out)
    return EXIT_OK


def cmd_check(cfg: JobConfig, out=None) -> int:
    out = out or sys.stdout
    results = run_suites(cfg.seed, cfg.cases, oracles=cfg.oracles)
    ok = True
    for res in results:
        print(res.line(), file=out)
        for f in res.failures:
            print(f"    {f}", file=out)
        ok = ok and res.ok
    return EXIT_OK if ok else EXIT_CHECK


COMMANDS = {"eval": cmd_eval, "batch": cmd_batch, "reduce": cmd_reduce, "check": cmd_check}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinpoly",
        description="Skein (HOMFLY), Jones and Alexander-Conway polynomials of closed braids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def braid_args(p):
        p.add_argument("--braid", default="", help="signed generator indices, e.g. '1 -2 1 -2'")
        p.add_argument("--strands", type=int, default=None)

    def inv_args(p, default="all"):
        p.add_argument("--invariant", choices=INVARIANTS + ("all",), default=default)
        p.add_argument("--algorithm", choices=("general", "fixed-mu"), default="general")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="evaluate invariants of one braid")
    braid_args(p)
    inv_args(p)
    p = sub.add_parser("batch", help="evaluate one braid per line of a file")
    p.add_argument("--input", required=True)
    inv_args(p)
    p = sub.add_parser("reduce", help="dump the band-form reduction as JSON")
    braid_args(p)
    p.add_argument("--invariant", choices=INVARIANTS, default="homfly")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p = sub.add_parser("check", help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--oracles", action="store_true", help="include the bracket/Burau oracles")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = JobConfig(**vars(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[cfg.command](cfg)
    except BraidParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotInteger as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
