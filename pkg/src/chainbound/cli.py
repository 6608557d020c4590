"""Command-line front end.

Exit codes: 0 success, 1 a lemma check failed or an input claim was falsified
(non-inflationary h, lying selector), 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path

from . import errors
from .bounding import falsify_bound_assignment, zorn_maximal
from .fixpoint import FinitePosetCpo, bw_chain_equals_ggc, bw_fixpoint, solve_reaching_definitions
from .gen_io import (
    GenConfig,
    parse_dataflow,
    parse_h_table,
    parse_poset,
    parse_selector,
    random_poset,
    to_dot,
    write_poset,
)
from .chains import (
    comparability_check,
    greatest_good_chain_bruteforce,
    greatest_good_chain_iter,
    selector_derived,
)
from .poset import MAX_EXHAUSTIVE_N, Poset, check_exhaustive, iter_bits, maximal_elements
from .selector import Selector, Strategy

# errors that mean "the mathematics (or a claim in the input) failed"
MATH_FAILURES = (
    errors.InternalLemmaViolation,
    errors.InvalidSelector,
    errors.NotInflationary,
    errors.OrderInconsistent,
    errors.CapExceeded,
)


class Outcome:
    """What a command produced: exit code, JSON payload, human-readable lines."""

    def __init__(self, code: int, payload: dict, lines: list[str]):
        self.code = code
        self.payload = payload
        self.lines = lines


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise errors.MalformedInput(f"cannot read {path}: {exc.strerror}") from None


def _fmt(names: list[str]) -> str:
    return "{" + ", ".join(names) + "}"


def _load_selector(p: Poset, path: str | None) -> Selector:
    if path is None:
        return Selector(Strategy.MIN_STRICT_UB)
    return parse_selector(_read(path), p)


def cmd_check(args) -> Outcome:
    p = parse_poset(_read(args.poset))
    check_exhaustive(p, args.exhaustive_n_limit)
    selectors = [
        Selector(Strategy.MIN_STRICT_UB),
        Selector(Strategy.MAX_STRICT_UB),
        Selector(Strategy.SEEDED_RANDOM, seed=args.seed),
    ]
    results, lines, ok = [], [f"poset: {p.n} elements"], True
    for f in selectors:
        g = selector_derived(p, f)
        entry = {"selector": f.strategy.value}
        lines.append(f"selector {f.strategy.value}:")
        clash = comparability_check(p, g, args.exhaustive_n_limit)
        entry["comparability"] = clash is None
        if clash is not None:
            entry["violation"] = [p.names(clash[0]), p.names(clash[1])]
        try:
            brute = greatest_good_chain_bruteforce(p, g, args.exhaustive_n_limit)
            entry["union_good"] = True
        except errors.InternalLemmaViolation as exc:
            brute = None
            entry["union_good"] = False
            entry["union_error"] = str(exc)
        it = greatest_good_chain_iter(p, f)
        entry["ggc"] = p.names(it.chain)
        entry["good_chains"] = len(brute.trace) if brute else None
        entry["iter_equals_brute"] = brute is not None and brute.chain == it.chain
        passed = entry["comparability"] and entry["union_good"] and entry["iter_equals_brute"]
        ok = ok and passed
        lines.append(f"  comparability: {'ok' if entry['comparability'] else 'VIOLATED'}")
        lines.append(f"  union of good chains is good: {'ok' if entry['union_good'] else 'VIOLATED'}")
        lines.append(f"  iterative = brute force: {'ok' if entry['iter_equals_brute'] else 'MISMATCH'}")
        lines.append(f"  greatest good chain: {_fmt(entry['ggc'])}")
        results.append(entry)
    lines.append("all checks passed" if ok else "CHECK FAILED")
    return Outcome(0 if ok else 1, {"command": "check", "n": p.n, "ok": ok, "selectors": results}, lines)


def cmd_ggc(args) -> Outcome:
    p = parse_poset(_read(args.poset))
    f = parse_selector(_read(args.selector), p)
    if args.method == "brute":
        report = greatest_good_chain_bruteforce(p, selector_derived(p, f))
    else:
        report = greatest_good_chain_iter(p, f)
    trace = [p.names(c) for c in report.trace]
    lines = [f"greatest good chain: {_fmt(p.names(report.chain))}", "trace:"]
    lines += [f"  {_fmt(t)}" for t in trace]
    payload = {"command": "ggc", "method": args.method, "chain": p.names(report.chain), "trace": trace}
    return Outcome(0, payload, lines)


def cmd_cbc(args) -> Outcome:
    p = parse_poset(_read(args.poset))
    f = parse_selector(_read(args.selector), p)
    w = falsify_bound_assignment(p, f)
    value = None if w.value is None else p.labels[w.value]
    trace = [p.names(c) for c in w.trace]
    lines = [f"chain: {_fmt(p.names(w.chain))}", f"verdict: {w.verdict.value}"]
    if value is not None:
        lines.append(f"selector value: {value} is not a strict upper bound")
    lines += ["trace:"] + [f"  {_fmt(t)}" for t in trace]
    payload = {
        "command": "cbc",
        "chain": p.names(w.chain),
        "verdict": w.verdict.value,
        "value": value,
        "trace": trace,
    }
    return Outcome(0, payload, lines)


def cmd_zorn(args) -> Outcome:
    p = parse_poset(_read(args.poset))
    f = _load_selector(p, args.selector)
    if p.n == 0:
        raise errors.EmptyPoset("the empty poset has no maximal element")
    u, chain = zorn_maximal(p, f)
    maximal = maximal_elements(p)
    confirmed = u in maximal
    lines = [
        f"maximal element: {p.labels[u]}",
        f"witness chain: {_fmt(p.names(chain))}",
        f"confirmed by scan of maximal elements {_fmt(p.names(maximal))}: {'yes' if confirmed else 'NO'}",
    ]
    payload = {
        "command": "zorn",
        "maximal": p.labels[u],
        "chain": p.names(chain),
        "maximal_elements": p.names(maximal),
        "confirmed": confirmed,
    }
    return Outcome(0 if confirmed else 1, payload, lines)


def cmd_bw(args) -> Outcome:
    if (args.h_table is None) == (args.builtin is None):
        raise errors.UsageError("give exactly one of an h table file or --builtin rd")
    text = _read(args.file)
    if args.builtin == "rd":
        inst = parse_dataflow(text)
        report = solve_reaching_definitions(inst, args.cap)

        def defs_of(mask: int) -> list[str]:
            return sorted(inst.defs[i] for i in iter_bits(mask))

        nodes = [
            {"name": name, "in": defs_of(i_), "out": defs_of(o_)}
            for name, (i_, o_) in zip(inst.names, report.fixpoint)
        ]
        lines = [f"fixed point after {report.iterations} iterations"]
        lines += [f"  {e['name']}: in={_fmt(e['in'])} out={_fmt(e['out'])}" for e in nodes]
        payload = {"command": "bw", "builtin": "rd", "iterations": report.iterations, "nodes": nodes}
        return Outcome(0, payload, lines)

    p = parse_poset(text)
    h = parse_h_table(_read(args.h_table), p)
    try:
        report = bw_fixpoint(FinitePosetCpo(p), h, args.cap)
    except errors.NotInflationary as exc:
        raise errors.NotInflationary(p.labels[exc.x], p.labels[exc.hx]) from None
    equal = bw_chain_equals_ggc(p, h)
    trace = [p.labels[x] for x in report.trace]
    lines = [
        f"fixpoint: {p.labels[report.fixpoint]}",
        f"iterations: {report.iterations}",
        "trace:",
    ]
    lines += [f"  {t}" for t in trace]
    lines.append(f"iterates equal greatest good chain: {'yes' if equal else 'NO'}")
    payload = {
        "command": "bw",
        "fixpoint": p.labels[report.fixpoint],
        "iterations": report.iterations,
        "trace": trace,
        "ggc_equal": equal,
    }
    return Outcome(0 if equal else 1, payload, lines)


def cmd_gen(args) -> Outcome:
    try:
        prob = Fraction(args.edge_prob)
    except (ValueError, ZeroDivisionError):
        raise errors.UsageError(f"--edge-prob: not a number: {args.edge_prob!r}") from None
    p = random_poset(GenConfig(args.n, prob, args.seed))
    if args.dot:
        Path(args.dot).write_text(to_dot(p), encoding="utf-8")
    text = write_poset(p)
    return Outcome(0, json.loads(text), text.rstrip("\n").splitlines())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")

    parser = argparse.ArgumentParser(prog="chainbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="run the good-chain lemma checks on a poset")
    s.add_argument("poset")
    s.add_argument("--exhaustive-n-limit", type=int, default=MAX_EXHAUSTIVE_N)
    s.add_argument("--seed", type=int, default=0, help="seed of the seeded-random selector")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("ggc", parents=[common], help="greatest good chain for a selector")
    s.add_argument("poset")
    s.add_argument("selector")
    s.add_argument("--method", choices=["iter", "brute"], default="iter")
    s.set_defaults(run=cmd_ggc)

    s = sub.add_parser("cbc", parents=[common], help="chain on which a selector fails to bound")
    s.add_argument("poset")
    s.add_argument("selector")
    s.set_defaults(run=cmd_cbc)

    s = sub.add_parser("zorn", parents=[common], help="maximal element with witness chain")
    s.add_argument("poset")
    s.add_argument("selector", nargs="?")
    s.set_defaults(run=cmd_zorn)

    s = sub.add_parser("bw", parents=[common], help="least fixed point of an inflationary map")
    s.add_argument("file", help="poset JSON, or dataflow JSON with --builtin rd")
    s.add_argument("h_table", nargs="?", help="h table JSON for a poset")
    s.add_argument("--builtin", choices=["rd"])
    s.add_argument("--cap", type=int, default=10**6)
    s.set_defaults(run=cmd_bw)

    s = sub.add_parser("gen", parents=[common], help="seeded random poset")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--edge-prob", required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--dot", metavar="FILE", help="also write the Hasse diagram as DOT")
    s.set_defaults(run=cmd_gen)
    return parser


def _stderr(line: str) -> None:
    print(line, file=sys.stderr)


def run(
    argv: list[str] | None = None,
    out: Callable[[str], None] = print,
    err: Callable[[str], None] = _stderr,
) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    failed = True
    try:
        outcome = args.run(args)
        failed = False
    except MATH_FAILURES as exc:
        outcome = _failure(args, 1, exc)
    except errors.ChainboundError as exc:
        outcome = _failure(args, 2, exc)
    if args.json:
        out(json.dumps(outcome.payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in outcome.lines:
            (err if failed else out)(line)
    return outcome.code


def _failure(args, code: int, exc: Exception) -> Outcome:
    payload = {"command": args.command, "error": {"type": type(exc).__name__, "message": str(exc)}}
    return Outcome(code, payload, [f"error ({type(exc).__name__}): {exc}"])


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
