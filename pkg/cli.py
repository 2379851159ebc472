import argparse
import json
import sys

import utils
from bisim import bisim_game, mode_mapping
from calculi import (
    WorkbenchError,
    cbn_trace,
    cbv_trace,
    parse_term,
    parse_vterm,
    print_term,
    special,
    var,
)
from calculi.cbv import ReductionGraph
from calculi.trace import Trace
from pi import (
    canonical_print,
    congruence_oracle,
    congruent,
    enumerate_pi_redexes,
    harmony_check,
    parse_process,
    pi_successors,
    print_process,
)
from translations import encode_cbn, encode_cbv
from translations.cbn import DEFAULT_CHANNEL
from workbench import (
    SUITES,
    SuiteBounds,
    brute_force_count,
    enumerate_terms,
    quadratic_experiment,
    run_suite,
)

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


def parse_name(text: str):
    return special(text) if text.startswith("@") else var(text)


def emit(args, text: str, payload: dict | None = None) -> None:
    if args.format == "json" and payload is not None:
        text = json.dumps({"schema": 1, **payload}, indent=4, ensure_ascii=False)
    utils.write_output(text, args.out)


def format_trace(trace: Trace) -> str:
    lines = [f"   0        {trace.start}"]
    for i, step in enumerate(trace.steps, start=1):
        lines.append(f"{i:4}  {step.label:<4}  {step.state}")
    lines.append("normal form" if trace.normal else "fuel exhausted")
    return "\n".join(lines)


def format_graph(graph: ReductionGraph) -> str:
    lines = [f"{len(graph.terms)} reducts, complete: {not graph.frontier}"]
    lines += [f"normal: {t}" for t in graph.normal_forms]
    lengths = graph.path_lengths()
    if lengths is not None:
        lines.append(f"maximal path lengths: {sorted(lengths)}")
    return "\n".join(lines)


# ----------------------------------------------------------------------------
# Subcommands


def cmd_trace_cbn(args) -> int:
    trace = cbn_trace(parse_term(args.term), args.fuel)
    emit(args, format_trace(trace), trace.to_dict())
    return EXIT_PASS


def cmd_trace_cbv(args) -> int:
    result = cbv_trace(parse_vterm(args.term), args.fuel, policy=args.policy)
    if isinstance(result, ReductionGraph):
        emit(args, format_graph(result), result.to_dict())
    else:
        emit(args, format_trace(result), result.to_dict())
    return EXIT_PASS


def cmd_encode_cbn(args) -> int:
    t = parse_term(args.term)
    p, _ = encode_cbn(t, parse_name(args.channel))
    emit(args, print_process(p), {"term": print_term(t), "process": print_process(p)})
    return EXIT_PASS


def cmd_encode_cbv(args) -> int:
    t = parse_vterm(args.term)
    p, _ = encode_cbv(t, parse_name(args.param) if args.param else None)
    emit(args, print_process(p), {"term": print_term(t), "process": print_process(p)})
    return EXIT_PASS


def cmd_pi_step(args) -> int:
    p = parse_process(args.process)
    steps = [
        (r, q) for r, q in pi_successors(p, strict=args.strict) if args.kind in (None, r.kind)
    ]
    if not args.all:
        steps = steps[:1]
    text = "\n".join(f"{r.describe()}\n    {print_process(q)}" for r, q in steps) or "no redex"
    payload = {
        "process": print_process(p),
        "redexes": len(enumerate_pi_redexes(p, args.strict)),
        "steps": [{"redex": r.describe(), "kind": r.kind, "reduct": print_process(q)} for r, q in steps],
    }
    emit(args, text, payload)
    return EXIT_PASS


def cmd_congr(args) -> int:
    p, q = parse_process(args.left), parse_process(args.right)
    verdict = congruent(p, q)
    oracle = congruence_oracle(p, q, args.depth)
    text = "\n".join(
        [
            canonical_print(p),
            canonical_print(q),
            f"congruent: {verdict}",
            f"oracle (depth {args.depth}): {oracle}",
        ]
    )
    payload = {
        "left": canonical_print(p),
        "right": canonical_print(q),
        "congruent": verdict,
        "oracle": oracle,
        "depth": args.depth,
    }
    emit(args, text, payload)
    return EXIT_PASS if verdict else EXIT_COUNTEREXAMPLE


def cmd_harmony(args) -> int:
    report = harmony_check(parse_process(args.process), args.depth, args.strict)
    lines = []
    for k in report.kinds:
        lines.append(f"{k.kind}: {'equal' if k.equal else 'DIFFERENT'}")
        lines += [f"  distance  {s}" for s in k.distance]
        lines += [f"  classic   {s}" for s in k.classic]
    utils.write_output(report.to_json() if args.format == "json" else "\n".join(lines), args.out)
    return EXIT_PASS if report.ok else EXIT_COUNTEREXAMPLE


def cmd_bisim(args) -> int:
    calculus = mode_mapping[args.mode]()
    t = calculus.parse(args.term)
    report = bisim_game(t, args.mode, args.fuel, print_steps=args.print_steps, debug=args.debug)
    if args.format == "json":
        utils.write_output(report.to_json(), args.out)
    else:
        status = "bisimilar" if report.ok else "MISMATCH"
        if report.exhausted:
            status += f" (up to {args.fuel} rounds)"
        lines = [
            f"{args.mode}: {status}",
            f"states: {report.states}, rounds: {report.rounds}",
            f"term steps: {report.term_counts}",
            f"process steps: {report.process_counts}",
        ]
        for mismatch in report.mismatches:
            for step in mismatch.steps:
                if not step.matched or step.wrong_kind:
                    lines.append(f"unmatched {step.side} step {step.label}: {step.reduct}")
        utils.write_output("\n".join(lines), args.out)
    return EXIT_PASS if report.ok else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args) -> int:
    closed = not args.open
    if args.count:
        count = sum(1 for _ in enumerate_terms(args.size, args.mode, closed))
        payload = {"size": args.size, "mode": args.mode, "closed": closed, "count": count}
        if args.cross_check:
            payload["brute_force"] = brute_force_count(args.size, args.mode, closed)
        text = str(count)
        if args.cross_check:
            text += f" (brute force: {payload['brute_force']})"
        emit(args, text, payload)
        return EXIT_PASS
    terms = [print_term(t) for t in enumerate_terms(args.size, args.mode, closed)]
    emit(args, "\n".join(terms), {"size": args.size, "mode": args.mode, "closed": closed, "terms": terms})
    return EXIT_PASS


def cmd_suite(args) -> int:
    bounds = SuiteBounds(
        size=args.size,
        fuel=args.fuel,
        seed=args.seed,
        count=args.count,
        depth=args.depth,
        proc_size=args.proc_size,
        strict=args.strict,
    )
    report = run_suite(args.name, bounds)
    if args.format == "json":
        utils.write_output(report.to_json(), args.out)
    else:
        lines = [f"{report.suite}: {'pass' if report.ok else 'FAIL'} ({report.checked} checked)"]
        if not report.ok:
            lines.append(f"counterexample: {report.counterexample}")
            lines.append(f"minimized:      {report.minimized}")
            if report.error:
                lines.append(f"error: {report.error}")
        utils.write_output("\n".join(lines), args.out)
    return EXIT_PASS if report.ok else EXIT_COUNTEREXAMPLE


def cmd_quadratic(args) -> int:
    report = quadratic_experiment(fuel=args.fuel, prefixes=args.prefixes)
    if args.format == "json":
        utils.write_output(report.to_json(), args.out)
    else:
        text = report.to_csv()
        if args.format == "text":
            text += "\nk,n,m\n" + "\n".join(f"{r.k},{r.n},{r.m}" for r in report.omega)
        utils.write_output(text, args.out)
    return EXIT_PASS if report.ok else EXIT_COUNTEREXAMPLE


# ----------------------------------------------------------------------------
# Parser


def add_common(p: argparse.ArgumentParser, fuel: int = utils.DEFAULT_FUEL, format: str = "text"):
    p.add_argument("--fuel", type=int, default=fuel, help="Step budget.")
    p.add_argument("--seed", type=int, default=utils.DEFAULT_SEED, help="Seed for random inputs.")
    p.add_argument("--size", type=int, default=utils.DEFAULT_SIZE, help="Term size bound.")
    p.add_argument("--format", choices=["text", "json", "csv"], default=format, help="Output format.")
    p.add_argument(
        "--json", dest="format", action="store_const", const="json", help="Same as --format json."
    )
    p.add_argument("--out", type=str, default=None, help="Write output to this file.")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Workbench for linear substitution calculi and their π encodings."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = add_common(sub.add_parser("trace-cbn", help="Run ⊸ on a λ_lsub term."))
    p.add_argument("term")
    p.set_defaults(func=cmd_trace_cbn)

    p = add_common(sub.add_parser("trace-cbv", help="Run ⊸v on a λ_vker term."))
    p.add_argument("term")
    p.add_argument("--policy", choices=["leftmost", "all"], default="leftmost")
    p.set_defaults(func=cmd_trace_cbv)

    p = add_common(sub.add_parser("encode-cbn", help="CBN translation of a term."))
    p.add_argument("term")
    p.add_argument("--channel", default=str(DEFAULT_CHANNEL), help="Special output name.")
    p.set_defaults(func=cmd_encode_cbn)

    p = add_common(sub.add_parser("encode-cbv", help="CBV translation of a term."))
    p.add_argument("term")
    p.add_argument("--param", default=None, help="Variable output name (fresh if omitted).")
    p.set_defaults(func=cmd_encode_cbv)

    p = add_common(sub.add_parser("pi-step", help="Distance steps of a process."))
    p.add_argument("process")
    p.add_argument("--all", action="store_true", help="Show every redex, not just the first.")
    p.add_argument("--kind", choices=["tensor", "bang"], default=None)
    p.add_argument("--strict", action="store_true", default=utils.DEFAULT_STRICT)
    p.set_defaults(func=cmd_pi_step)

    p = add_common(sub.add_parser("congr", help="Decide structural congruence."))
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--depth", type=int, default=utils.DEFAULT_DEPTH, help="Oracle depth.")
    p.set_defaults(func=cmd_congr)

    p = add_common(sub.add_parser("harmony", help="Distance against classic steps."))
    p.add_argument("process")
    p.add_argument("--depth", type=int, default=utils.DEFAULT_DEPTH)
    p.add_argument("--strict", action="store_true", default=utils.DEFAULT_STRICT)
    p.set_defaults(func=cmd_harmony)

    p = add_common(sub.add_parser("bisim", help="Play the bisimulation game."))
    p.add_argument("term")
    p.add_argument("--mode", choices=list(mode_mapping), default="cbn")
    p.add_argument("--print-steps", action="store_true", help="Print every matched round.")
    p.add_argument("--debug", action="store_true", help="Dump every round report.")
    p.set_defaults(func=cmd_bisim)

    p = add_common(sub.add_parser("enumerate", help="Enumerate terms of one size."))
    p.add_argument("--mode", choices=["lsub", "vker"], default="lsub")
    p.add_argument("--open", action="store_true", help="Include open terms.")
    p.add_argument("--count", action="store_true", help="Print the count only.")
    p.add_argument("--cross-check", action="store_true", help="Also count by brute force.")
    p.set_defaults(func=cmd_enumerate)

    p = add_common(sub.add_parser("suite", help="Run a property suite."))
    p.add_argument("name", choices=list(SUITES))
    p.add_argument("--count", type=int, default=utils.DEFAULT_COUNT, help="Random inputs.")
    p.add_argument("--depth", type=int, default=utils.DEFAULT_DEPTH)
    p.add_argument("--proc-size", type=int, default=utils.DEFAULT_PROC_SIZE)
    p.add_argument("--strict", action="store_true", default=utils.DEFAULT_STRICT)
    p.set_defaults(func=cmd_suite)

    p = add_common(sub.add_parser("quadratic", help="⊸ length against weak head β."), fuel=500, format="csv")
    p.add_argument("--prefixes", type=int, default=12, help="Rows of the Ω table.")
    p.set_defaults(func=cmd_quadratic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WorkbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
