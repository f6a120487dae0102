"""Batch command-line entry point.

Subcommands: laws, fix, trace, run, invert, roundtrip.  Exit codes:
0 pass, 1 law or round-trip violation, 2 input/config error, 3
non-convergence.  With --format json, one self-describing document is
printed per invocation; repeated runs with the same configuration and
seed produce byte-identical output (wall-clock times are omitted).
"""
from __future__ import annotations

import argparse
import json
import sys
from random import Random

from .cat import (
    DSTOCH,
    FinObject,
    LawConfig,
    PINJ,
    REL,
    law_suite,
    morphism_to_doc,
    loads_morphism,
)
from .cat.laws import SUITES as CORE_SUITES
from .errors import (
    DimensionMismatch,
    NonConvergence,
    ParseError,
    RevcatError,
    TooLarge,
    UnboundParameter,
    UnknownFunction,
    UnsupportedOperation,
)
from .functionals import (
    DisjointUnionWith,
    HomSpace,
    check_conj_preservation,
    check_dagger_trace,
    check_fixed_point_adjoint,
    check_naturality,
    check_pfix_adjoint,
    check_pfix_identity,
    check_self_conjugate,
    fix_functional,
    identity_family,
    join_family,
    loads_functional,
    projection_family,
    random_endo_functional,
    random_param_functional,
    trace,
    trace_family,
)
from .order import FixMode, FixPolicy, kleene_fix
from .report import LawReport
from .revlang import (
    CallRef,
    UNDEFINED,
    STUCK,
    ValidationFailed,
    eval_ref,
    invert_program,
    parse_callref_text,
    parse_program,
    parse_value,
    random_nat_list,
    random_peano_pair,
    roundtrip_check,
    show_program,
    show_term,
    validate_program,
)

FUNCTIONAL_SUITES = (
    "fix-adjoint",
    "pfix-adjoint",
    "conj-preservation",
    "pfix-identity",
    "naturality",
    "self-conjugate",
    "dagger-trace",
)
RANDOMIZED_SUITES = {"fix-adjoint", "pfix-adjoint", "conj-preservation", "pfix-identity"}
ALL_SUITES = CORE_SUITES + FUNCTIONAL_SUITES


class ConfigError(Exception):
    pass


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _policy_from(args) -> FixPolicy:
    mode = FixMode.METRIC if args.mode == "metric" else FixMode.EXACT
    return FixPolicy(
        max_iterations=args.max_iterations, tolerance=args.tolerance, mode=mode
    )


# -- laws -------------------------------------------------------------------


def _sizes_from(args) -> tuple[int, ...]:
    if args.sizes:
        try:
            return tuple(int(s) for s in args.sizes.split(","))
        except ValueError as exc:
            raise ConfigError(f"bad --sizes value {args.sizes!r}") from exc
    return tuple(range(args.max_size + 1))


def _functional_suite(suite: str, category: str, args) -> LawReport:
    if category == DSTOCH:
        raise ConfigError(f"suite {suite!r} is not available for dstoch")
    rng = Random(args.seed)
    report = LawReport(suite=suite)

    if suite in ("fix-adjoint", "pfix-adjoint", "conj-preservation", "pfix-identity"):
        obj = FinObject(2)
        space = HomSpace(category, obj, obj)
        for _ in range(args.trials):
            if suite == "fix-adjoint":
                x = FinObject(rng.randrange(1, 4))
                y = FinObject(rng.randrange(1, 4))
                phi = random_endo_functional(
                    HomSpace(category, x, y), rng, depth=args.depth
                )
                partial = check_fixed_point_adjoint(phi)
            else:
                psi = random_param_functional(space, space, rng, depth=args.depth)
                if suite == "pfix-adjoint":
                    partial = check_pfix_adjoint(psi)
                elif suite == "conj-preservation":
                    partial = check_conj_preservation(psi)
                else:
                    partial = check_pfix_identity(psi)
            partial.suite = suite
            report = report.merge(partial)
        return report

    if suite == "naturality":
        families = [projection_family(category)]
        if category == REL:
            families.append(join_family(category))
            families.append(join_family(category, DisjointUnionWith(FinObject(1))))
        one, two = FinObject(1), FinObject(2)
        for family in families:
            partial = check_naturality(family, two, one, one, two, fuel=args.fuel)
            partial.suite = suite
            report = report.merge(partial)
        return report

    if suite == "self-conjugate":
        x, y = FinObject(2), FinObject(1)
        for family in (identity_family(category), trace_family(category, FinObject(1))):
            partial = check_self_conjugate(family, x, y)
            partial.suite = suite
            report = report.merge(partial)
        return report

    # dagger-trace
    shapes = [(1, 1, 0), (1, 1, 1)] + ([(1, 1, 2)] if category == PINJ else [])
    for xs, ys, us in shapes:
        partial = check_dagger_trace(category, xs, ys, us)
        partial.suite = suite
        report = report.merge(partial)
    return report


def cmd_laws(args) -> int:
    suites = args.suite or list(ALL_SUITES if args.category != DSTOCH else CORE_SUITES)
    for suite in suites:
        if suite not in ALL_SUITES:
            raise ConfigError(f"unknown suite {suite!r}")
    needs_seed = args.category == DSTOCH or any(s in RANDOMIZED_SUITES for s in suites)
    if needs_seed and args.seed is None:
        raise ConfigError("randomized suites require --seed")
    if args.tolerance <= 0:
        raise ConfigError("tolerance must be positive")

    sizes = _sizes_from(args)
    config = LawConfig(
        sizes=sizes,
        trials=args.trials,
        seed=args.seed,
        tolerance=args.tolerance,
    )
    reports = []
    for suite in suites:
        if suite in CORE_SUITES:
            reports.append(law_suite(args.category, suite, config))
        else:
            reports.append(_functional_suite(suite, args.category, args))

    suite_docs = {}
    for r in reports:
        entry = r.to_doc()
        entry.pop("suite")
        suite_docs[r.suite] = entry
    doc = {
        "command": "laws",
        "config": {
            "category": args.category,
            "suites": list(suites),
            "sizes": list(sizes),
            "trials": args.trials,
            "seed": args.seed,
            "tolerance": args.tolerance,
            "fuel": args.fuel,
            "depth": args.depth,
        },
        "suites": suite_docs,
    }
    lines = [r.summary() for r in reports]
    for r in reports:
        for v in r.violations[:20]:
            lines.append(f"  {r.suite}/{v.law}: {v.witness}")
    _emit(args, doc, lines)
    return 0 if all(r.passed for r in reports) else 1


# -- fix ---------------------------------------------------------------------


def cmd_fix(args) -> int:
    with open(args.file, encoding="utf-8") as handle:
        phi = loads_functional(handle.read())
    if phi.dom != phi.cod:
        raise DimensionMismatch(f"not an endo-functional: {phi.dom!r} -> {phi.cod!r}")
    policy = _policy_from(args)
    domain = phi.dom.domain(args.cap, args.tolerance)
    result = kleene_fix(lambda h: phi(h), domain, policy)
    doc = {
        "command": "fix",
        "config": {
            "file": args.file,
            "mode": args.mode,
            "max_iterations": args.max_iterations,
            "tolerance": args.tolerance,
        },
        "fixed_point": morphism_to_doc(result.value),
        "iterations": result.iterations,
        "converged": result.converged,
        "residual": result.residual,
    }
    lines = [
        f"fixed point: {json.dumps(morphism_to_doc(result.value), sort_keys=True)}",
        f"iterations: {result.iterations} converged: {result.converged}"
        + (f" residual: {result.residual:.3g}" if result.residual is not None else ""),
    ]
    _emit(args, doc, lines)
    return 0


# -- trace --------------------------------------------------------------------


def cmd_trace(args) -> int:
    with open(args.file, encoding="utf-8") as handle:
        f = loads_morphism(handle.read())
    traced = trace(f, FinObject(args.x), FinObject(args.y), FinObject(args.u))
    doc = {
        "command": "trace",
        "config": {"file": args.file, "x": args.x, "y": args.y, "u": args.u},
        "trace": morphism_to_doc(traced),
    }
    _emit(args, doc, [json.dumps(morphism_to_doc(traced), sort_keys=True)])
    return 0


# -- language commands ---------------------------------------------------------


def _load_program(path: str):
    with open(path, encoding="utf-8") as handle:
        program = parse_program(handle.read())
    report = validate_program(program)
    if not report.ok:
        raise ValidationFailed(report)
    return program


def _bindings_from(args) -> dict:
    bindings = {}
    for item in args.bind or []:
        if "=" not in item:
            raise ConfigError(f"--bind expects name=ref, got {item!r}")
        name, ref = item.split("=", 1)
        bindings[name.strip()] = parse_callref_text(ref.strip())
    return bindings


def cmd_run(args) -> int:
    program = _load_program(args.file)
    ref = parse_callref_text(args.fname)
    bindings = _bindings_from(args)
    if bindings:
        if ref.args:
            raise ConfigError("give static arguments either inline or via --bind")
        fdef = program.defs.get(ref.name)
        if fdef is None:
            raise UnknownFunction(ref.name)
        missing = [p for p in fdef.params if p not in bindings]
        if missing:
            raise UnboundParameter(f"missing binding(s) for: {', '.join(missing)}")
        ref = CallRef(ref.name, tuple(bindings[p] for p in fdef.params), ref.inverted)
    value = parse_value(args.arg)
    result = eval_ref(program, ref, value, args.fuel)
    if result is UNDEFINED:
        outcome, shown = "undefined", "undefined (fuel exhausted)"
    elif result is STUCK:
        outcome, shown = "stuck", "stuck (no matching clause)"
    else:
        outcome, shown = "value", show_term(result)
    doc = {
        "command": "run",
        "config": {"file": args.file, "fname": args.fname, "arg": args.arg, "fuel": args.fuel},
        "outcome": outcome,
        "value": shown if outcome == "value" else None,
    }
    _emit(args, doc, [shown])
    return 0


def cmd_invert(args) -> int:
    program = _load_program(args.file)
    inverted = invert_program(program, args.suffix)
    source = show_program(inverted)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(source)
        _emit(
            args,
            {"command": "invert", "config": {"file": args.file, "suffix": args.suffix},
             "output": args.output},
            [f"wrote {args.output}"],
        )
    else:
        _emit(
            args,
            {"command": "invert", "config": {"file": args.file, "suffix": args.suffix},
             "program": source},
            [source.rstrip("\n")],
        )
    return 0


def cmd_roundtrip(args) -> int:
    if args.seed is None:
        raise ConfigError("roundtrip requires --seed")
    program = _load_program(args.file)
    bindings = _bindings_from(args)
    gen = None
    if args.values == "peano":
        gen = lambda rng: random_peano_pair(rng)
    elif args.values == "list":
        gen = lambda rng: random_nat_list(rng)
    report = roundtrip_check(
        program,
        args.fname,
        bindings,
        trials=args.trials,
        fuel=args.fuel,
        seed=args.seed,
        value_gen=gen,
        value_bound=args.value_bound,
    )
    doc = {
        "command": "roundtrip",
        "config": {
            "file": args.file,
            "fname": args.fname,
            "trials": args.trials,
            "fuel": args.fuel,
            "seed": args.seed,
            "values": args.values,
            "value_bound": args.value_bound,
        },
        "report": report.to_doc(),
    }
    lines = [report.summary()]
    for v in report.violations[:20]:
        lines.append(f"  {v.law}: {v.witness}")
    _emit(args, doc, lines)
    return 0 if report.passed else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = argparse.ArgumentParser(prog="revcat")
    parser.add_argument("--config", help="JSON file with default option values")
    sub = parser.add_subparsers(dest="command", required=True)
    commands: dict[str, argparse.ArgumentParser] = {}

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = commands["laws"] = sub.add_parser("laws", help="run law suites")
    common(p)
    p.add_argument("--category", choices=(REL, PINJ, DSTOCH), required=True)
    p.add_argument("--suite", action="append", help="suite name (repeatable)")
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--sizes", help="comma-separated exact object sizes")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--fuel", type=int, default=10)
    p.add_argument("--depth", type=int, default=4)
    p.set_defaults(fn=cmd_laws)

    p = commands["fix"] = sub.add_parser("fix", help="least fixed point of a functional document")
    common(p)
    p.add_argument("file")
    p.add_argument("--mode", choices=("exact", "metric"), default="exact")
    p.add_argument("--max-iterations", type=int, default=10_000)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--cap", type=int, default=9)
    p.set_defaults(fn=cmd_fix)

    p = commands["trace"] = sub.add_parser("trace", help="trace out the feedback block of a morphism")
    common(p)
    p.add_argument("file")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.set_defaults(fn=cmd_trace)

    p = commands["run"] = sub.add_parser("run", help="evaluate a function on a value")
    common(p)
    p.add_argument("file")
    p.add_argument("fname", help="function reference, e.g. add, map<inc>, add~")
    p.add_argument("--arg", required=True, help="value literal")
    p.add_argument("--fuel", type=int, default=10_000)
    p.add_argument("--bind", action="append", help="parameter binding name=ref")
    p.set_defaults(fn=cmd_run)

    p = commands["invert"] = sub.add_parser("invert", help="emit the inverted program")
    common(p)
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--suffix", default="_inv")
    p.set_defaults(fn=cmd_invert)

    p = commands["roundtrip"] = sub.add_parser("roundtrip", help="forward/backward recovery check")
    common(p)
    p.add_argument("file")
    p.add_argument("fname")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--fuel", type=int, default=10_000)
    p.add_argument("--seed", type=int)
    p.add_argument("--bind", action="append")
    p.add_argument("--values", choices=("tree", "peano", "list"), default="tree")
    p.add_argument("--value-bound", type=int, default=16)
    p.set_defaults(fn=cmd_roundtrip)

    return parser, commands


def main(argv=None) -> int:
    parser, commands = build_parser()
    args, _ = parser.parse_known_args(argv)
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as handle:
                defaults = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: bad config file: {exc}", file=sys.stderr)
            return 2
        for command in commands.values():
            command.set_defaults(**defaults)
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NonConvergence as exc:
        print(f"error: non-convergence: {exc}", file=sys.stderr)
        return 3
    except (
        ConfigError,
        ParseError,
        ValidationFailed,
        DimensionMismatch,
        UnsupportedOperation,
        TooLarge,
        UnknownFunction,
        UnboundParameter,
        RevcatError,
        OSError,
        ValueError,
        KeyError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
