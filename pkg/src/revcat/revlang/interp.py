"""Fuel-indexed evaluator.

Fuel counts unfolding depth: entering any call consumes one unit, and
every let in a clause runs its call at the entry fuel minus one.  Fuel 0
is everywhere undefined, so evaluation at fuel n is exactly the n-th
approximant of the program's semantics from below.

Undefined (fuel ran out) is distinct from Stuck (no clause matched, or a
let pattern rejected a call result): more fuel can resolve the former,
never the latter.
"""
from __future__ import annotations

from ..errors import UnboundParameter, UnknownFunction
from .syntax import CallRef, FuncDef, Program, Term, instantiate, match


class _Undefined:
    def __repr__(self):
        return "Undefined"


class _Stuck:
    def __repr__(self):
        return "Stuck"


UNDEFINED = _Undefined()
STUCK = _Stuck()


class Evaluator:
    def __init__(self, program: Program):
        self.program = program
        self._inverted: dict[str, FuncDef] = {}

    def _definition(self, name: str, inverted: bool) -> FuncDef:
        fdef = self.program.defs.get(name)
        if fdef is None:
            raise UnknownFunction(name)
        if not inverted:
            return fdef
        if name not in self._inverted:
            from .invert import invert_def

            self._inverted[name] = invert_def(fdef)
        return self._inverted[name]

    def _resolve(self, ref: CallRef, bindings: dict[str, CallRef]) -> CallRef:
        if ref.name in bindings:
            bound = bindings[ref.name]
            if ref.inverted:
                from .syntax import dagger_ref

                bound = dagger_ref(bound)
            return bound
        return CallRef(
            ref.name,
            tuple(self._resolve(a, bindings) for a in ref.args),
            ref.inverted,
        )

    def call(self, ref: CallRef, value: Term, fuel: int):
        if fuel <= 0:
            return UNDEFINED
        fdef = self._definition(ref.name, ref.inverted)
        if len(ref.args) != len(fdef.params):
            raise UnboundParameter(
                f"{ref.name} expects {len(fdef.params)} static argument(s)"
            )
        bindings = dict(zip(fdef.params, ref.args))
        for clause in fdef.clauses:
            env = match(clause.lhs, value)
            if env is None:
                continue
            for step in clause.lets:
                argument = instantiate(step.arg, env)
                result = self.call(
                    self._resolve(step.callee, bindings), argument, fuel - 1
                )
                if result is UNDEFINED or result is STUCK:
                    return result
                extended = match(step.pattern, result, env)
                if extended is None:
                    return STUCK
                env = extended
            return instantiate(clause.out, env)
        return STUCK


def eval_program(
    program: Program,
    fname: str,
    bindings: dict[str, CallRef],
    value: Term,
    fuel: int,
):
    """Run ``fname`` on ``value`` with the given static parameter bindings."""
    fdef = program.defs.get(fname)
    if fdef is None:
        raise UnknownFunction(fname)
    missing = [p for p in fdef.params if p not in bindings]
    if missing:
        raise UnboundParameter(f"missing binding(s) for: {', '.join(missing)}")
    ref = CallRef(fname, tuple(bindings[p] for p in fdef.params), False)
    return Evaluator(program).call(ref, value, fuel)


def eval_ref(program: Program, ref: CallRef, value: Term, fuel: int):
    """Run a closed call reference, e.g. the result of parsing ``map<inc>~``."""
    return Evaluator(program).call(ref, value, fuel)
