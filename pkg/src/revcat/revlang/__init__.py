from .denote import (
    DenotationNotInjective,
    ValidationFailed,
    denote,
    enumerate_values,
    fuel_monotonicity_check,
    random_nat_list,
    random_peano_pair,
    random_value,
    roundtrip_check,
)
from .interp import STUCK, UNDEFINED, Evaluator, eval_program, eval_ref
from .invert import invert_binding, invert_def, invert_program, toggle_suffix
from .parser import parse_callref_text, parse_program, parse_value
from .programs import BUNDLED, bundled_program, bundled_source
from .syntax import (
    Atom,
    CallRef,
    Clause,
    Cons,
    FuncDef,
    LetStep,
    Nil,
    Pair,
    Program,
    S,
    Term,
    Var,
    Z,
    alpha_equivalent,
    dagger_ref,
    instantiate,
    match,
    show_callref,
    show_program,
    show_term,
    term_size,
    term_vars,
    unifiable,
)
from .validate import Issue, ValidationReport, validate_program

__all__ = [
    "Atom",
    "BUNDLED",
    "CallRef",
    "Clause",
    "Cons",
    "DenotationNotInjective",
    "Evaluator",
    "FuncDef",
    "Issue",
    "LetStep",
    "Nil",
    "Pair",
    "Program",
    "S",
    "STUCK",
    "Term",
    "UNDEFINED",
    "ValidationFailed",
    "ValidationReport",
    "Var",
    "Z",
    "alpha_equivalent",
    "bundled_program",
    "bundled_source",
    "dagger_ref",
    "denote",
    "enumerate_values",
    "eval_program",
    "eval_ref",
    "fuel_monotonicity_check",
    "instantiate",
    "invert_binding",
    "invert_def",
    "invert_program",
    "match",
    "parse_callref_text",
    "parse_program",
    "parse_value",
    "random_nat_list",
    "random_peano_pair",
    "random_value",
    "roundtrip_check",
    "show_callref",
    "show_program",
    "show_term",
    "term_size",
    "term_vars",
    "toggle_suffix",
    "unifiable",
    "validate_program",
]
