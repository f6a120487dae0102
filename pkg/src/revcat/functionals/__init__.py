from .expr import (
    Const,
    DaggerFn,
    FunctionalExpr,
    Host,
    IdentityFn,
    JoinOf,
    JoinWith,
    PostCompose,
    PreCompose,
    Seq,
    apply_functional,
    conj,
    dumps_functional,
    functional_from_doc,
    functional_to_doc,
    loads_functional,
)
from .fixpoints import (
    ITERATION_CHECKS,
    check_conj_preservation,
    check_fix_pfix_agreement,
    check_fixed_point_adjoint,
    check_pfix_adjoint,
    check_pfix_identity,
    default_policy,
    fix_functional,
    morphisms_equal,
    pfix_functional,
    random_endo_functional,
    random_param_functional,
)
from .functors import (
    DisjointUnionWith,
    IdentityFunctor,
    check_dagger_functor,
    pad_with_identity,
)
from .naturality import (
    NaturalFamily,
    check_naturality,
    check_self_conjugate,
    identity_family,
    join_family,
    postcompose_family,
    projection_family,
)
from .param import (
    ArgP,
    ArgX,
    ParamExpr,
    PApply,
    PConst,
    PJoin,
    apply_param,
    conj_param,
)
from .spaces import HomSpace, space_of
from .trace import check_dagger_trace, trace, trace_family

__all__ = [
    "ArgP",
    "ArgX",
    "Const",
    "DaggerFn",
    "DisjointUnionWith",
    "FunctionalExpr",
    "Host",
    "HomSpace",
    "ITERATION_CHECKS",
    "IdentityFn",
    "IdentityFunctor",
    "JoinOf",
    "JoinWith",
    "NaturalFamily",
    "PApply",
    "PConst",
    "PJoin",
    "ParamExpr",
    "PostCompose",
    "PreCompose",
    "Seq",
    "apply_functional",
    "apply_param",
    "check_conj_preservation",
    "check_dagger_functor",
    "check_dagger_trace",
    "check_fix_pfix_agreement",
    "check_fixed_point_adjoint",
    "check_naturality",
    "check_pfix_adjoint",
    "check_pfix_identity",
    "check_self_conjugate",
    "conj",
    "conj_param",
    "default_policy",
    "dumps_functional",
    "fix_functional",
    "functional_from_doc",
    "functional_to_doc",
    "identity_family",
    "join_family",
    "loads_functional",
    "morphisms_equal",
    "pad_with_identity",
    "pfix_functional",
    "postcompose_family",
    "projection_family",
    "random_endo_functional",
    "random_param_functional",
    "space_of",
    "trace",
    "trace_family",
]
