"""Degree-by-degree invariants of free associative algebras under linear
actions of Hopf algebras given by group-like and skew-primitive generators."""

from .action import (
    ActionSpec,
    Finding,
    GroupLikeGen,
    SkewPrimitiveGen,
    apply_group_like,
    apply_skew_primitive,
    is_invariant,
    make_spec,
    validate_spec,
)
from .constructions import (
    build_prefix_invariant,
    classify_action,
    cn_eval,
    jair_element,
    jair_verify,
    minimal_invariant_degree,
)
from .exactfield import FieldSpec, fe_inv, fe_pow
from .freealg import FreePoly, has_prefix_in_support, homogeneous_component, insert, parse_poly, poly_mul
from .invariants import (
    decomposable_component,
    insert_closure_check,
    invariant_basis,
    kernel_basis,
    probe_generation,
)
from .specfile import parse_spec_file, serialize_spec

__version__ = "0.1.0"
