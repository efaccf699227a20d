"""braceforge: classification of regular translation-stable permutation
subgroups and the skew braces they carry."""

__version__ = "0.1.0"

from .braces import (
    BraceIso,
    SkewBrace,
    almost_trivial_brace,
    brace_automorphisms,
    brace_from_subgroup,
    braces_isomorphic,
    check_brace_axioms,
    conjugated_brace,
    opposite_brace,
    opposite_brace_circle_form,
    subgroup_from_brace,
    trivial_brace,
)
from .catalog import builtin_order_types, structure_name
from .fpf import FpfEndo, alpha_subgroup, enumerate_abelian_fpf, verify_fpf_laws
from .groups import (
    FiniteGroup,
    GroupHom,
    Perm,
    automorphism_group,
    compose,
    conj_by_group,
    group_from_table,
    inner_automorphism,
    invert,
    is_isomorphic,
    isomorphisms_between,
    lambda_of,
    preset_group,
    rho_of,
)
from .partitions import (
    ClassificationReport,
    LawVerdict,
    brace_equivalent,
    build_report,
    g_isomorphic,
    lambda_points,
    rho_conjugate,
    rho_points,
    verify_partition_laws,
)
from .pq import (
    PqCase,
    PqVerification,
    cases_for,
    catalog_braces,
    catalog_subgroups,
    pq_brace_class_count,
    pq_case,
    verify_case,
    verify_pq,
)
from .subgroups import (
    PermSubgroup,
    closure,
    direct_enumerate_oracle,
    enumerate_regular_gstable,
    holomorph,
    is_g_stable,
    is_regular,
    lambda_subgroup,
    opposite_subgroup,
    rho_subgroup,
)

__all__ = [name for name in dir() if not name.startswith("_")]
