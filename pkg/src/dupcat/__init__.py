"""Duplicated path algebras over Q: the left part, its Ext-injectives, and
the bijection between left-part tilting modules and cluster-tilting objects,
all through exact rational linear algebra."""

from .quiver import (
    Quiver,
    classify_dynkin,
    duplicated_quiver,
    opposite,
    parse_quiver,
    sinks_and_sources,
)
from .linalg import RMatrix, cokernel_basis, generic_max_rank, nullspace_basis, rank
from .reps import Rep, RepMap, direct_sum, hom_basis, is_isomorphic
from .hereditary import (
    INJECTIVE,
    PROJECTIVE,
    ext1_dim,
    injective_rep,
    knit_ind_A,
    nakayama,
    nakayama_map,
    path_category,
    projective_rep,
    simple_rep,
    standard_reps,
    tau_pair,
)
from .dup import (
    DupMap,
    DupModule,
    covers_and_envelopes,
    dup_category,
    embed_A,
    ext1_dup,
    hom_basis_dup,
    is_isomorphic_dup,
    junction_composite_pattern,
    knit_ind_dup,
    pd_dup,
    standard_dup_modules,
    structure,
    syzygy_pair,
    tau_dup_pair,
)
from .leftpart import (
    annotate_catalog,
    canonical_tilting,
    left_part_catalog,
    sectional_check,
    sigma_catalog,
    verify_ext_injectives,
    verify_left_part_definition,
)
from .cluster import (
    ClusterObject,
    enumerate_cluster_tilting,
    ext1_cluster_dim,
    fundamental_domain,
    hom_cluster_dim_modules,
    pi_bar,
    shifted_projective,
)
from .tilting import (
    enumerate_L_tilting,
    expected_count,
    is_tilting_module,
    verify_bijection,
)
from .verify import run_all_checks
from .errors import (
    CapExceededError,
    CatalogError,
    CycleDetectedError,
    CyclicQuiverError,
    DupcatError,
    NotDynkinError,
    NotInDomainError,
    QuiverSyntaxError,
)

__version__ = "0.1.0"
