"""Exact push-forwards of Pluecker-class powers on Grassmann bundles.

Everything is computed in exact arithmetic (arbitrary-precision integers and
rationals); every formula ships with an independent brute-force oracle.
"""

from .partitions import (
    Partition,
    add_rectangle,
    enumerate_partitions,
    hook_lengths,
    parse_partition,
    rectangle,
)
from .tableaux import ENUMERATION_CAP, syt_count_hook, syt_count_product, syt_enumerate
from .schur import (
    SchurExpansion,
    complete_homogeneous_values,
    h1_power_expansion,
    jacobi_trudi_det,
    pieri_multiply,
    schur_via_jacobi_trudi,
)
from .chowring import (
    BundleModel,
    FormalBundle,
    GradedPoly,
    GradedRing,
    SplitBundle,
    integrate_over_pm,
    ring_of,
    segre_classes,
    truncate,
)
from .pushforward import (
    compositions,
    degree_grassmann_bundle,
    degree_grassmann_bundle_terms,
    degree_grassmannian_classical,
    pushforward_plucker_power,
    pushforward_rational_form,
    pushforward_schur_class,
    rational_form_coefficients,
)
from .oracles import (
    box_pieri_degree,
    localization_pushforward,
    run_suites,
    schur_form_at_roots,
    suite_degrees,
    suite_remark,
    suite_theorem,
    verify_pushforward,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "add_rectangle",
    "enumerate_partitions",
    "hook_lengths",
    "parse_partition",
    "rectangle",
    "ENUMERATION_CAP",
    "syt_count_hook",
    "syt_count_product",
    "syt_enumerate",
    "SchurExpansion",
    "complete_homogeneous_values",
    "h1_power_expansion",
    "jacobi_trudi_det",
    "pieri_multiply",
    "schur_via_jacobi_trudi",
    "BundleModel",
    "FormalBundle",
    "GradedPoly",
    "GradedRing",
    "SplitBundle",
    "integrate_over_pm",
    "ring_of",
    "segre_classes",
    "truncate",
    "compositions",
    "degree_grassmann_bundle",
    "degree_grassmann_bundle_terms",
    "degree_grassmannian_classical",
    "pushforward_plucker_power",
    "pushforward_rational_form",
    "pushforward_schur_class",
    "rational_form_coefficients",
    "box_pieri_degree",
    "localization_pushforward",
    "run_suites",
    "schur_form_at_roots",
    "suite_degrees",
    "suite_remark",
    "suite_theorem",
    "verify_pushforward",
    "SplitMix64",
    "__version__",
]
