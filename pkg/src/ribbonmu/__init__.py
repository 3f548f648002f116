"""Exact arithmetic toolkit for ribbon-move obstructions of 2-knots.

The package computes, over arbitrary-precision integers:

* the mu-invariant (mod 16) of 2-twist-spun 2-knots and of 2-knots
  presented by an even bounding form,
* first homology of branched double covers from Seifert matrices,
* the torsion doubling obstruction on Seifert-hypersurface homology,
* alinking numbers of (sphere, torus)-links,

together with the supporting exact kernel: Smith normal forms,
determinants, cokernels, and signatures of symmetric forms.
"""

from .abelian import (
    DoublingHypothesisError,
    FiniteAbelianGroup,
    cokernel,
    combine_doubles,
    direct_sum,
    direct_sum_all,
    from_elementary_divisors,
    from_presentation,
    is_double,
    is_isomorphic,
)
from .alink import ClassificationError, InducedMap, alinking, mod2_alinking
from .braid import (
    E8,
    BraidWord,
    CatalogEntry,
    CatalogError,
    NotAKnotError,
    alexander_at,
    catalog,
    catalog_names,
    seifert_matrix_from_braid,
)
from .exactla import (
    DimensionError,
    FormError,
    IntMatrix,
    SnfResult,
    block_diag,
    block_diag_all,
    determinant,
    invariant_factors,
    signature,
    smith_normal_form,
)
from .obstruct import (
    Conclusion,
    Verdict,
    obstruct_ribbon_equivalent,
    obstruct_ribbon_trivial,
)
from .spinmu import (
    Mu,
    SeifertMatrix,
    SeifertValidationError,
    SpinStructureError,
    TwoKnotInvariants,
    branched_double_cover_h1,
    intersection_form,
    mu_boundary_link_sum,
    mu_from_even_form,
    mu_two_twist_spin,
    validate_seifert,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CatalogEntry",
    "CatalogError",
    "ClassificationError",
    "Conclusion",
    "DimensionError",
    "DoublingHypothesisError",
    "E8",
    "FiniteAbelianGroup",
    "FormError",
    "InducedMap",
    "IntMatrix",
    "Mu",
    "NotAKnotError",
    "SeifertMatrix",
    "SeifertValidationError",
    "SnfResult",
    "SpinStructureError",
    "TwoKnotInvariants",
    "Verdict",
    "alexander_at",
    "alinking",
    "block_diag",
    "block_diag_all",
    "branched_double_cover_h1",
    "catalog",
    "catalog_names",
    "cokernel",
    "combine_doubles",
    "determinant",
    "direct_sum",
    "direct_sum_all",
    "from_elementary_divisors",
    "from_presentation",
    "intersection_form",
    "invariant_factors",
    "is_double",
    "is_isomorphic",
    "mod2_alinking",
    "mu_boundary_link_sum",
    "mu_from_even_form",
    "mu_two_twist_spin",
    "obstruct_ribbon_equivalent",
    "obstruct_ribbon_trivial",
    "seifert_matrix_from_braid",
    "signature",
    "smith_normal_form",
    "validate_seifert",
]
