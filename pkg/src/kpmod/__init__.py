"""Exact workbench for Schubert polynomials and Kraskiewicz-Pragacz modules.

Computes Schubert polynomials over exact integers, realizes KP modules as
explicit weight modules over the upper-triangular matrices with rational
action matrices, verifies annihilator and duality identities at desk scale,
and decides/extracts KP filtrations of weight modules (tensor products and
Schur-functor images included).
"""

from .filtration import (
    CriterionReport,
    FiltrationReport,
    MixedDegreeError,
    char_criterion,
    kp_filtration_extract,
    schur_functor_experiment,
    sort_weights,
    tensor_experiment,
    young_symmetrizer_image,
)
from .laurent import LaurentPoly
from .modules import (
    AnnihilatorReport,
    ModuleMap,
    ModuleTooLargeError,
    WeightModule,
    annihilator_check,
    character,
    cyclic_submodule,
    demazure_module,
    dual_twist,
    exterior_power,
    hom_dim,
    hom_space,
    kp_module,
    largest_quotient,
    one_dim,
    sl3_identity_check,
    sl3_presentation_check,
    symmetric_power,
    tensor_many,
    tensor_power,
    tensor_product,
    vector_rep,
)
from .permutations import (
    MTable,
    Permutation,
    TransitionData,
    code,
    compare,
    contains_2143,
    dominates,
    inversion_data,
    m_table,
    perm_of,
    rho,
    transition,
    weight_window,
)
from .schubert import (
    cauchy_window_check,
    divided_difference,
    dominance_interval,
    dual_pairing,
    expand_in_schubert,
    kostant_dim,
    plethysm_eval,
    schubert_poly,
    schubert_poly_of_perm,
)

__version__ = "0.1.0"
