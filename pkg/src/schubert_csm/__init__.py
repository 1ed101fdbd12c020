"""Exact characteristic classes of Schubert cells and varieties in complex
Grassmannians: CSM classes, Chern-Mather classes and local Euler obstructions,
computed through small resolutions with two independent pushforward engines
(equivariant localization and symbolic Gysin maps) that cross-validate.
"""

__version__ = "0.1.0"

from .engine import (
    CsmTable,
    chern_mather,
    codim1_coefficient,
    csm_cell,
    csm_variety,
    d_matrix,
    e_matrix,
    euler_obstruction,
    positivity_report,
    resolution_pushforward,
    table,
    verify_engines,
    weak_positivity_check,
)
from .errors import DomainError, InvariantError
from .gysin import (
    flag_to_grassmannian_push,
    fundamental_class_w0,
    pushforward_csm_w0,
    to_schubert_expansion,
)
from .localization import (
    bott_integral,
    bott_terms,
    enumerate_fixed_points,
    pushforward_csm,
    tangent_weights,
)
from .partitions import (
    Partition,
    PeakForm,
    cell_center,
    conjugate,
    depth_vector,
    dual_in_box,
    enumerate_box,
    from_peak_form,
    leq,
    remove_peak,
    to_peak_form,
)
from .symmetric import (
    binomial_det,
    chern_schur_eval,
    gaussian_binomial,
    invert_unipotent,
    lr_coefficients,
    schur_eval,
    straighten,
)
from .zelevinsky import (
    ResolutionPlan,
    build_plan,
    euler_fiber,
    fiber_dimension,
    fiber_poincare,
    find_small_order,
    identity_order,
    is_small,
    reversing_order,
    singular_locus,
)
