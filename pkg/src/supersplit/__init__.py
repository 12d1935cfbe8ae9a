"""Exact splitting analysis for varieties in weighted projective superspaces."""

from .algebra import (
    Degree,
    SuperPolynomial,
    SuperRing,
    Substitution,
    WeightSystem,
    apply,
    graded_piece_basis,
    partial_even,
    partial_odd,
    render,
    weighted_degree,
)
from .analysis import (
    REDUCED,
    Outcome,
    VarietyJob,
    extract_normal_section,
    homogeneous_order,
    irreducibility_check,
    is_homogeneously_nonreduced,
    is_quadric,
    jacobian_membership,
    smoothness_check,
    splitting_search,
    verdict,
)
from .cohomology import (
    cohomology_table,
    h_line,
    h_omega,
    h_tangent,
    normality_certificate,
    obstruction_decomposition,
    quadric_normal_h0,
)
from .errors import (
    ArityError,
    ConsistencyError,
    JobError,
    LaurentError,
    ParityError,
    ParseError,
    SupersplitError,
    WeightError,
)
from .jobfile import load_job, parse_job
from .models import (
    ModelSpec,
    chart_transition,
    check_weight_preserving,
    cocycle_check,
    framed_coefficient_dim,
    linear_part,
    linear_substitution,
    product_model,
    segre_coordinate_map,
    segre_data,
    split_model,
)
from .parser import parse_polynomial

__version__ = "0.1.0"
