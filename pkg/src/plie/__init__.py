"""Exact rational computer algebra for metric Lie bialgebras: contravariant
Levi-Civita connections, curvature, Hawkins metacurvature, semidirect tangent
doubles, and mechanical verification of their structure identities."""

from .errors import (
    InvalidInputError,
    ParseError,
    PlieError,
    SingularMatrixError,
    UnsupportedInputError,
    ValidationError,
)
from .forms import FormElement, wedge
from .hawkins import (
    InvariantComplex,
    MetaTensor,
    ce_differential,
    connection_extend,
    graded_bracket,
    graded_jacobi_defect,
    is_metaflat,
    koszul_bracket,
    metacurvature,
    pre_poisson_bracket,
)
from .lie import (
    LieAlgebra,
    LieBialgebra,
    apply_bivector,
    bracket_apply,
    coadjoint,
    cocycle_defect,
    dual_semidirect_double,
    jacobi_defect,
    linearized_poisson,
    semidirect_double,
    tangent_bialgebra,
)
from .metric import (
    CompatibilityVerdict,
    CurvatureTensor,
    InfinitesimalConnection,
    MetricForm,
    complete_lift_metric,
    contravariant_from_covariant,
    curvature,
    levi_civita,
    metric_parallel_defect,
    nabla_curvature,
    prla_defect,
    prpl_abelian_base_check,
    prpl_pointwise_defect,
    torsion_defect,
)
from .tangent import (
    VerificationReport,
    complete_lift,
    pair_form,
    verify_all,
    verify_equivalences,
    verify_prla_double,
    verify_prpl_theorem,
    verify_tangent_bracket,
    verify_tangent_connection,
    verify_tangent_curvature,
    verify_tangent_koszul,
    verify_tangent_metacurvature,
    verify_tangent_nabla_r,
    vertical_lift,
)
from .tensor import Tensor, solve_linear, tensor_contract

__version__ = "0.1.0"

__all__ = [
    "CompatibilityVerdict",
    "CurvatureTensor",
    "FormElement",
    "InfinitesimalConnection",
    "InvariantComplex",
    "InvalidInputError",
    "LieAlgebra",
    "LieBialgebra",
    "MetaTensor",
    "MetricForm",
    "ParseError",
    "PlieError",
    "SingularMatrixError",
    "Tensor",
    "UnsupportedInputError",
    "ValidationError",
    "VerificationReport",
    "apply_bivector",
    "bracket_apply",
    "ce_differential",
    "coadjoint",
    "cocycle_defect",
    "complete_lift",
    "complete_lift_metric",
    "connection_extend",
    "contravariant_from_covariant",
    "curvature",
    "dual_semidirect_double",
    "graded_bracket",
    "graded_jacobi_defect",
    "is_metaflat",
    "jacobi_defect",
    "koszul_bracket",
    "levi_civita",
    "linearized_poisson",
    "metacurvature",
    "metric_parallel_defect",
    "nabla_curvature",
    "pair_form",
    "pre_poisson_bracket",
    "prla_defect",
    "prpl_abelian_base_check",
    "prpl_pointwise_defect",
    "semidirect_double",
    "solve_linear",
    "tangent_bialgebra",
    "tensor_contract",
    "torsion_defect",
    "verify_all",
    "verify_equivalences",
    "verify_prla_double",
    "verify_prpl_theorem",
    "verify_tangent_bracket",
    "verify_tangent_connection",
    "verify_tangent_curvature",
    "verify_tangent_koszul",
    "verify_tangent_metacurvature",
    "verify_tangent_nabla_r",
    "vertical_lift",
    "wedge",
]
