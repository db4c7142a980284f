"""Left Gröbner bases in PBW algebras, applied to sl2 fusion ideals.

Modules: ``coeffs`` (the field Q(a)), ``galgebra`` (G-algebras and their
elements), ``groebner`` (left Buchberger, staircases), ``current``
(truncated current algebras), ``fusion`` (the sl2 fusion ideals and their
explicit basis), ``repmod`` (module-side oracle) and ``cli``.
"""

from .coeffs import A, ONE, ZERO, ParamRat, ParseError, SpecializationPole, parse_paramrat
from .current import (
    LieStructure,
    TruncationPoly,
    algebra_from_config,
    sl2_structure,
    sl2_truncated,
    truncated_current,
)
from .fusion import (
    WeightPair,
    ad_e1_identity,
    claimed_groebner_basis,
    f_polynomial,
    fusion_coefficients,
    ideal_I,
    ideal_Ia,
    verify_commutators,
    verify_theorem,
)
from .galgebra import GAlgebra, MonomialOrder, NcPoly, commutator, pbw_consistency_check
from .groebner import (
    LeftGB,
    MonomialIdeal,
    graded_dimensions,
    ideals_equal,
    interreduce,
    leading_term_ideal,
    left_buchberger,
    left_normal_form,
    spoly,
    staircase,
)
from .repmod import cyclic_dimension, evaluation_tensor_module, fusion_graded_dims_oracle, irrep

__version__ = "0.1.0"
