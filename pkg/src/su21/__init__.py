"""U(2) representation calculus and the SU(2,1) minimal principal series."""

__version__ = "0.1.0"

from .surd import Surd, HalfInt, LambdaPoly, CSurd, half, surd_normalize
from .compact import (EulerAngles, UnitaryMatrix2, WignerIndex, TrigPolynomial,
                      matrix_from_euler, euler_from_matrix, euler_from_unitary,
                      quaternion_from_euler, little_d, little_d_hyper,
                      little_d_jacobi, jacobi_P, wigner_D, cg, threej,
                      product_expand)
from .structure import (Matrix3C, basis_matrix, cayley_matrix, n_matrix,
                        iwasawa_valpha, iwasawa_group, express_in_kp)
from .action import (InductionChar, KType, ktype_set, dl_valpha, dl_k, dr_op,
                     operator_matrix, casimir2_scalar, casimir3_scalar,
                     casimir2_apply, verify_brackets)
from .decomposition import (chamber_classify, weyl_reflect, composition_series,
                            subquotient_ktypes, verify_closure, finite_dim_check)
from .intertwine import (a_closed, a_closed_exact, a_gammasum, a_quadrature,
                         constant_term_oracle, QuadratureSpec)

__all__ = [name for name in dir() if not name.startswith("_")]
