"""Exact evaluation of closed decorated foams and the structures built on it.

The state sum assigns to every closed decorated foam an integer symmetric
polynomial; from it the package computes graded ranks of web state
spaces, Gram pairings, flag-variety structure constants and
Littlewood-Richardson numbers, each checked against independent
combinatorial oracles.
"""

from .foamcore import (BindingArc, Coloring, Facet, Foam, SingularPoint,
                       apply_kempe, bichrome_euler, enumerate_colorings,
                       foam_degree, intersection_euler, kempe_components,
                       monochrome_euler, strip_zero_facets, theta_counts,
                       validate_foam)
from .foameval import (eval_colored, eval_lincomb, eval_numeric, s_invariant)
from .foameval import eval as eval_foam
from .polyring import (MultiPoly, RationalFn, exact_div_linear, is_symmetric,
                       poly_mul, rf_add, rf_normalize, specialize)
from .schur import (SchurCombo, VarSet, YoungDiagram, alternant,
                    complement_in, conjugate, dual_in, enumerate_box,
                    inversions, lr_coeffs, nabla, orthogonality_sum,
                    rectangle, schur_eval, schur_eval_jacobi_trudi,
                    schur_eval_ssyt, square_sum, vandermonde)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
