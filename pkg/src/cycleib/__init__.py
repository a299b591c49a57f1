"""Exact arithmetic for the infinite-dimensional cyclic left Leibniz algebra.

L has basis a_1, a_2, ... with [a_1, a_n] = a_{n+1} and every other basis
bracket zero.  The package covers elements and the bracket, the
endomorphism monoid, the derivation algebra, and a truncated-matrix oracle
that re-checks all of them on finite windows.
"""

from .algebra import (
    Element,
    WindowSubspace,
    bracket,
    centers_window,
    element_make,
    gamma_window,
    leibniz_defect,
)
from .derivations import (
    DerDecomposition,
    Derivation,
    der_apply,
    der_bracket,
    der_decompose,
    der_from_gamma,
    der_linear_combine,
    der_solve_commutator,
)
from .endomorphisms import (
    Endo,
    EndoClass,
    MonFactorization,
    endo_apply,
    endo_classify,
    endo_compose,
    endo_conjugate_diag,
    endo_factorize,
    endo_from_gamma,
    endo_identity,
    endo_inverse,
    endo_phi,
    endo_phi_inverse,
)
from .errors import *  # noqa: F401,F403
from .finmat import (
    FinMatrixWindow,
    commutator,
    matmul,
    matrix_of_der,
    matrix_of_endo,
    oracle_check_der,
    oracle_check_endo,
)
from .kernels import BACKEND
from .polyring import Polynomial, poly_mul, poly_unit_constant
from .scalars import GF, Q, FieldDescriptor, Scalar, field_char, parse_field, parse_scalar, scalar_inv

__version__ = "0.1.0"
