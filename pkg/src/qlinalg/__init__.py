"""Quaternion matrix algebra with left/right ordered products."""

from .adjoint import AdjointSide, from_adjoint, inv_left, inv_right, matrix_symplectic_split
from .errors import (DefectiveOrAmbiguous, DegenerateInput, DivisionByZero, EntriesOutsideSubfield,
                     InvalidAxes, NoConvergence, NotInEmbeddingImage, NumericalError, ParseError,
                     QuaternionError, ShapeMismatch, SingularMatrix)
from .io import format_qmat, load_qmat, parse_qmat, save_qmat
from .qdft import QdftKind, dqft, fourier_matrix, idqft
from .qmat import (ProductOrder, QuatMatrix, TripleOrder, conj, herm, identity, mul, mul_left,
                   mul_right, scalar_mul, transpose, triple_product, vec)
from .quaternion import I, J, K, ONE, ZERO, PureUnitQuaternion, Quaternion, parse_quaternion
from .spectral import RightEigenDecomposition, right_eig, verify_left_pair, verify_right_pair
from .subspaces import ScalarSide, SubspaceBasis, SubspaceKind, basis, contains, rank_left, rank_right
from .tensor import VecForm, khatri_rao, kron, vec_identity_kr, vec_identity_kron
from .widely_linear import WidelyLinearSystem, solve_complex

__all__ = [name for name in dir() if not name.startswith("_")]
