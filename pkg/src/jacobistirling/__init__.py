"""Exact computation and verification of Jacobi-Stirling descent polynomials."""

from .exactpoly import Poly, format_poly, is_real_rooted, real_root_count
from .jsnumbers import build_triangle
from .diagonal import descent_table_gf, descent_table_rec, diagonal_first, diagonal_second
from .posets import LabeledPoset, build_P_legendre, build_R, descent_polynomial, linear_extensions
from .permutations import enumerate_jsp, phi, phi_inverse, psi, psi_inverse

__version__ = "0.1.0"
