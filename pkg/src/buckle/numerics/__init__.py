from .linalg import as_symmetric, cholesky, gen_sym_eig, jacobi_eig, sym_eig
from .poly import Polynomial, legendre_exact, poly_diff, poly_eval, poly_mul
from .quadrature import gauss_legendre, gauss_legendre_interval

__all__ = [
    "Polynomial",
    "as_symmetric",
    "cholesky",
    "gauss_legendre",
    "gauss_legendre_interval",
    "gen_sym_eig",
    "jacobi_eig",
    "legendre_exact",
    "poly_diff",
    "poly_eval",
    "poly_mul",
    "sym_eig",
]
