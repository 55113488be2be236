"""Dense symmetric factorizations and eigensolvers.

Matrices are plain ``numpy`` arrays. ``as_symmetric`` is the entry point
that turns an input into the symmetric matrix every routine here expects.
"""

import numpy as np
from scipy.linalg import solve_triangular

from ..errors import NotPositiveDefiniteError

PIVOT_TOL = 1e-13
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def as_symmetric(a):
    """Return ``a`` as a float array, symmetrized as (A + A^T) / 2."""
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return 0.5 * (a + a.T)


def cholesky(a):
    """Lower-triangular L with A = L L^T.

    Raises NotPositiveDefiniteError when a pivot falls to or below
    ``PIVOT_TOL * max|A|``.
    """
    a = as_symmetric(a)
    n = a.shape[0]
    L = np.zeros_like(a)
    if n == 0:
        return L
    floor = PIVOT_TOL * np.max(np.abs(a))
    for j in range(n):
        row = L[j, :j]
        pivot = a[j, j] - row @ row
        if not pivot > floor:
            raise NotPositiveDefiniteError(
                f"matrix is not positive definite (pivot {pivot:.3e} at index {j})"
            )
        d = np.sqrt(pivot)
        L[j, j] = d
        if j + 1 < n:
            L[j + 1:, j] = (a[j + 1:, j] - L[j + 1:, :j] @ row) / d
    return L


def jacobi_eig(a, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Cyclic Jacobi eigensolver for a symmetric matrix.

    Sweeps over all (p, q) pairs in row order, annihilating a_pq with a
    plane rotation, until the off-diagonal Frobenius norm is at most
    ``tol * ||A||_F``. Returns ascending eigenvalues and the matching
    orthonormal eigenvectors as columns.
    """
    a = as_symmetric(a)
    n = a.shape[0]
    v = np.eye(n)
    if n == 0:
        return np.zeros(0), v
    target = tol * np.linalg.norm(a)

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm(m):
        return np.sqrt(np.sum(m[offdiag] ** 2))

    for _ in range(max_sweeps):
        if off_norm(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    t = apq / diff  # theta*theta would overflow; t ~ 1/(2 theta)
                else:
                    theta = diff / (2.0 * apq)
                    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :]
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        if off_norm(a) > target:
            raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def sym_eig(a, method="lapack"):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix.

    ``method`` is ``"lapack"`` (``numpy.linalg.eigh``) or ``"jacobi"``.
    """
    a = as_symmetric(a)
    if method == "jacobi":
        return jacobi_eig(a)
    if method == "lapack":
        if a.shape[0] == 0:
            return np.zeros(0), np.eye(0)
        return np.linalg.eigh(a)
    raise ValueError(f"unknown eigensolver method {method!r}")


def gen_sym_eig(a, b, method="lapack"):
    """Solve A v = lambda B v for symmetric A and positive definite B.

    Reduces to a standard problem with the Cholesky factor of B,
    C = L^{-1} A L^{-T}, then maps eigenvectors back so that
    V^T B V = I.
    """
    a = as_symmetric(a)
    b = as_symmetric(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    L = cholesky(b)
    y = solve_triangular(L, a, lower=True)
    c = solve_triangular(L, y.T, lower=True)
    w, z = sym_eig(c, method=method)
    v = solve_triangular(L.T, z, lower=False)
    return w, v
