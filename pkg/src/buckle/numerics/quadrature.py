"""Gauss-Legendre quadrature on [-1, 1]."""

import numpy as np

_NEWTON_TOL = 1e-15
_MAX_NEWTON = 100


def _legendre_and_derivative(n, x):
    """Evaluate P_n and P_n' at the points x by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    # P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1); nodes stay strictly inside (-1, 1)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def gauss_legendre(npts):
    """Nodes and weights of the ``npts``-point Gauss-Legendre rule.

    Nodes are the roots of P_npts, found by Newton iteration from the
    cosine initial guess; the rule integrates polynomials of degree
    ``2*npts - 1`` exactly. Nodes are returned in ascending order.
    """
    npts = int(npts)
    if npts < 1:
        raise ValueError(f"need at least one quadrature point, got {npts}")
    if npts == 1:
        return np.array([0.0]), np.array([2.0])

    i = np.arange(1, npts + 1)
    x = np.cos(np.pi * (i - 0.25) / (npts + 0.5))
    for _ in range(_MAX_NEWTON):
        p, dp = _legendre_and_derivative(npts, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) <= _NEWTON_TOL:
            break
    p, dp = _legendre_and_derivative(npts, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    order = np.argsort(x)
    x, w = x[order], w[order]
    # enforce the exact symmetry of the rule
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    if npts % 2:
        x[npts // 2] = 0.0
    return x, w


def gauss_legendre_interval(npts, a, b):
    """Gauss-Legendre rule mapped affinely to [a, b]."""
    x, w = gauss_legendre(npts)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w
