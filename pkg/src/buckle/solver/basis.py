"""Clamped Galerkin bases.

Floating-point work uses Legendre-series polynomials (``numpy.polynomial``),
which stay well conditioned at the degrees used here; the 1D basis also
has an exact rational monomial form for boundary-trace checks.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from numpy.polynomial import Legendre

from ..numerics.poly import Polynomial, legendre_exact


@dataclass(frozen=True)
class GalerkinBasis1D:
    """phi_j(x) = (1 - x^2)^l P_j(x) on [-1, 1], j = 0..size-1, P_j Legendre."""

    order: int
    size: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"basis order must be >= 1, got {self.order}")
        if self.size < 0:
            raise ValueError(f"basis size must be >= 0, got {self.size}")

    @cached_property
    def functions(self):
        bubble = (1 - Legendre.identity() ** 2) ** self.order
        return tuple(bubble * Legendre.basis(j) for j in range(self.size))

    def exact(self, j):
        """phi_j with exact rational coefficients in ascending powers of x."""
        bubble = Polynomial((Fraction(1), 0, Fraction(-1))) ** self.order
        return bubble * legendre_exact(j)

    def values(self, a, x):
        """Matrix of phi_j^{(a)}(x_q), shape (size, len(x))."""
        x = np.asarray(x, dtype=float)
        if self.size == 0:
            return np.zeros((0, x.size))
        return np.array([f.deriv(a)(x) if a else f(x) for f in self.functions])

    def boundary_traces(self):
        """Exact values phi_j^{(d)}(+-1) for d = 0..order-1 (all should be zero)."""
        out = []
        for j in range(self.size):
            p = self.exact(j)
            for d in range(self.order):
                q = p.deriv(d)
                out.extend((q(Fraction(-1)), q(Fraction(1))))
        return out


@dataclass(frozen=True)
class ModalFunction:
    """One azimuthal-mode function on a rotationally symmetric domain.

    disc: f(r) = r^m g(s) with s = r^2; ``poly`` is g in s.
    cap:  f(x) = (1 - x^2)^{m/2} p(x) with x = cos(theta); ``poly`` is p in x.

    ``poly`` may be a ``numpy.polynomial`` series or an exact ``Polynomial``.
    Only the polynomial factor is stored, so odd m needs no half-integer powers.
    """

    geometry: str
    m: int
    poly: object

    def __post_init__(self):
        if self.geometry not in ("disc", "cap"):
            raise ValueError(f"modal functions live on a disc or cap, not {self.geometry!r}")
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"azimuthal index must be a nonnegative integer, got {self.m!r}")


def _variable_like(p):
    if isinstance(p, Polynomial):
        return Polynomial.x()
    return type(p).identity(domain=p.domain, window=p.window)


def radial_laplacian_apply(f):
    """Apply the mode-m Laplacian, staying in the same representation.

    disc: Delta_m (r^m g(s)) = r^m (4 s g'' + 4 (m+1) g').
    cap:  Delta_m ((1-x^2)^{m/2} p) = (1-x^2)^{m/2} ((1-x^2) p'' - 2(m+1) x p' - m(m+1) p).
    """
    if not isinstance(f, ModalFunction):
        raise TypeError("radial_laplacian_apply expects a ModalFunction")
    p, m = f.poly, f.m
    t = _variable_like(p)
    if f.geometry == "disc":
        q = 4 * (t * p.deriv(2)) + 4 * (m + 1) * p.deriv(1)
    else:
        q = (1 - t * t) * p.deriv(2) - 2 * (m + 1) * (t * p.deriv(1)) - m * (m + 1) * p
    return ModalFunction(f.geometry, m, q)


@dataclass(frozen=True)
class RadialBasis:
    """Clamped radial basis for one azimuthal mode.

    disc of radius R: g_j(s) = (1 - s/R^2)^l q_j(s), s in [0, R^2].
    cap with x0 = cos(theta0): p_j(x) = (x - x0)^l q_j(x), x in [x0, 1].
    q_j are Legendre polynomials mapped to the variable's interval.
    """

    geometry: str
    m: int
    order: int
    size: int
    extent: float  # disc radius, or cap polar angle theta0

    @property
    def interval(self):
        if self.geometry == "disc":
            return (0.0, float(self.extent) ** 2)
        return (float(np.cos(self.extent)), 1.0)

    @cached_property
    def functions(self):
        lo, hi = self.interval
        dom = [lo, hi]
        t = Legendre.identity(domain=dom)
        if self.geometry == "disc":
            clamp = (1 - t / hi) ** self.order
        else:
            clamp = (t - lo) ** self.order
        return tuple(
            ModalFunction(self.geometry, self.m, clamp * Legendre.basis(j, domain=dom))
            for j in range(self.size)
        )

    def boundary_traces(self):
        """Values of the polynomial factor's derivatives 0..l-1 at the clamped end."""
        edge = self.interval[1] if self.geometry == "disc" else self.interval[0]
        return [f.poly.deriv(d)(edge) if d else f.poly(edge)
                for f in self.functions for d in range(self.order)]
