"""Exact-quadrature assembly of the buckling forms.

For an integer k >= 1 the k-th form is the quadratic form of
u -> integral of u (-Delta)^k u on the clamped space:

    even k:  integral of (Delta^{k/2} u)^2
    odd k:   integral of |grad Delta^{(k-1)/2} u|^2

The eigenproblem uses A = form(l) and B = form(1) (the Dirichlet form).
All integrands are polynomials and are integrated exactly by Gauss-Legendre.
"""

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product

import numpy as np

from ..core import Disc, Interval, Rectangle, SphericalCap
from ..numerics.linalg import as_symmetric
from ..numerics.quadrature import gauss_legendre, gauss_legendre_interval
from .basis import GalerkinBasis1D, RadialBasis, radial_laplacian_apply

MAX_TENSOR_BASIS = 40
MAX_RADIAL_BASIS = 28


@dataclass(frozen=True)
class AssembledForms:
    A: np.ndarray
    B: np.ndarray


def quadrature_points(N, l, m=0):
    return N + 2 * l * math.ceil(l / 2) + m + 4


def derivative_gram(basis, a, b, npts=None):
    """G_ij = integral over [-1, 1] of phi_i^{(a)} phi_j^{(b)} dx."""
    if not (0 <= a <= basis.order and 0 <= b <= basis.order):
        raise ValueError(f"derivative orders must lie in 0..{basis.order}")
    N = basis.size
    if N == 0:
        return np.zeros((0, 0))
    if npts is None:
        npts = N + 2 * basis.order + 1
    x, w = gauss_legendre(npts)
    return (basis.values(a, x) * w) @ basis.values(b, x).T


# -- tensor-product domains --------------------------------------------------

def _multi_indices(p, dim):
    """Multi-indices alpha with |alpha| = p and their multinomial weights."""
    out = []
    for alpha in product(range(p + 1), repeat=dim):
        if sum(alpha) == p:
            c = math.factorial(p)
            for a in alpha:
                c //= math.factorial(a)
            out.append((alpha, c))
    return out


class TensorForms:
    """Form matrices on a box [0, L_1] x ... x [0, L_d] with a tensor basis."""

    def __init__(self, l, sides, N):
        self.l = l
        self.sides = tuple(float(s) for s in sides)
        self.N = N
        basis = GalerkinBasis1D(l, N)
        npts = quadrature_points(N, l)
        x, w = gauss_legendre(npts)
        vals = [basis.values(a, x) for a in range(l + 1)]
        ref = [[(vals[a] * w) @ vals[b].T for b in range(l + 1)] for a in range(l + 1)]
        # x = L (xi + 1) / 2: d/dx = (2/L) d/dxi, dx = (L/2) dxi
        self.grams = [
            [[ref[a][b] * (2.0 / L) ** (a + b) * (L / 2.0) for b in range(l + 1)]
             for a in range(l + 1)]
            for L in self.sides
        ]

    def _kron(self, orders_a, orders_b):
        mats = [self.grams[d][orders_a[d]][orders_b[d]] for d in range(len(self.sides))]
        return reduce(np.kron, mats)

    def form(self, k):
        dim = len(self.sides)
        p = k // 2
        terms = _multi_indices(p, dim)
        size = self.N ** dim
        out = np.zeros((size, size))
        if k % 2 == 0:
            for (alpha, ca), (beta, cb) in product(terms, terms):
                out += ca * cb * self._kron([2 * a for a in alpha], [2 * b for b in beta])
        else:
            for e in range(dim):
                unit = [int(d == e) for d in range(dim)]
                for (alpha, ca), (beta, cb) in product(terms, terms):
                    out += ca * cb * self._kron(
                        [2 * a + u for a, u in zip(alpha, unit)],
                        [2 * b + u for b, u in zip(beta, unit)],
                    )
        return as_symmetric(out)

    def forms(self):
        return AssembledForms(self.form(self.l), self.form(1))


def _check_tensor_size(N):
    if N < 1:
        raise ValueError(f"basis size must be >= 1, got {N}")
    if N > MAX_TENSOR_BASIS:
        raise ValueError(f"basis size {N} exceeds the conditioning cap {MAX_TENSOR_BASIS}")


def assemble_interval(l, length, N):
    _check_tensor_size(N)
    return TensorForms(l, [length], N).forms()


def assemble_rectangle(l, sides, N):
    if len(sides) not in (2, 3):
        raise ValueError(f"rectangle dimension must be 2 or 3, got {len(sides)}")
    _check_tensor_size(N)
    return TensorForms(l, sides, N).forms()


# -- rotationally symmetric domains ------------------------------------------

class ModalForms:
    """Form matrices for one azimuthal mode of a disc or spherical cap."""

    def __init__(self, domain, l, m, N):
        if isinstance(domain, Disc):
            geometry, extent = "disc", domain.radius
        elif isinstance(domain, SphericalCap):
            geometry, extent = "cap", domain.theta0
        else:
            raise ValueError(f"modal assembly needs a disc or cap, got {type(domain).__name__}")
        if m < 0:
            raise ValueError(f"azimuthal index must be >= 0, got {m}")
        if N < 1:
            raise ValueError(f"basis size must be >= 1, got {N}")
        if N > MAX_RADIAL_BASIS:
            raise ValueError(f"radial basis size {N} exceeds the conditioning cap {MAX_RADIAL_BASIS}")
        self.geometry = geometry
        self.l, self.m, self.N = l, m, N
        self.basis = RadialBasis(geometry, m, l, N, extent)
        lo, hi = self.basis.interval
        self.t, self.w = gauss_legendre_interval(quadrature_points(N, l, m), lo, hi)
        self._powers = {0: list(self.basis.functions)}

    def _laplacian_power(self, p):
        if p not in self._powers:
            prev = self._laplacian_power(p - 1)
            self._powers[p] = [radial_laplacian_apply(f) for f in prev]
        return self._powers[p]

    def _values(self, fs, deriv=0):
        return np.array([f.poly.deriv(deriv)(self.t) if deriv else f.poly(self.t) for f in fs])

    def _mass(self, fs):
        """Integral of f_i f_j over the mode's area measure (angular factor omitted)."""
        t, m = self.t, self.m
        V = self._values(fs)
        if self.geometry == "disc":
            weight = 0.5 * t ** m  # r dr = ds / 2
        else:
            weight = (1.0 - t * t) ** m
        return (V * (weight * self.w)) @ V.T

    def _gradient(self, fs):
        """Integral of grad f_i . grad f_j (radial plus m^2 angular term)."""
        t, m = self.t, self.m
        V = self._values(fs)
        D = self._values(fs, 1)
        w = self.w
        if self.geometry == "disc":
            # m^2 s^{m-1} g^2 + 2 m s^m g g' + 2 s^{m+1} g'^2  (ds measure)
            out = (D * (2.0 * t ** (m + 1) * w)) @ D.T
            if m:
                out += (V * (m * m * t ** (m - 1) * w)) @ V.T
                cross = (V * (2.0 * m * t ** m * w)) @ D.T
                out += 0.5 * (cross + cross.T)
        else:
            # (1-x^2)^{m+1} p'^2 - 2 m x (1-x^2)^m p p' + m^2 (1+x^2) (1-x^2)^{m-1} p^2
            s = 1.0 - t * t
            out = (D * (s ** (m + 1) * w)) @ D.T
            if m:
                out += (V * (m * m * (1.0 + t * t) * s ** (m - 1) * w)) @ V.T
                cross = (V * (-2.0 * m * t * s ** m * w)) @ D.T
                out += 0.5 * (cross + cross.T)
        return out

    def form(self, k):
        fs = self._laplacian_power(k // 2)
        return as_symmetric(self._mass(fs) if k % 2 == 0 else self._gradient(fs))

    def forms(self):
        return AssembledForms(self.form(self.l), self.form(1))


def assemble_modal(domain, l, m, N):
    return ModalForms(domain, l, m, N).forms()


def form_builder(domain, l, N, m=0):
    """Object with a ``form(k)`` method for the given domain (and mode)."""
    if isinstance(domain, Interval):
        _check_tensor_size(N)
        return TensorForms(l, [domain.length], N)
    if isinstance(domain, Rectangle):
        if domain.dimension not in (2, 3):
            raise ValueError(f"rectangle dimension must be 2 or 3, got {domain.dimension}")
        _check_tensor_size(N)
        return TensorForms(l, domain.sides, N)
    return ModalForms(domain, l, m, N)
