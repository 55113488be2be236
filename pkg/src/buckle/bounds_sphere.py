"""Universal inequalities for buckling eigenvalues on spherical domains.

The polynomial recursion is carried out in exact integer arithmetic; floats
enter only when the coefficients are combined with eigenvalue powers.
Throughout, rho_i = Lambda_i^{1/(l-1)} and c = n - 2.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import validate_spectrum
from .errors import DegenerateGapsError, IncompatibleSpectrumError, ValidationError
from .numerics.poly import Polynomial

DELTA_GRID_DECADES = (-2, 2)
DELTA_GRID_PER_DECADE = 25


@dataclass(frozen=True)
class SphereRecursion:
    n: int
    l: int
    F: tuple
    G: tuple
    a: tuple  # a_0 .. a_{l-2}

    @property
    def combined(self):
        """t F_{l-2}(t) - G_{l-2}(t)."""
        return Polynomial.x() * self.F[-1] - self.G[-1]


def _three_term(n, qmax):
    t = Polynomial.x()
    F = [Polynomial((1,)), t - (n + 2)]
    G = [Polynomial((1,)), 3 * t + (n - 2)]
    mult = 2 * t - 2
    quad = t * t + 2 * t - n * (n - 2)
    for _ in range(2, qmax + 1):
        F.append(mult * F[-1] - quad * F[-2])
        G.append(mult * G[-1] - quad * G[-2])
    return F[:qmax + 1], G[:qmax + 1]


def _coupled(n, qmax):
    t = Polynomial.x()
    F = [Polynomial((1,)), t - (n + 2)]
    G = [Polynomial((1,)), 3 * t + (n - 2)]
    for _ in range(2, qmax + 1):
        f_prev, g_prev = F[-1], G[-1]
        F.append((t - n) * f_prev - 2 * g_prev)
        G.append((t + (n - 2)) * g_prev + 2 * t * f_prev)
    return F[:qmax + 1], G[:qmax + 1]


@lru_cache(maxsize=None)
def fg_polys(l, n):
    """F_0..F_{l-2}, G_0..G_{l-2} and the a_j coefficients, checked two ways.

    The three-term recursion and the coupled first-order recursion must
    agree exactly; any disagreement or a non-monic t F_{l-2} - G_{l-2}
    raises ``ArithmeticError``.
    """
    if int(l) != l or int(n) != n or l < 2 or n < 2:
        raise ValueError(f"need integers l >= 2 and n >= 2, got l={l}, n={n}")
    qmax = l - 2
    F, G = _three_term(n, qmax)
    F2, G2 = _coupled(n, qmax)
    if F != F2 or G != G2:
        raise ArithmeticError(f"F/G recursions disagree for l={l}, n={n}")
    if not all(p.is_integer() for p in F + G):
        raise ArithmeticError("F/G recursion left the integers")
    combined = Polynomial.x() * F[-1] - G[-1]
    if combined.degree != l - 1 or combined.leading != 1:
        raise ArithmeticError(f"t F_(l-2) - G_(l-2) is not monic of degree {l - 1}: {combined}")
    return SphereRecursion(n, l, tuple(F), tuple(G), combined.coeffs[:l - 1])


def aj_coefficients(l, n):
    """[a_0, ..., a_{l-2}] with t F_{l-2} - G_{l-2} = t^{l-1} + sum a_j t^j."""
    return list(fg_polys(l, n).a)


def _rho(lam, l, n):
    rho = lam ** (1.0 / (l - 1))
    if not rho > n - 2:
        raise IncompatibleSpectrumError(
            f"spectrum incompatible with sphere bound: Lambda^(1/(l-1)) = {rho:.6g} <= n-2 = {n - 2}"
        )
    return rho


def h_value(lam, l, n):
    """H = rho (1 - 1/(rho - (n-2))) + sum_j |a_j| rho^j."""
    rho = _rho(lam, l, n)
    a = fg_polys(l, n).a
    tail = sum(abs(aj) * rho ** j for j, aj in enumerate(a))
    return rho * (1.0 - 1.0 / (rho - (n - 2))) + tail


def weight(lam, l, n):
    """2 + (n-2)/(rho - (n-2))."""
    rho = _rho(lam, l, n)
    return 2.0 + (n - 2) / (rho - (n - 2))


def _sphere(spectrum):
    spectrum = validate_spectrum(spectrum)
    if spectrum.geometry != "sphere":
        raise ValidationError("expected a sphere spectrum")
    return spectrum


def _terms(spectrum, k):
    """gap_i, H_i, w_i, and rho_i + (n-2)^2/4 for i = 1..k."""
    if int(k) != k or k < 1 or k > len(spectrum) - 1:
        raise IndexError(f"k={k} out of range for a spectrum of length {len(spectrum)}")
    l, n = spectrum.order, spectrum.dimension
    lam = spectrum.values[:k]
    nxt = spectrum.values[k]
    gap = np.array([nxt - x for x in lam])
    H = np.array([h_value(x, l, n) for x in lam])
    w = np.array([weight(x, l, n) for x in lam])
    z = np.array([_rho(x, l, n) + (n - 2) ** 2 / 4.0 for x in lam])
    return gap, H, w, z


def thm12_parts(spectrum, k):
    """(LHS, P, Q) with RHS(delta) = delta P + Q / delta."""
    spectrum = _sphere(spectrum)
    gap, H, w, z = _terms(spectrum, k)
    return float(np.sum(gap ** 2 * w)), float(np.sum(gap ** 2 * H)), float(np.sum(gap * z))


def thm12_residual(spectrum, k, delta):
    """RHS - LHS of the sphere inequality at ``delta``; >= 0 when it holds."""
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta!r}")
    lhs, P, Q = thm12_parts(spectrum, k)
    return delta * P + Q / delta - lhs


def optimal_delta(spectrum, k):
    """The delta minimizing delta P + Q / delta, i.e. sqrt(Q / P)."""
    _, P, Q = thm12_parts(spectrum, k)
    if P == 0.0 and Q == 0.0:
        raise DegenerateGapsError("degenerate gaps: all Lambda_i equal Lambda_{k+1}")
    if not (P > 0.0 and Q > 0.0):
        raise DegenerateGapsError(f"no finite minimizing delta (P={P:.6g}, Q={Q:.6g})")
    return math.sqrt(Q) / math.sqrt(P)


def delta_grid():
    lo, hi = DELTA_GRID_DECADES
    return np.logspace(lo, hi, DELTA_GRID_PER_DECADE * (hi - lo) + 1)


@dataclass(frozen=True)
class Cor12Result:
    S: float
    T: tuple
    A: float
    B: float
    bound: object  # float, or None when A^2 < B


def cor12_bound(spectrum, k):
    """Closed-form upper bound A + sqrt(A^2 - B) for Lambda_{k+1}."""
    spectrum = _sphere(spectrum)
    if int(k) != k or k < 1 or k > len(spectrum):
        raise IndexError(f"k={k} out of range for a spectrum of length {len(spectrum)}")
    l, n = spectrum.order, spectrum.dimension
    lam = np.array(spectrum.values[:k])
    rho_k = _rho(lam[-1], l, n)
    S = 2.0 + (n - 2) / (rho_k - (n - 2))
    T = np.array([h_value(x, l, n) * (_rho(x, l, n) + (n - 2) ** 2 / 4.0) for x in lam])
    A = float(np.mean(lam) + 2.0 / (k * S * S) * np.sum(T))
    B = float(np.mean(lam ** 2) + 4.0 / (k * S * S) * np.sum(T * lam))
    disc = A * A - B
    bound = A + math.sqrt(disc) if disc >= 0 else None
    return Cor12Result(float(S), tuple(float(x) for x in T), A, B, bound)


def factor_123(lam, n, delta):
    """Per-term factor of the sharpened l = 2 inequality.

    Written without float literals so exact (``Fraction``) inputs stay exact.
    """
    c = n - 2
    return delta + delta * lam * (1 - 1 / (lam - c)) - c / (lam - c)


def factor_110(lam, n, delta):
    """Per-term factor of the earlier l = 2 sphere inequality."""
    c = n - 2
    return delta * lam + delta * delta * (lam - c) / (4 * (delta * lam + c))


def wx_comparator(spectrum, k, delta):
    """Right-hand sides (rhs_123, rhs_110) of the two l = 2 sphere inequalities.

    Both share the (1/delta) sum; each is compared against 2 sum gap^2.
    """
    spectrum = _sphere(spectrum)
    if spectrum.order != 2:
        raise ValidationError(f"comparator needs l = 2, got l = {spectrum.order}")
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta!r}")
    if int(k) != k or k < 1 or k > len(spectrum) - 1:
        raise IndexError(f"k={k} out of range for a spectrum of length {len(spectrum)}")
    n = spectrum.dimension
    lam = np.array(spectrum.values[:k])
    if np.any(lam <= n - 2):
        raise IncompatibleSpectrumError("comparator needs Lambda_i > n - 2")
    gap = spectrum.values[k] - lam
    tail = np.sum(gap * (lam + (n - 2) ** 2 / 4.0)) / delta
    rhs_123 = float(np.sum(gap ** 2 * factor_123(lam, n, delta)) + tail)
    rhs_110 = float(np.sum(gap ** 2 * factor_110(lam, n, delta)) + tail)
    return rhs_123, rhs_110
