"""Univariate polynomials with exact coefficient arithmetic.

A single ``Polynomial`` type covers both integer polynomials (coefficients
are Python ``int``, so there is no fixed-width overflow to wrap) and real
polynomials (``float`` or ``fractions.Fraction`` coefficients). Coefficients
are stored in ascending powers with trailing zeros trimmed.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_integer(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, x):
        return poly_eval(self, x)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def deriv(self, m=1):
        p = self
        for _ in range(m):
            p = poly_diff(p)
        return p

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


def _coerce(p):
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, Number):
        return Polynomial((p,))
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def poly_diff(p):
    return Polynomial(tuple(k * c for k, c in enumerate(p.coeffs) if k > 0))


def poly_mul(p, q):
    if not p.coeffs or not q.coeffs:
        return Polynomial(())
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def poly_eval(p, x):
    """Horner evaluation; works for scalars, Fractions and numpy arrays."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def legendre_exact(n):
    """Legendre polynomial P_n with exact rational coefficients (Bonnet recurrence)."""
    p_prev = Polynomial((Fraction(1),))
    if n == 0:
        return p_prev
    p = Polynomial((Fraction(0), Fraction(1)))
    x = Polynomial.x()
    for k in range(1, n):
        p_prev, p = p, Fraction(2 * k + 1, k + 1) * (x * p) - Fraction(k, k + 1) * p_prev
    return p
