"""Universal inequalities for buckling eigenvalues on Euclidean domains.

Every function takes a validated ``Spectrum`` and a 1-based index ``k``;
``Lambda_{k+1}`` is read from the spectrum when an inequality needs it.
"""

import math
from fractions import Fraction

import numpy as np

from .core import validate_spectrum
from .errors import ValidationError

UNDEFINED = None


def coefficient_C(l, n):
    """2 l^2 + (n - 4) l + 2 - n."""
    if l < 2 or n < 2:
        raise ValueError(f"need l >= 2 and n >= 2, got l={l}, n={n}")
    return 2 * l * l + (n - 4) * l + 2 - n


def _euclidean(spectrum):
    spectrum = validate_spectrum(spectrum)
    if spectrum.geometry != "euclidean":
        raise ValidationError("expected a euclidean spectrum")
    return spectrum


def _split(spectrum, k, need_next):
    if int(k) != k or k < 1:
        raise IndexError(f"k must be a positive integer, got {k!r}")
    limit = len(spectrum) - 1 if need_next else len(spectrum)
    if k > limit:
        raise IndexError(f"k={k} out of range for a spectrum of length {len(spectrum)}")
    lam = np.asarray(spectrum.values[:k], dtype=float)
    nxt = spectrum.values[k] if need_next else None
    return lam, nxt


def thm11_sums(spectrum, k):
    """(LHS, S1, S2) of the Euclidean inequality.

    LHS = sum (L - Lam_i)^2, S1 = sum (L - Lam_i)^2 Lam_i^{(l-2)/(l-1)},
    S2 = sum (L - Lam_i) Lam_i^{1/(l-1)}, with L = Lam_{k+1}.
    """
    spectrum = _euclidean(spectrum)
    lam, nxt = _split(spectrum, k, need_next=True)
    l = spectrum.order
    gap = nxt - lam
    lhs = float(np.sum(gap ** 2))
    s1 = float(np.sum(gap ** 2 * lam ** ((l - 2) / (l - 1))))
    s2 = float(np.sum(gap * lam ** (1.0 / (l - 1))))
    return lhs, s1, s2


def thm11_residual(spectrum, k):
    """LHS - RHS of the order-l Euclidean inequality; <= 0 when it holds.

    RHS = (2/n) sqrt(C) sqrt(S1) sqrt(S2).
    """
    spectrum = _euclidean(spectrum)
    lhs, s1, s2 = thm11_sums(spectrum, k)
    C = coefficient_C(spectrum.order, spectrum.dimension)
    rhs = (2.0 / spectrum.dimension) * math.sqrt(C) * math.sqrt(s1) * math.sqrt(s2)
    return lhs - rhs


def cor11_bounds(spectrum, k):
    """Closed-form upper bounds (bound_a, bound_b) for Lambda_{k+1}.

    A bound is ``None`` when its discriminant is negative, which certifies
    that Lambda_1..Lambda_k cannot be the start of a buckling spectrum.
    """
    spectrum = _euclidean(spectrum)
    lam, _ = _split(spectrum, k, need_next=False)
    l, n = spectrum.order, spectrum.dimension
    C = coefficient_C(l, n)
    mean = float(np.mean(lam))
    var = float(np.mean((lam - mean) ** 2))

    D = float(np.sum(lam ** ((l - 2) / (l - 1)))) * float(np.sum(lam ** (1.0 / (l - 1))))
    beta = 2.0 * C * D / (k * k * n * n)
    disc_a = beta * beta - var
    bound_a = mean + beta + math.sqrt(disc_a) if disc_a >= 0 else UNDEFINED

    g = 2.0 * C / (n * n)
    disc_b = (g * mean) ** 2 - (1.0 + 2.0 * g) * var
    bound_b = (1.0 + g) * mean + math.sqrt(disc_b) if disc_b >= 0 else UNDEFINED
    return bound_a, bound_b


def chengyang_residual(spectrum, k):
    """LHS - RHS of the classical (l = 2) Cheng-Yang inequality."""
    spectrum = _euclidean(spectrum)
    if spectrum.order != 2:
        raise ValidationError(f"Cheng-Yang comparison needs l = 2, got l = {spectrum.order}")
    lam, nxt = _split(spectrum, k, need_next=True)
    n = spectrum.dimension
    gap = nxt - lam
    return float(np.sum(gap ** 2) - 4.0 * (n + 2) / (n * n) * np.sum(gap * lam))


def _check_monotone(seq, name, increasing):
    for a, b in zip(seq, seq[1:]):
        if (b < a) if increasing else (b > a):
            kind = "nondecreasing" if increasing else "nonincreasing"
            raise ValidationError(f"sequence {name} must be {kind}")


def lemma22_residual(a, b, c):
    """(sum a^2)(sum a b c) - (sum a^2 b)(sum a c); >= 0 for admissible input.

    Requires nonnegative sequences, ``a`` nonincreasing, ``b`` and ``c``
    nondecreasing. The sums are formed exactly from the float inputs and
    rounded once, so an exact zero is not lost to cancellation.
    """
    a, b, c = (list(map(float, s)) for s in (a, b, c))
    if not len(a) == len(b) == len(c):
        raise ValidationError("sequences must have equal length")
    if any(x < 0 for x in a + b + c):
        raise ValidationError("sequences must be nonnegative")
    _check_monotone(a, "a", increasing=False)
    _check_monotone(b, "b", increasing=True)
    _check_monotone(c, "c", increasing=True)
    a, b, c = ([Fraction(x) for x in s] for s in (a, b, c))
    sa2 = sum(x * x for x in a)
    sabc = sum(x * y * z for x, y, z in zip(a, b, c))
    sa2b = sum(x * x * y for x, y in zip(a, b))
    sac = sum(x * z for x, z in zip(a, c))
    return float(sa2 * sabc - sa2b * sac)


def reverse_chebyshev_residual(a, b):
    """(1/m)(sum a)(sum b) - sum a b for ``a`` nondecreasing, ``b`` nonincreasing.

    Evaluated exactly, like ``lemma22_residual``.
    """
    a, b = list(map(float, a)), list(map(float, b))
    if len(a) != len(b):
        raise ValidationError("sequences must have equal length")
    if not a:
        raise ValidationError("sequences must be nonempty")
    _check_monotone(a, "a", increasing=True)
    _check_monotone(b, "b", increasing=False)
    a, b = [Fraction(x) for x in a], [Fraction(y) for y in b]
    return float(sum(a) * sum(b) / len(a) - sum(x * y for x, y in zip(a, b)))

