"""Per-k bound reports and pass/fail verification of spectra."""

import csv
import io
import math
from dataclasses import dataclass

from . import bounds_euclidean as be
from . import bounds_sphere as bs
from .core import BoundEntry, BoundReport, domain_from_dict, validate_spectrum
from .errors import DegenerateGapsError, IncompatibleSpectrumError
from .solver.solve import recompute_moments

CSV_COLUMNS = ("k", "lambda_next_computed", "thm_residual", "bound_a", "bound_b",
               "tightness_a", "tightness_b")
SPHERE_CSV_COLUMNS = CSV_COLUMNS + ("delta_star", "residual_at_delta_star")


def _ratio(bound, lam):
    if bound is None or lam is None:
        return None
    return bound / lam


def _k_range(spectrum, k_max):
    top = len(spectrum) if k_max is None else min(k_max, len(spectrum))
    return range(1, top + 1)


def _euclidean_entry(spectrum, k):
    nxt = spectrum.values[k] if k < len(spectrum) else None
    residual = be.thm11_residual(spectrum, k) if nxt is not None else None
    a, b = be.cor11_bounds(spectrum, k)
    return BoundEntry(k, nxt, residual, a, b, _ratio(a, nxt), _ratio(b, nxt))


def _sphere_entry(spectrum, k):
    nxt = spectrum.values[k] if k < len(spectrum) else None
    bound = bs.cor12_bound(spectrum, k).bound
    if nxt is None:
        return BoundEntry(k, bound_a=bound)
    grid_min = min(bs.thm12_residual(spectrum, k, d) for d in bs.delta_grid())
    try:
        delta = bs.optimal_delta(spectrum, k)
    except DegenerateGapsError:
        delta = at_delta = None
        best = grid_min
    else:
        at_delta = bs.thm12_residual(spectrum, k, delta)
        best = min(at_delta, grid_min)
    return BoundEntry(
        k,
        lambda_next_computed=nxt,
        thm_residual=-best,
        bound_a=bound,
        tightness_a=_ratio(bound, nxt),
        delta_star=delta,
        residual_at_delta_star=at_delta,
        residual_grid_min=grid_min,
    )


def build_report(spectrum, k_max=None):
    """Residuals, closed-form bounds and tightness ratios for k = 1..k_max.

    ``thm_residual`` is always LHS - RHS (<= 0 when the inequality holds);
    for sphere spectra it is taken at the best of delta* and the delta grid,
    and ``bound_b`` is unused.
    """
    spectrum = validate_spectrum(spectrum)
    make = _sphere_entry if spectrum.geometry == "sphere" else _euclidean_entry
    entries = tuple(make(spectrum, k) for k in _k_range(spectrum, k_max))
    return BoundReport(spectrum.geometry, spectrum.dimension, spectrum.order, entries)


def report_csv(report):
    columns = SPHERE_CSV_COLUMNS if report.geometry == "sphere" else CSV_COLUMNS
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for entry in report.entries:
        row = []
        for name in columns:
            v = getattr(entry, name)
            row.append("" if v is None else repr(v) if isinstance(v, float) else str(v))
        writer.writerow(row)
    return buf.getvalue()


# -- verification ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    k: object
    check: str
    detail: str

    def __str__(self):
        where = f"k={self.k}" if self.k is not None else "-"
        return f"{where}: {self.check}: {self.detail}"


def _check_bound(out, k, name, bound, nxt, tol):
    if bound is None:
        out.append(Violation(k, name, "bound undefined (negative discriminant)"))
    elif nxt is not None and bound < nxt - tol * nxt:
        out.append(Violation(k, name, f"bound {bound!r} < Lambda_(k+1) = {nxt!r}"))


def verify_spectrum(spectrum, tolerance=1e-8, k_max=None):
    """All inequality checks applicable to ``spectrum``; returns the violations."""
    spectrum = validate_spectrum(spectrum)
    out = []
    for k in _k_range(spectrum, k_max):
        nxt = spectrum.values[k] if k < len(spectrum) else None
        if spectrum.geometry == "euclidean":
            if nxt is not None:
                lhs, _, _ = be.thm11_sums(spectrum, k)
                r = be.thm11_residual(spectrum, k)
                if r > tolerance * lhs:
                    out.append(Violation(k, "euclidean inequality", f"residual {r!r} > 0"))
            a, b = be.cor11_bounds(spectrum, k)
            _check_bound(out, k, "closed-form bound a", a, nxt, tolerance)
            _check_bound(out, k, "closed-form bound b", b, nxt, tolerance)
        else:
            try:
                _verify_sphere_k(out, spectrum, k, nxt, tolerance)
            except IncompatibleSpectrumError as exc:
                out.append(Violation(k, "sphere precondition", str(exc)))
    return out


def _verify_sphere_k(out, spectrum, k, nxt, tol):
    if nxt is not None:
        lhs, _, _ = bs.thm12_parts(spectrum, k)
        floor = -tol * lhs
        try:
            delta = bs.optimal_delta(spectrum, k)
        except DegenerateGapsError:
            delta = None
        deltas = list(bs.delta_grid()) + ([delta] if delta is not None else [])
        worst = min(deltas, key=lambda d: bs.thm12_residual(spectrum, k, d))
        r = bs.thm12_residual(spectrum, k, worst)
        if r < floor:
            out.append(Violation(k, "sphere inequality", f"residual {r!r} < 0 at delta={worst!r}"))
    _check_bound(out, k, "sphere closed-form bound", bs.cor12_bound(spectrum, k).bound, nxt, tol)


def verify_moments(solution_data, tolerance=1e-8):
    """Re-assemble moment chains from a solution dump and check them.

    Checks mu_1 = 1, mu_l = Lambda_i, 0 <= mu_k <= Lambda_i^{(k-1)/(l-1)}
    and mu_k^2 <= mu_{k-1} mu_{k+1}, each with relative slack ``tolerance``.
    """
    domain = domain_from_dict(solution_data["domain"])
    l = int(solution_data["order"])
    N = int(solution_data["basis"])
    out = []
    rows = zip(solution_data["eigenvalues"], solution_data["eigenvectors"],
               solution_data["modal_tags"])
    for i, (lam, vec, m) in enumerate(rows, start=1):
        mu = recompute_moments(domain, l, N, vec, m or 0)
        out.extend(moment_violations(i, lam, mu, tolerance))
    return out


def moment_violations(i, lam, mu, tolerance=1e-8):
    out = []
    l = len(mu)
    if abs(mu[0] - 1.0) > tolerance:
        out.append(Violation(i, "normalization", f"mu_1 = {mu[0]!r} != 1"))
    if abs(mu[-1] - lam) > tolerance * lam:
        out.append(Violation(i, "eigen-equation", f"mu_l = {mu[-1]!r} != Lambda = {lam!r}"))
    for k in range(1, l):
        mk = mu[k - 1]
        cap = lam ** ((k - 1) / (l - 1))
        if mk < -tolerance * cap or mk > cap * (1.0 + tolerance):
            out.append(Violation(i, "moment bound", f"mu_{k} = {mk!r} outside [0, {cap!r}]"))
        if k >= 2 and mk * mk > mu[k - 2] * mu[k] * (1.0 + tolerance):
            out.append(Violation(i, "log-convexity", f"mu_{k}^2 > mu_{k - 1} mu_{k + 1}"))
    if not all(math.isfinite(x) for x in mu):
        out.append(Violation(i, "moments", "non-finite moment"))
    return out
