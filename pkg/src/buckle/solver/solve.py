"""Eigen-solves, modal merging, moment chains and convergence sweeps."""

import logging
from dataclasses import dataclass

import numpy as np

from ..core import Disc, EigenSolution, Interval, Rectangle, SphericalCap
from ..errors import IllConditionedBasisError, NotPositiveDefiniteError
from ..numerics.linalg import gen_sym_eig
from .assembly import form_builder

log = logging.getLogger(__name__)


def _solve_forms(builder, l, method):
    A, B = builder.form(l), builder.form(1)
    try:
        w, V = gen_sym_eig(A, B, method=method)
    except NotPositiveDefiniteError as exc:
        raise IllConditionedBasisError(f"basis too ill-conditioned, reduce N ({exc})") from exc
    return w, V


def _moment_chain(builder, l, vectors):
    """mu_k = v^T M_k v for k = 1..l, for each coefficient vector."""
    if not vectors:
        return []
    mats = [builder.form(k) for k in range(1, l + 1)]
    return [tuple(float(v @ M @ v) for M in mats) for v in vectors]


def default_m_max(count):
    return max(8, count)


def solve_buckling(domain, l, N, count, m_max=None, method="lapack"):
    """Lowest ``count`` buckling eigenpairs of order ``l`` on ``domain``.

    Interval and rectangle domains use one tensor-product Galerkin solve.
    Disc and cap domains are solved mode by mode for m = 0..m_max; every
    m >= 1 eigenvalue enters the merged spectrum twice (cosine and sine).
    Eigenvectors are normalized in the Dirichlet form.
    """
    if int(l) != l or l < 2:
        raise ValueError(f"order l must be an integer >= 2, got {l!r}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if isinstance(domain, (Interval, Rectangle)):
        return _solve_tensor(domain, l, N, count, method)
    if isinstance(domain, (Disc, SphericalCap)):
        if m_max is None:
            m_max = default_m_max(count)
        if m_max < 0:
            raise ValueError(f"m_max must be >= 0, got {m_max}")
        return _solve_modal(domain, l, N, count, m_max, method)
    raise TypeError(f"unsupported domain {domain!r}")


def _solve_tensor(domain, l, N, count, method):
    builder = form_builder(domain, l, N)
    available = N ** domain.dimension
    if count > available:
        raise ValueError(f"count {count} exceeds the basis size {available}")
    if count == 0:
        return EigenSolution(domain, l, N, (), (), (), ())
    w, V = _solve_forms(builder, l, method)
    vecs = [V[:, i].copy() for i in range(count)]
    return EigenSolution(
        domain=domain,
        order=l,
        basis_size=N,
        eigenvalues=tuple(float(x) for x in w[:count]),
        eigenvectors=tuple(vecs),
        modal_tags=(None,) * count,
        moments=tuple(_moment_chain(builder, l, vecs)),
    )


def _solve_modal(domain, l, N, count, m_max, method):
    available = N * (1 + 2 * m_max)
    if count > available:
        raise ValueError(f"count {count} exceeds the modal basis size {available}")
    if count == 0:
        return EigenSolution(domain, l, N, (), (), (), (), m_max=m_max)

    builders = {}
    candidates = []  # (eigenvalue, m, index within mode, copy)
    vectors = {}
    lowest_last_mode = None
    for m in range(m_max + 1):
        builder = form_builder(domain, l, N, m)
        builders[m] = builder
        w, V = _solve_forms(builder, l, method)
        for j, lam in enumerate(w):
            vectors[(m, j)] = V[:, j]
            candidates.append((float(lam), m, j, 0))
            if m > 0:
                candidates.append((float(lam), m, j, 1))
        if m == m_max:
            lowest_last_mode = float(w[0])
    candidates.sort()
    kept = candidates[:count]

    warnings = []
    if kept[-1][0] > lowest_last_mode:
        msg = (f"spectrum may be incomplete: largest kept eigenvalue {kept[-1][0]:.6g} "
               f"exceeds the lowest eigenvalue {lowest_last_mode:.6g} of mode m_max={m_max}")
        log.warning(msg)
        warnings.append(msg)

    moments = []
    cache = {}
    for lam, m, j, _ in kept:
        if (m, j) not in cache:
            cache[(m, j)] = _moment_chain(builders[m], l, [vectors[(m, j)]])[0]
        moments.append(cache[(m, j)])

    return EigenSolution(
        domain=domain,
        order=l,
        basis_size=N,
        eigenvalues=tuple(c[0] for c in kept),
        eigenvectors=tuple(vectors[(c[1], c[2])].copy() for c in kept),
        modal_tags=tuple(c[1] for c in kept),
        moments=tuple(moments),
        m_max=m_max,
        warnings=tuple(warnings),
    )


def moments(solution, i):
    """The moment chain mu_1..mu_l of the i-th eigenpair (0-based)."""
    if not 0 <= i < len(solution.moments):
        raise IndexError(f"eigenpair index {i} out of range (have {len(solution.moments)})")
    return solution.moments[i]


def recompute_moments(domain, l, N, vector, m=0):
    """Moment chain of an arbitrary coefficient vector, assembled afresh."""
    builder = form_builder(domain, l, N, m)
    return _moment_chain(builder, l, [np.asarray(vector, dtype=float)])[0]


@dataclass(frozen=True)
class SweepResult:
    basis_sizes: tuple
    spectra: tuple
    changes: tuple  # changes[s][i]: relative change of eigenvalue i from step s to s+1

    @property
    def max_change_per_index(self):
        if not self.changes:
            return ()
        return tuple(np.max(np.array(self.changes), axis=0))

    @property
    def last_changes(self):
        return self.changes[-1] if self.changes else ()

    def is_nonincreasing(self, slack=1e-10):
        for prev, cur in zip(self.spectra, self.spectra[1:]):
            for a, b in zip(prev, cur):
                if b > a * (1.0 + slack):
                    return False
        return True


def convergence_sweep(domain, l, basis_sizes, count, m_max=None, method="lapack"):
    sizes = tuple(basis_sizes)
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("basis sizes must be strictly increasing")
    spectra = tuple(
        solve_buckling(domain, l, N, count, m_max=m_max, method=method).eigenvalues
        for N in sizes
    )
    changes = tuple(
        tuple(abs(b - a) / b for a, b in zip(prev, cur))
        for prev, cur in zip(spectra, spectra[1:])
    )
    return SweepResult(sizes, spectra, changes)
