"""Shared data model: spectra, domains, solutions, bound reports, file formats."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields
from typing import Optional

import numpy as np

from .errors import ValidationError

SPECTRUM_FORMAT = "buckle-spectrum/1"
REPORT_FORMAT = "buckle-report/1"
SOLUTION_FORMAT = "buckle-solution/1"

GEOMETRIES = ("euclidean", "sphere")
ORDER_RTOL = 1e-12


# -- spectra -----------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Ascending positive eigenvalues tagged with geometry, dimension and order."""

    geometry: str
    dimension: int
    order: int
    values: tuple
    warnings: tuple = ()

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def scaled(self, t):
        return validate_spectrum(self.geometry, self.dimension, self.order,
                                 [t * v for v in self.values])

    def to_dict(self, domain=None):
        return spectrum_to_dict(self.geometry, self.dimension, self.order,
                                self.values, domain)


def validate_spectrum(geometry, dimension=None, order=None, values=None):
    """Check and normalize raw spectrum data.

    Accepts either an existing ``Spectrum`` (returned unchanged) or the raw
    geometry, dimension, order and value sequence. Out-of-order values are
    sorted; a warning is recorded when any descent exceeds the relative
    round-off tolerance ``ORDER_RTOL``.
    """
    if isinstance(geometry, Spectrum):
        return geometry
    if geometry not in GEOMETRIES:
        raise ValidationError(f"geometry must be one of {GEOMETRIES}, got {geometry!r}")
    if not _is_int(dimension) or dimension < 2:
        raise ValidationError(f"dimension must be an integer >= 2, got {dimension!r}")
    if not _is_int(order) or order < 2:
        raise ValidationError(f"order must be an integer >= 2, got {order!r}")
    if values is None:
        raise ValidationError("missing eigenvalues")
    vals = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float, np.floating, np.integer)):
            raise ValidationError(f"eigenvalue {v!r} is not a real number")
        v = float(v)
        if not math.isfinite(v) or v <= 0.0:
            raise ValidationError(f"eigenvalues must be finite and positive, got {v!r}")
        vals.append(v)
    if not vals:
        raise ValidationError("empty eigenvalue sequence")

    warnings = []
    descents = [(a, b) for a, b in zip(vals, vals[1:]) if b < a]
    if any(b < a * (1.0 - ORDER_RTOL) for a, b in descents):
        warnings.append("eigenvalues were not nondecreasing; re-sorted ascending")
    if descents:
        vals.sort()
    return Spectrum(geometry, int(dimension), int(order), tuple(vals), tuple(warnings))


def _is_int(x):
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def spectrum_to_dict(geometry, dimension, order, values, domain=None):
    out = {
        "format": SPECTRUM_FORMAT,
        "geometry": geometry,
        "dimension": int(dimension),
        "order": int(order),
        "eigenvalues": [float(v) for v in values],
    }
    if domain is not None:
        out["domain"] = domain.to_dict()
    out["normalization"] = "dirichlet"
    return out


def spectrum_from_dict(data):
    if not isinstance(data, dict):
        raise ValidationError("spectrum file must hold a JSON object")
    if data.get("format") != SPECTRUM_FORMAT:
        raise ValidationError(f"expected format {SPECTRUM_FORMAT!r}, got {data.get('format')!r}")
    for key in ("geometry", "dimension", "order", "eigenvalues"):
        if key not in data:
            raise ValidationError(f"spectrum file is missing {key!r}")
    if not isinstance(data["eigenvalues"], list):
        raise ValidationError("'eigenvalues' must be an array")
    return validate_spectrum(data["geometry"], data["dimension"], data["order"],
                             data["eigenvalues"])


def dumps(payload):
    """Deterministic JSON: fixed key order, shortest round-trip floats."""
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def write_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(payload))


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def read_spectrum(path):
    return spectrum_from_dict(read_json(path))


# -- domains -----------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    length: float = 1.0
    kind = "interval"

    def __post_init__(self):
        _require_positive("length", self.length)

    @property
    def dimension(self):
        return 1

    def dilated(self, t):
        return Interval(self.length * t)

    def to_dict(self):
        return {"kind": self.kind, "length": float(self.length)}


@dataclass(frozen=True)
class Rectangle:
    sides: tuple = (1.0, 1.0)
    kind = "rectangle"

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(float(s) for s in self.sides))
        if not self.sides:
            raise ValidationError("rectangle needs at least one side")
        for s in self.sides:
            _require_positive("side", s)

    @property
    def dimension(self):
        return len(self.sides)

    def dilated(self, t):
        return Rectangle(tuple(s * t for s in self.sides))

    def to_dict(self):
        return {"kind": self.kind, "sides": list(self.sides)}


@dataclass(frozen=True)
class Disc:
    radius: float = 1.0
    kind = "disc"

    def __post_init__(self):
        _require_positive("radius", self.radius)

    @property
    def dimension(self):
        return 2

    def dilated(self, t):
        return Disc(self.radius * t)

    def to_dict(self):
        return {"kind": self.kind, "radius": float(self.radius)}


@dataclass(frozen=True)
class SphericalCap:
    """Geodesic ball {theta <= theta0} on the unit 2-sphere."""

    theta0: float
    kind = "cap"

    def __post_init__(self):
        t = self.theta0
        if not (isinstance(t, (int, float)) and 0.0 < t < math.pi):
            raise ValidationError(f"cap polar angle must lie in (0, pi), got {t!r}")

    @property
    def dimension(self):
        return 2

    def to_dict(self):
        return {"kind": self.kind, "theta0": float(self.theta0)}


def _require_positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise ValidationError(f"{name} must be a positive real, got {value!r}")


def domain_from_dict(data):
    kind = data.get("kind")
    if kind == "interval":
        return Interval(data["length"])
    if kind == "rectangle":
        return Rectangle(tuple(data["sides"]))
    if kind == "disc":
        return Disc(data["radius"])
    if kind == "cap":
        return SphericalCap(data["theta0"])
    raise ValidationError(f"unknown domain kind {kind!r}")


def geometry_of(domain):
    return "sphere" if isinstance(domain, SphericalCap) else "euclidean"


# -- solutions ---------------------------------------------------------------

@dataclass(frozen=True)
class EigenSolution:
    """Galerkin eigenpairs of the buckling problem on one domain.

    ``eigenvectors[i]`` holds basis coefficients for the i-th pair (for disc
    and cap domains, coefficients of the radial basis of mode
    ``modal_tags[i]``). ``moments[i][k-1]`` is the integral of
    u (-Delta)^k u for k = 1..order.
    """

    domain: object
    order: int
    basis_size: int
    eigenvalues: tuple
    eigenvectors: tuple
    modal_tags: tuple
    moments: tuple
    m_max: Optional[int] = None
    warnings: tuple = ()

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def geometry(self):
        return geometry_of(self.domain)

    def spectrum_dict(self):
        return spectrum_to_dict(self.geometry, self.domain.dimension, self.order,
                                self.eigenvalues, self.domain)

    def spectrum(self):
        return validate_spectrum(self.geometry, self.domain.dimension, self.order,
                                 self.eigenvalues)

    def to_dict(self):
        return {
            "format": SOLUTION_FORMAT,
            "domain": self.domain.to_dict(),
            "order": self.order,
            "basis": self.basis_size,
            "m_max": self.m_max,
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "modal_tags": list(self.modal_tags),
            "eigenvectors": [[float(c) for c in v] for v in self.eigenvectors],
            "moments": [[float(mu) for mu in row] for row in self.moments],
        }


# -- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class BoundEntry:
    k: int
    lambda_next_computed: Optional[float] = None
    thm_residual: Optional[float] = None
    bound_a: Optional[float] = None
    bound_b: Optional[float] = None
    tightness_a: Optional[float] = None
    tightness_b: Optional[float] = None
    # sphere reports only
    delta_star: Optional[float] = None
    residual_at_delta_star: Optional[float] = None
    residual_grid_min: Optional[float] = None

    def to_dict(self, sphere=False):
        names = [f.name for f in fields(self)]
        if not sphere:
            names = names[:7]
        return {name: _jsonable(getattr(self, name)) for name in names}


@dataclass(frozen=True)
class BoundReport:
    geometry: str
    dimension: int
    order: int
    entries: tuple = field(default_factory=tuple)

    def to_dict(self):
        sphere = self.geometry == "sphere"
        return {
            "format": REPORT_FORMAT,
            "geometry": self.geometry,
            "dimension": self.dimension,
            "order": self.order,
            "entries": [e.to_dict(sphere) for e in self.entries],
        }


def _jsonable(v):
    if v is None:
        return None
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return int(v)
    return float(v)
