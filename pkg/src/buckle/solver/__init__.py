from .assembly import (
    AssembledForms,
    assemble_interval,
    assemble_modal,
    assemble_rectangle,
    derivative_gram,
    form_builder,
)
from .basis import GalerkinBasis1D, ModalFunction, RadialBasis, radial_laplacian_apply
from .solve import (
    SweepResult,
    convergence_sweep,
    moments,
    recompute_moments,
    solve_buckling,
)

__all__ = [
    "AssembledForms",
    "GalerkinBasis1D",
    "ModalFunction",
    "RadialBasis",
    "SweepResult",
    "assemble_interval",
    "assemble_modal",
    "assemble_rectangle",
    "convergence_sweep",
    "derivative_gram",
    "form_builder",
    "moments",
    "radial_laplacian_apply",
    "recompute_moments",
    "solve_buckling",
]
