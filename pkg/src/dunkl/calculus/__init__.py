"""Exact Dunkl operator calculus over Q(k0, k1)."""
from .context import DunklContext, MultiplicitySpec
from .forms import exp_laplacian, gaussian_form, gram_matrix, kappa_form
from .harmonic import harmonic_basis, harmonic_dimension, harmonic_expansion, harmonic_project, harmonic_reconstruct
from .intertwining import kernel_poly, poisson_kernel_poly, radical_basis, v0_apply, v_apply
from .mehta import GammaRecord, mm_constant, mm_discriminant_norm
from .operators import dunkl_apply, laplacian_apply, laplacian_sum_of_squares, rho_apply

__all__ = [
    "DunklContext",
    "MultiplicitySpec",
    "dunkl_apply",
    "laplacian_apply",
    "laplacian_sum_of_squares",
    "rho_apply",
    "kappa_form",
    "gram_matrix",
    "exp_laplacian",
    "gaussian_form",
    "v0_apply",
    "v_apply",
    "kernel_poly",
    "poisson_kernel_poly",
    "radical_basis",
    "harmonic_project",
    "harmonic_expansion",
    "harmonic_reconstruct",
    "harmonic_basis",
    "harmonic_dimension",
    "GammaRecord",
    "mm_constant",
    "mm_discriminant_norm",
]
