"""Floating-point layer: kernels, quadrature, transform and Gamma constants."""
from .kernel import KernelEval, heat_kernel_eval, heat_normalization, kernel_partial_sum
from .mehta import c_kappa, mm_constant_eval, mm_integral, mm_integral_quadrature
from .quadrature import QuadratureRule, circle_integral, gauss_laguerre, gauss_legendre
from .transform import TransformReport, z2_transform_eigencheck

__all__ = [
    "KernelEval",
    "kernel_partial_sum",
    "heat_kernel_eval",
    "heat_normalization",
    "mm_constant_eval",
    "mm_integral",
    "mm_integral_quadrature",
    "c_kappa",
    "QuadratureRule",
    "gauss_legendre",
    "gauss_laguerre",
    "circle_integral",
    "TransformReport",
    "z2_transform_eigencheck",
]
