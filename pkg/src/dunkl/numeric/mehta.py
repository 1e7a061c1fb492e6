"""Numerical Macdonald-Mehta constants and sphere normalisations."""
from math import atan2, gamma, pi, sqrt

import numpy as np
from scipy.special import gammaln, gammasgn

from ..calculus.context import DunklContext, MultiplicitySpec
from ..calculus.mehta import mm_constant
from ..errors import GammaPole
from .quadrature import circle_integral, half_line_gaussian


def _value(s, values):
    if isinstance(s, (int, float)):
        return float(s)
    if s.is_constant():
        return float(s.constant_value())
    return float(s.evaluate(values))


def _log_gamma(a):
    if a <= 0 and float(a).is_integer():
        raise GammaPole(f"Gamma has a pole at {a}", argument=a)
    return float(gammaln(a)), float(gammasgn(a))


def mm_constant_eval(record, values=None):
    """Evaluate a GammaRecord at k0, k1 = values through log-Gamma."""
    values = tuple(values) if values is not None else None
    log_total = 0.0
    sign = 1.0
    for base, e in record.powers:
        log_total += _value(e, values) * np.log(float(base))
    for a in record.num:
        lg, sg = _log_gamma(_value(a, values))
        log_total += lg
        sign *= sg
    for a in record.den:
        lg, sg = _log_gamma(_value(a, values))
        log_total -= lg
        sign *= sg
    return sign * float(np.exp(log_total))


def _symbolic_twin(ctx):
    """Symbolic context on the same roots plus the float values for k0, k1."""
    vals = ctx.kappa.as_floats()
    rs = ctx.rs
    if all(v == vals[0] for v in vals):
        mult = MultiplicitySpec.symbolic(rs, params=[0] * rs.num_classes)
        return DunklContext(rs, mult), (vals[0],)
    mult = MultiplicitySpec.symbolic(rs)
    return DunklContext(rs, mult), tuple(vals[:2])


def mm_integral(ctx):
    """Closed-form value of (2 pi)^{-d/2} int w_kappa e^{-|x|^2/2} dx = 1/c_kappa."""
    twin, vals = _symbolic_twin(ctx)
    return mm_constant_eval(mm_constant(twin), vals)


def c_kappa(ctx):
    return 1.0 / mm_integral(ctx)


def _plane_basis(rs):
    """Orthonormal basis (rows) of the span of the roots."""
    R = np.array([[float(x) for x in v] for v in rs.positive])
    _, s, vt = np.linalg.svd(R)
    r = int(np.sum(s > 1e-9))
    return vt[:r]


def planar_lines(ctx):
    """[(phi, 2 kappa(v), |v_plane|)] for a rank <= 2 context, in plane coordinates."""
    B = _plane_basis(ctx.rs)
    vals = ctx.kappa.as_floats()
    out = []
    for v in ctx.rs.positive:
        w = B @ np.array([float(x) for x in v])
        k = vals[ctx.rs.class_of[v]]
        if len(w) == 1:
            out.append((None, 2 * k, abs(w[0])))
        else:
            out.append((atan2(-w[0], w[1]), 2 * k, float(np.hypot(w[0], w[1]))))
    return B, out


def mm_integral_quadrature(ctx, n=64):
    """(2 pi)^{-d/2} int w_kappa e^{-|x|^2/2} by quadrature (rank 1 or 2).

    Directions orthogonal to the roots integrate to 1, so only the root span matters.
    Rank 2: polar coordinates, Gauss-Jacobi on the circle and the radial factor
    int_0^inf r^{2g+1} e^{-r^2/2} dr = 2^g Gamma(g+1).
    """
    B, lines = planar_lines(ctx)
    g = float(ctx.gamma)
    scale = 1.0
    for _, e, nrm in lines:
        scale *= nrm ** e
    if B.shape[0] == 1:
        # w = c |t|^{2g}
        return scale * 2 * half_line_gaussian(lambda x: np.ones_like(x), g) / sqrt(2 * pi)
    if B.shape[0] != 2:
        raise NotImplementedError("quadrature is implemented for rank 1 and 2")
    ang = circle_integral(lambda t: np.ones_like(t), [(p, e) for p, e, _ in lines], n)
    return scale * ang * 2 ** g * gamma(g + 1) / (2 * pi)


def sphere_integral(ctx, f, n=64):
    """int_{S^1} f w_kappa d omega (normalised surface measure) for a d = 2 context.

    ``f`` takes an array of points (N x 2).
    """
    if ctx.dim != 2:
        raise NotImplementedError("sphere quadrature is implemented for d = 2")
    vals = ctx.kappa.as_floats()
    lines = []
    scale = 1.0
    for v in ctx.rs.positive:
        a, b = float(v[0]), float(v[1])
        k = vals[ctx.rs.class_of[v]]
        lines.append((atan2(-a, b), 2 * k))
        scale *= np.hypot(a, b) ** (2 * k)

    def g(t):
        pts = np.stack([np.cos(t), np.sin(t)], axis=1)
        return f(pts)

    return scale * circle_integral(g, lines, n) / (2 * pi)


def sphere_constant_inverse(ctx):
    """c_{kappa,S}^{-1} = 2^{-g} Gamma(d/2)/Gamma(g + d/2) / c_kappa (closed form)."""
    g = float(ctx.gamma)
    d = ctx.dim
    return 2 ** (-g) * gamma(d / 2) / gamma(g + d / 2) * mm_integral(ctx)


def sphere_bridge(ctx, p, n=64):
    """(quadrature side, exact side) of <p, p>_kappa = 2^n (g + d/2)_n c_{k,S} int_S p^2 w d omega.

    ``ctx`` must carry rational kappa; ``p`` is an exact harmonic of degree n.
    """
    from ..calculus.forms import kappa_form
    from .floatpoly import FloatPoly

    deg = p.degree()
    fp = FloatPoly.from_poly(p)
    g = float(ctx.gamma)
    d = ctx.dim
    poch = 1.0
    for i in range(deg):
        poch *= g + d / 2 + i
    integral = sphere_integral(ctx, lambda pts: fp(pts) ** 2, n)
    total = sphere_integral(ctx, lambda pts: np.ones(len(pts)), n)
    lhs = 2 ** deg * poch * integral / total
    exact = kappa_form(ctx, p, p)
    return lhs, float(exact.constant_value())
