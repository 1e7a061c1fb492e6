"""Floating-point evaluation of exact polynomials."""
from math import factorial

import numpy as np

from ..scalar import Scalar


class FloatPoly:
    """Polynomial with float coefficients, evaluated with numpy.

    Built from an exact Polynomial; symbolic coefficients are evaluated at
    ``params`` (values for k0, k1).
    """

    def __init__(self, dim, exps, coefs):
        self.dim = dim
        self.exps = np.asarray(exps, dtype=int).reshape(-1, dim)
        self.coefs = np.asarray(coefs, dtype=float)

    @staticmethod
    def from_poly(p, params=None):
        exps, coefs = [], []
        for e, c in p.terms.items():
            v = c.constant_value() if c.is_constant() else c.evaluate(params)
            exps.append(e)
            coefs.append(float(v))
        return FloatPoly(p.dim, exps, coefs)

    def __call__(self, pts):
        pts = np.atleast_2d(np.asarray(pts))
        if not len(self.coefs):
            return np.zeros(pts.shape[0], dtype=pts.dtype if np.iscomplexobj(pts) else float)
        mon = np.prod(pts[:, None, :] ** self.exps[None, :, :], axis=2)
        return mon @ self.coefs

    def partial(self, i):
        keep = self.exps[:, i] > 0
        e = self.exps[keep].copy()
        c = self.coefs[keep] * e[:, i]
        e[:, i] -= 1
        return FloatPoly(self.dim, e, c)

    def directional(self, u):
        """sum_i u_i d/dx_i, with like terms merged."""
        acc = {}
        for i, ui in enumerate(u):
            if not ui:
                continue
            d = self.partial(i)
            for e, c in zip(map(tuple, d.exps), d.coefs):
                acc[e] = acc.get(e, 0.0) + ui * c
        if not acc:
            return FloatPoly(self.dim, np.zeros((0, self.dim), dtype=int), [])
        exps = list(acc)
        return FloatPoly(self.dim, exps, [acc[e] for e in exps])

    @property
    def degree(self):
        return int(self.exps.sum(axis=1).max()) if len(self.coefs) else -1

    def scale_norm(self):
        return float(np.max(np.abs(self.coefs))) if len(self.coefs) else 0.0


def reflect_points(pts, v):
    v = np.asarray(v, dtype=float)
    return pts - 2 * np.outer(pts @ v / (v @ v), v)


def dunkl_laplacian_at(fp, roots, pts):
    """Delta_kappa p at points, for float positive roots [(v, kappa)].

    The root term 2 <grad p, v>/<x,v> - |v|^2 (p(x) - p(s_v x))/<x,v>^2 is
    evaluated as sum_{k>=2} g^(k)(0) 2^k t^(k-2)/k!, where u = v/|v|,
    t = <x, u> and g(h) = p(x - h u).  No division by t, so points close to a
    mirror cost no accuracy.
    """
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    grads = [fp.partial(i) for i in range(fp.dim)]
    out = sum(g.partial(i)(pts) for i, g in enumerate(grads))
    n = fp.degree
    for v, k in roots:
        if not k or n < 2:
            continue
        u = np.asarray(v, dtype=float)
        u = u / np.sqrt(u @ u)
        t = pts @ u
        term = np.zeros(pts.shape[0])
        dk = fp.directional(u)
        sign = -1.0
        for order in range(2, n + 1):
            dk = dk.directional(u)
            sign = -sign
            # g^(k)(0) = (-1)^k (u.grad)^k p (x)
            term = term + sign * dk(pts) * 2.0 ** order * t ** (order - 2) / factorial(order)
        out = out + k * term
    return out


def float_roots(ctx, params=None):
    """[(v as floats, kappa as float)] for the positive roots of an exact or float context."""
    out = []
    for v, k, _ in ctx.weighted:
        if isinstance(k, Scalar):
            k = float(k.constant_value() if k.is_constant() else k.evaluate(params))
        out.append((tuple(float(x) for x in v), float(k)))
    return out
