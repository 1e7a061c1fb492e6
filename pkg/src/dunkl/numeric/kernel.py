"""Floating-point Dunkl kernels.

K_{kappa,n}(x, y) = m_n(x)^T G_n^{-1} m_n(y), where m_n is the vector of
degree-n monomials and G_n the Gram matrix of the kappa-form.  G_n is built
in floating point from the exact structural matrices, so any kappa >= 0 works.
"""
from dataclasses import dataclass
from math import exp, factorial, lgamma, log, sqrt

import numpy as np
from scipy.special import gamma as _gamma
from scipy.special import iv, jv

from ..calculus.context import DunklContext, MultiplicitySpec
from ..calculus.structure import dunkl_matrix_parts
from ..errors import SingularParameter, ToleranceUnreachable
from ..poly import monomial_basis


@dataclass
class KernelEval:
    value: complex
    terms_used: int
    tail_bound: float

    def to_json(self):
        v = self.value
        if isinstance(v, complex):
            val = {"re": v.real, "im": v.imag}
        else:
            val = float(v)
        return {"value": val, "terms_used": self.terms_used, "tail_bound": self.tail_bound}


def float_context(ctx_or_rs, kappa):
    rs = getattr(ctx_or_rs, "rs", ctx_or_rs)
    return DunklContext(rs, MultiplicitySpec.numeric(rs, kappa))


class FloatKernel:
    """Per-context cache of float Gram matrices and their scaled inverses."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.rs = ctx.rs
        self.d = ctx.dim
        self.kappa = ctx.kappa.as_floats()
        self._gram = {0: np.ones((1, 1))}
        self._inv = {0: np.ones((1, 1))}
        self._group = None

    def _dunkl(self, i, n):
        P, E = dunkl_matrix_parts(self.rs, i, n)
        M = np.array(P, dtype=float)
        for k, Ec in zip(self.kappa, E):
            if k:
                M = M + k * np.array(Ec, dtype=float)
        return M

    def gram(self, n):
        if n in self._gram:
            return self._gram[n]
        prev = self.gram(n - 1)
        d = self.d
        prev_idx = {e: k for k, e in enumerate(monomial_basis(d, n - 1))}
        basis = monomial_basis(d, n)
        mats = {}
        G = np.empty((len(basis), len(basis)))
        for r, a in enumerate(basis):
            i = next(k for k, x in enumerate(a) if x)
            ap = list(a)
            ap[i] -= 1
            if i not in mats:
                mats[i] = self._dunkl(i, n)
            G[r] = prev[prev_idx[tuple(ap)]] @ mats[i]
        G = (G + G.T) / 2
        self._gram[n] = G
        return G

    def inverse(self, n):
        if n in self._inv:
            return self._inv[n]
        G = self.gram(n)
        dg = np.sqrt(np.abs(np.diag(G)))
        if np.any(dg == 0):
            raise SingularParameter(f"degenerate form on degree {n}", degree=n)
        S = G / np.outer(dg, dg)
        try:
            inv = np.linalg.inv(S) / np.outer(dg, dg)
        except np.linalg.LinAlgError:
            raise SingularParameter(f"Gram matrix singular on degree {n}", degree=n) from None
        self._inv[n] = inv
        return inv

    def monomials(self, pts, n):
        pts = np.atleast_2d(pts)
        E = np.array(monomial_basis(self.d, n), dtype=int).reshape(-1, self.d)
        return np.prod(pts[:, None, :] ** E[None, :, :], axis=2)

    def degree_values(self, X, Y, N):
        """Array (N+1, P): K_{kappa,n}(X[p], Y[p]) for n = 0..N."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        Y = np.atleast_2d(np.asarray(Y, dtype=float))
        out = np.empty((N + 1, X.shape[0]))
        out[0] = 1.0
        for n in range(1, N + 1):
            MX = self.monomials(X, n)
            MY = self.monomials(Y, n)
            out[n] = np.sum((MX @ self.inverse(n)) * MY, axis=1)
        return out

    def group_matrices(self):
        if self._group is None:
            self._group = [np.array(w.matrix, dtype=float) for w in self.rs.group()]
        return self._group

    def rho(self, x, y):
        """max over the group of |<x, w y>|."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return max(abs(float(x @ (W @ y))) for W in self.group_matrices())


_KERNELS = {}


def float_kernel(ctx):
    key = (id(ctx.rs), tuple(ctx.kappa.as_floats()))
    k = _KERNELS.get(key)
    if k is None or k.rs is not ctx.rs:
        k = FloatKernel(ctx)
        _KERNELS[key] = k
    return k


def tail_bound(rho, N):
    """sum_{n>N} rho^n/n! <= rho^{N+1}/(N+1)! / (1 - rho/(N+2)) when N+2 > rho."""
    if rho == 0:
        return 0.0
    if N + 2 <= rho:
        return float("inf")
    return exp((N + 1) * log(rho) - lgamma(N + 2)) / (1 - rho / (N + 2))


def terms_needed(rho, tol, cap=200):
    N = 0
    while tail_bound(rho, N) >= tol:
        N += 1
        if N > cap:
            raise ToleranceUnreachable(
                f"tolerance {tol} needs more than {cap} terms at rho = {rho}", rho=rho, cap=cap
            )
    return N


def kernel_partial_sum(ctx, x, y, tol=1e-10, variant="real", cap=200, min_terms=0):
    """K_kappa(x, y) (variant "real"), K_kappa(x, i y) ("imaginary") or
    J_G(x, y) = mean over w of K_kappa(w x, y) ("symmetrized")."""
    fk = float_kernel(ctx)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    rho = fk.rho(x, y)
    N = max(terms_needed(rho, tol, cap), min_terms)
    tb = tail_bound(rho, N)
    if variant == "symmetrized":
        W = fk.group_matrices()
        X = np.array([Wm @ x for Wm in W])
        vals = fk.degree_values(X, np.tile(y, (len(W), 1)), N)
        return KernelEval(float(vals.sum() / len(W)), N, tb)
    vals = fk.degree_values(x[None, :], y[None, :], N)[:, 0]
    if variant == "imaginary":
        phase = np.array([1j ** n for n in range(N + 1)])
        return KernelEval(complex(np.dot(phase, vals)), N, tb)
    return KernelEval(float(vals.sum()), N, tb)


def kernel_sums(ctx, X, Y, N, imaginary=False):
    """Vectorised partial sums sum_{n<=N} K_n(X[p], Y[p]) (times i^n if imaginary)."""
    vals = float_kernel(ctx).degree_values(X, Y, N)
    if imaginary:
        phase = np.array([1j ** n for n in range(N + 1)])
        return phase @ vals
    return vals.sum(axis=0)


# ---------------------------------------------------------------- Z2 closed forms

def z2_kernel_series(kappa, x, y, terms=80, imaginary=False):
    """sum 1/(n!(k+1/2)_n) (xy/2)^{2n} + xy/(1+2k) sum 1/((k+3/2)_n n!) (xy/2)^{2n}.

    With ``imaginary`` the kernel is K(x, i y): (xy/2)^{2n} picks up (-1)^n and
    the odd part a factor i.
    """
    z = (x * y / 2) ** 2
    sgn = -1.0 if imaginary else 1.0
    even = odd = 0.0
    te = to = 1.0
    for n in range(terms):
        even += te
        odd += to
        te *= sgn * z / ((n + 1) * (kappa + 0.5 + n))
        to *= sgn * z / ((n + 1) * (kappa + 1.5 + n))
    odd *= x * y / (1 + 2 * kappa)
    return complex(even, odd) if imaginary else even + odd


def z2_kernel_bessel(kappa, x, y, imaginary=False):
    """Bessel form: Gamma(a+1)(z)^{-a}I_a(2z) + xy/(2k+1) Gamma(a+2) z^{-a-1} I_{a+1}(2z),
    z = xy/2, a = k - 1/2 (J in place of I for the imaginary argument)."""
    a = kappa - 0.5
    t = x * y
    if t == 0:
        return complex(1.0, 0.0) if imaginary else 1.0
    u = abs(t)
    z = u / 2
    if u < 1e-6:
        # z^{-a} I_a(2z) under- and overflows separately here; use its first two terms
        s = -1.0 if imaginary else 1.0
        even = 1 + s * z * z / (a + 1)
        odd = (1 + s * z * z / (a + 2)) * t / (2 * kappa + 1)
        return complex(even, odd) if imaginary else even + odd
    f = jv if imaginary else iv
    even = _gamma(a + 1) * z ** (-a) * f(a, u)
    odd = _gamma(a + 2) * z ** (-a - 1) * f(a + 1, u) * t / (2 * kappa + 1)
    return complex(even, odd) if imaginary else float(even + odd)


# ---------------------------------------------------------------- heat kernel

def heat_kernel_eval(ctx, t, x, y, tol=1e-12, c_kappa=None):
    """Gamma_kappa(t,x,y) = c/((2t)^{g+d/2}(2pi)^{d/2}) exp(-(|x|^2+|y|^2)/4t) K(x/sqrt(2t), y/sqrt(2t))."""
    from .mehta import c_kappa as _ck

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d = ctx.dim
    g = float(ctx.gamma)
    c = _ck(ctx) if c_kappa is None else c_kappa
    pref = c / ((2 * t) ** (g + d / 2) * (2 * np.pi) ** (d / 2))
    damp = exp(-(x @ x + y @ y) / (4 * t))
    s = sqrt(2 * t)
    scale = pref * damp
    tol_k = tol / scale if scale > 0 else tol
    K = kernel_partial_sum(ctx, x / s, y / s, tol=min(tol_k, 1e-3))
    return scale * K.value


def classical_heat_kernel(t, x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d = len(x)
    r = x - y
    return (4 * np.pi * t) ** (-d / 2) * exp(-(r @ r) / (4 * t))


def kernel_degree_bound(ctx, x, y, n):
    """rho(x,y)^n / n!."""
    rho = float_kernel(ctx).rho(x, y)
    return rho ** n / factorial(n)


def heat_normalization(ctx, t, x, nodes=60, tol=1e-13):
    """int Gamma_kappa(t, x, y) w_kappa(y) dy by quadrature (d = 1 or 2).

    With y = sqrt(2t) z the integral becomes
    pref (2t)^{g + d/2} e^{-|x|^2/4t} int K(x', z) w(z) e^{-|z|^2/2} dz,  x' = x/sqrt(2t);
    radial Gauss-Laguerre in u = r^2/2 and Gauss-Jacobi arcs on the circle.
    """
    from .mehta import c_kappa as _ck
    from .mehta import planar_lines
    from .quadrature import circle_integral, gauss_laguerre

    x = np.asarray(x, dtype=float)
    d = ctx.dim
    g = float(ctx.gamma)
    s = sqrt(2 * t)
    xs = x / s
    pref = _ck(ctx) / ((2 * t) ** (g + d / 2) * (2 * np.pi) ** (d / 2))
    outer = pref * s ** (2 * g + d) * exp(-(x @ x) / (4 * t))
    # int_0^inf h(r) r^{2a} e^{-r^2/2} dr with r = sqrt(2u)
    a = g + (d - 1) / 2
    rule = gauss_laguerre(nodes, a - 0.5)
    r = np.sqrt(2 * rule.nodes)
    rad = 2 ** (a - 0.5) * rule.weights
    N = terms_needed(float(np.sqrt(xs @ xs)) * float(r.max()), tol)
    if d == 1:
        vals = kernel_sums(ctx, np.tile(xs, (len(r), 1)), r[:, None], N)
        vals = vals + kernel_sums(ctx, np.tile(xs, (len(r), 1)), -r[:, None], N)
        nrm = abs(float(ctx.rs.positive[0][0])) ** (2 * g)
        return outer * nrm * float(rad @ vals)
    if d != 2:
        raise NotImplementedError("heat normalisation quadrature is implemented for d = 1, 2")
    B, lines = planar_lines(ctx)
    scale = 1.0
    for _, e, nrm in lines:
        scale *= nrm ** e

    def f(theta):
        out = np.empty(len(theta))
        for i, th in enumerate(theta):
            z = np.outer(r, np.array([np.cos(th), np.sin(th)]) @ B)
            out[i] = rad @ kernel_sums(ctx, np.tile(xs, (len(r), 1)), z, N)
        return out

    return outer * scale * circle_integral(f, [(p, e) for p, e, _ in lines], 32)
