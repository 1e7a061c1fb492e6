"""Numerical certificates for the explicit dihedral harmonic bases."""
from math import gamma, pi, sqrt

import numpy as np

from ..harmonics2d import (
    dihedral_harmonics,
    dihedral_root_vectors,
    jacobi_norm_closed,
    z2_norm_closed,
)
from ..scalar import Scalar
from .floatpoly import FloatPoly, dunkl_laplacian_at
from .quadrature import circle_integral


def _pair(kappa):
    ks = kappa if isinstance(kappa, (tuple, list)) else (kappa,)
    ks = [float(Scalar.of(k).constant_value()) if not isinstance(k, float) else k for k in ks]
    return (ks[0], ks[1] if len(ks) > 1 else ks[0])


def dihedral_weighted_roots(m, kappa):
    """[(unit root, kappa)] for I2(m); class 0 takes kappa[0]."""
    k = _pair(kappa)
    return [(v, k[c]) for v, c in dihedral_root_vectors(m)]


def dihedral_lines(m, kappa):
    """Circle-weight lines (phi, 2 kappa): <(cos t, sin t), v_j> = sin(pi j/m - t)."""
    return [(pi * j / m, 2 * k) for j, (_, k) in enumerate(dihedral_weighted_roots(m, kappa), 1)]


def harmonicity_residual(m, kappa, n_max, points=50, seed=0):
    """max over entries of max |Delta_kappa p| / (coefficient scale) at random points.

    The Laplacian uses float roots, so this is a numeric certificate only.
    """
    fam = dihedral_harmonics(m, n_max, kappa)
    roots = dihedral_weighted_roots(m, kappa)
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(points, 2))
    worst = 0.0
    for p in fam.entries.values():
        fp = FloatPoly.from_poly(p)
        scale = fp.scale_norm()
        if scale == 0:
            continue
        r = float(np.max(np.abs(dunkl_laplacian_at(fp, roots, pts))))
        worst = max(worst, r / scale)
    return worst


def circle_gram(m, kappa, n_max, nodes=64):
    """(keys, G) with G[a, b] = int_{-pi}^{pi} p_a p_b w dtheta, w = prod |<x, v>|^{2 kappa(v)}."""
    fam = dihedral_harmonics(m, n_max, kappa)
    keys = sorted(fam.entries)
    fps = [FloatPoly.from_poly(fam.entries[k]) for k in keys]
    lines = dihedral_lines(m, kappa)
    # values of every basis element at the quadrature nodes, through one integrand call each
    G = np.empty((len(keys), len(keys)))
    for a in range(len(keys)):
        for b in range(a, len(keys)):
            fa, fb = fps[a], fps[b]

            def f(t, fa=fa, fb=fb):
                pts = np.stack([np.cos(t), np.sin(t)], axis=1)
                return fa(pts) * fb(pts)

            G[a, b] = G[b, a] = circle_integral(f, lines, nodes)
    return keys, G


def _z2_circle_norm(n, parity, k):
    """int |p_{n,parity}(e^{it})|^2 |sin t|^{2k} dt, from the a_k-normalised display."""
    a_inv = 2 * sqrt(pi) * gamma(k + 0.5) / gamma(k + 1)
    return float(z2_norm_closed(n, parity, Scalar.of(k)).constant_value()) * a_inv


def predicted_norms(m, kappa, n_max):
    """Closed-form circle norms of the dihedral basis.

    Returns (single, pair): single[(N, tag)] for entries z^0 q(z^m'), and
    pair[N] = norm(re) + norm(im) for every degree N >= 1.  Substituting z^m'
    turns the circle integral into the one-parameter or Z2 x Z2 integral, with
    the root-product weight equal to 2^{-(m-1) 2k} |sin m t|^{2k} (odd m) or
    2^{-(m'-1) 2(k1+k2)} |cos m' t|^{2k1} |sin m' t|^{2k2} (even m = 2m').
    """
    k1, k2 = _pair(kappa)
    single, pair = {}, {}
    if m % 2:
        k = k1
        c = 2.0 ** (-(m - 1) * 2 * k)
        single[(0, "re")] = c * 2 * sqrt(pi) * gamma(k + 0.5) / gamma(k + 1)
        for N in range(1, n_max + 1):
            n, j = divmod(N, m)
            if n == 0:
                n0, n1 = c * 2 * sqrt(pi) * gamma(k + 0.5) / gamma(k + 1), 0.0
            else:
                n0, n1 = c * _z2_circle_norm(n, 0, k), c * _z2_circle_norm(n, 1, k)
            if j == 0:
                single[(N, "re")], single[(N, "im")] = n0, n1
                pair[N] = n0 + n1
            else:
                f = (n + 2 * k) / (2 * k)
                pair[N] = f * f * n0 + n1
        return single, pair
    mp = m // 2
    c = 2.0 ** (-(mp - 1) * 2 * (k1 + k2))

    def J(n, a, b):
        return c * jacobi_norm_closed(n, a, b)

    single[(0, "re")] = J(0, k2 - 0.5, k1 - 0.5)
    for N in range(1, n_max + 1):
        n, j = divmod(N, mp)
        s = n // 2
        if n == 0:
            nr, ni = J(0, k2 - 0.5, k1 - 0.5), 0.0
        elif n % 2 == 0:
            nr, ni = J(s, k2 - 0.5, k1 - 0.5), J(s - 1, k2 + 0.5, k1 + 0.5)
        else:
            nr = (k2 + s + 0.5) ** 2 * J(s, k2 - 0.5, k1 + 0.5)
            ni = (k1 + s + 0.5) ** 2 * J(s, k2 + 0.5, k1 - 0.5)
        if j == 0:
            single[(N, "re")], single[(N, "im")] = nr, ni
        pair[N] = nr + ni
    return single, pair


def gram_report(m, kappa, n_max=6, nodes=64):
    """Orthogonality and norm comparison for the degree <= n_max basis."""
    keys, G = circle_gram(m, kappa, n_max, nodes)
    diag = np.sqrt(np.abs(np.diag(G)))
    off = G / np.outer(diag, diag)
    np.fill_diagonal(off, 0.0)
    single, pair = predicted_norms(m, kappa, n_max)
    idx = {k: i for i, k in enumerate(keys)}
    norm_err = 0.0
    for key, v in single.items():
        if key in idx and v:
            norm_err = max(norm_err, abs(G[idx[key], idx[key]] - v) / abs(v))
    for N, v in pair.items():
        got = sum(G[idx[(N, t)], idx[(N, t)]] for t in ("re", "im") if (N, t) in idx)
        norm_err = max(norm_err, abs(got - v) / abs(v))
    return {
        "group": f"I2({m})",
        "kappa": list(_pair(kappa)),
        "basis_size": len(keys),
        "max_offdiagonal": float(np.max(np.abs(off))),
        "max_norm_error": float(norm_err),
    }
