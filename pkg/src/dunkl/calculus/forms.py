"""The kappa-form, the Gaussian form and exp(s Delta_kappa)."""
from math import factorial

from ..poly import Polynomial, monomial_basis
from ..scalar import ONE, ZERO, Scalar
from .operators import _check, dunkl_derivatives, laplacian_apply
from .structure import dunkl_matrix_parts


def kappa_form(ctx, p, q):
    """<p,q>_kappa = (rho(p) q)(0).

    D^alpha lowers degree by |alpha|, so only pieces of equal degree meet.
    """
    _check(ctx, p)
    _check(ctx, q)
    total = ZERO
    qc = q.homogeneous_components()
    for n, pn in p.homogeneous_components().items():
        qn = qc.get(n)
        if qn is None:
            continue
        ders = dunkl_derivatives(ctx, qn, list(pn.terms))
        for e, c in pn.terms.items():
            v = ders[e].constant_term()
            if v:
                total = total + c * v
    return total


def dunkl_matrix(ctx, i, n):
    """Matrix of D_i : Pi_n -> Pi_{n-1} with Scalar entries (cached)."""
    ctx.require_exact()

    def build():
        P, E = dunkl_matrix_parts(ctx.rs, i, n)
        kap = ctx.kappa.values
        out = []
        for r, row in enumerate(P):
            new = []
            for j, x in enumerate(row):
                s = Scalar.of(x) if x else ZERO
                for c, Ec in enumerate(E):
                    y = Ec[r][j]
                    if y and kap[c]:
                        s = s + kap[c].scale(y)
                new.append(s)
            out.append(new)
        return out

    return ctx.cached(("dunkl_matrix", i, n), build)


def gram_matrix(ctx, n):
    """[<x^a, x^b>_kappa] on monomial_basis(d, n).

    Built degree by degree: <x_i x^a', x^b> = <x^a', D_i x^b>.
    """
    ctx.require_exact()

    def build():
        d = ctx.dim
        if n == 0:
            return [[ONE]]
        prev = gram_matrix(ctx, n - 1)
        prev_idx = {e: k for k, e in enumerate(monomial_basis(d, n - 1))}
        basis = monomial_basis(d, n)
        mats = {}
        rows = []
        for a in basis:
            i = next(k for k, x in enumerate(a) if x)
            ap = list(a)
            ap[i] -= 1
            prow = prev[prev_idx[tuple(ap)]]
            if i not in mats:
                M = dunkl_matrix(ctx, i, n)
                mats[i] = [[(r, M[r][j]) for r in range(len(M)) if M[r][j]] for j in range(len(basis))]
            cols = mats[i]
            row = []
            for col in cols:
                s = ZERO
                for r, m in col:
                    x = prow[r]
                    if x:
                        s = s + x * m
                row.append(s)
            rows.append(row)
        return rows

    return ctx.cached(("gram", n), build)


def gram_form(ctx, p, q):
    """<p,q>_kappa through the cached Gram matrices (second route)."""
    total = ZERO
    qc = q.homogeneous_components()
    for n, pn in p.homogeneous_components().items():
        qn = qc.get(n)
        if qn is None:
            continue
        G = gram_matrix(ctx, n)
        basis = monomial_basis(ctx.dim, n)
        pv = [pn.terms.get(e) for e in basis]
        qv = [qn.terms.get(e) for e in basis]
        for i, a in enumerate(pv):
            if a is None:
                continue
            row = G[i]
            for j, b in enumerate(qv):
                if b is not None and row[j]:
                    total = total + a * b * row[j]
    return total


def exp_laplacian(ctx, s, p):
    """sum_j s^j Delta^j p / j!  (terminates on polynomials)."""
    s = Scalar.of(s)
    out = p
    term = p
    j = 0
    while True:
        term = laplacian_apply(ctx, term)
        if not term:
            break
        j += 1
        out = out + term.scale(s ** j / factorial(j))
    return out


def gaussian_form(ctx, p, q):
    """<p,q>_g = <e^{Delta/2} p, e^{Delta/2} q>_kappa."""
    half = Scalar.of(1) / 2
    return kappa_form(ctx, exp_laplacian(ctx, half, p), exp_laplacian(ctx, half, q))
