"""Dunkl operators, the Dunkl Laplacian and the rho-action of polynomials."""
from ..errors import DimensionMismatch
from ..poly import Polynomial
from .context import direction
from .structure import dunkl_monomial, laplacian_monomial


def _acc(d, f, s):
    v = d.get(f)
    if v is not None:
        s = v + s
    if s:
        d[f] = s
    else:
        d.pop(f, None)


def _assemble(ctx, dim, base, class_parts):
    out = base
    for k, part in enumerate(class_parts):
        kap = ctx.kappa.values[k]
        if not kap or not part:
            continue
        for f, s in part.items():
            _acc(out, f, s * kap)
    return Polynomial(dim, out)


def _check(ctx, p):
    ctx.require_exact()
    if p.dim != ctx.dim:
        raise DimensionMismatch(f"polynomial has {p.dim} variables, context has {ctx.dim}")


def dunkl_apply(ctx, a, p):
    """D_a p = <grad p, a> + sum_{v in R+} kappa(v) <v,a> (p - s_v p)/<x,v>."""
    _check(ctx, p)
    a = direction(ctx, a)
    rs = ctx.rs
    base = {}
    parts = [dict() for _ in rs.classes]
    for e, c in p.terms.items():
        deriv, cls = dunkl_monomial(rs, a, e)
        for f, r in deriv.items():
            _acc(base, f, c.scale(r))
        for k, part in enumerate(cls):
            acc = parts[k]
            for f, r in part.items():
                _acc(acc, f, c.scale(r))
    return _assemble(ctx, p.dim, base, parts)


def laplacian_apply(ctx, p):
    """Delta_kappa p = Delta p + 2 sum kappa(v) [<grad p,v>/<x,v> - |v|^2/2 (p - s_v p)/<x,v>^2]."""
    _check(ctx, p)
    rs = ctx.rs
    base = {}
    parts = [dict() for _ in rs.classes]
    for e, c in p.terms.items():
        b, cls = laplacian_monomial(rs, e)
        for f, r in b.items():
            _acc(base, f, c.scale(r))
        for k, part in enumerate(cls):
            acc = parts[k]
            for f, r in part.items():
                _acc(acc, f, c.scale(r))
    return _assemble(ctx, p.dim, base, parts)


def laplacian_power(ctx, p, j):
    for _ in range(j):
        if not p:
            break
        p = laplacian_apply(ctx, p)
    return p


def laplacian_sum_of_squares(ctx, p):
    """sum_i D_i^2 p (second route to the Laplacian)."""
    out = Polynomial.zero(p.dim)
    for i in range(ctx.dim):
        out = out + dunkl_apply(ctx, i, dunkl_apply(ctx, i, p))
    return out


def multiply_linear(p, t):
    return Polynomial.linear_form(t) * p


def dunkl_derivatives(ctx, q, alphas):
    """{alpha: D^alpha q} for every multi-index in ``alphas`` (shared prefixes reused)."""
    memo = {(0,) * ctx.dim: q}

    def get(alpha):
        hit = memo.get(alpha)
        if hit is not None:
            return hit
        i = max(k for k, x in enumerate(alpha) if x)
        prev = list(alpha)
        prev[i] -= 1
        base = get(tuple(prev))
        val = dunkl_apply(ctx, i, base) if base else base
        memo[alpha] = val
        return val

    return {a: get(tuple(a)) for a in alphas}


def rho_apply(ctx, p, q):
    """rho(p) q: replace x_i in p by D_i and apply to q."""
    _check(ctx, p)
    _check(ctx, q)
    ders = dunkl_derivatives(ctx, q, list(p.terms))
    out = Polynomial.zero(q.dim)
    for e, c in p.terms.items():
        out = out + ders[e].scale(c)
    return out


def euler_apply(p):
    """sum_i x_i d_i p (degree times p on homogeneous pieces)."""
    return Polynomial(p.dim, {e: c.scale(sum(e)) for e, c in p.terms.items()})
