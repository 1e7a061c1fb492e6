"""V^0_kappa, the intertwining operator V_kappa, kernels, radical and Poisson kernel."""
from fractions import Fraction

from .. import cache
from ..errors import SingularGamma, SingularParameter
from ..linalg import SingularMatrix, inverse, nullspace
from ..poly import Polynomial, from_vector, monomial_basis, multi_factorial
from ..scalar import ONE, ZERO, Scalar, pochhammer
from .forms import gram_matrix
from .operators import _check, dunkl_derivatives


def v0_apply(ctx, p):
    """V^0 p = sum_{|alpha|=n} y^alpha D^alpha p / alpha!, degree by degree."""
    _check(ctx, p)
    out = Polynomial.zero(p.dim)
    for n, pn in p.homogeneous_components().items():
        basis = monomial_basis(p.dim, n)
        ders = dunkl_derivatives(ctx, pn, basis)
        terms = {}
        for a in basis:
            c = ders[a].constant_term()
            if c:
                terms[a] = c.scale(Fraction(1, multi_factorial(a)))
        out = out + Polynomial(p.dim, terms)
    return out


def v0_matrix(ctx, n):
    """Column b = coefficients of V^0 x^b; entry (g, b) = <x^g, x^b>_kappa / g!."""
    def build():
        G = gram_matrix(ctx, n)
        basis = monomial_basis(ctx.dim, n)
        return [[x.scale(Fraction(1, multi_factorial(g))) for x in row] for g, row in zip(basis, G)]

    def build_or_load():
        key = (cache.context_key(ctx), n)
        hit = cache.load("v0", key)
        if hit is None:
            hit = build()
            cache.store("v0", key, hit)
        return hit

    return ctx.cached(("v0", n), build_or_load)


def v_matrix(ctx, n):
    """Matrix of V_kappa on Pi_n (inverse of v0_matrix)."""
    def build():
        try:
            return inverse(v0_matrix(ctx, n))
        except SingularMatrix:
            raise SingularParameter(
                f"V^0 is singular on degree {n} at kappa = {[str(v) for v in ctx.kappa.values]}",
                degree=n,
                kappa=[str(v) for v in ctx.kappa.values],
            ) from None

    return ctx.cached(("v", n), build)


def v_apply(ctx, p):
    """V_kappa p, solving the V^0 system on each degree."""
    _check(ctx, p)
    out = Polynomial.zero(p.dim)
    for n, pn in p.homogeneous_components().items():
        if n == 0:
            out = out + pn
            continue
        Vm = v_matrix(ctx, n)
        basis = monomial_basis(p.dim, n)
        vec = [pn.terms.get(e, ZERO) for e in basis]
        res = []
        for row in Vm:
            s = ZERO
            for x, y in zip(row, vec):
                if x and y:
                    s = s + x * y
            res.append(s)
        out = out + from_vector(p.dim, n, res)
    return out


def _split(P, d, block):
    """Group a 2d-variable polynomial by the exponents of the other block."""
    groups = {}
    for e, c in P.terms.items():
        mine, other = (e[:d], e[d:]) if block == "x" else (e[d:], e[:d])
        groups.setdefault(other, {})[mine] = c
    return groups


def _join(d, mine, other, block):
    return mine + other if block == "x" else other + mine


def block_apply(ctx, P, op, block="x"):
    """Apply a d-variable operator ``op`` to one block of a 2d-variable polynomial."""
    d = ctx.dim
    out = {}
    for other, terms in _split(P, d, block).items():
        img = op(Polynomial(d, terms))
        for e, c in img.terms.items():
            k = _join(d, e, other, block)
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return Polynomial(2 * d, out)


def kernel_poly(ctx, n):
    """K_{kappa,n}(x,y) = sum_{|alpha|=n} x^alpha V(y^alpha) / alpha!  in 2d variables."""
    def build():
        d = ctx.dim
        if n == 0:
            return Polynomial.one(2 * d)
        Vm = v_matrix(ctx, n)
        basis = monomial_basis(d, n)
        terms = {}
        for ja, a in enumerate(basis):
            f = Fraction(1, multi_factorial(a))
            for jg, g in enumerate(basis):
                c = Vm[jg][ja]
                if c:
                    terms[a + g] = c.scale(f)
        return Polynomial(2 * d, terms)

    return ctx.cached(("kernel", n), build)


def radical_basis(ctx, n):
    """Null space of the degree-n Gram matrix (empty iff the form is nondegenerate)."""
    G = gram_matrix(ctx, n)
    basis = monomial_basis(ctx.dim, n)
    return [from_vector(ctx.dim, n, v) for v in nullspace(G, len(basis))]


def check_nonzero(value, what):
    """Raise SingularGamma if a numeric denominator vanishes."""
    if isinstance(value, Scalar) and value.is_constant() and not value:
        raise SingularGamma(f"{what} = 0 at this kappa", factor=what)
    return value


def double_norms(d):
    """|x|^2 and |y|^2 as 2d-variable polynomials."""
    nx = {}
    ny = {}
    for i in range(d):
        e = [0] * (2 * d)
        e[i] = 2
        nx[tuple(e)] = ONE
        e = [0] * (2 * d)
        e[d + i] = 2
        ny[tuple(e)] = ONE
    return Polynomial(2 * d, nx), Polynomial(2 * d, ny)


def poisson_kernel_poly(ctx, n):
    """P_{kappa,n} = 2^n (g+d/2)_n sum_j |x|^{2j}|y|^{2j} K_{n-2j} / (4^j j! (-g-n+2-d/2)_j)."""
    d = ctx.dim
    g = ctx.gamma
    half_d = Fraction(d, 2)
    nx, ny = double_norms(d)
    lead = check_nonzero(pochhammer(g + half_d, n), f"(gamma+d/2)_{n}").scale(2 ** n)
    out = Polynomial.zero(2 * d)
    for j in range(n // 2 + 1):
        den = check_nonzero(pochhammer(-g - n + 2 - half_d, j), f"(-gamma-{n}+2-d/2)_{j}")
        coef = lead / den.scale(4 ** j * _fact(j))
        out = out + ((nx * ny) ** j * kernel_poly(ctx, n - 2 * j)).scale(coef)
    return out


def _fact(j):
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out
