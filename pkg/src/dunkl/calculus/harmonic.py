"""h-harmonic polynomials: projection, expansion and bases."""
from fractions import Fraction
from math import factorial

from ..errors import NotHomogeneous, SingularGamma
from ..linalg import nullspace
from ..poly import Polynomial, from_vector, monomial_basis
from ..scalar import ZERO, Scalar, pochhammer
from .intertwining import check_nonzero
from .operators import _check, laplacian_apply
from .structure import laplacian_matrix_parts


def _degree(p):
    if not p:
        return None
    if not p.is_homogeneous():
        raise NotHomogeneous("harmonic projection needs a homogeneous polynomial")
    return p.degree()


def _check_gamma(ctx):
    g = ctx.gamma + Fraction(ctx.dim, 2)
    if g.is_constant():
        v = g.constant_value()
        if v <= 0 and v.denominator == 1:
            raise SingularGamma(f"gamma + d/2 = {v} is a non-positive integer", value=str(v))


def harmonic_project(ctx, p):
    """pi_{kappa,n} p = sum_j |x|^{2j} Delta^j p / (4^j j! (-gamma-n+2-d/2)_j)."""
    _check(ctx, p)
    n = _degree(p)
    if n is None or n <= 1:
        return p
    d = ctx.dim
    g = ctx.gamma
    r2 = Polynomial.norm_squared(d)
    out = p
    term = p
    r2j = Polynomial.one(d)
    for j in range(1, n // 2 + 1):
        term = laplacian_apply(ctx, term)
        if not term:
            break
        r2j = r2j * r2
        den = check_nonzero(pochhammer(-g - n + 2 - Fraction(d, 2), j), f"(-gamma-{n}+2-d/2)_{j}")
        out = out + (r2j * term).scale(_inv(den.scale(4 ** j * factorial(j))))
    return out


def _inv(s):
    return Scalar.of(1) / s


def harmonic_expansion(ctx, p):
    """[(j, h_j)] with p = sum_j |x|^{2j} h_j and h_j harmonic of degree n-2j."""
    _check(ctx, p)
    n = _degree(p)
    if n is None:
        return []
    d = ctx.dim
    g = ctx.gamma
    out = []
    term = p
    for j in range(n // 2 + 1):
        if j:
            term = laplacian_apply(ctx, term)
        if not term:
            break
        den = check_nonzero(
            pochhammer(g + Fraction(d, 2) + n - 2 * j, j), f"(gamma+d/2+{n - 2 * j})_{j}"
        ).scale(4 ** j * factorial(j))
        out.append((j, harmonic_project(ctx, term).scale(_inv(den))))
    return out


def harmonic_reconstruct(ctx, pieces):
    d = ctx.dim
    r2 = Polynomial.norm_squared(d)
    out = Polynomial.zero(d)
    for j, h in pieces:
        out = out + r2 ** j * h
    return out


def laplacian_matrix(ctx, n):
    """Delta_kappa : Pi_n -> Pi_{n-2} with Scalar entries."""
    ctx.require_exact()

    def build():
        L0, Lc = laplacian_matrix_parts(ctx.rs, n)
        kap = ctx.kappa.values
        rows = []
        for r, row in enumerate(L0):
            new = []
            for j, x in enumerate(row):
                s = Scalar.of(x) if x else ZERO
                for c, M in enumerate(Lc):
                    y = M[r][j]
                    if y and kap[c]:
                        s = s + kap[c].scale(y)
                new.append(s)
            rows.append(new)
        return rows

    return ctx.cached(("laplacian_matrix", n), build)


def harmonic_basis(ctx, n):
    """Basis of ker(Delta_kappa) on Pi_n by exact null space."""
    _check_gamma(ctx)
    d = ctx.dim
    basis = monomial_basis(d, n)
    if n < 2:
        return [Polynomial.monomial(e) for e in basis]
    L = laplacian_matrix(ctx, n)
    return [from_vector(d, n, v) for v in nullspace(L, len(basis))]


def harmonic_dimension(d, n):
    return len(monomial_basis(d, n)) - (len(monomial_basis(d, n - 2)) if n >= 2 else 0)
