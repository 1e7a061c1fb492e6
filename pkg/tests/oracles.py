"""Independent reference implementations built on sympy.

Nothing here calls the package's operator code: polynomials cross over as
plain dicts of exponents and coefficient strings, and roots as rational
tuples.  The Dunkl operator is computed from its defining difference
quotient with ``sympy.cancel``; nonsymmetric Jack polynomials are recovered
as the normalised joint eigenvector of the Cherednik operators by linear
algebra over Q(k).
"""
from itertools import product

import sympy as sp

K0, K1 = sp.symbols("k0 k1")
_NAMES = {"k0": K0, "k1": K1}


def xs(d):
    return sp.symbols(f"x1:{d + 1}")


def scalar_to_sympy(s):
    return sp.sympify(str(s).replace("^", "**"), locals=_NAMES)


def to_sympy(p):
    X = xs(p.dim)
    total = sp.Integer(0)
    for e, c in p.terms.items():
        total += scalar_to_sympy(c) * sp.Mul(*[x ** k for x, k in zip(X, e)])
    return sp.expand(total)


def equal(expr, p):
    return sp.simplify(sp.together(expr - to_sympy(p))) == 0


def weighted_roots(ctx):
    """[(root as sympy Rationals, kappa as sympy)] from a context's data."""
    vals = [scalar_to_sympy(v) for v in ctx.kappa.values]
    return [
        (tuple(sp.Rational(c.numerator, c.denominator) for c in v), vals[ctx.rs.class_of[v]])
        for v in ctx.rs.positive
    ]


def reflect(expr, v, X):
    n2 = sum(c * c for c in v)
    dot = sum(c * x for c, x in zip(v, X))
    sub = {x: x - 2 * dot * c / n2 for x, c in zip(X, v)}
    return expr.subs(sub, simultaneous=True)


def dunkl(expr, i, roots, X):
    """D_i f = df/dx_i + sum kappa(v) v_i (f - f o s_v) / <x, v>."""
    out = sp.diff(expr, X[i])
    for v, k in roots:
        if v[i] == 0:
            continue
        dot = sum(c * x for c, x in zip(v, X))
        out += k * v[i] * sp.cancel((expr - reflect(expr, v, X)) / dot)
    return sp.expand(out)


def laplacian(expr, roots, X):
    return sp.expand(sum(dunkl(dunkl(expr, i, roots, X), i, roots, X) for i in range(len(X))))


# ---------------------------------------------------------------- type A

def type_a_roots(d, k):
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            v = [0] * d
            v[i], v[j] = 1, -1
            out.append((tuple(sp.Integer(c) for c in v), k))
    return out


def swap(expr, i, j, X):
    return expr.subs({X[i]: X[j], X[j]: X[i]}, simultaneous=True)


def cherednik(expr, i, k, X):
    roots = type_a_roots(len(X), k)
    out = dunkl(sp.expand(X[i] * expr), i, roots, X)
    for j in range(i):
        out -= k * swap(expr, i, j, X)
    return sp.expand(out)


def _monomials(d, n):
    return [e for e in product(range(n + 1), repeat=d) if sum(e) == n]


def ns_jack(alpha, k):
    """(zeta, [xi_i]) by solving the joint eigenproblem with [x^alpha] zeta = 1.

    The eigenvalue xi_i is read off as the coefficient of x^alpha in U_i x^alpha,
    which is valid because U_i is triangular in the order attached to alpha.
    """
    d = len(alpha)
    X = xs(d)
    n = sum(alpha)
    basis = _monomials(d, n)
    mono = lambda e: sp.Mul(*[x ** c for x, c in zip(X, e)])
    target = mono(alpha)
    xi = [sp.Poly(cherednik(target, i, k, X), *X).coeff_monomial(target) for i in range(d)]
    cs = sp.symbols(f"c0:{len(basis)}")
    f = sum(c * mono(e) for c, e in zip(cs, basis))
    eqs = [cs[basis.index(tuple(alpha))] - 1]
    for i in range(d):
        r = sp.Poly(cherednik(f, i, k, X) - xi[i] * f, *X)
        eqs.extend(r.coeffs())
    sol = sp.solve(eqs, cs, dict=True)
    if len(sol) != 1 or len(sol[0]) != len(cs):
        raise ValueError(f"joint eigenproblem for {alpha} not uniquely solvable")
    return sp.expand(f.subs(sol[0])), [sp.simplify(x) for x in xi]
