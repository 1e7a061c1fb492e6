"""kappa-independent pieces of the operators, cached per root system.

Every operator here is affine in kappa: op = op_0 + sum_c kappa_c op_c, with
op_0 and op_c having rational coefficients.  We compute the pieces on single
monomials once and reuse them for symbolic, rational and floating kappa.
"""
import threading
from fractions import Fraction

from ..poly import (
    Polynomial,
    divide_by_linear_form,
    monomial_basis,
    monomial_divided_difference,
    reflect,
)
from ..roots import dot

_LOCK = threading.Lock()


def _store(rs):
    st = getattr(rs, "_structure_cache", None)
    if st is None:
        with _LOCK:
            st = getattr(rs, "_structure_cache", None)
            if st is None:
                st = {}
                rs._structure_cache = st
    return st


def _add(acc, f, r):
    v = acc.get(f, 0) + r
    if v:
        acc[f] = v
    else:
        acc.pop(f, None)


def dunkl_monomial(rs, a, e):
    """D_a x^e split as (derivative part, [class parts]); dicts exp -> Fraction."""
    st = _store(rs)
    key = ("D", a, e)
    hit = st.get(key)
    if hit is not None:
        return hit
    deriv = {}
    for i, ai in enumerate(a):
        if ai and e[i]:
            f = list(e)
            f[i] -= 1
            _add(deriv, tuple(f), ai * e[i])
    parts = [dict() for _ in rs.classes]
    for v in rs.positive:
        c = dot(v, a)
        if not c:
            continue
        acc = parts[rs.class_of[v]]
        for f, r in monomial_divided_difference(e, v):
            _add(acc, f, r * c)
    val = (deriv, parts)
    st[key] = val
    return val


def laplacian_monomial(rs, e):
    """Delta_kappa x^e from the second-order formula, split by class."""
    st = _store(rs)
    key = ("L", e)
    hit = st.get(key)
    if hit is not None:
        return hit
    p = Polynomial.monomial(e)
    d = len(e)
    base = {f: c.constant_value() for f, c in p.euclidean_laplacian().terms.items()}
    parts = [dict() for _ in rs.classes]
    for v in rs.positive:
        lin = Polynomial.linear_form(v)
        n2 = dot(v, v)
        # <x,v><grad p, v> - |v|^2/2 (p - s_v p), divisible by <x,v>^2
        num = lin * p.directional(v) - (p - reflect(p, v)).scale(n2 / 2)
        if not num:
            continue
        q = divide_by_linear_form(divide_by_linear_form(num, v), v)
        acc = parts[rs.class_of[v]]
        for f, c in q.terms.items():
            _add(acc, f, 2 * c.constant_value())
    val = (base, parts)
    st[key] = val
    return val


def dunkl_matrix_parts(rs, i, n):
    """Matrices of D_{e_i}: Pi_n -> Pi_{n-1} on graded-lex monomial bases.

    Returns (P, [E_c]) as dense lists of Fractions with rows indexed by
    monomial_basis(d, n-1) and columns by monomial_basis(d, n).
    """
    st = _store(rs)
    key = ("DM", i, n)
    hit = st.get(key)
    if hit is not None:
        return hit
    d = rs.dim
    a = tuple(Fraction(int(j == i)) for j in range(d))
    rows = monomial_basis(d, n - 1)
    cols = monomial_basis(d, n)
    idx = {e: k for k, e in enumerate(rows)}
    zero = Fraction(0)
    P = [[zero] * len(cols) for _ in rows]
    E = [[[zero] * len(cols) for _ in rows] for _ in rs.classes]
    for j, e in enumerate(cols):
        deriv, parts = dunkl_monomial(rs, a, e)
        for f, r in deriv.items():
            P[idx[f]][j] = r
        for c, part in enumerate(parts):
            for f, r in part.items():
                E[c][idx[f]][j] = r
    val = (P, E)
    st[key] = val
    return val


def laplacian_matrix_parts(rs, n):
    """Matrices of Delta_kappa: Pi_n -> Pi_{n-2}, split as (L0, [L_c])."""
    st = _store(rs)
    key = ("LM", n)
    hit = st.get(key)
    if hit is not None:
        return hit
    d = rs.dim
    rows = monomial_basis(d, n - 2) if n >= 2 else ()
    cols = monomial_basis(d, n)
    idx = {e: k for k, e in enumerate(rows)}
    zero = Fraction(0)
    L0 = [[zero] * len(cols) for _ in rows]
    Lc = [[[zero] * len(cols) for _ in rows] for _ in rs.classes]
    for j, e in enumerate(cols):
        base, parts = laplacian_monomial(rs, e)
        for f, r in base.items():
            L0[idx[f]][j] = r
        for c, part in enumerate(parts):
            for f, r in part.items():
                Lc[c][idx[f]][j] = r
    val = (L0, Lc)
    st[key] = val
    return val
