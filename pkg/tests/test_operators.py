"""Dunkl operators against an independent sympy difference quotient."""
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from dunkl.calculus.context import DunklContext, MultiplicitySpec
from dunkl.calculus.operators import (
    dunkl_apply,
    euler_apply,
    laplacian_apply,
    laplacian_power,
    laplacian_sum_of_squares,
    rho_apply,
)
from dunkl.errors import DimensionMismatch, ExactModeRequired, SymbolicParameterRemaining, TooManyParameters
from dunkl.poly import Polynomial, apply_group_element
from dunkl.roots import build_root_system

import oracles
from conftest import polynomials, symbolic

GROUPS = [("Z2", 1), ("A", 2), ("B", 2), ("I2", 4), ("G2", None), ("Z2", 3)]


@pytest.mark.parametrize("tag,n", GROUPS)
def test_dunkl_operator_matches_sympy(tag, n):
    ctx = symbolic(tag, n)
    roots = oracles.weighted_roots(ctx)
    X = oracles.xs(ctx.dim)

    @settings(max_examples=8)
    @given(polynomials(ctx.dim, max_deg=4))
    def check(p):
        P = oracles.to_sympy(p)
        for i in range(ctx.dim):
            assert oracles.equal(oracles.dunkl(P, i, roots, X), dunkl_apply(ctx, i, p))

    check()


@pytest.mark.parametrize("tag,n", [("A", 2), ("B", 2), ("G2", None)])
def test_laplacian_matches_sympy(tag, n):
    ctx = symbolic(tag, n)
    roots = oracles.weighted_roots(ctx)
    X = oracles.xs(ctx.dim)

    @settings(max_examples=5)
    @given(polynomials(ctx.dim, max_deg=4))
    def check(p):
        assert oracles.equal(oracles.laplacian(oracles.to_sympy(p), roots, X), laplacian_apply(ctx, p))

    check()


@pytest.mark.parametrize("tag,n", [("A", 3), ("B", 3), ("D", 4), ("Z2", 3)])
def test_laplacian_of_norm_squared(tag, n):
    # Delta_kappa |x|^2 = 2d + 4 gamma_kappa
    ctx = symbolic(tag, n)
    r2 = Polynomial.norm_squared(ctx.dim)
    assert laplacian_apply(ctx, r2) == Polynomial.constant(ctx.dim, ctx.gamma.scale(4) + 2 * ctx.dim)


@given(polynomials(3, max_deg=5))
def test_commutativity_and_sum_of_squares_b3(p):
    ctx = symbolic("B", 3)
    for i in range(3):
        for j in range(i + 1, 3):
            assert dunkl_apply(ctx, i, dunkl_apply(ctx, j, p)) == dunkl_apply(ctx, j, dunkl_apply(ctx, i, p))
    assert laplacian_apply(ctx, p) == laplacian_sum_of_squares(ctx, p)


@given(polynomials(3, max_deg=4))
def test_equivariance(p):
    # w D_a w^{-1} = D_{w a}
    ctx = symbolic("A", 2)
    for w in ctx.rs.group():
        for i in range(3):
            a = tuple(Fraction(int(k == i)) for k in range(3))
            lhs = apply_group_element(w, dunkl_apply(ctx, a, p))
            rhs = dunkl_apply(ctx, w.apply(a), apply_group_element(w, p))
            assert lhs == rhs


def test_invariant_polynomials_see_only_the_gradient():
    ctx = symbolic("B", 2)
    p = Polynomial.parse("x1^4 + x2^4 + 3*x1^2*x2^2 - x1^2 - x2^2", 2)
    for i in range(2):
        assert dunkl_apply(ctx, i, p) == p.partial(i)


@given(polynomials(2, max_deg=3), polynomials(2, max_deg=4))
def test_rho_is_an_algebra_action(p, q):
    ctx = symbolic("B", 2)
    r = Polynomial.parse("x1 - 2*x2", 2)
    assert rho_apply(ctx, p * r, q) == rho_apply(ctx, p, rho_apply(ctx, r, q))
    assert rho_apply(ctx, Polynomial.norm_squared(2), q) == laplacian_apply(ctx, q)


def test_euler_and_powers():
    ctx = symbolic("Z2", 1)
    x3 = Polynomial.parse("x1^3", 1)
    assert euler_apply(x3) == x3.scale(3)
    # Z2: D x^{2n+1} = (2n+1+2k) x^{2n}, D x^{2n} = 2n x^{2n-1}
    lap = laplacian_power(ctx, Polynomial.parse("x1^4", 1), 2)
    k = ctx.kappa.values[0]
    assert lap == Polynomial.constant(1, ((k.scale(2) + 3) * (k.scale(2) + 1)).scale(8))


def test_numeric_values_at_half():
    rs = build_root_system("Z2", 1)
    ctx = DunklContext(rs, MultiplicitySpec.rational(rs, [Fraction(1, 2)]))
    assert laplacian_apply(ctx, Polynomial.parse("x1^2", 1)) == Polynomial.constant(1, 4)
    assert laplacian_apply(ctx, Polynomial.parse("x1^3", 1)) == Polynomial.parse("8*x1", 1)


def test_errors():
    ctx = symbolic("A", 2)
    with pytest.raises(DimensionMismatch):
        dunkl_apply(ctx, 0, Polynomial.parse("x1", 2))
    rs = build_root_system("Z2", 3)
    with pytest.raises(TooManyParameters):
        MultiplicitySpec.symbolic(rs)
    fctx = DunklContext(rs, MultiplicitySpec.numeric(rs, [0.3, 0.2, 0.1]))
    with pytest.raises(ExactModeRequired):
        dunkl_apply(fctx, 0, Polynomial.parse("x1", 3))
    with pytest.raises(SymbolicParameterRemaining):
        symbolic("B", 2).kappa.as_floats()
