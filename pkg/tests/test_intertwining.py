from fractions import Fraction

import pytest
from hypothesis import given, settings

from dunkl.calculus.context import DunklContext, MultiplicitySpec
from dunkl.calculus.harmonic import (
    harmonic_basis,
    harmonic_dimension,
    harmonic_expansion,
    harmonic_project,
    harmonic_reconstruct,
)
from dunkl.calculus.intertwining import (
    block_apply,
    kernel_poly,
    poisson_kernel_poly,
    radical_basis,
    v0_apply,
    v_apply,
)
from dunkl.calculus.forms import kappa_form
from dunkl.calculus.operators import dunkl_apply, laplacian_apply
from dunkl.errors import SingularParameter
from dunkl.poly import Polynomial, monomial_basis
from dunkl.roots import build_root_system
from dunkl.scalar import Scalar, pochhammer

from conftest import polynomials, symbolic

k = Scalar.param(0)


@pytest.mark.parametrize("tag,n", [("Z2", 1), ("A", 2), ("B", 2)])
def test_intertwining_relation(tag, n):
    ctx = symbolic(tag, n)

    @settings(max_examples=10)
    @given(polynomials(ctx.dim, max_deg=4))
    def check(p):
        vp = v_apply(ctx, p)
        for i in range(ctx.dim):
            assert dunkl_apply(ctx, i, vp) == v_apply(ctx, p.partial(i))
        assert v0_apply(ctx, vp) == p
        assert vp.constant_term() == p.constant_term()

    check()


def test_v0_on_z2_monomials():
    # V0 x^{2n} = (k+1/2)_n/(1/2)_n x^{2n};  V0 x^{2n+1} = (k+1/2)_{n+1}/(1/2)_{n+1} x^{2n+1}
    ctx = symbolic("Z2", 1)
    h = Scalar.of(Fraction(1, 2))
    for deg in range(7):
        m, odd = divmod(deg, 2)
        c = pochhammer(k + h, m + odd) / pochhammer(h, m + odd)
        xn = Polynomial.monomial((deg,))
        assert v0_apply(ctx, xn) == xn.scale(c)


def test_kernel_properties_b2():
    ctx = symbolic("B", 2)
    d = 2
    for n in range(1, 5):
        K = kernel_poly(ctx, n)
        swapped = Polynomial(4, {e[d:] + e[:d]: c for e, c in K.terms.items()})
        assert swapped == K
        prev = kernel_poly(ctx, n - 1)
        for i in range(d):
            lhs = block_apply(ctx, K, lambda q: dunkl_apply(ctx, i, q), "x")
            assert lhs == prev.multiply_variable(d + i)


def test_kernel_reproduces_the_form():
    # <K_n(x, .), p>_kappa in the y block is p(x)
    ctx = symbolic("A", 2)
    n = 3
    K = kernel_poly(ctx, n)
    p = Polynomial.parse("x1^2*x3 - 2*x2^3 + x1*x2*x3", 3)
    groups = {}
    for e, c in K.terms.items():
        groups.setdefault(e[:3], {})[e[3:]] = c
    out = Polynomial(3, {x: kappa_form(ctx, Polynomial(3, ys), p) for x, ys in groups.items()})
    assert out == p


def test_radical_of_z2():
    rs = build_root_system("Z2", 1)
    for kap, first in [(Fraction(-1, 2), 1), (Fraction(-3, 2), 3), (Fraction(-5, 2), 5)]:
        ctx = DunklContext(rs, MultiplicitySpec.rational(rs, [kap]))
        for deg in range(8):
            rad = radical_basis(ctx, deg)
            assert bool(rad) == (deg >= first)
    generic = DunklContext(rs, MultiplicitySpec.rational(rs, [Fraction(-1, 3)]))
    assert all(not radical_basis(generic, deg) for deg in range(8))


def test_singular_parameter():
    rs = build_root_system("Z2", 1)
    ctx = DunklContext(rs, MultiplicitySpec.rational(rs, [Fraction(-3, 2)]))
    with pytest.raises(SingularParameter):
        v_apply(ctx, Polynomial.parse("x1^3", 1))
    assert v_apply(ctx, Polynomial.parse("x1^2", 1)) == Polynomial.parse("-1/2*x1^2", 1)


@pytest.mark.parametrize("tag,n", [("Z2", 2), ("A", 2), ("B", 2)])
def test_harmonic_pieces(tag, n):
    ctx = symbolic(tag, n)
    d = ctx.dim

    @settings(max_examples=8)
    @given(polynomials(d, max_deg=5, max_terms=5))
    def check(p):
        for deg, pn in p.homogeneous_components().items():
            h = harmonic_project(ctx, pn)
            assert not laplacian_apply(ctx, h)
            assert harmonic_project(ctx, h) == h
            assert harmonic_reconstruct(ctx, harmonic_expansion(ctx, pn)) == pn

    check()


def test_harmonic_dimensions():
    ctx = symbolic("B", 3)
    for n in range(5):
        basis = harmonic_basis(ctx, n)
        assert len(basis) == harmonic_dimension(3, n) == len(monomial_basis(3, n)) - len(monomial_basis(3, n - 2) if n >= 2 else ())
        assert all(not laplacian_apply(ctx, h) for h in basis)


def test_poisson_kernel_is_harmonic_in_x():
    ctx = symbolic("B", 2)
    for n in range(4):
        P = poisson_kernel_poly(ctx, n)
        assert not block_apply(ctx, P, lambda q: laplacian_apply(ctx, q), "x")
