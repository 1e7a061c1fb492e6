from fractions import Fraction
from math import gamma, pi

import numpy as np
import pytest
import sympy as sp
from scipy.integrate import quad

from dunkl.calculus.forms import kappa_form
from dunkl.calculus.operators import laplacian_apply
from dunkl.errors import RecurrencePole, UnknownType, ZeroDenominator
from dunkl.harmonics2d import (
    classical_poly,
    dihedral_harmonics,
    jacobi_explicit,
    jacobi_norm_closed,
    jacobi_norm_display,
    z2_harmonics,
    z2_norm_closed,
    z2z2_harmonics,
    z_power,
)
from dunkl.poly import Polynomial
from dunkl.scalar import Scalar, pochhammer

import oracles
from conftest import symbolic

T = sp.Symbol("t")


def _coeffs_sympy(expr):
    return [sp.nsimplify(c) for c in reversed(sp.Poly(sp.expand(expr), T).all_coeffs())]


def _same(cp, expr, subs=None):
    want = _coeffs_sympy(expr)
    got = [oracles.scalar_to_sympy(c) for c in cp.coeffs]
    if subs:
        got = [g.subs(subs) for g in got]
    return len(want) == len(got) and all(sp.simplify(a - b) == 0 for a, b in zip(want, got))


@pytest.mark.parametrize("n", range(7))
def test_classical_polynomials_against_sympy(n):
    lam, a, b = sp.Rational(3, 4), sp.Rational(-1, 3), sp.Rational(5, 2)
    assert _same(classical_poly("gegenbauer", n, Fraction(3, 4)), sp.gegenbauer(n, lam, T))
    assert _same(classical_poly("jacobi", n, Fraction(-1, 3), Fraction(5, 2)), sp.jacobi(n, a, b, T))
    assert _same(classical_poly("laguerre", n, Fraction(1, 2)), sp.assoc_laguerre(n, sp.Rational(1, 2), T))
    assert _same(classical_poly("chebyshevT", n), sp.chebyshevt(n, T))
    # symbolic parameters, second route for Jacobi
    assert classical_poly("jacobi", n, "k0", "k1").coeffs == jacobi_explicit(n, "k0", "k1")


def test_recurrence_pole():
    # P^(a,b) with a + b = -2 meets a zero denominator at degree 2
    with pytest.raises(RecurrencePole):
        classical_poly("jacobi", 2, Fraction(-1), Fraction(-1))
    with pytest.raises(UnknownType):
        classical_poly("hermite", 2)


def test_z2_harmonics_exact():
    ctx = symbolic("I2", 1)
    for n in range(7):
        for p in z2_harmonics(n):
            assert not laplacian_apply(ctx, p)
            assert p.is_zero() or p.is_homogeneous()
    p0, p1 = z2_harmonics(3, normalized=True)
    # normalised so that the Gegenbauer factors equal 1 at t = 1
    assert p0.value_at((1, 0)) == Scalar.of(1)


def test_z2_norms_against_form():
    # the form and the circle norm differ by 2^n (k+1)_n times a constant independent of n
    ctx = symbolic("I2", 1)
    k = Scalar.param(0)
    ratios = []
    for n in range(1, 5):
        p0, p1 = z2_harmonics(n)
        for par, p in ((0, p0), (1, p1)):
            form = kappa_form(ctx, p, p)
            ratios.append(form / (pochhammer(k + 1, n).scale(2 ** n) * z2_norm_closed(n, par)))
    assert all(r == ratios[0] for r in ratios)


def test_z2z2_frozen_and_harmonic():
    ctx = symbolic("Z2", 2)
    fam = z2z2_harmonics(2)
    assert fam["00"] == Polynomial.parse("(k1+1/2)*x1^2 - (k0+1/2)*x2^2", 2)
    for n in range(7):
        for p in z2z2_harmonics(n).values():
            assert not laplacian_apply(ctx, p)


def test_z_power():
    re, im = z_power(3)
    assert re == Polynomial.parse("x1^3 - 3*x1*x2^2", 2)
    assert im == Polynomial.parse("3*x1^2*x2 - x2^3", 2)


def test_dihedral_i4_exactly_harmonic():
    ctx = symbolic("I2", 4)
    fam = dihedral_harmonics(4, 7, (Scalar.param(0), Scalar.param(1)))
    for (N, tag), p in fam.entries.items():
        assert not laplacian_apply(ctx, p), (N, tag)
        assert p.is_zero() or p.degree() == N


def test_dihedral_odd_m():
    # odd m has irrational roots, so harmonicity is certified in floating point
    from dunkl.numeric.dihedral import harmonicity_residual

    fam = dihedral_harmonics(3, 5, Scalar.param(0))
    assert len(fam.entries) == 11
    assert harmonicity_residual(3, 0.7, 6) < 1e-10
    assert harmonicity_residual(5, 1.3, 6) < 1e-10
    with pytest.raises(ZeroDenominator):
        dihedral_harmonics(3, 4, 0)


def _direct_jacobi_norm(n, a, b):
    P = classical_poly("jacobi", n, Fraction(a).limit_denominator(1000), Fraction(b).limit_denominator(1000))

    def f(t):
        return P.evaluate(np.cos(2 * t)) ** 2 * abs(np.sin(t)) ** (2 * a + 1) * abs(np.cos(t)) ** (2 * b + 1)

    pts = [-pi / 2, 0, pi / 2]
    return quad(f, -pi, pi, points=pts, limit=200, epsabs=1e-14, epsrel=1e-13)[0]


@pytest.mark.parametrize("n,a,b", [(0, 0.5, 0.25), (1, -0.1, 0.4), (3, 0.9, 0.4), (2, 1.5, 2.0)])
def test_jacobi_circle_norm(n, a, b):
    direct = _direct_jacobi_norm(n, a, b)
    h = 2 * gamma(n + a + 1) * gamma(n + b + 1) / (gamma(n + 1) * (2 * n + a + b + 1) * gamma(n + a + b + 1))
    assert abs(jacobi_norm_closed(n, a, b) - direct) < 1e-9 * direct
    assert abs(h - direct) < 1e-9 * direct
    # the printed constant is twice the integral
    assert abs(jacobi_norm_display(n, a, b) / direct - 2) < 1e-9
