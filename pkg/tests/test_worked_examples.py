"""Small hand-checkable values, one or two per public operation."""

from fractions import Fraction
import pytest

from dunkl import jack
from dunkl.calculus.context import DunklContext, MultiplicitySpec
from dunkl.calculus.forms import exp_laplacian
from dunkl.calculus.harmonic import harmonic_basis, harmonic_project
from dunkl.calculus.intertwining import kernel_poly, poisson_kernel_poly, radical_basis, v_apply
from dunkl.calculus.mehta import mm_constant
from dunkl.calculus.operators import dunkl_apply, laplacian_apply
from dunkl.cli import main
from dunkl.errors import IrrationalCoordinates, NotAPartition
from dunkl.harmonics2d import classical_poly, z2_harmonics, z2z2_harmonics, z_power
from dunkl.numeric.kernel import float_context, kernel_partial_sum
from dunkl.numeric.mehta import mm_constant_eval
from dunkl.numeric.transform import z2_transform_eigencheck
from dunkl.poly import Polynomial, apply_group_element, divided_difference
from dunkl.roots import GroupElement, alternating_polynomial, build_root_system, element_length, fundamental_degrees
from dunkl.scalar import Scalar, generalized_pochhammer, pochhammer

from conftest import symbolic

k = Scalar.param(0)
t = Scalar.param(1)


def P(text, d):
    return Polynomial.parse(text, d)


# scalars ------------------------------------------------------------------

def test_scalar_cancellation():
    h = Scalar.of(Fraction(1, 2))
    assert (k * k - Scalar.of(Fraction(1, 4))) / (k + h) == k - h
    assert (k / (k + 1)) * ((k + 1) / k) == Scalar.of(1)


def test_pochhammer_values():
    assert generalized_pochhammer(t, (2, 1), k) == t * (t + 1) * (t - k)
    for m in range(9):
        for n in range(9):
            assert pochhammer(t, m + n) == pochhammer(t, m) * pochhammer(t + m, n)
    with pytest.raises(NotAPartition):
        generalized_pochhammer(t, (1, 2), k)


# polynomials --------------------------------------------------------------

def test_polynomial_basics():
    assert P("x1+x2", 2) * P("x1-x2", 2) == P("x1^2-x2^2", 2)
    assert P("x1^2*x2", 2).partial(0) == P("2*x1*x2", 2)
    assert P("k0*x1", 1) + P("x1", 1) == P("(k0+1)*x1", 1)
    assert P("x1^2*x2 - 3", 2).value_at((2, 5)) == Scalar.of(17)


def test_group_action_and_divided_difference():
    swap = GroupElement.reflection((1, -1, 0))
    assert apply_group_element(swap, P("x1^2*x3 + x2", 3)) == P("x2^2*x3 + x1", 3)
    flip = GroupElement.reflection((1,))
    assert apply_group_element(flip, P("x1^3 + x1^2", 1)) == P("-x1^3 + x1^2", 1)
    assert divided_difference(P("x1^2", 2), (1, -1)) == P("x1+x2", 2)
    assert divided_difference(P("x1", 1), (1,)) == P("2", 1)


# root systems -------------------------------------------------------------

def test_a2_and_custom_roots():
    rs = build_root_system("A", 2)
    assert len(rs.roots) == 6 and len(rs.positive) == 3
    assert len(rs.simple) == 2 and rs.num_classes == 1
    custom = build_root_system("custom", roots=[(1,), (-1,)])
    assert len(custom.positive) == 1


def test_group_orders_and_lengths():
    assert build_root_system("A", 2).order() == 6
    assert build_root_system("B", 3).order() == 48
    assert build_root_system("F4").order() == 1152
    rs = build_root_system("A", 2)
    G = rs.group()
    lengths = sorted(element_length(rs, w) for w in G)
    assert lengths == [0, 1, 1, 2, 2, 3]
    for w in rs.simple_reflections():
        assert element_length(rs, w) == 1


@pytest.mark.parametrize("tag,n,text", [
    ("A", 2, "(x1-x2)*(x1-x3)*(x2-x3)"),
    ("B", 2, "x1*x2*(x1-x2)*(x1+x2)"),
    ("Z2", 1, "x1"),
])
def test_alternating_polynomial(tag, n, text):
    rs = build_root_system(tag, n)
    a = alternating_polynomial(rs)
    want = P(text, rs.dim)
    assert a == want or a == -want
    for w in rs.simple_reflections():
        assert apply_group_element(w, a) == -a


def test_degree_tables():
    assert tuple(fundamental_degrees("G2")) == (2, 6)
    with pytest.raises(IrrationalCoordinates) as err:
        build_root_system("H4")
    assert tuple(err.value.details["degrees"]) == (2, 12, 20, 30)


# operators ----------------------------------------------------------------

def test_rank_one_operators():
    z2 = symbolic("Z2", 1)
    x2 = P("x1^2", 1)
    assert dunkl_apply(z2, 0, x2) == P("2*x1", 1)
    assert laplacian_apply(z2, x2) == P("2+4*k0", 1)
    a1 = symbolic("A", 1)
    assert dunkl_apply(a1, 0, P("x1", 2)) == P("1+k0", 2)
    for tag, n in [("A", 2), ("B", 2), ("Z2", 2)]:
        ctx = symbolic(tag, n)
        assert not laplacian_apply(ctx, alternating_polynomial(ctx.rs))


def test_exp_laplacian_and_v():
    z2 = symbolic("Z2", 1)
    assert exp_laplacian(z2, Fraction(-1, 2), P("x1^2", 1)) == P("x1^2 - (2*k0+1)", 1)
    assert v_apply(z2, P("x1^2", 1)) == P("(1/(2*k0+1))*x1^2", 1)


def test_low_degree_kernels():
    z2 = symbolic("Z2", 1)
    assert kernel_poly(z2, 1) == P("(1/(2*k0+1))*x1*x2", 2)
    assert kernel_poly(z2, 2) == P("(1/(4*k0+2))*x1^2*x2^2", 2)
    assert not harmonic_project(z2, P("x1^2", 1))
    g = z2.gamma
    assert poisson_kernel_poly(z2, 1) == kernel_poly(z2, 1).scale((g + Fraction(1, 2)).scale(2))


def test_harmonic_basis_sizes():
    assert len(harmonic_basis(symbolic("B", 2), 3)) == 2
    assert harmonic_basis(symbolic("Z2", 1), 2) == []


def test_radical_empty_for_nonnegative_kappa():
    rs = build_root_system("B", 2)
    ctx = DunklContext(rs, MultiplicitySpec.rational(rs, [Fraction(1, 2), Fraction(0)]))
    assert all(not radical_basis(ctx, n) for n in range(5))


# type A -------------------------------------------------------------------

def test_rank_function_and_orders():
    assert jack.rank_function((5, 1, 4)) == (1, 3, 2)
    assert jack.rank_function((0, 2, 1)) == (3, 1, 2)
    assert jack.dominance_compare((5, 1, 4), (1, 5, 4))["jack"] == "greater"
    assert jack.dominance_compare((1, 5, 4), (6, 2, 2))["jack"] == "incomparable"
    assert jack.dominance_compare((2, 0, 1), (2, 0, 1)) == {"dominance": "equal", "jack": "equal"}


def test_cherednik_on_low_degrees():
    ctx = jack.type_a_context(3)
    one = Polynomial.one(3)
    for i in range(3):
        assert jack.cherednik_apply(ctx, i, one) == one.scale(k.scale(3 - (i + 1)) + 1)
    c2 = jack.type_a_context(2)
    # diagonal entry xi_1((1,0)) = k + 2; the x2 term is the triangular tail
    u = jack.cherednik_apply(c2, 0, P("x1", 2))
    assert u.coefficient((1, 0)) == k + 2
    assert u == P("(k0+2)*x1 + k0*x2", 2)


def test_spectral_vectors_and_hooks():
    assert tuple(jack.spectral_vector((0, 0, 0))) == (k.scale(2) + 1, k + 1, Scalar.of(1))
    assert tuple(jack.spectral_vector((0, 2, 1))) == (Scalar.of(1), k.scale(2) + 3, k + 2)
    assert tuple(jack.spectral_vector((1, 0))) == (k + 2, Scalar.of(1))
    assert jack.hook_product((2, 0), t) == t * (t + 1)
    assert jack.hook_product((1, 1), t) == t * (t + k)


def test_small_zetas():
    c2 = jack.type_a_context(2)
    assert jack.zeta(c2, (0, 0)).poly == Polynomial.one(2)
    assert jack.zeta(c2, (0, 1)).poly == P("x2", 2)
    assert jack.zeta_norm_closed((0, 1)) == k + 1
    assert jack.zeta_eval_ones((0, 1)) == Scalar.of(1)
    for alpha in [(0, 1), (1, 1)]:
        assert jack.d_m_zeta_check(c2, alpha)["ok"]
    sym, _ = jack.symmetric_jack(c2, (1, 0))
    assert sym == P("x1+x2", 2)
    sym, _ = jack.symmetric_jack(jack.type_a_context(3), (1, 1, 1))
    assert sym == P("x1*x2*x3", 3)


# planar harmonics ---------------------------------------------------------

def test_classical_low_degrees():
    assert classical_poly("gegenbauer", 1, "k0").coeffs == [Scalar.of(0), k.scale(2)]
    a, b = Fraction(1, 3), Fraction(5, 2)
    # P_1^(a,b)(t) = (a+1) + (a+b+2)(t-1)/2
    c = classical_poly("jacobi", 1, a, b).coeffs
    assert c == [Scalar.of((a - b) / 2), Scalar.of((a + b + 2) / 2)]
    assert classical_poly("laguerre", 0, Fraction(1, 2)).coeffs == [Scalar.of(1)]


def test_z2_circle_harmonics():
    p0, p1 = z2_harmonics(1)
    assert p0 == P("2*k0*x1", 2) and p1 == P("x2", 2)
    for n in range(1, 6):
        q0, q1 = z2_harmonics(n, normalized=True)
        re, im = z_power(n)
        assert q0.at_params((0,)) == re
        assert q1.at_params((0,)).scale(n) == im


def test_z2z2_low_degrees():
    assert z2z2_harmonics(2)["11"] == P("2*x1*x2", 2)
    fam = z2z2_harmonics(1)
    assert fam["10"] == P("x1", 2) and fam["01"] == P("x2", 2)


# numeric ------------------------------------------------------------------

def test_kernel_at_zero_and_trivial_constant():
    ctx = float_context(build_root_system("B", 2), [0.5, 1.0])
    r = kernel_partial_sum(ctx, [0.3, -0.4], [0.0, 0.0])
    assert r.value == 1.0 and r.tail_bound == 0.0
    rec = mm_constant(symbolic("A", 2))
    assert mm_constant_eval(rec, (0.0,)) == pytest.approx(1.0, abs=1e-15)


def test_pure_gaussian_is_fixed():
    rep = z2_transform_eigencheck(0.5, 0, 0, tol=1e-8)
    assert rep.ok


def test_full_verification_run(capsys):
    assert main(["verify", "--suite", "all", "--seed", "0"]) == 0
    capsys.readouterr()
