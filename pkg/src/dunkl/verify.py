"""Named verification suites AC1..AC14.

Every randomised suite derives its cases from the run seed through
``derive_seed(seed, name)``: the first 8 bytes of SHA-256("<seed>:<name>"),
fed to ``random.Random`` (Mersenne Twister) for exact cases and to
``numpy.random.default_rng`` (PCG64) for float sample points.  Both generators
are specified bit-for-bit, so a failing case reproduces on any machine.
"""
import hashlib
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from .calculus.context import DunklContext, MultiplicitySpec
from .calculus.forms import exp_laplacian, gaussian_form, gram_matrix, kappa_form
from .calculus.harmonic import harmonic_expansion, harmonic_reconstruct
from .calculus.intertwining import block_apply, kernel_poly, poisson_kernel_poly, radical_basis, v0_apply, v_apply
from .calculus.mehta import discriminant_norm_computed, mm_constant, mm_discriminant_norm
from .calculus.operators import dunkl_apply, laplacian_apply, laplacian_sum_of_squares, multiply_linear
from .errors import DunklError
from .harmonics2d import classical_poly
from .poly import Polynomial, apply_group_element, monomial_basis
from .roots import build_root_system, degrees_and_checks
from .scalar import ONE, Scalar, pochhammer


# ---------------------------------------------------------------- reports

@dataclass
class Failure:
    case: str
    expected: str
    got: str

    def to_json(self):
        return {"case": self.case, "expected": self.expected, "got": self.got}


@dataclass
class SuiteReport:
    name: str
    title: str
    seed: int
    cases: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.failures

    def check(self, case, ok, expected="", got=""):
        self.cases += 1
        if not ok:
            self.failures.append(Failure(case, str(expected), str(got)))
        return ok

    def to_json(self):
        return {
            "suite": self.name,
            "title": self.title,
            "seed": self.seed,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
            "wall_time": round(self.wall_time, 3),
            "ok": self.ok,
            "notes": self.notes,
        }

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name} {status} {self.title}: {self.cases} cases, {len(self.failures)} failures, {self.wall_time:.1f}s"


def derive_seed(seed, name):
    h = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return int.from_bytes(h[:8], "big")


# ---------------------------------------------------------------- generators

def random_poly(rng, d, max_deg, terms=3, homogeneous=None):
    """A few terms with small rational coefficients; ``homogeneous`` fixes the degree."""
    out = {}
    for _ in range(terms):
        n = homogeneous if homogeneous is not None else rng.randint(0, max_deg)
        e = [0] * d
        for _ in range(n):
            e[rng.randrange(d)] += 1
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        out[tuple(e)] = Fraction(num, rng.randint(1, 3))
    return Polynomial(d, {e: Scalar.of(c) for e, c in out.items()})


def _rational_vector(rng, d):
    return tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(d))


def symbolic_context(tag, n=None):
    """Symbolic context with one symbol per class; Z2^3 fixes its third class to 1/3."""
    rs = build_root_system(tag, n)
    if rs.num_classes > 2:
        mult = MultiplicitySpec.symbolic(rs, params=[0, 1], extra=[Fraction(1, 3)] * (rs.num_classes - 2))
    else:
        mult = MultiplicitySpec.symbolic(rs)
    return DunklContext(rs, mult)


OPERATOR_GROUPS = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 4), ("Z2", 3), ("G2", None)]


# ---------------------------------------------------------------- AC1, AC2

def _ac1(rep, rng, nrng, quick):
    count = 8 if quick else 20
    for tag, n in OPERATOR_GROUPS:
        ctx = symbolic_context(tag, n)
        d = ctx.dim
        for k in range(count):
            p = random_poly(rng, d, 5)
            for i in range(d):
                Di = dunkl_apply(ctx, i, p)
                for j in range(i + 1, d):
                    lhs = dunkl_apply(ctx, i, dunkl_apply(ctx, j, p))
                    rhs = dunkl_apply(ctx, j, Di)
                    rep.check(f"{ctx.rs.name} p#{k} [D{i + 1},D{j + 1}] p={p.format()}", lhs == rhs, rhs.format(), lhs.format())


def _ac2(rep, rng, nrng, quick):
    count = 8 if quick else 20
    for tag, n in OPERATOR_GROUPS:
        ctx = symbolic_context(tag, n)
        d = ctx.dim
        for k in range(count):
            p = random_poly(rng, d, 5)
            lap = laplacian_apply(ctx, p)
            sos = laplacian_sum_of_squares(ctx, p)
            rep.check(f"{ctx.rs.name} p#{k} Delta = sum D_i^2", lap == sos, sos.format(), lap.format())
            t = _rational_vector(rng, d)
            lhs = laplacian_apply(ctx, multiply_linear(p, t)) - multiply_linear(lap, t)
            rhs = dunkl_apply(ctx, t, p).scale(2)
            rep.check(f"{ctx.rs.name} p#{k} [Delta, m_t] = 2 D_t, t={t}", lhs == rhs, rhs.format(), lhs.format())


# ---------------------------------------------------------------- AC3

FORM_GROUPS = [("A", 2), ("B", 2), ("B", 3), ("Z2", 3), ("G2", None)]


def _ac3(rep, rng, nrng, quick):
    max_deg = 4 if quick else 6
    for tag, n in FORM_GROUPS:
        ctx = symbolic_context(tag, n)
        d = ctx.dim
        gens = ctx.rs.simple_reflections()
        for deg in range(max_deg + 1):
            p = random_poly(rng, d, deg, homogeneous=deg)
            q = random_poly(rng, d, deg, homogeneous=deg)
            pq = kappa_form(ctx, p, q)
            qp = kappa_form(ctx, q, p)
            name = ctx.rs.name
            rep.check(f"{name} deg {deg} symmetry", pq == qp, qp, pq)
            for s in gens:
                wp, wq = apply_group_element(s, p), apply_group_element(s, q)
                v = kappa_form(ctx, wp, wq)
                rep.check(f"{name} deg {deg} invariance under a simple reflection", v == pq, pq, v)
            if deg >= 1:
                r = random_poly(rng, d, deg - 1, homogeneous=deg - 1)
                i = rng.randrange(d)
                lhs = kappa_form(ctx, r.multiply_variable(i), q)
                rhs = kappa_form(ctx, r, dunkl_apply(ctx, i, q))
                rep.check(f"{name} deg {deg} <x_{i + 1} r, q> = <r, D_{i + 1} q>", lhs == rhs, rhs, lhs)
                v = kappa_form(ctx, r, q)
                rep.check(f"{name} degrees {deg - 1} vs {deg} orthogonal", not v, 0, v)


# ---------------------------------------------------------------- AC4

def _ac4(rep, rng, nrng, quick):
    from .numeric.mehta import mm_constant_eval, mm_integral_quadrature

    cases = [
        ("A2", DunklContext(build_root_system("A", 2), MultiplicitySpec.symbolic(build_root_system("A", 2)))),
    ]
    b2 = build_root_system("B", 2)
    cases.append(("B2 tied", DunklContext(b2, MultiplicitySpec.symbolic(b2, params=[0, 0]))))
    i24 = build_root_system("I2", 4)
    cases.append(("I2(4) tied", DunklContext(i24, MultiplicitySpec.symbolic(i24, params=[0, 0]))))
    for name, ctx in cases:
        closed = mm_discriminant_norm(ctx)
        computed = discriminant_norm_computed(ctx)
        rep.check(f"{name} <a_R, a_R> = #G prod prod (j + n_i k)", closed == computed, closed, computed)
    # two-class B2 display against quadrature
    sym = DunklContext(b2, MultiplicitySpec.symbolic(b2))
    rec = mm_constant(sym, "B")
    for k0, k1 in [(0.5, 0.5), (0.3, 1.2), (1.0, 0.25), (2.0, 0.7)]:
        val = mm_constant_eval(rec, (k0, k1))
        # class 0 of B2 is the long roots
        ctx = DunklContext(b2, MultiplicitySpec.numeric(b2, [k0, k1]))
        quad = mm_integral_quadrature(ctx)
        err = abs(val - quad) / abs(quad)
        rep.check(f"B2 display vs quadrature at k0={k0}, k1={k1}", err < 1e-8, quad, f"{val} (rel err {err:.2e})")
    rec = mm_constant(DunklContext(i24, MultiplicitySpec.symbolic(i24)), "I2")
    for k0, k1 in [(0.5, 0.5), (0.3, 1.2)]:
        val = mm_constant_eval(rec, (k0, k1))
        quad = mm_integral_quadrature(DunklContext(i24, MultiplicitySpec.numeric(i24, [k0, k1])))
        err = abs(val - quad) / abs(quad)
        rep.check(f"I2(4) display vs quadrature at k0={k0}, k1={k1}", err < 1e-8, quad, f"{val} (rel err {err:.2e})")


# ---------------------------------------------------------------- AC5, AC6

def _ac5(rep, rng, nrng, quick):
    from . import jack

    d = 3
    ctx = jack.type_a_context(d)
    k = Scalar.param(0)
    top = 3 if quick else 4
    comps = [a for n in range(top + 1) for a in jack.compositions(d, n)]
    rep.notes["compositions"] = len(comps)
    Z = {a: jack.zeta(ctx, a, check_paths=False) for a in comps}
    for a, z in Z.items():
        for i in range(d):
            lhs = jack.cherednik_apply(ctx, i, z.poly)
            rhs = z.poly.scale(z.xi[i])
            rep.check(f"U_{i + 1} zeta_{a} = xi_{i + 1} zeta_{a}", lhs == rhs, rhs.format(), lhs.format())
        ones = z.poly.value_at((1,) * d)
        rep.check(f"zeta_{a}(1,1,1)", ones == z.eval_ones, z.eval_ones, ones)
    for n in range(top + 1):
        group = [a for a in comps if sum(a) == n]
        G = gram_matrix(ctx, n)
        basis = monomial_basis(d, n)
        vecs = {a: [Z[a].poly.terms.get(e) for e in basis] for a in group}
        for x, a in enumerate(group):
            for b in group[x:]:
                val = _bilinear(G, vecs[a], vecs[b])
                want = Z[a].norm if a == b else Scalar.of(0)
                rep.check(f"<zeta_{a}, zeta_{b}>", val == want, want, val)
    for a in comps:
        xi = Z[a].xi
        for i in range(d - 1):
            if a[i] < a[i + 1]:
                b = list(a)
                b[i], b[i + 1] = b[i + 1], b[i]
                b = tuple(b)
                if b not in Z:
                    continue
                c = k / (xi[i] - xi[i + 1])
                lhs = jack.swap_vars(Z[a].poly, i, i + 1) - Z[a].poly.scale(c)
                rep.check(f"exchange zeta_{b} from zeta_{a}", lhs == Z[b].poly, Z[b].poly.format(), lhs.format())
        up = a[1:] + (a[0] + 1,)
        if up in Z:
            lhs = jack.theta_inverse(Z[a].poly).multiply_variable(d - 1)
            rep.check(f"raising zeta_{up} from zeta_{a}", lhs == Z[up].poly, Z[up].poly.format(), lhs.format())


def _bilinear(G, u, v):
    total = Scalar.of(0)
    for i, a in enumerate(u):
        if not a:
            continue
        row = G[i]
        for j, b in enumerate(v):
            if b and row[j]:
                total = total + a * row[j] * b
    return total


def _ac6(rep, rng, nrng, quick):
    from . import jack

    ctx = jack.type_a_context(3)
    top = 3 if quick else 4
    for n in range(top + 1):
        for a in jack.compositions(3, n):
            rep.check(f"h(alpha, k+1) zeta_{a} has coefficients in Q>=0[k]", jack.knop_sahi_check(ctx, a), True, False)


# ---------------------------------------------------------------- AC7

def _ac7(rep, rng, nrng, quick):
    count = 3 if quick else 6
    for tag, n in [("Z2", 2), ("B", 3)]:
        ctx = symbolic_context(tag, n)
        d = ctx.dim
        for deg in range(6):
            for k in range(count):
                p = random_poly(rng, d, deg, terms=4, homogeneous=deg)
                pieces = harmonic_expansion(ctx, p)
                back = harmonic_reconstruct(ctx, pieces)
                rep.check(f"{ctx.rs.name} deg {deg} #{k} reconstruction", back == p, p.format(), back.format())
                for j, h in pieces:
                    lap = laplacian_apply(ctx, h)
                    rep.check(f"{ctx.rs.name} deg {deg} #{k} Delta pi_(n-2j) j={j}", not lap, 0, lap.format())


# ---------------------------------------------------------------- AC8

def _ac8(rep, rng, nrng, quick):
    ctx = symbolic_context("Z2", 1)
    k = Scalar.param(0)
    h = Fraction(1, 2)
    x = Polynomial.variable(1, 0)
    top = 8
    for n in range(top + 1):
        m, odd = divmod(n, 2)
        xn = x ** n
        if odd:
            form = pochhammer(k + h, m + 1).scale(2 ** n * factorial(m))
            v0 = pochhammer(k + h, m + 1) / Scalar.of(pochhammer(Scalar.of(h), m + 1))
        else:
            form = pochhammer(k + h, m).scale(2 ** n * factorial(m))
            v0 = pochhammer(k + h, m) / Scalar.of(pochhammer(Scalar.of(h), m))
        got = kappa_form(ctx, xn, xn)
        rep.check(f"<x^{n}, x^{n}>", got == form, form, got)
        got = v0_apply(ctx, xn)
        rep.check(f"V0 x^{n}", got == xn.scale(v0), xn.scale(v0).format(), got.format())
        # exp(-Delta/2) x^n = (-1)^m m! 2^m x^odd L_m^(k -+ 1/2)(x^2/2)
        alpha = k + (h if odd else -h)
        L = classical_poly("laguerre", m, alpha).coeffs
        want = Polynomial.zero(1)
        for j, c in enumerate(L):
            want = want + (x ** (2 * j)).scale(c * Scalar.of(Fraction(1, 2 ** j)))
        want = (want * x ** odd).scale(Scalar.of((-1) ** m * factorial(m) * 2 ** m))
        got = exp_laplacian(ctx, Scalar.of(Fraction(-1, 2)), xn)
        rep.check(f"exp(-Delta/2) x^{n}", got == want, want.format(), got.format())
        # kernel coefficient: x^n y^n / (2^{2m} m! (k+1/2)_m) or x y (...)/(1+2k)
        if odd:
            coef = ONE / (pochhammer(k + Fraction(3, 2), m).scale(factorial(m) * 4 ** m) * (k.scale(2) + 1))
        else:
            coef = ONE / pochhammer(k + h, m).scale(factorial(m) * 4 ** m)
        want = Polynomial(2, {(n, n): coef})
        got = kernel_poly(ctx, n)
        rep.check(f"K_{n}(x, y)", got == want, want.format(), got.format())
    # radicals on the singular set
    for kap, n_rad in [(Fraction(-1, 2), 0), (Fraction(-3, 2), 1)]:
        rs = ctx.rs
        c = DunklContext(rs, MultiplicitySpec.rational(rs, [kap]))
        for deg in range(0, 7):
            rad = radical_basis(c, deg)
            expect = deg >= 2 * n_rad + 1
            ok = (len(rad) == 1 and rad[0].terms.keys() == {(deg,)}) if expect else not rad
            rep.check(f"Rad at k={kap} in degree {deg}", ok, "{x^%d}" % deg if expect else "{}", [p.format() for p in rad])


# ---------------------------------------------------------------- AC9

def _ac9(rep, rng, nrng, quick):
    from .numeric.dihedral import gram_report, harmonicity_residual

    cases = [(3, Fraction(7, 10)), (5, Fraction(7, 10)), (4, (Fraction(2, 5), Fraction(9, 10))), (6, (Fraction(2, 5), Fraction(9, 10)))]
    for m, kap in cases:
        res = harmonicity_residual(m, kap, 6, points=50, seed=int(nrng.integers(2 ** 31)))
        rep.check(f"I2({m}) harmonicity residual", res < 1e-10, "< 1e-10", f"{res:.2e}")
        g = gram_report(m, kap, 6)
        rep.check(f"I2({m}) Gram off-diagonal", g["max_offdiagonal"] < 1e-10, "< 1e-10", f"{g['max_offdiagonal']:.2e}")
        rep.check(f"I2({m}) norms vs closed forms", g["max_norm_error"] < 1e-8, "< 1e-8", f"{g['max_norm_error']:.2e}")
        rep.notes[f"I2({m})"] = g
    # the printed Jacobi display against direct quadrature of P_n^(a,b)(cos 2t)^2
    from .harmonics2d import classical_poly as _cp, jacobi_norm_display
    from .numeric.quadrature import circle_integral

    ratios = []
    for n, a, b in [(0, -0.1, 0.4), (2, -0.1, 0.4), (3, 0.9, 0.4)]:
        P = _cp("jacobi", n, Fraction(a).limit_denominator(100), Fraction(b).limit_denominator(100))
        f = lambda t, P=P: np.array([float(P.evaluate(float(np.cos(2 * s)))) ** 2 for s in t])
        q = circle_integral(f, [(0.0, 2 * a + 1), (np.pi / 2, 2 * b + 1)], 64)
        ratios.append(q / jacobi_norm_display(n, a, b))
    rep.notes["quadrature / printed Jacobi display"] = ratios


# ---------------------------------------------------------------- AC10

def _ac10(rep, rng, nrng, quick):
    from .numeric.kernel import float_context, float_kernel, kernel_sums, tail_bound, terms_needed

    points = 30 if quick else 100
    for tag, n in [("Z2", 1), ("A", 2), ("B", 2)]:
        rs = build_root_system(tag, n)
        for kap in (0.25, 1.0, 2.5):
            ctx = float_context(rs, [kap] * rs.num_classes)
            fk = float_kernel(ctx)
            d = ctx.dim
            X = nrng.uniform(-1, 1, size=(points, d))
            Y = nrng.uniform(-1, 1, size=(points, d))
            rhos = np.array([fk.rho(x, y) for x, y in zip(X, Y)])
            vals = fk.degree_values(X, Y, 12)
            worst = 0.0
            for deg in range(13):
                bound = rhos ** deg / factorial(deg)
                worst = max(worst, float(np.max(np.abs(vals[deg]) - bound * (1 + 1e-12) - 1e-15)))
            rep.check(f"{rs.name} k={kap} |K_n| <= rho^n/n!, n <= 12", worst <= 0, "<= 0", f"max excess {worst:.2e}")
            N = terms_needed(float(rhos.max()), 1e-13)
            tb = tail_bound(float(rhos.max()), N)
            K = kernel_sums(ctx, X, Y, N)
            rep.check(f"{rs.name} k={kap} K(x,y) > 0", bool(np.all(K > tb)), "> 0", f"min {K.min():.3e}")
            Ki = np.abs(kernel_sums(ctx, X, Y, N, imaginary=True))
            rep.check(f"{rs.name} k={kap} |K(x,iy)| <= 1", bool(np.all(Ki <= 1 + tb + 1e-12)), "<= 1", f"max {Ki.max():.15f}")


# ---------------------------------------------------------------- AC11, AC12

def _ac11(rep, rng, nrng, quick):
    from .numeric.transform import z2_transform_eigencheck

    for n in (0, 1):
        for m in range(0, (6 - n) // 2 + 1):
            try:
                r = z2_transform_eigencheck(1.0, n, m, ys=(0.5, 1.0, 2.0), tol=1e-6)
                worst = max(err for *_, err in r.points)
                rep.check(f"n={n}, m={m}: F f = (-i)^(n+2m) f", r.ok, "<= 1e-6", f"{worst:.2e}")
            except DunklError as e:
                rep.check(f"n={n}, m={m}: F f = (-i)^(n+2m) f", False, "<= 1e-6", str(e))


def _ac12(rep, rng, nrng, quick):
    from .numeric.kernel import classical_heat_kernel, float_context, heat_kernel_eval, heat_normalization

    z2 = build_root_system("Z2", 1)
    ctx = float_context(z2, [0.5])
    for t in (0.25, 1.0):
        for x in (0.0, 1.0):
            v = heat_normalization(ctx, t, [x])
            rep.check(f"Z2 k=0.5 t={t} x={x}: int Gamma w = 1", abs(v - 1) < 1e-6, 1, v)
    for tag, n in [("Z2", 1), ("B", 2)]:
        rs = build_root_system(tag, n)
        c0 = float_context(rs, [0.0] * rs.num_classes)
        for _ in range(5):
            t = float(nrng.uniform(0.2, 2.0))
            x = nrng.uniform(-1, 1, size=rs.dim)
            y = nrng.uniform(-1, 1, size=rs.dim)
            a = heat_kernel_eval(c0, t, x, y, tol=1e-15)
            b = classical_heat_kernel(t, x, y)
            rep.check(f"{rs.name} k=0 heat kernel at t={t:.3f}", abs(a - b) <= 1e-12 * max(1.0, abs(b)), b, a)


# ---------------------------------------------------------------- AC13

def gegenbauer_side(ctx, n):
    """V^(x) of ((n+a)/a) C_n^a(<x, y/|y|>) |y|^n, a = gamma + d/2 - 1, in 2d variables.

    C_n^a(t)|y|^n = sum_k c_k <x,y>^k |y|^{n-k}; homogenising each x-degree
    piece by |x|^{n-k} restricts the identity to |x| = 1.
    """
    d = ctx.dim
    a = ctx.gamma + Fraction(d - 2, 2)
    xy = Polynomial(2 * d, {tuple(1 if j in (i, d + i) else 0 for j in range(2 * d)): ONE for i in range(d)})
    from .calculus.intertwining import double_norms

    nx, ny = double_norms(d)
    if a.is_constant() and not a:
        coeffs = [c.scale(2) for c in classical_poly("chebyshevT", n).coeffs]
    else:
        lead = (a + n) / a
        coeffs = [c * lead for c in classical_poly("gegenbauer", n, a).coeffs]
    out = Polynomial.zero(2 * d)
    for kdeg, c in enumerate(coeffs):
        if not c:
            continue
        j = (n - kdeg) // 2
        piece = block_apply(ctx, (xy ** kdeg * ny ** j).scale(c), lambda q: v_apply(ctx, q), "x")
        out = out + piece * nx ** j
    return out


def _ac13(rep, rng, nrng, quick):
    rs = build_root_system("I2", 1)
    ctx = DunklContext(rs, MultiplicitySpec.symbolic(rs))
    for n in range(5):
        lhs = gegenbauer_side(ctx, n)
        rhs = poisson_kernel_poly(ctx, n)
        rep.check(f"Z2 on R^2, n={n}: V^(x) Gegenbauer side = P_n on |x| = 1", lhs == rhs, rhs.format(), lhs.format())


# ---------------------------------------------------------------- AC14

CENSUS = {
    ("A", 1): [2], ("A", 2): [2, 3], ("A", 3): [2, 3, 4], ("A", 4): [2, 3, 4, 5],
    ("B", 2): [2, 4], ("B", 3): [2, 4, 6], ("B", 4): [2, 4, 6, 8],
    ("D", 4): [2, 4, 4, 6], ("G2", None): [2, 6], ("F4", None): [2, 6, 8, 12],
}


def _ac14(rep, rng, nrng, quick):
    from math import prod

    for (tag, n), degs in CENSUS.items():
        rs = build_root_system(tag, n)
        info = degrees_and_checks(rs)
        name = rs.name
        rep.check(f"{name} degrees", sorted(info["degrees"]) == degs, degs, info["degrees"])
        rep.check(f"{name} |W| = prod n_i", info.get("order") == prod(degs), prod(degs), info.get("order"))
        want = sum(x - 1 for x in degs)
        rep.check(f"{name} #reflections = sum (n_i - 1)", info.get("num_reflections") == want, want, info.get("num_reflections"))
        rep.check(f"{name} degrees of the enumerated group", info.get("degrees_from_group") == degs, degs, info.get("degrees_from_group"))


# ---------------------------------------------------------------- registry

SUITES = {
    "AC1": ("commutativity", "[D_i, D_j] = 0", _ac1),
    "AC2": ("laplacian", "Delta = sum D_i^2 and [Delta, m_t] = 2 D_t", _ac2),
    "AC3": ("forms", "kappa-form symmetry, invariance, adjointness, orthogonality", _ac3),
    "AC4": ("mehta", "discriminant norm and Gamma-product constants", _ac4),
    "AC5": ("jack", "nonsymmetric Jack eigenvalues, norms, evaluations, recursions", _ac5),
    "AC6": ("knop-sahi", "positivity of h(alpha, k+1) zeta_alpha", _ac6),
    "AC7": ("harmonic", "harmonic decomposition", _ac7),
    "AC8": ("z2", "one-variable closed forms", _ac8),
    "AC9": ("dihedral", "dihedral harmonic bases on the circle", _ac9),
    "AC10": ("kernel", "kernel bound and positivity", _ac10),
    "AC11": ("transform", "transform eigenfunctions", _ac11),
    "AC12": ("heat", "heat kernel normalisation and kappa = 0 reduction", _ac12),
    "AC13": ("poisson", "Poisson kernel and Gegenbauer restriction", _ac13),
    "AC14": ("census", "group orders and reflection counts from degrees", _ac14),
}

ALIASES = {alias: key for key, (alias, _, _) in SUITES.items()}


def suite_names():
    return list(SUITES) + list(ALIASES) + ["all"]


def resolve(name):
    key = name.upper() if name.upper() in SUITES else ALIASES.get(name.lower())
    if key is None:
        raise KeyError(name)
    return key


def run_suite(name, seed=0, quick=False):
    key = resolve(name)
    alias, title, fn = SUITES[key]
    s = derive_seed(seed, key)
    rep = SuiteReport(key, title, seed)
    t0 = time.perf_counter()
    try:
        fn(rep, random.Random(s), np.random.default_rng(s), quick)
    except DunklError as e:
        rep.check("suite raised", False, "no error", f"{type(e).__name__}: {e}")
    rep.wall_time = time.perf_counter() - t0
    return rep


def run_all(seed=0, quick=False):
    return [run_suite(k, seed, quick) for k in SUITES]
