"""Explicit h-harmonic bases on R^2.

Covers the one-parameter group Z2 = {1, reflection in x2 = 0}, the
two-parameter group Z2 x Z2 and the dihedral groups.  Every polynomial is
exact: trigonometric expressions are converted through
r^k cos^a(theta) sin^b(theta) = x1^a x2^b r^(k-a-b), and z^m has integer
coefficients, so no radicals appear.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gamma

from .errors import RecurrencePole, UnknownType, ZeroDenominator
from .poly import Polynomial
from .scalar import ONE, ZERO, Scalar, pochhammer

FAMILIES = ("gegenbauer", "jacobi", "chebyshevT", "laguerre")


def _s(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return Scalar.parse(x)
    return Scalar.of(Fraction(x))


@dataclass
class ClassicalPoly:
    """Dense coefficient list in the argument t (index = power)."""

    family: str
    degree: int
    params: tuple
    coeffs: list

    def __call__(self, t):
        out = 0
        for c in reversed(self.coeffs):
            out = out * t + (c.constant_value() if c.is_constant() else c)
        return out

    def evaluate(self, t, params=None):
        out = 0.0
        for c in reversed(self.coeffs):
            v = c.constant_value() if c.is_constant() else c.evaluate(params)
            out = out * t + float(v)
        return out

    def leading(self):
        return self.coeffs[-1]

    def format(self):
        return " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if c) or "0"


def _add(a, b):
    n = max(len(a), len(b))
    a = a + [ZERO] * (n - len(a))
    b = b + [ZERO] * (n - len(b))
    return [x + y for x, y in zip(a, b)]


def _mul_scalar(a, c):
    return [x * c for x in a]


def _mul_t(a):
    return [ZERO] + a


def _trim(a):
    while len(a) > 1 and not a[-1]:
        a = a[:-1]
    return a


def _nonzero(den, family, n):
    if den.is_constant() and not den:
        raise RecurrencePole(f"{family} recurrence divides by zero at degree {n}", degree=n)
    return den


def classical_poly(family, n, *params):
    """Gegenbauer C_n^lam, Jacobi P_n^(a,b), Chebyshev T_n or Laguerre L_n^(a)
    from their three-term recurrences."""
    if family not in FAMILIES:
        raise UnknownType(f"unknown classical family {family!r}")
    ps = tuple(_s(p) for p in params)
    prev, cur = [ONE], None
    if family == "chebyshevT":
        cur = [ZERO, ONE]
        step = lambda k, p1, p2: _add(_mul_scalar(_mul_t(p1), Scalar.of(2)), _mul_scalar(p2, Scalar.of(-1)))
    elif family == "gegenbauer":
        (lam,) = ps
        cur = [ZERO, lam.scale(2)]

        def step(k, p1, p2):
            a = _mul_scalar(_mul_t(p1), (lam + (k - 1)).scale(Fraction(2, k)))
            b = _mul_scalar(p2, (lam.scale(2) + (k - 2)).scale(Fraction(-1, k)))
            return _add(a, b)
    elif family == "laguerre":
        (al,) = ps
        cur = [al + 1, Scalar.of(-1)]

        def step(k, p1, p2):
            a = _add(_mul_scalar(p1, al + (2 * k - 1)), _mul_scalar(_mul_t(p1), Scalar.of(-1)))
            b = _mul_scalar(p2, -(al + (k - 1)))
            return _mul_scalar(_add(a, b), Scalar.of(Fraction(1, k)))
    else:
        a, b = ps
        cur = [(a - b) / 2, (a + b + 2) / 2]

        def step(k, p1, p2):
            s = a + b
            c0 = _nonzero((s + k).scale(2 * k) * (s + (2 * k - 2)), "jacobi", k)
            c1 = s + (2 * k - 1)
            lin = [(a * a - b * b) * c1, (s + 2 * k) * (s + (2 * k - 2)) * c1]
            top = _poly_mul(lin, p1)
            low = _mul_scalar(p2, (a + (k - 1)).scale(-2) * (b + (k - 1)) * (s + 2 * k))
            return _mul_scalar(_add(top, low), Scalar.of(1) / c0)

    if n == 0:
        coeffs = prev
    else:
        for k in range(2, n + 1):
            prev, cur = cur, _trim(step(k, cur, prev))
        coeffs = _trim(cur)
    return ClassicalPoly(family, n, ps, coeffs)


def _poly_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def jacobi_explicit(n, a, b):
    """sum_s binom(n+a, n-s) binom(n+b, s) ((t-1)/2)^s ((t+1)/2)^(n-s) (second route)."""
    a, b = _s(a), _s(b)

    def binom(top, k):
        out = ONE
        for i in range(k):
            out = out * (top - i)
        return out.scale(Fraction(1, factorial(k)))

    tm = [Scalar.of(Fraction(-1, 2)), Scalar.of(Fraction(1, 2))]
    tp = [Scalar.of(Fraction(1, 2)), Scalar.of(Fraction(1, 2))]
    total = [ZERO]
    for s in range(n + 1):
        term = [binom(a + n, n - s) * binom(b + n, s)]
        for _ in range(s):
            term = _poly_mul(term, tm)
        for _ in range(n - s):
            term = _poly_mul(term, tp)
        total = _add(total, term)
    return _trim(total)


# ---------------------------------------------------------------- Cartesian conversion

def _r2():
    return Polynomial.norm_squared(2)


def _x(i):
    return Polynomial.variable(2, i)


def _compose(coeffs, u, u_deg, total):
    """sum_k c_k u^k (x1^2+x2^2)^((total - k u_deg)/2), u homogeneous of degree u_deg."""
    out = Polynomial.zero(2)
    r2 = _r2()
    upow = Polynomial.one(2)
    for k, c in enumerate(coeffs):
        if k:
            upow = upow * u
        if not c:
            continue
        rest = total - k * u_deg
        if rest < 0 or rest % 2:
            raise ValueError("parity mismatch in the trigonometric expansion")
        out = out + (upow * r2 ** (rest // 2)).scale(c)
    return out


def z2_harmonics(n, kappa="k0", normalized=False):
    """(p_{n,0}, p_{n,1}) = (r^n C_n^k(cos t), r^n sin t C_{n-1}^{k+1}(cos t)).

    With ``normalized`` the Gegenbauer factors are divided by their value at 1,
    n!/(2k)_n C_n^k and (n-1)!/(2k+2)_{n-1} C_{n-1}^{k+1}.
    """
    k = _s(kappa)
    if n == 0:
        return Polynomial.one(2), Polynomial.zero(2)
    c0 = classical_poly("gegenbauer", n, k).coeffs
    c1 = classical_poly("gegenbauer", n - 1, k + 1).coeffs
    if normalized:
        f0 = Scalar.of(factorial(n)) / pochhammer(k.scale(2), n)
        f1 = Scalar.of(factorial(n - 1)) / pochhammer(k.scale(2) + 2, n - 1)
        c0 = [c * f0 for c in c0]
        c1 = [c * f1 for c in c1]
    p0 = _compose(c0, _x(0), 1, n)
    p1 = _compose(c1, _x(0), 1, n - 1) * _x(1)
    return p0, p1


def z2_norm_closed(n, parity, kappa="k0"):
    """a_k-normalised circle norms: k (2k)_n/((n+k) n!) and (k+1/2)(2k+2)_{n-1}/((n+k)(n-1)!)."""
    k = _s(kappa)
    if parity == 0:
        return (k * pochhammer(k.scale(2), n)) / (k + n).scale(factorial(n))
    return ((k + Fraction(1, 2)) * pochhammer(k.scale(2) + 2, n - 1)) / (k + n).scale(factorial(n - 1))


def z2z2_harmonics(n, kappa1="k0", kappa2="k1"):
    """The two degree-n members of the four Jacobi families, keyed by parity tag.

    kappa1 goes with the reflection x1 -> -x1, kappa2 with x2 -> -x2.
    """
    k1, k2 = _s(kappa1), _s(kappa2)
    h = Fraction(1, 2)
    if n == 0:
        return {"00": Polynomial.one(2)}
    u = _x(0) * _x(0) - _x(1) * _x(1)
    half = n // 2
    if n % 2 == 0:
        c00 = classical_poly("jacobi", half, k2 - h, k1 - h).coeffs
        c11 = classical_poly("jacobi", half - 1, k2 + h, k1 + h).coeffs
        return {
            "00": _compose(c00, u, 2, n),
            "11": _compose(c11, u, 2, n - 2) * (_x(0) * _x(1)).scale(Fraction(2)),
        }
    c10 = classical_poly("jacobi", half, k2 - h, k1 + h).coeffs
    c01 = classical_poly("jacobi", half, k2 + h, k1 - h).coeffs
    return {
        "10": _compose(c10, u, 2, n - 1) * _x(0),
        "01": _compose(c01, u, 2, n - 1) * _x(1),
    }


def jacobi_norm_display(n, a, b):
    """The printed Jacobi circle-norm display, constant 4 kept as printed (float)."""
    a, b = float(a), float(b)
    p = _poch_float
    return (
        4 * gamma(a + 1) * gamma(b + 1) / gamma(a + b + 2)
        * p(a + 1, n) * p(b + 1, n) * (a + b + n + 1)
        / (factorial(n) * p(a + b + 2, n) * (a + b + 2 * n + 1))
    )


def jacobi_norm_closed(n, a, b):
    """int_{-pi}^{pi} P_n^(a,b)(cos 2t)^2 |sin t|^(2a+1) |cos t|^(2b+1) dt (float).

    t -> cos 2t maps each quarter circle onto [-1, 1] with density 4^{-1} 2^{-a-b}
    (1-u)^a (1+u)^b, so the value is half the printed display.
    """
    return jacobi_norm_display(n, a, b) / 2


def _poch_float(t, n):
    out = 1.0
    for i in range(n):
        out *= t + i
    return out


def z2z2_norm_closed(n, tag, kappa1, kappa2):
    """Unnormalised circle norm of the degree-n member ``tag`` under |cos|^{2k1}|sin|^{2k2}."""
    k1, k2 = float(kappa1), float(kappa2)
    half = n // 2
    if n == 0:
        return jacobi_norm_closed(0, k2 - 0.5, k1 - 0.5)
    if tag == "00":
        return jacobi_norm_closed(half, k2 - 0.5, k1 - 0.5)
    if tag == "11":
        return 4 * jacobi_norm_closed(half - 1, k2 + 0.5, k1 + 0.5)
    if tag == "10":
        return jacobi_norm_closed(half, k2 - 0.5, k1 + 0.5)
    if tag == "01":
        return jacobi_norm_closed(half, k2 + 0.5, k1 - 0.5)
    raise ValueError(f"unknown parity tag {tag!r}")


# ---------------------------------------------------------------- dihedral groups

def z_power(j):
    """(Re z^j, Im z^j) as integer polynomials."""
    re, im = Polynomial.one(2), Polynomial.zero(2)
    x, y = _x(0), _x(1)
    for _ in range(j):
        re, im = re * x - im * y, re * y + im * x
    return re, im


def _sub_zm(p, m):
    """p(Re z^m, Im z^m)."""
    from .poly import substitute_polynomials

    re, im = z_power(m)
    return substitute_polynomials(p, [re, im])


@dataclass
class HarmonicFamily2D:
    group: str
    kappa: tuple
    entries: dict = field(default_factory=dict)  # (degree, tag) -> Polynomial
    norms: dict = field(default_factory=dict)  # (degree, tag) -> predicted norm (float) or None
    pair_norms: dict = field(default_factory=dict)  # degree -> predicted norm(re) + norm(im)

    def degree(self, n):
        return {t: p for (d, t), p in self.entries.items() if d == n}

    def to_json(self):
        return {
            "group": self.group,
            "kappa": [str(k) for k in self.kappa],
            "entries": [
                {"degree": d, "tag": t, "poly": p.to_json(), "text": p.format()}
                for (d, t), p in sorted(self.entries.items())
            ],
        }


def _combine(j, a, b):
    """z^j (a + i b) split into real and imaginary parts."""
    re, im = z_power(j)
    return re * a - im * b, re * b + im * a


def dihedral_harmonics(m, n_max, kappa):
    """Harmonic basis for the dihedral group of order 2m up to degree n_max.

    Odd m takes one multiplicity.  Even m = 2m' takes (kappa1, kappa2), where
    kappa1 belongs to the lines on which Re z^m' = 0 and kappa2 to those on
    which Im z^m' = 0; a single value is used for both classes.
    """
    if m < 1:
        raise UnknownType("dihedral groups need m >= 1")
    ks = kappa if isinstance(kappa, (tuple, list)) else (kappa,)
    ks = tuple(_s(k) for k in ks)
    fam = HarmonicFamily2D(group=f"I2({m})", kappa=ks)
    fam.entries[(0, "re")] = Polynomial.one(2)
    if m % 2:
        (k,) = ks[:1]
        for N in range(1, n_max + 1):
            n, j = divmod(N, m)
            p0, p1 = z2_harmonics(n, k)
            if j == 0:
                fam.entries[(N, "re")] = _sub_zm(p0, m)
                fam.entries[(N, "im")] = _sub_zm(p1, m)
                continue
            if k.is_constant() and not k:
                raise ZeroDenominator("the factor (n+2k)/(2k) is singular at k = 0", degree=N)
            a = _sub_zm(p0, m).scale((k.scale(2) + n) / k.scale(2))
            b = _sub_zm(p1, m)
            fam.entries[(N, "re")], fam.entries[(N, "im")] = _combine(j, a, b)
        return fam
    mp = m // 2
    k1, k2 = (ks[0], ks[1]) if len(ks) > 1 else (ks[0], ks[0])
    h = Fraction(1, 2)
    for N in range(1, n_max + 1):
        n, j = divmod(N, mp)
        a, b = _q(n, k1, k2, h)
        a, b = _sub_zm(a, mp), _sub_zm(b, mp)
        fam.entries[(N, "re")], fam.entries[(N, "im")] = _combine(j, a, b)
    return fam


def _q(n, k1, k2, h):
    """(Re q_n, Im q_n) in the Z2 x Z2 variables."""
    if n == 0:
        return Polynomial.one(2), Polynomial.zero(2)
    fam = z2z2_harmonics(n, k1, k2)
    if n % 2 == 0:
        return fam["00"], fam["11"].scale(Scalar.of(h))
    s = n // 2
    return fam["10"].scale(k2 + s + h), fam["01"].scale(k1 + s + h)


def dihedral_root_vectors(m):
    """Float positive roots (sin(pi j/m), -cos(pi j/m)), j = 1..m, with class labels.

    Odd m: one class.  Even m: class 0 for odd j (Re z^(m/2) = 0 on the line),
    class 1 for even j.
    """
    import math

    out = []
    for j in range(1, m + 1):
        v = (math.sin(math.pi * j / m), -math.cos(math.pi * j / m))
        cls = 0 if m % 2 else (0 if j % 2 else 1)
        out.append((v, cls))
    return out
