"""Macdonald-Mehta constants and the norm of the discriminant."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from ..errors import NotOneClass, UnknownType
from ..roots import alternating_polynomial, norm2
from ..scalar import Scalar
from .forms import kappa_form

HALF = Fraction(1, 2)


@dataclass
class GammaRecord:
    """prod base^exponent * prod Gamma(num) / prod Gamma(den); arguments are Scalars in k0, k1.

    Represents (2 pi)^{-d/2} int w_kappa(x) exp(-|x|^2/2) dx for the context's
    own roots, i.e. 1/c_kappa.
    """

    label: str
    powers: list = field(default_factory=list)  # [(Fraction base, Scalar exponent)]
    num: list = field(default_factory=list)
    den: list = field(default_factory=list)

    def __post_init__(self):
        merged = {}
        for b, e in self.powers:
            merged[b] = merged.get(b, Scalar.of(0)) + e
        self.powers = [(b, e) for b, e in sorted(merged.items()) if e and b != 1]
        num = list(self.num)
        den = []
        for a in self.den:
            if a in num:
                num.remove(a)
            else:
                den.append(a)
        self.num, self.den = num, den

    def describe(self):
        parts = [f"{b}^({e})" for b, e in self.powers if e]
        parts += [f"Gamma({a})" for a in self.num]
        s = " * ".join(parts) or "1"
        if self.den:
            s += " / (" + " * ".join(f"Gamma({a})" for a in self.den) + ")"
        return s

    def to_json(self):
        return {
            "label": self.label,
            "powers": [[str(b), str(e)] for b, e in self.powers],
            "gamma_num": [str(a) for a in self.num],
            "gamma_den": [str(a) for a in self.den],
            "text": self.describe(),
        }


def _single_value(ctx):
    vals = ctx.kappa.values
    if any(v != vals[0] for v in vals):
        raise NotOneClass(
            f"{ctx.rs.name} carries distinct multiplicities on its reflection classes",
            classes=ctx.rs.num_classes,
        )
    return vals[0]


def mm_discriminant_norm(ctx):
    """#G prod_i prod_{j=1}^{n_i-1} (j + n_i kappa0) for constant kappa."""
    k0 = _single_value(ctx)
    out = Scalar.of(ctx.rs.order())
    for n in ctx.rs.ambient_degrees():
        for j in range(1, n):
            out = out * (k0.scale(n) + j)
    return out


def discriminant_norm_computed(ctx):
    """<a_R, a_R>_kappa with roots rescaled to |v|^2 = 2 (by a rational factor)."""
    a = alternating_polynomial(ctx.rs)
    scale = prod((Fraction(2) / norm2(v) for v in ctx.rs.positive), start=Fraction(1))
    return kappa_form(ctx, a, a).scale(scale)


def _norm_exponents(ctx):
    """[(|v|^2, sum of kappa(v) over roots of that length)]."""
    acc = {}
    for v, k, n2 in ctx.weighted:
        acc[n2] = acc.get(n2, Scalar.of(0)) + k
    return sorted(acc.items())


def _root_norm_powers(ctx):
    """prod_v (|v|^2)^{kappa(v)} grouped by base."""
    return [(b, e) for b, e in _norm_exponents(ctx) if b != 1 and e]


def _dihedral_even(v, m):
    """Whether <x,v> divides z^m - conj(z)^m (v = (a, b) up to scale)."""
    a, b = v
    # exact Im((-b + i a)^m)
    re, im = Fraction(1), Fraction(0)
    for _ in range(m):
        re, im = re * (-b) - im * a, re * a + im * (-b)
    return im == 0


def mm_constant(ctx, closed_form="auto"):
    """Gamma-function record for 1/c_kappa of the context's root system."""
    rs = ctx.rs
    if closed_form == "auto":
        if all(v == ctx.kappa.values[0] for v in ctx.kappa.values):
            closed_form = "one-class"
        elif rs.family == "B":
            closed_form = "B"
        elif rs.family == "I2":
            closed_form = "I2"
        elif rs.family == "F4":
            closed_form = "F4"
        else:
            raise UnknownType(f"no closed form for {rs.name} with distinct parameters")
    if closed_form == "one-class":
        k0 = _single_value(ctx)
        num = [k0.scale(n) + 1 for n in rs.ambient_degrees()]
        den = [k0 + 1 for _ in rs.ambient_degrees()]
        powers = [(b / 2, e) for b, e in _norm_exponents(ctx) if b != 2]
        return GammaRecord("one-class", powers, num, den)
    if closed_form == "B":
        if rs.family != "B" or rs.n < 2:
            raise UnknownType("the B_d closed form needs B(d), d >= 2")
        d = rs.n
        k0, k1 = ctx.kappa.values
        num, den = [], []
        for i in range(1, d + 1):
            num += [k0.scale(i) + 1, k0.scale(i - 1) + k1 + HALF]
            den += [k0 + 1, Scalar.of(HALF)]
        return GammaRecord("B", [(Fraction(2), (k0.scale(d - 1) + k1).scale(d))], num, den)
    if closed_form == "I2":
        if rs.family != "I2" or rs.n % 2:
            raise UnknownType("the dihedral closed form needs I2(2m)")
        m = rs.n // 2
        ke = ko = None
        for v, k, n2 in ctx.weighted:
            if _dihedral_even(v, m):
                ke = k
            else:
                ko = k
        powers = [(Fraction(2), (ke + ko).scale(-m))] + _root_norm_powers(ctx)
        num = [ke.scale(2) + 1, ko.scale(2) + 1, (ke + ko).scale(m) + 1]
        den = [ke + 1, ko + 1, ke + ko + 1]
        return GammaRecord("I2", powers, num, den)
    if closed_form == "F4":
        if rs.family != "F4":
            raise UnknownType("the F4 closed form needs F4")
        k1, k2 = ctx.kappa.values
        num = [k1.scale(2) + k2 + HALF, k1 + k2.scale(2) + HALF, (k1 + k2).scale(3) + HALF,
               (k1 + k2).scale(4) + 1]
        den = [Scalar.of(HALF)] * 3 + [k1 + k2 + 1]
        for k in (k1, k2):
            num += [k.scale(2) + 1, k.scale(3) + 1]
            den += [k + 1, k + 1]
        # the display uses prod (y_i^2 - y_j^2) = 2^6 prod over short positive roots
        powers = [(Fraction(2), (k1 + k2).scale(12) - k2.scale(12))]
        return GammaRecord("F4", powers, num, den)
    raise UnknownType(f"unknown closed form {closed_form!r}")

