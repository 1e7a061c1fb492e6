"""Exact scalars: rational functions in at most two parameters k0, k1.

``ParamPoly`` is a sparse polynomial in (k0, k1) with Fraction coefficients.
``Scalar`` is a reduced quotient num/den of two ParamPolys.  The canonical
form has gcd(num, den) = 1 and den with integer, content-free coefficients
whose graded-lex leading coefficient is positive, so structural equality is
mathematical equality.
"""
from fractions import Fraction
from math import gcd as igcd

from ._expr import parse_expression
from .errors import ParseError, SymbolicParameterRemaining

PARAM_NAMES = ("k0", "k1")
NPARAMS = 2
Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)
_E0 = (0, 0)


def _grlex(e):
    return (e[0] + e[1], e[0], e[1])


# ---------------------------------------------------------------- univariate
# dense lists of Fractions, index = power, no trailing zeros

def _u_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _u_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _u_trim(out)


def _u_sub(a, b):
    out = list(a) + [_F0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _u_trim(out)


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [_F0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _u_trim(out)


def _u_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return [], a
    q = [_F0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c:
            c = c / lb
            q[k] = c
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return _u_trim(q), _u_trim(a[:db])


def _u_monic(a):
    lc = a[-1]
    return [c / lc for c in a] if lc != 1 else list(a)


def _u_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    return _u_monic(a) if a else []


# ---------------------------------------------------------------- bivariate
# list (power of k1) of univariate lists in k0

def _b_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _b_content(a):
    g = []
    for c in a:
        if c:
            g = _u_gcd(g, c) if g else _u_monic(c)
            if len(g) == 1:
                break
    return g


def _b_divu(a, c):
    out = []
    for x in a:
        q, r = _u_divmod(x, c)
        out.append(q)
    return out


def _b_prem(a, b):
    r = [list(c) for c in a]
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        new = [_u_mul(lb, c) for c in r]
        for j, bj in enumerate(b):
            new[j + shift] = _u_sub(new[j + shift], _u_mul(lr, bj))
        r = _b_trim(new)
    return r


def _b_gcd(a, b):
    ca, cb = _b_content(a), _b_content(b)
    cont = _u_gcd(ca, cb)
    a, b = _b_divu(a, ca), _b_divu(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _b_prem(a, b)
        if not r:
            break
        a, b = b, _b_divu(r, _b_content(r))
    g = b if len(b) > 1 else [[_F1]]
    return [_u_mul(cont, c) for c in g]


# ---------------------------------------------------------------- ParamPoly

class ParamPoly:
    """Sparse polynomial in k0, k1 with rational coefficients (immutable)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def const(c):
        c = Fraction(c)
        return ParamPoly({_E0: c} if c else {})

    @staticmethod
    def var(i):
        e = [0, 0]
        e[i] = 1
        return ParamPoly({tuple(e): _F1})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and _E0 in t)

    def is_one(self):
        t = self.terms
        return len(t) == 1 and t.get(_E0) == 1

    def constant_value(self):
        return self.terms.get(_E0, _F0)

    def variables(self):
        used = set()
        for e in self.terms:
            if e[0]:
                used.add(0)
            if e[1]:
                used.add(1)
        return used

    def leading(self):
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return ParamPoly(out)

    def __neg__(self):
        return ParamPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.terms, other.terms
        if not a or not b:
            return ParamPoly()
        if len(b) == 1 and _E0 in b:
            return self.scale(b[_E0])
        if len(a) == 1 and _E0 in a:
            return other.scale(a[_E0])
        out = {}
        for (e0, e1), c in a.items():
            for (f0, f1), d in b.items():
                k = (e0 + f0, e1 + f1)
                v = out.get(k, _F0) + c * d
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return ParamPoly(out)

    def scale(self, c):
        if not c:
            return ParamPoly()
        if c == 1:
            return self
        return ParamPoly({e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, ParamPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def exact_div(self, other):
        """Quotient self/other; raises ValueError if the division is not exact."""
        if other.is_constant():
            return self.scale(1 / other.constant_value())
        le, lc = other.leading()
        rem = dict(self.terms)
        q = {}
        while rem:
            e = max(rem, key=_grlex)
            c = rem[e]
            if e[0] < le[0] or e[1] < le[1]:
                raise ValueError("inexact polynomial division")
            m = (e[0] - le[0], e[1] - le[1])
            f = c / lc
            q[m] = f
            for (g0, g1), d in other.terms.items():
                k = (g0 + m[0], g1 + m[1])
                v = rem.get(k, _F0) - f * d
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return ParamPoly(q)

    def evaluate(self, values):
        total = 0
        for (e0, e1), c in self.terms.items():
            t = c
            if e0:
                t = t * _param(values, 0) ** e0
            if e1:
                t = t * _param(values, 1) ** e1
            total = total + t
        return total

    def to_univariate(self, i):
        out = []
        for e, c in self.terms.items():
            p = e[i]
            if len(out) <= p:
                out.extend([_F0] * (p + 1 - len(out)))
            out[p] = c
        return out

    @staticmethod
    def from_univariate(coeffs, i):
        out = {}
        for p, c in enumerate(coeffs):
            if c:
                out[(p, 0) if i == 0 else (0, p)] = c
        return ParamPoly(out)

    def to_bivariate(self):
        rows = []
        for (e0, e1), c in self.terms.items():
            if len(rows) <= e1:
                rows.extend([] for _ in range(e1 + 1 - len(rows)))
            row = rows[e1]
            if len(row) <= e0:
                row.extend([_F0] * (e0 + 1 - len(row)))
            row[e0] = c
        return rows

    @staticmethod
    def from_bivariate(rows):
        out = {}
        for e1, row in enumerate(rows):
            for e0, c in enumerate(row):
                if c:
                    out[(e0, e1)] = c
        return ParamPoly(out)

    def format(self, compact=False):
        if not self.terms:
            return "0"
        plus, minus = ("+", "-") if compact else (" + ", " - ")
        parts = []
        for i, e in enumerate(sorted(self.terms, key=_grlex, reverse=True)):
            c = self.terms[e]
            mono = "*".join(
                n if p == 1 else f"{n}^{p}" for n, p in zip(PARAM_NAMES, e) if p
            )
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = _fmt_rat(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_fmt_rat(a)}*{mono}"
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append((minus if neg else plus) + body)
        return "".join(parts)

    def __str__(self):
        return self.format()

    __repr__ = __str__


def _fmt_rat(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _param(values, i):
    if values is None or i >= len(values) or values[i] is None:
        raise SymbolicParameterRemaining(f"no value supplied for {PARAM_NAMES[i]}")
    return values[i]


def poly_gcd(a, b):
    """Monic-in-some-normalisation gcd of two ParamPolys (never zero unless both are)."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return _ONE_POLY
    used = a.variables() | b.variables()
    if len(used) == 1:
        (i,) = used
        g = _u_gcd(a.to_univariate(i), b.to_univariate(i))
        return ParamPoly.from_univariate(g, i)
    g = _b_gcd(a.to_bivariate(), b.to_bivariate())
    return ParamPoly.from_bivariate(g)


_ONE_POLY = ParamPoly({_E0: _F1})
_ZERO_POLY = ParamPoly({})


def _lcm_int(a, b):
    return a * b // igcd(a, b)


def _normalise_den(num, den):
    """Scale so den has integer content-free coefficients and positive leading term."""
    if den.is_one():
        return num, den
    if den.is_constant():
        c = den.constant_value()
        return num.scale(1 / c), _ONE_POLY
    L = 1
    G = 0
    for c in den.terms.values():
        L = _lcm_int(L, c.denominator)
    for c in den.terms.values():
        G = igcd(G, (c * L).numerator)
    f = Fraction(L, G)
    if den.leading()[1] < 0:
        f = -f
    if f == 1:
        return num, den
    return num.scale(f), den.scale(f)


# ---------------------------------------------------------------- Scalar

class Scalar:
    """Element of Q(k0, k1) in canonical reduced form."""

    __slots__ = ("num", "den", "_h")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = _ONE_POLY
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("scalar with zero denominator")
            if num.is_zero():
                num, den = _ZERO_POLY, _ONE_POLY
            elif not den.is_one():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = num.exact_div(g), den.exact_div(g)
                num, den = _normalise_den(num, den)
        self.num = num
        self.den = den
        self._h = None

    # constructors
    @staticmethod
    def of(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(ParamPoly.const(value), _ONE_POLY, True)
        if isinstance(value, ParamPoly):
            return Scalar(value, _ONE_POLY, True)
        if isinstance(value, str):
            return Scalar.parse(value)
        if isinstance(value, float):
            return Scalar(ParamPoly.const(Fraction(value)), _ONE_POLY, True)
        raise TypeError(f"cannot make a Scalar from {type(value).__name__}")

    @staticmethod
    def param(i):
        return Scalar(ParamPoly.var(i), _ONE_POLY, True)

    @staticmethod
    def parse(text):
        def name(n):
            if n in PARAM_NAMES:
                return Scalar.param(PARAM_NAMES.index(n))
            raise ParseError(f"unknown parameter {n!r}; expected k0 or k1")

        try:
            out = parse_expression(text, name, Scalar.of)
        except (TypeError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse {text!r}: {exc}") from None
        return Scalar.of(out)

    # predicates
    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_constant(self):
        return self.den.is_one() and self.num.is_constant()

    def is_polynomial(self):
        return self.den.is_one()

    def constant_value(self):
        if not self.is_constant():
            raise SymbolicParameterRemaining(f"{self} is not a constant")
        return self.num.constant_value()

    def variables(self):
        return self.num.variables() | self.den.variables()

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.of(other)
            else:
                return NotImplemented
        if not self.num.terms:
            return other
        if not other.num.terms:
            return self
        a, b = self.den, other.den
        if a.is_one() and b.is_one():
            return Scalar(self.num + other.num, _ONE_POLY, True)
        if a == b:
            return Scalar(self.num + other.num, a)
        if b.is_one():
            return Scalar(self.num + other.num * a, a, _reduced=True)
        if a.is_one():
            return Scalar(self.num * b + other.num, b, _reduced=True)
        g = poly_gcd(a, b)
        if g.is_constant():
            # coprime denominators: the sum is already reduced
            return Scalar(self.num * b + other.num * a, a * b, _reduced=True)
        bg, ag = b.exact_div(g), a.exact_div(g)
        return Scalar(self.num * bg + other.num * ag, a * bg)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, True)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.of(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return ZERO
        if self.is_constant():
            return other.scale(self.num.constant_value())
        if other.is_constant():
            return self.scale(other.num.constant_value())
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, _ONE_POLY, True)
        # cross-cancel to keep the final gcd small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = (self.num, other.den) if g1.is_constant() else (self.num.exact_div(g1), other.den.exact_div(g1))
        n2, d1 = (other.num, self.den) if g2.is_constant() else (other.num.exact_div(g2), self.den.exact_div(g2))
        num, den = _normalise_den(n1 * n2, d1 * d2)
        return Scalar(num, den, True)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by a rational constant (keeps the reduced form)."""
        if not c:
            return ZERO
        if c == 1:
            return self
        return Scalar(self.num.scale(Fraction(c)), self.den, True)

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero scalar")
        num, den = _normalise_den(self.den, self.num)
        return Scalar(num, den, True)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                if not other:
                    raise ZeroDivisionError("division by zero")
                return self.scale(1 / Fraction(other))
            return NotImplemented
        if other.is_constant():
            c = other.num.constant_value()
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self.scale(1 / c)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # comparisons
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num.terms == other.num.terms and self.den.terms == other.den.terms
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num.is_constant() and self.num.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            if self.is_constant():
                self._h = hash(self.num.constant_value())
            else:
                self._h = hash((self.num, self.den))
        return self._h

    # evaluation
    def evaluate(self, values):
        """Substitute numbers (Fraction or float) for k0, k1."""
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at {values}")
        n = self.num.evaluate(values)
        if isinstance(n, float) or isinstance(d, float):
            return n / d
        return Fraction(n) / Fraction(d)

    def substitute(self, mapping):
        """Replace parameters by Scalars; ``mapping`` is {index: Scalar}."""
        def sub(poly):
            total = ZERO
            for (e0, e1), c in poly.terms.items():
                t = Scalar.of(c)
                for i, ei in ((0, e0), (1, e1)):
                    if ei:
                        base = mapping[i] if i in mapping else Scalar.param(i)
                        t = t * base ** ei
                total = total + t
            return total

        if not mapping:
            return self
        return sub(self.num) / sub(self.den)

    def __float__(self):
        return float(self.constant_value())

    # text
    def format(self, compact=False):
        if self.den.is_one():
            return self.num.format(compact)
        num, den = self.num, self.den
        lcm = 1
        for c in num.terms.values():
            lcm = lcm * c.denominator // igcd(lcm, c.denominator)
        if lcm > 1:
            # clear fractions in the numerator into the denominator for display
            num, den = num.scale(Fraction(lcm)), den.scale(Fraction(lcm))
        n = num.format(compact)
        d = den.format(compact)
        if len(num.terms) > 1:
            n = f"({n})"
        dt = den.terms
        simple = len(dt) == 1 and next(iter(dt.values())) == 1 and sum(1 for p in next(iter(dt)) if p) == 1
        if not simple:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Scalar({self.format()!r})"

    def needs_parens(self):
        """True when the text form is not a single signed factor."""
        if not self.den.is_one():
            return True
        return len(self.num.terms) > 1


ZERO = Scalar(_ZERO_POLY, _ONE_POLY, True)
ONE = Scalar(_ONE_POLY, _ONE_POLY, True)
K0 = Scalar.param(0)
K1 = Scalar.param(1)


def pochhammer(t, n):
    """Rising factorial (t)_n = t(t+1)...(t+n-1); works for Scalar, Fraction, float."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = ONE if isinstance(t, Scalar) else (1.0 if isinstance(t, float) else Fraction(1))
    for i in range(n):
        out = out * (t + i)
    return out


def generalized_pochhammer(t, lam, kappa):
    """(t)_lambda = prod_i (t - (i-1) kappa)_{lambda_i} for a partition lambda."""
    from .errors import NotAPartition

    lam = tuple(lam)
    if any((not isinstance(x, int)) or x < 0 for x in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise NotAPartition(f"{lam} is not a partition", value=list(lam))
    out = ONE if isinstance(t, Scalar) or isinstance(kappa, Scalar) else Fraction(1)
    for i, li in enumerate(lam):
        out = out * pochhammer(t - kappa * i, li)
    return out
