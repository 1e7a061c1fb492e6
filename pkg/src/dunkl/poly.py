"""Sparse polynomials in x1..xd with Scalar coefficients.

A polynomial is a dict from exponent tuples to non-zero Scalars.  Terms are
ordered graded-lexicographically (x1 > x2 > ... > xd) whenever an order is
needed, e.g. for printing or for division by a linear form.
"""
import json
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ._expr import parse_expression
from .errors import DimensionMismatch, NonDivisible, ParseError
from .scalar import ONE, ZERO, PARAM_NAMES, Scalar


def grlex_key(e):
    return (sum(e), e)


def _coerce(c):
    if isinstance(c, Scalar):
        return c
    return Scalar.of(c)


class Polynomial:
    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        self.dim = dim
        if terms is None:
            terms = {}
        elif not all(terms.values()):
            # zero coefficients would break equality and degree
            terms = {e: c for e, c in terms.items() if c}
        self.terms = terms

    # construction -----------------------------------------------------
    @staticmethod
    def zero(dim):
        return Polynomial(dim, {})

    @staticmethod
    def constant(dim, c):
        c = _coerce(c)
        return Polynomial(dim, {(0,) * dim: c} if c else {})

    @staticmethod
    def one(dim):
        return Polynomial(dim, {(0,) * dim: ONE})

    @staticmethod
    def variable(dim, i):
        """x_{i+1} (0-based index)."""
        e = [0] * dim
        e[i] = 1
        return Polynomial(dim, {tuple(e): ONE})

    @staticmethod
    def monomial(exp, coef=ONE):
        exp = tuple(exp)
        coef = _coerce(coef)
        return Polynomial(len(exp), {exp: coef} if coef else {})

    @staticmethod
    def linear_form(v):
        """<x, v> for a coordinate vector v."""
        d = len(v)
        out = {}
        for i, c in enumerate(v):
            if c:
                e = [0] * d
                e[i] = 1
                out[tuple(e)] = _coerce(c)
        return Polynomial(d, out)

    @staticmethod
    def norm_squared(dim):
        out = {}
        for i in range(dim):
            e = [0] * dim
            e[i] = 2
            out[tuple(e)] = ONE
        return Polynomial(dim, out)

    # basic queries ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, n):
        return Polynomial(self.dim, {e: c for e, c in self.terms.items() if sum(e) == n})

    def homogeneous_components(self):
        out = {}
        for e, c in self.terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {n: Polynomial(self.dim, t) for n, t in sorted(out.items())}

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def constant_term(self):
        return self.terms.get((0,) * self.dim, ZERO)

    # arithmetic -------------------------------------------------------
    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, other)
        self._check(other)
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(self.dim, other) - self

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Polynomial(self.dim, {})
        if c == 1:
            return self
        return Polynomial(self.dim, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (Scalar, int, Fraction)):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        out = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                k = tuple(a + b for a, b in zip(e, f))
                v = out.get(k)
                p = c * d
                if v is None:
                    out[k] = p
                else:
                    v = v + p
                    if v:
                        out[k] = v
                    else:
                        del out[k]
        return Polynomial(self.dim, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.degree() == 0:
                other = other.constant_term()
            else:
                return NotImplemented
        return self.scale(ONE / _coerce(other))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Polynomial.one(self.dim)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar)):
            return self == Polynomial.constant(self.dim, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def map_coefficients(self, f):
        out = {}
        for e, c in self.terms.items():
            v = f(c)
            if v:
                out[e] = _coerce(v)
        return Polynomial(self.dim, out)

    def substitute_params(self, mapping):
        """Replace k-parameters inside coefficients; mapping {index: Scalar}."""
        return self.map_coefficients(lambda c: c.substitute(mapping))

    def at_params(self, values):
        """Evaluate every coefficient at exact parameter values (Fractions)."""
        return self.map_coefficients(lambda c: Scalar.of(c.evaluate(values)))

    # calculus ---------------------------------------------------------
    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c.scale(e[i])
        return Polynomial(self.dim, out)

    def gradient(self):
        return [self.partial(i) for i in range(self.dim)]

    def directional(self, a):
        out = Polynomial.zero(self.dim)
        for i, ai in enumerate(a):
            if ai:
                out = out + self.partial(i).scale(ai)
        return out

    def euclidean_laplacian(self):
        out = Polynomial.zero(self.dim)
        for i in range(self.dim):
            out = out + self.partial(i).partial(i)
        return out

    def multiply_monomial(self, exp):
        return Polynomial(self.dim, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()})

    def multiply_variable(self, i):
        e = [0] * self.dim
        e[i] = 1
        return self.multiply_monomial(e)

    # evaluation -------------------------------------------------------
    def evaluate(self, point, params=None):
        """Value at ``point``; exact when point and params are exact."""
        if len(point) != self.dim:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.dim}")
        total = 0
        for e, c in self.terms.items():
            v = c.constant_value() if c.is_constant() else c.evaluate(params)
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def value_at(self, point):
        """Exact value at a rational point as a Scalar (parameters kept)."""
        if len(point) != self.dim:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.dim}")
        point = [Fraction(x) for x in point]
        total = Scalar.of(0)
        for e, c in self.terms.items():
            m = Fraction(1)
            for x, k in zip(point, e):
                if k:
                    m *= x ** k
            if m:
                total = total + c.scale(m)
        return total

    # text -------------------------------------------------------------
    def format(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                f"x{j + 1}" if k == 1 else f"x{j + 1}^{k}" for j, k in enumerate(e) if k
            )
            neg = False
            if c.needs_parens():
                cs = f"({c.format(compact=True)})"
            else:
                cs = c.format(compact=True)
                if cs.startswith("-"):
                    neg, cs = True, cs[1:]
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.dim}, {self.format()!r})"

    @staticmethod
    def parse(text, dim):
        """Read text like ``(k0+1)*x1^2*x2 - 1/2*x3`` in ``dim`` variables."""

        def name(n):
            if n in PARAM_NAMES:
                return Polynomial.constant(dim, Scalar.param(PARAM_NAMES.index(n)))
            if n.startswith("x") and n[1:].isdigit():
                i = int(n[1:])
                if 1 <= i <= dim:
                    return Polynomial.variable(dim, i - 1)
                raise ParseError(f"variable {n} outside x1..x{dim}")
            raise ParseError(f"unknown name {n!r}")

        try:
            out = parse_expression(text, name, lambda q: Polynomial.constant(dim, q))
        except (TypeError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse polynomial {text!r}: {exc}") from None
        if not isinstance(out, Polynomial):
            raise ParseError(f"cannot parse polynomial {text!r}")
        return out

    def to_json(self):
        return {
            "dim": self.dim,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()],
        }

    def dumps(self):
        return json.dumps(self.to_json())

    @staticmethod
    def from_json(obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            dim = int(obj["dim"])
            out = {}
            for t in obj["terms"]:
                e = tuple(int(k) for k in t["exp"])
                if len(e) != dim or any(k < 0 for k in e):
                    raise ParseError(f"bad exponent {t['exp']}")
                c = Scalar.parse(str(t["coef"]))
                v = out.get(e, ZERO) + c
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed polynomial JSON: {exc}") from None
        return Polynomial(dim, out)


# ----------------------------------------------------------------- linear maps

def _as_matrix(w):
    m = getattr(w, "matrix", w)
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def _signed_permutation(m):
    """If m is a signed permutation matrix return [(j, sign)] with row i -> x_j."""
    out = []
    for row in m:
        nz = [(j, x) for j, x in enumerate(row) if x]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            return None
        out.append((nz[0][0], 1 if nz[0][1] > 0 else -1))
    return out


def substitute_linear(p, m):
    """p(M x): replace x_i by sum_j M[i][j] x_j."""
    m = _as_matrix(m)
    d = p.dim
    if len(m) != d:
        raise DimensionMismatch("matrix size does not match polynomial dimension")
    perm = _signed_permutation(m)
    if perm is not None:
        out = {}
        for e, c in p.terms.items():
            f = [0] * d
            sign = 1
            for i, k in enumerate(e):
                if k:
                    j, s = perm[i]
                    f[j] += k
                    if s < 0 and k % 2:
                        sign = -sign
            f = tuple(f)
            v = c if sign > 0 else -c
            if f in out:
                v = out[f] + v
            if v:
                out[f] = v
            else:
                out.pop(f, None)
        return Polynomial(d, out)
    forms = [Polynomial.linear_form(row) for row in m]
    powers = [[Polynomial.one(d)] for _ in range(d)]
    out = Polynomial.zero(d)
    for e, c in p.terms.items():
        t = Polynomial.constant(d, c)
        for i, k in enumerate(e):
            if k:
                pw = powers[i]
                while len(pw) <= k:
                    pw.append(pw[-1] * forms[i])
                t = t * pw[k]
        out = out + t
    return out


def substitute_polynomials(p, qs):
    """p(q_1, ..., q_d) for polynomials q_i sharing one dimension."""
    if len(qs) != p.dim:
        raise DimensionMismatch(f"need {p.dim} substitutes, got {len(qs)}")
    dim = qs[0].dim if qs else 0
    powers = [[Polynomial.one(dim)] for _ in qs]
    out = Polynomial.zero(dim)
    for e, c in p.terms.items():
        t = Polynomial.constant(dim, c)
        for i, k in enumerate(e):
            if k:
                pw = powers[i]
                while len(pw) <= k:
                    pw.append(pw[-1] * qs[i])
                t = t * pw[k]
        out = out + t
    return out


def _inverse_matrix(m):
    n = len(m)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def apply_group_element(w, p):
    """(w p)(x) = p(w^{-1} x)."""
    m = _as_matrix(w)
    inv = getattr(w, "inverse", None)
    if callable(inv):
        minv = _as_matrix(inv())
    else:
        minv = _inverse_matrix(m)
    return substitute_linear(p, minv)


def reflection_matrix(v):
    """Matrix of s_v x = x - 2 <x,v> v / |v|^2."""
    v = [Fraction(x) for x in v]
    n2 = sum(x * x for x in v)
    d = len(v)
    return tuple(
        tuple(Fraction(int(i == j)) - 2 * v[i] * v[j] / n2 for j in range(d)) for i in range(d)
    )


def reflect(p, v):
    """s_v p; reflections are involutions so this is p(s_v x)."""
    return substitute_linear(p, reflection_matrix(v))


# ----------------------------------------------------------------- division

def divide_by_linear_form(p, v):
    """Exact quotient p / <x, v>; raises NonDivisible on a non-zero remainder."""
    v = tuple(Fraction(x) for x in v)
    d = p.dim
    k = next((i for i, x in enumerate(v) if x), None)
    if k is None:
        raise NonDivisible("division by the zero linear form")
    others = [(i, x) for i, x in enumerate(v) if x and i != k]
    lead = v[k]
    rem = dict(p.terms)
    quo = {}
    # the leading monomial of <x,v> is x_k; eliminate top terms one at a time
    while rem:
        e = max(rem, key=grlex_key)
        c = rem.pop(e)
        if not e[k]:
            raise NonDivisible(f"polynomial not divisible by <x,{list(v)}>", remainder_exp=list(e))
        m = list(e)
        m[k] -= 1
        m = tuple(m)
        q = c / lead
        quo[m] = q
        for i, x in others:
            f = list(m)
            f[i] += 1
            f = tuple(f)
            val = rem.get(f, ZERO) - q.scale(x)
            if val:
                rem[f] = val
            else:
                rem.pop(f, None)
    return Polynomial(d, quo)


@lru_cache(maxsize=200000)
def _monomial_divided_difference(e, v):
    p = Polynomial.monomial(e)
    q = p - reflect(p, v)
    if not q:
        return ()
    r = divide_by_linear_form(q, v)
    return tuple((f, c.constant_value()) for f, c in r.terms.items())


def monomial_divided_difference(e, v):
    """(x^e - s_v x^e)/<x,v> as a tuple of (exponent, Fraction) pairs (cached)."""
    return _monomial_divided_difference(tuple(e), tuple(Fraction(x) for x in v))


def divided_difference(p, v):
    """(p - s_v p) / <x, v>, exact."""
    v = tuple(Fraction(x) for x in v)
    if len(v) != p.dim:
        raise DimensionMismatch("root and polynomial dimensions differ")
    out = {}
    for e, c in p.terms.items():
        for f, r in _monomial_divided_difference(e, v):
            t = c.scale(r)
            if f in out:
                t = out[f] + t
            if t:
                out[f] = t
            else:
                out.pop(f, None)
    return Polynomial(p.dim, out)


# ----------------------------------------------------------------- bases

@lru_cache(maxsize=None)
def monomial_basis(dim, n):
    """Exponent tuples of degree n in graded-lex descending order."""
    def gen(k, rest):
        if k == 1:
            yield (rest,)
            return
        for a in range(rest, -1, -1):
            for tail in gen(k - 1, rest - a):
                yield (a,) + tail

    if dim == 0:
        return ((),) if n == 0 else ()
    return tuple(gen(dim, n))


def multi_factorial(e):
    out = 1
    for k in e:
        out *= factorial(k)
    return out


def coefficient_vector(p, n):
    """Coefficients of the degree-n part of p on monomial_basis(p.dim, n)."""
    return [p.terms.get(e, ZERO) for e in monomial_basis(p.dim, n)]


def from_vector(dim, n, vec):
    out = {}
    for e, c in zip(monomial_basis(dim, n), vec):
        c = _coerce(c)
        if c:
            out[e] = c
    return Polynomial(dim, out)
