"""Nonsymmetric Jack polynomials for the symmetric group S_d acting on R^d.

Compositions are tuples of d non-negative integers. The multiplicity is a
single Scalar (symbolic k0 or a rational constant). The Cherednik-Dunkl
operators are U_i = D_i x_i - kappa sum_{j<i} (i,j).
"""
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import cache
from .calculus.context import DunklContext, MultiplicitySpec
from .calculus.forms import kappa_form
from .calculus.operators import dunkl_apply
from .errors import (
    DimensionMismatch,
    LengthMismatch,
    NotAComposition,
    NotAPartition,
    SeparationFailure,
    UnknownType,
)
from .poly import Polynomial
from .roots import build_root_system
from .scalar import ONE, Scalar, generalized_pochhammer


def composition(alpha, d=None):
    try:
        parts = tuple(int(a) for a in alpha)
    except (TypeError, ValueError):
        raise NotAComposition(f"{alpha!r} is not a sequence of integers") from None
    if any(a < 0 for a in parts):
        raise NotAComposition(f"{alpha!r} has a negative part")
    if d is not None and len(parts) != d:
        raise LengthMismatch(f"composition {parts} has length {len(parts)}, expected {d}")
    return parts


def is_partition(alpha):
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


def alpha_plus(alpha):
    return tuple(sorted(alpha, reverse=True))


def length(alpha):
    """l(alpha) = max{j : alpha_j > 0}, 0 for alpha = 0."""
    return max((j + 1 for j, a in enumerate(alpha) if a), default=0)


def rank_function(alpha):
    """w_alpha(i) = #{j : a_j > a_i} + #{j <= i : a_j = a_i}, 1-based values."""
    alpha = composition(alpha)
    return tuple(
        sum(1 for b in alpha if b > a) + sum(1 for b in alpha[: i + 1] if b == a)
        for i, a in enumerate(alpha)
    )


def _dominates(a, b):
    """a >= b in the dominance order on compositions (partial sums)."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def _cmp(ge, le):
    if ge and le:
        return "equal"
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"


def dominance_compare(alpha, beta):
    """{"dominance": ..., "jack": ...} with values greater/less/equal/incomparable.

    "dominance" is the partial-sum order; "jack" is the triangularity order
    (compare alpha+ and beta+ first, then alpha and beta).
    """
    alpha, beta = composition(alpha), composition(beta)
    if len(alpha) != len(beta):
        raise LengthMismatch(f"lengths {len(alpha)} and {len(beta)} differ")
    if sum(alpha) != sum(beta):
        return {"dominance": "incomparable", "jack": "incomparable"}
    dom = _cmp(_dominates(alpha, beta), _dominates(beta, alpha))
    ap, bp = alpha_plus(alpha), alpha_plus(beta)
    if ap == bp:
        jack = dom
    else:
        jack = _cmp(_dominates(ap, bp), _dominates(bp, ap))
    return {"dominance": dom, "jack": jack}


def jack_greater(alpha, beta):
    """alpha strictly above beta in the triangularity order."""
    return dominance_compare(alpha, beta)["jack"] == "greater"


# ---------------------------------------------------------------- contexts

def type_a_context(d, kappa="symbolic"):
    """DunklContext for S_d on R^d (root system A(d-1)); d = 1 has no roots."""
    if d < 2:
        raise UnknownType("nonsymmetric Jack polynomials need d >= 2")
    rs = build_root_system("A", d - 1)
    if isinstance(kappa, MultiplicitySpec):
        mult = kappa
    elif isinstance(kappa, Scalar):
        mult = MultiplicitySpec([kappa], "symbolic" if not kappa.is_constant() else "rational")
    else:
        mult = MultiplicitySpec.parse(rs, kappa)
    return DunklContext(rs, mult)


def _kappa(ctx):
    if ctx.rs.family != "A":
        raise UnknownType(f"Jack polynomials need a type A context, got {ctx.rs.name}")
    ctx.require_exact("Jack polynomials")
    return ctx.kappa.values[0]


def _mode_key(k):
    return "symbolic" if not k.is_constant() else str(k.constant_value())


def swap_vars(p, i, j):
    """(i,j) p: exchange x_i and x_j (0-based)."""
    if i == j:
        return p
    out = {}
    for e, c in p.terms.items():
        f = list(e)
        f[i], f[j] = f[j], f[i]
        out[tuple(f)] = c
    return Polynomial(p.dim, out)


def theta_inverse(p, m=None):
    """theta_m^{-1} p: x^alpha -> x^(alpha_2..alpha_m, alpha_1, alpha_{m+1}..)."""
    m = p.dim if m is None else m
    out = {}
    for e, c in p.terms.items():
        out[e[1:m] + e[:1] + e[m:]] = c
    return Polynomial(p.dim, out)


def cherednik_apply(ctx, i, p):
    """U_i p = D_i (x_i p) - kappa sum_{j<i} (i,j) p, i 0-based."""
    k = _kappa(ctx)
    if p.dim != ctx.dim:
        raise DimensionMismatch(f"polynomial has {p.dim} variables, context has {ctx.dim}")
    out = dunkl_apply(ctx, i, p.multiply_variable(i))
    for j in range(i):
        out = out - swap_vars(p, i, j).scale(k)
    return out


@dataclass(frozen=True)
class SpectralVector:
    xi: tuple

    def __iter__(self):
        return iter(self.xi)

    def __getitem__(self, i):
        return self.xi[i]

    def __len__(self):
        return len(self.xi)


def spectral_vector(alpha, d=None, kappa=None):
    """xi_i(alpha) = (d - w_alpha(i)) kappa + alpha_i + 1."""
    alpha = composition(alpha, d)
    d = len(alpha)
    k = Scalar.param(0) if kappa is None else Scalar.of(kappa) if not isinstance(kappa, Scalar) else kappa
    w = rank_function(alpha)
    return SpectralVector(tuple(k.scale(d - w[i]) + (alpha[i] + 1) for i in range(d)))


# ---------------------------------------------------------------- hooks and closed forms

def _as_scalar(x):
    return x if isinstance(x, Scalar) else Scalar.of(x)


def hook_product(alpha, t, kappa=None):
    """h(alpha, t) = prod over the Ferrers diagram of h(alpha, t; i, j)."""
    alpha = composition(alpha)
    t = _as_scalar(t)
    k = Scalar.param(0) if kappa is None else _as_scalar(kappa)
    out = ONE
    for i in range(length(alpha)):
        ai = alpha[i]
        for j in range(1, ai + 1):
            later = sum(1 for l in range(i + 1, len(alpha)) if j <= alpha[l] <= ai)
            earlier = sum(1 for l in range(i) if j <= alpha[l] + 1 <= ai)
            out = out * (t + (ai - j) + k.scale(later + earlier))
    return out


def zeta_norm_closed(alpha, d=None, kappa=None):
    """(d kappa + 1)_{alpha+} h(alpha, 1) / h(alpha, kappa + 1)."""
    alpha = composition(alpha, d)
    d = len(alpha)
    k = Scalar.param(0) if kappa is None else _as_scalar(kappa)
    poch = generalized_pochhammer(k.scale(d) + 1, alpha_plus(alpha), k)
    return poch * hook_product(alpha, 1, k) / hook_product(alpha, k + 1, k)


def zeta_eval_ones(alpha, d=None, kappa=None):
    """(d kappa + 1)_{alpha+} / h(alpha, kappa + 1)."""
    alpha = composition(alpha, d)
    d = len(alpha)
    k = Scalar.param(0) if kappa is None else _as_scalar(kappa)
    return generalized_pochhammer(k.scale(d) + 1, alpha_plus(alpha), k) / hook_product(alpha, k + 1, k)


def step_count(alpha):
    """|alpha| + 1/2 sum_{i<j} (|a_i - a_j| + |a_i - a_j + 1| - 1)."""
    alpha = composition(alpha)
    twice = sum(
        abs(alpha[i] - alpha[j]) + abs(alpha[i] - alpha[j] + 1) - 1
        for i in range(len(alpha))
        for j in range(i + 1, len(alpha))
    )
    return sum(alpha) + twice // 2


# ---------------------------------------------------------------- the recursion

@dataclass
class NSJack:
    alpha: tuple
    poly: Polynomial
    xi: SpectralVector
    norm: Scalar
    eval_ones: Scalar
    steps: int

    def to_json(self):
        return {
            "alpha": list(self.alpha),
            "poly": self.poly.to_json(),
            "text": self.poly.format(),
            "xi": [str(x) for x in self.xi],
            "norm": str(self.norm),
            "eval_ones": str(self.eval_ones),
            "steps": self.steps,
        }


_MEMO = {}
_MEMO_LOCK = threading.RLock()


def clear_memo():
    with _MEMO_LOCK:
        _MEMO.clear()


def _memo_get(key):
    with _MEMO_LOCK:
        return _MEMO.get(key)


def _memo_put(key, val):
    with _MEMO_LOCK:
        return _MEMO.setdefault(key, val)


def _exchange_coefficient(beta, i, k):
    """c = kappa / (xi_i(beta) - xi_{i+1}(beta)) for beta_i < beta_{i+1}."""
    xi = spectral_vector(beta, kappa=k)
    den = xi[i] - xi[i + 1]
    if not den:
        raise SeparationFailure(
            f"xi_{i + 1} - xi_{i + 2} vanishes for alpha = {beta} at kappa = {k}",
            pair=[i + 1, i + 2],
            alpha=list(beta),
        )
    return k / den


def _via_exchange(ctx, alpha, i, k, check):
    beta = list(alpha)
    beta[i], beta[i + 1] = beta[i + 1], beta[i]
    beta = tuple(beta)
    zb, sb = _zeta_poly(ctx, beta, k, check)
    c = _exchange_coefficient(beta, i, k)
    return swap_vars(zb, i, i + 1) - zb.scale(c), sb + 1


def _via_raising(ctx, alpha, k, check):
    d = len(alpha)
    beta = (alpha[-1] - 1,) + alpha[:-1]
    zb, sb = _zeta_poly(ctx, beta, k, check)
    return theta_inverse(zb).multiply_variable(d - 1), sb + 1


def _zeta_poly(ctx, alpha, k, check):
    d = len(alpha)
    key = (d, alpha, _mode_key(k))
    hit = _memo_get(key)
    if hit is not None:
        return hit
    if k.is_constant():
        sym = _memo_get((d, alpha, "symbolic"))
        if sym is not None:
            try:
                val = (sym[0].at_params((k.constant_value(), None)), sym[1])
                return _memo_put(key, val)
            except ZeroDivisionError:
                pass
    if not any(alpha):
        val = (Polynomial.one(d), 0)
        return _memo_put(key, val)
    disk = cache.load("zeta", key)
    if disk is not None:
        return _memo_put(key, disk)
    descent = next((i for i in range(d - 1) if alpha[i] > alpha[i + 1]), None)
    if descent is not None:
        val = _via_exchange(ctx, alpha, descent, k, check)
        if check and alpha[-1] >= 1:
            other = _via_raising(ctx, alpha, k, check)
            if other[0] != val[0]:
                raise AssertionError(f"exchange and raising disagree for {alpha}")
    else:
        val = _via_raising(ctx, alpha, k, check)
    cache.store("zeta", key, val)
    return _memo_put(key, val)


def zeta(ctx, alpha, check_paths=True):
    """The nonsymmetric Jack polynomial zeta_alpha.

    Built from zeta_0 = 1 by the exchange step (alpha has a descent) or the
    raising step zeta_phi(beta) = x_d theta_d^{-1} zeta_beta.  With
    ``check_paths`` both routes are compared whenever both apply.
    """
    k = _kappa(ctx)
    alpha = composition(alpha, ctx.dim)
    poly, steps = _zeta_poly(ctx, alpha, k, check_paths)
    return NSJack(
        alpha=alpha,
        poly=poly,
        xi=spectral_vector(alpha, kappa=k),
        norm=zeta_norm_closed(alpha, kappa=k),
        eval_ones=zeta_eval_ones(alpha, kappa=k),
        steps=steps,
    )


def compositions(d, n):
    """All compositions of n into d parts, in descending lexicographic order."""
    if d == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(d - 1, n - first):
            yield (first,) + rest


def knop_sahi_check(ctx, alpha):
    """Every coefficient of h(alpha, kappa+1) zeta_alpha is a polynomial in kappa
    with non-negative coefficients."""
    k = _kappa(ctx)
    z = zeta(ctx, alpha).poly.scale(hook_product(alpha, k + 1, k))
    for c in z.terms.values():
        if not c.is_polynomial():
            return False
        if any(v < 0 for v in c.num.terms.values()):
            return False
    return True


def d_m_zeta_check(ctx, alpha):
    """Check D_i zeta_alpha = 0 for i > m and the closed form of D_m zeta_alpha, m = l(alpha)."""
    k = _kappa(ctx)
    alpha = composition(alpha, ctx.dim)
    d = len(alpha)
    m = length(alpha)
    if m == 0:
        raise NotAComposition("the check needs l(alpha) >= 1")
    z = zeta(ctx, alpha).poly
    vanish = {}
    for i in range(m, d):
        vanish[i + 1] = not dunkl_apply(ctx, i, z)
    lhs = dunkl_apply(ctx, m - 1, z)
    w = rank_function(alpha)
    beta_m = k.scale(-w[m - 1]) + alpha[m - 1]
    factor = (k.scale(m) + beta_m) * (k.scale(d + 1) + beta_m) / (k.scale(m + 1) + beta_m)
    tilde = (alpha[m - 1] - 1,) + alpha[: m - 1] + (0,) * (d - m)
    rhs = theta_inverse(zeta(ctx, tilde).poly, m).scale(factor)
    return {
        "alpha": list(alpha),
        "m": m,
        "factor": str(factor),
        "lhs": lhs.format(),
        "rhs": rhs.format(),
        "equal": lhs == rhs,
        "vanishing": vanish,
        "ok": lhs == rhs and all(vanish.values()),
    }


def orbit(lam):
    """Distinct rearrangements of lam."""
    lam = tuple(lam)
    seen = set()

    def rec(prefix, rest):
        if not rest:
            seen.add(prefix)
            return
        for v in set(rest):
            r = list(rest)
            r.remove(v)
            rec(prefix + (v,), r)

    rec((), list(lam))
    return sorted(seen, reverse=True)


def stabiliser_size(lam):
    out = 1
    for v in set(lam):
        out *= factorial(lam.count(v))
    return out


def symmetric_jack(ctx, lam):
    """j_lambda = h(lambda,1) sum_{alpha+ = lambda} zeta_alpha / h(alpha,1), with its
    closed-form norm (d kappa+1)_lambda d! h(lambda,1) / (n_lambda h(lambda^R, kappa+1))."""
    k = _kappa(ctx)
    lam = composition(lam, ctx.dim)
    if not is_partition(lam):
        raise NotAPartition(f"{lam} is not weakly decreasing", parts=list(lam))
    d = len(lam)
    hl = hook_product(lam, 1, k)
    out = Polynomial.zero(d)
    for a in orbit(lam):
        out = out + zeta(ctx, a).poly.scale(hl / hook_product(a, 1, k))
    n_lam = stabiliser_size(lam)
    rev = lam[::-1]
    norm = generalized_pochhammer(k.scale(d) + 1, lam, k) * hl.scale(Fraction(factorial(d), n_lam)) / hook_product(
        rev, k + 1, k
    )
    return out, norm


def symmetric_jack_eval_ones(ctx, lam):
    """d! (d kappa+1)_lambda / (n_lambda h(lambda^R, kappa+1))."""
    k = _kappa(ctx)
    lam = composition(lam, ctx.dim)
    d = len(lam)
    return generalized_pochhammer(k.scale(d) + 1, lam, k).scale(
        Fraction(factorial(d), stabiliser_size(lam))
    ) / hook_product(lam[::-1], k + 1, k)


def zeta_norm_computed(ctx, alpha):
    z = zeta(ctx, alpha).poly
    return kappa_form(ctx, z, z)


__all__ = [
    "NSJack",
    "SpectralVector",
    "alpha_plus",
    "cherednik_apply",
    "composition",
    "compositions",
    "d_m_zeta_check",
    "dominance_compare",
    "hook_product",
    "is_partition",
    "knop_sahi_check",
    "length",
    "rank_function",
    "spectral_vector",
    "step_count",
    "swap_vars",
    "symmetric_jack",
    "symmetric_jack_eval_ones",
    "theta_inverse",
    "type_a_context",
    "zeta",
    "zeta_eval_ones",
    "zeta_norm_closed",
    "zeta_norm_computed",
]
