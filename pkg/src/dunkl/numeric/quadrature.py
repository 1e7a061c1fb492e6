"""Quadrature rules built on scipy's Gauss nodes.

Singular weights |<x,v>|^{2k} are handled by splitting the circle at the
root lines and using Gauss-Jacobi on each arc, so the endpoint behaviour is
absorbed into the rule instead of being sampled.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import pi

import numpy as np
from scipy.special import roots_genlaguerre, roots_jacobi, roots_legendre


@dataclass(frozen=True)
class QuadratureRule:
    kind: str
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f):
        return np.dot(self.weights, f(self.nodes))


@lru_cache(maxsize=None)
def _legendre(n):
    return roots_legendre(n)


@lru_cache(maxsize=None)
def _jacobi(n, a, b):
    return roots_jacobi(n, a, b)


@lru_cache(maxsize=None)
def _genlaguerre(n, a):
    return roots_genlaguerre(n, a)


def gauss_legendre(n, a=-1.0, b=1.0):
    x, w = _legendre(n)
    h = (b - a) / 2
    return QuadratureRule("gauss-legendre", a + h * (x + 1), h * w)


def trapezoid_periodic(n, a=-pi, b=pi):
    x = a + (b - a) * np.arange(n) / n
    return QuadratureRule("trapezoid-periodic", x, np.full(n, (b - a) / n))


def gauss_laguerre(n, alpha):
    """int_0^inf u^alpha e^{-u} g(u) du ~ sum w_i g(u_i)."""
    x, w = _genlaguerre(n, float(alpha))
    return QuadratureRule("gauss-laguerre", x, w)


def _line_zeros(lines):
    """Zeros in [-pi, pi) of |sin(theta - phi)|^e, merged by angle."""
    zs = {}
    for phi, e in lines:
        for shift in (0.0, pi):
            t = (phi + shift + pi) % (2 * pi) - pi
            key = round(t, 12)
            zs[key] = zs.get(key, 0.0) + e
    return sorted(zs.items())


def circle_integral(f, lines, n=64):
    """int_{-pi}^{pi} f(theta) prod |sin(theta - phi)|^e dtheta.

    ``lines`` lists (phi, e) pairs; each line vanishes at phi and phi + pi.
    ``f`` is vectorised over theta.
    """
    zeros = _line_zeros([(p, e) for p, e in lines if e != 0])
    if not zeros:
        rule = gauss_legendre(2 * n, -pi, pi)
        return float(np.dot(rule.weights, f(rule.nodes)))
    angles = [z for z, _ in zeros]
    exps = [e for _, e in zeros]
    total = 0.0
    k = len(angles)
    for idx in range(k):
        a = angles[idx]
        b = angles[idx + 1] if idx + 1 < k else angles[0] + 2 * pi
        ea, eb = exps[idx], exps[(idx + 1) % k]
        s, w = _jacobi(n, eb, ea)
        h = (b - a) / 2
        off_a = h * (1 + s)
        off_b = h * (1 - s)
        theta = a + off_a
        ratio = np.ones_like(theta)
        for phi, e in lines:
            if e == 0:
                continue
            at_a, at_b = _vanishes(phi, a), _vanishes(phi, b)
            if at_a:
                # |sin(theta - phi)| = |sin(off_a)|, accurate near a
                fac = np.abs(np.sin(off_a)) ** e / off_a ** e
                if at_b:
                    fac = fac / off_b ** e
            elif at_b:
                fac = np.abs(np.sin(off_b)) ** e / off_b ** e
            else:
                fac = np.abs(np.sin(theta - phi)) ** e
            ratio = ratio * fac
        total += h ** (1 + ea + eb) * float(np.dot(w, f(theta) * ratio))
    return total


def _vanishes(phi, t):
    r = (t - phi) / pi
    return abs(r - round(r)) < 1e-12


def half_line_gaussian(g, alpha, n=120):
    """int_0^inf g(x) x^{2 alpha} e^{-x^2/2} dx for smooth even-extendable g.

    Substitutes u = x^2/2 and uses generalised Gauss-Laguerre of order alpha - 1/2.
    """
    rule = gauss_laguerre(n, alpha - 0.5)
    x = np.sqrt(2 * rule.nodes)
    val = np.dot(rule.weights, g(x))
    return 2 ** (alpha - 0.5) * (complex(val) if np.iscomplexobj(val) else float(val))
