"""The Dunkl transform on R for Z2: eigenfunction check by quadrature."""
from dataclasses import dataclass, field
from math import gamma, pi, sqrt

import numpy as np

from ..errors import ToleranceUnreachable
from ..harmonics2d import classical_poly
from .kernel import z2_kernel_bessel
from .quadrature import gauss_laguerre


def _laguerre(m, alpha):
    L = classical_poly("laguerre", m, alpha)
    return lambda t: np.asarray(L.evaluate(t) if np.isscalar(t) else [L.evaluate(float(s)) for s in t])


def eigenfunction(kappa, n, m):
    """f(x) = x^n L_m^(a)(x^2) e^{-x^2/2}, a = n + kappa - 1/2, n in {0, 1}."""
    if n not in (0, 1):
        raise ValueError("on R the harmonic polynomials are 1 and x")
    a = n + kappa - 0.5
    L = _laguerre(m, a)
    return lambda x: np.asarray(x) ** n * L(np.asarray(x) ** 2) * np.exp(-np.asarray(x) ** 2 / 2)


def transform(f, kappa, y, nodes=160):
    """c_k (2 pi)^{-1/2} int f(x) K(x, -i y) |x|^{2k} dx.

    The integrand is split into x > 0 and x < 0 halves; with u = x^2/2 and the
    Gaussian factored out of f, generalised Gauss-Laguerre handles |x|^{2k}.
    """
    c = sqrt(pi) / (2 ** kappa * gamma(kappa + 0.5))
    rule = gauss_laguerre(nodes, kappa - 0.5)
    x = np.sqrt(2 * rule.nodes)
    gauss = np.exp(-x ** 2 / 2)
    vals = np.empty(len(x), dtype=complex)
    for k, xi in enumerate(x):
        kp = z2_kernel_bessel(kappa, xi, -y, imaginary=True)
        km = z2_kernel_bessel(kappa, -xi, -y, imaginary=True)
        vals[k] = (f(xi) * kp + f(-xi) * km) / gauss[k]
    integral = 2 ** (kappa - 0.5) * np.dot(rule.weights, vals)
    return c * integral / sqrt(2 * pi)


@dataclass
class TransformReport:
    kappa: float
    n: int
    m: int
    points: list = field(default_factory=list)  # (y, got, expected, error)
    tol: float = 1e-6

    @property
    def ok(self):
        return all(err <= self.tol for *_, err in self.points)

    def to_json(self):
        return {
            "kappa": self.kappa,
            "n": self.n,
            "m": self.m,
            "tol": self.tol,
            "ok": self.ok,
            "points": [
                {"y": y, "got": [g.real, g.imag], "expected": [e.real, e.imag], "error": err}
                for y, g, e, err in self.points
            ],
        }


def z2_transform_eigencheck(kappa, n, m, ys=(0.5, 1.0, 2.0), tol=1e-6, nodes=160):
    """Compare F f(y) with (-i)^{n+2m} f(y) at each y."""
    f = eigenfunction(kappa, n, m)
    factor = (-1j) ** (n + 2 * m)
    rep = TransformReport(kappa, n, m, tol=tol)
    for y in ys:
        got = complex(transform(f, kappa, y, nodes))
        exp = complex(factor * f(y))
        rep.points.append((float(y), got, exp, abs(got - exp)))
    if not rep.ok and nodes < 640:
        return z2_transform_eigencheck(kappa, n, m, ys, tol, nodes * 2)
    if not rep.ok:
        worst = max(err for *_, err in rep.points)
        raise ToleranceUnreachable(f"transform check error {worst:.3g} exceeds {tol}", error=worst)
    return rep
