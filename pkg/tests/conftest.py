import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from dunkl.calculus.context import DunklContext, MultiplicitySpec
from dunkl.poly import Polynomial
from dunkl.roots import build_root_system
from dunkl.scalar import Scalar

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_fractions = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)


def exponents(d, max_deg):
    from dunkl.poly import monomial_basis

    return st.sampled_from([e for n in range(max_deg + 1) for e in monomial_basis(d, n)])


def polynomials(d, max_deg=4, max_terms=4, homogeneous=None):
    from dunkl.poly import monomial_basis

    exps = exponents(d, max_deg) if homogeneous is None else st.sampled_from(monomial_basis(d, homogeneous))
    return st.dictionaries(exps, small_fractions, max_size=max_terms).map(
        lambda t: Polynomial(d, {e: Scalar.of(c) for e, c in t.items()})
    )


def symbolic(tag, n=None):
    rs = build_root_system(tag, n)
    if rs.num_classes > 2:
        mult = MultiplicitySpec.symbolic(rs, params=[0, 1], extra=[Fraction(1, 3)] * (rs.num_classes - 2))
    else:
        mult = MultiplicitySpec.symbolic(rs)
    return DunklContext(rs, mult)


@pytest.fixture(autouse=True)
def _no_user_cache(monkeypatch):
    monkeypatch.delenv("DUNKL_CACHE_DIR", raising=False)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for name in sorted(lines, key=lambda s: int(s[2:])):
            terminalreporter.write_line(lines[name])
