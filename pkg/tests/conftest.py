import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from blowup_bundles.algebra import BiLaurentPoly, GaussianRational, Matrix2  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars(draw, nonzero=False):
    re = draw(small_fractions)
    im = draw(st.one_of(st.just(0), small_fractions))
    c = GaussianRational(re, im)
    if nonzero and not c:
        c = GaussianRational(1)
    return c


@st.composite
def polys(draw, trunc=2, lo=-3, hi=3, max_terms=5):
    keys = draw(st.lists(st.tuples(st.integers(lo, hi), st.integers(0, trunc)),
                         max_size=max_terms, unique=True))
    return BiLaurentPoly({k: draw(scalars()) for k in keys}, trunc)


@st.composite
def unit_matrices(draw, trunc=2):
    """Matrices whose determinant at u = 0 is a nonzero constant.

    Built as an upper unipotent times a lower unipotent times a constant
    diagonal, then perturbed at positive u-order.
    """
    e = draw(polys(trunc=0, lo=-2, hi=2, max_terms=2)).with_trunc(trunc)
    f = draw(polys(trunc=0, lo=-2, hi=2, max_terms=2)).with_trunc(trunc)
    d1, d2 = draw(scalars(nonzero=True)), draw(scalars(nonzero=True))
    M = Matrix2(1, e, 0, 1, trunc) @ Matrix2(1, 0, f, 1, trunc) @ Matrix2.diag(d1, d2, trunc)
    pert = [draw(polys(trunc=trunc, max_terms=2)) for _ in range(4)]
    pert = [BiLaurentPoly({k: c for k, c in p.terms.items() if k[1] >= 1}, trunc) for p in pert]
    return M + Matrix2(*pert, trunc=trunc)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
