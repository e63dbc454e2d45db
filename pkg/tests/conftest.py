from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cevian_lab import INF, ExtParam

# --- hypothesis strategies -------------------------------------------------

small_ints = st.integers(min_value=-20, max_value=20)


@st.composite
def ext_params(draw, bound=20):
    special = draw(st.sampled_from([None, None, None, ExtParam(0, 1), INF, ExtParam(-1, 1)]))
    if special is not None:
        return special
    num = draw(st.integers(-bound, bound))
    den = draw(st.integers(-bound, bound).filter(lambda d: d != 0))
    return ExtParam(num, den)


finite_rationals = st.builds(
    Fraction,
    st.integers(-50, 50),
    st.integers(1, 50),
)

rational_points = st.tuples(finite_rationals, finite_rationals)


# --- a test-side oracle, independent of the package ------------------------
#
# Plain affine geometry with Fractions: cevian feet from the vector relation
# BD = t DC, intersections by Cramer's rule, areas by the shoelace formula.
# Only finite parameters other than -1 are supported.

def foot(P1, P2, t):
    """D on line P1P2 with P1D = t * DP2."""
    t = Fraction(t)
    return ((P1[0] + t * P2[0]) / (1 + t), (P1[1] + t * P2[1]) / (1 + t))


def intersect(a1, a2, b1, b2):
    """Intersection of lines a1a2 and b1b2, or None when parallel."""
    d1 = (a2[0] - a1[0], a2[1] - a1[1])
    d2 = (b2[0] - b1[0], b2[1] - b1[1])
    den = d1[0] * (-d2[1]) - d1[1] * (-d2[0])
    if den == 0:
        return None
    rx, ry = b1[0] - a1[0], b1[1] - a1[1]
    lam = (rx * (-d2[1]) - ry * (-d2[0])) / den
    return (a1[0] + lam * d1[0], a1[1] + lam * d1[1])


def shoelace(p, q, r):
    return ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])) / 2


def brute_routh_points(A, B, C, x, y, z, u, v, w):
    Ax, Au = foot(B, C, x), foot(B, C, u)
    By, Bv = foot(C, A, y), foot(C, A, v)
    Cz, Cw = foot(A, B, z), foot(A, B, w)
    P = intersect(A, Ax, B, Bv)
    Q = intersect(B, By, C, Cw)
    R = intersect(C, Cz, A, Au)
    return P, Q, R


def brute_ratio(x, y, z, u, v, w, A=(0, 0), B=(1, 0), C=(0, 1)):
    A, B, C = [(Fraction(a), Fraction(b)) for a, b in (A, B, C)]
    P, Q, R = brute_routh_points(A, B, C, x, y, z, u, v, w)
    return shoelace(P, Q, R) / shoelace(A, B, C)


# --- acceptance summary ----------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def canonical():
    from cevian_lab import Triangle

    return Triangle.canonical()
