from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from cycleib import GF, Q, Derivation, Element, Endo

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

FIELDS = [Q, GF(2), GF(3), GF(5), GF(7)]


@pytest.fixture(params=[Q, GF(5)], ids=["Q", "GF5"])
def fd(request):
    return request.param


fields = st.sampled_from(FIELDS)


def raw_scalars(fd, nonzero=False):
    if fd.p is None:
        s = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
    else:
        s = st.integers(0, fd.p - 1)
    return s.filter(bool) if nonzero else s


def elements(fd, max_index=8, min_index=1):
    return st.dictionaries(st.integers(min_index, max_index), raw_scalars(fd), max_size=5).map(
        lambda d: Element(fd, {n: fd.coerce(v) for n, v in d.items()})
    )


def gammas(fd, max_degree=6, first=None):
    base = st.lists(raw_scalars(fd), min_size=1, max_size=max_degree)
    if first == "zero":
        return base.map(lambda g: [0] + g[1:])
    if first == "one":
        return base.map(lambda g: [1] + g[1:])
    if first == "nonzero":
        return st.tuples(raw_scalars(fd, nonzero=True), base).map(lambda t: [t[0]] + t[1][1:])
    return base


def endos(fd, **kw):
    return gammas(fd, **kw).map(lambda g: Endo(fd, g))


def ders(fd, **kw):
    return gammas(fd, **kw).map(lambda g: Derivation(fd, g))


def with_field(build):
    """Strategy of (field, value) pairs, the value drawn by ``build(field)``."""
    return fields.flatmap(lambda f: st.tuples(st.just(f), build(f)))


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import report_lines

    lines = report_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
