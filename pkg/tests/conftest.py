from functools import lru_cache

import pytest

from drumwidth.drum import make_drum
from drumwidth.family import build_Dk, build_santos, default_params
from drumwidth.polytope import VertexPolytope


@lru_cache(maxsize=None)
def dk(k: int):
    return build_Dk(default_params(k))


@lru_cache(maxsize=None)
def santos():
    return build_santos()


def trapezoid():
    return make_drum([(-2, -1), (2, -1), (-1, 1), (1, 1)])


def antiprism():
    # octahedron with two opposite triangles as skins
    return make_drum([(2, 0, 1), (-1, 1, 1), (-1, -1, 1), (-2, 0, -1), (1, 1, -1), (1, -1, -1)])


def square():
    return VertexPolytope([(1, 1), (1, -1), (-1, 1), (-1, -1)])


def octahedron():
    return VertexPolytope([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


def simplex(d: int):
    return VertexPolytope([tuple(0 for _ in range(d))] + [tuple(int(i == j) for i in range(d)) for j in range(d)])


@pytest.fixture(scope="session")
def d1():
    return dk(1)


@pytest.fixture(scope="session")
def d2():
    return dk(2)


_acceptance: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or report.failed:
            _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        num, _, rest = name[len("test_criterion_"):].partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d} {_acceptance[name]}  {rest.replace('_', ' ')}")
