import pytest

from frankl import kernels
from frankl.fixtures import (
    covert_example,
    dim_two_example,
    no_cover_example,
    optimal_not_abundant_example,
    tent_example,
)

BACKENDS = [kernels.python_backend] + (
    [kernels.compiled_backend] if kernels.compiled_backend is not None else []
)


@pytest.fixture(params=BACKENDS, ids=lambda b: b.BACKEND)
def backend(request):
    return request.param


@pytest.fixture
def covert_fam():
    return covert_example()


@pytest.fixture
def dim2_fam():
    return dim_two_example()


@pytest.fixture
def ona_fam():
    return optimal_not_abundant_example()


@pytest.fixture
def key_fam():
    return no_cover_example()


@pytest.fixture
def tent_pair():
    return tent_example()


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
