import pytest


def pytest_addoption(parser):
    parser.addoption("--include-n9", action="store_true", default=False,
                     help="run the minutes-scale order-9 acceptance checks")


@pytest.fixture
def include_n9(request):
    return request.config.getoption("--include-n9")
