import pytest
from hypothesis import HealthCheck, settings

from hypcolor import certify

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--tier", default="default", choices=("default", "long"),
                     help="long: stream and verify every good independent set")


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(config.acceptance_lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_lines(request):
    return request.config.acceptance_lines


@pytest.fixture(scope="session")
def tier(request):
    return request.config.getoption("--tier")


@pytest.fixture(scope="session")
def ctx():
    return certify.Context()


@pytest.fixture(scope="session")
def long_graph(ctx):
    return ctx.long_graph


@pytest.fixture(scope="session")
def f5_graph(ctx):
    return ctx.f5_graph


@pytest.fixture(scope="session")
def good_sets(ctx):
    return ctx.good_sample(20)
