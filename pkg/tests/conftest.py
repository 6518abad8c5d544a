import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--long-budget",
        action="store_true",
        default=False,
        help="run the stretch seed searches (several minutes)",
    )


@pytest.fixture
def long_budget(request) -> bool:
    return request.config.getoption("--long-budget")
