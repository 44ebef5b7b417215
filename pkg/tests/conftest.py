import pytest

from chevlie import build, construct


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run exhaustive checks on the large exceptional types",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def get_rs():
    cache = {}

    def factory(name):
        if name not in cache:
            cache[name] = build(name)
        return cache[name]

    return factory


@pytest.fixture(scope="session")
def get_alg(get_rs):
    cache = {}

    def factory(name, tie_break="lex"):
        key = (name, tie_break)
        if key not in cache:
            cache[key] = construct(get_rs(name), tie_break=tie_break)
        return cache[key]

    return factory
