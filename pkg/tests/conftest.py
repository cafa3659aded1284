import os
from pathlib import Path

import pytest

from orthosemi import corpus_up_to

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """Corpus cache shared by the whole run; ORTHOSEMI_CACHE reuses a warm one."""
    env = os.environ.get("ORTHOSEMI_CACHE")
    return Path(env) if env else tmp_path_factory.mktemp("corpus")


@pytest.fixture(scope="session")
def small_corpus(cache_dir):
    """Every semigroup of order <= 4 up to isomorphism."""
    return corpus_up_to(4, "iso", cache_dir)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
