import functools

import numpy as np
import pytest

from multifiedler import fiedler_space, gen_family, laplacian, similarity

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@functools.lru_cache(maxsize=None)
def _space(family, n):
    return fiedler_space(laplacian(similarity(gen_family(family, n))))


@pytest.fixture(scope="session")
def space():
    """``space(family, n)`` -> cached FiedlerSpace of a case-study graph."""
    return _space


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
