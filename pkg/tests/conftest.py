from functools import cache

import pytest

from milnorfiber import catalog


@cache
def _built(name, params):
    return catalog.build(name, **dict(params))


@pytest.fixture(scope="session")
def curve():
    """Shared catalog curves; memo tables persist across tests."""

    def get(name, **params):
        return _built(name, tuple(sorted(params.items())))

    return get
