"""Shared fixtures: the running (2,1,3,2) example and a few small compositions."""

import pytest

from parinv import config as config_module
from parinv.generators import invariant_builder
from parinv.roots import Composition, Root, build_generator_set


def R(i: int, j: int) -> Root:
    return Root(i, j)


def roots(*pairs) -> frozenset:
    return frozenset(Root(i, j) for i, j in pairs)


@pytest.fixture
def comp_2132() -> Composition:
    return Composition((2, 1, 3, 2))


@pytest.fixture
def comp_121() -> Composition:
    return Composition((1, 2, 1))


@pytest.fixture
def gens_2132(comp_2132):
    return build_generator_set(comp_2132)


@pytest.fixture
def builder_2132(comp_2132):
    return invariant_builder(comp_2132)


@pytest.fixture
def builder_121(comp_121):
    return invariant_builder(comp_121)


@pytest.fixture
def space_2132(builder_2132):
    return builder_2132.space


@pytest.fixture
def clean_env(monkeypatch):
    """No PARINV_* settings leak in from the environment, and no global config."""
    for key in ("PARINV_LOG", "PARINV_N_LIMIT", "PARINV_WORKERS", "PARINV_SEED", "PARINV_TRIALS"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setattr(config_module, "load_dotenv", lambda *args, **kwargs: False)
    monkeypatch.setattr(config_module, "config", None)
    return monkeypatch
