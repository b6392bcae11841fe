import pytest

from cubicwalls.builtin import builtin_catalog
from cubicwalls.chambers import classify_decomposition, enumerate_chambers, merge_global


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def decs(catalog):
    return {e.key: enumerate_chambers(e) for e in catalog.types}


@pytest.fixture(scope="session")
def global_dec(catalog, decs):
    dec = merge_global(list(decs.values()), catalog.global_chambers)
    return classify_decomposition(dec)
