import pytest

from plie.catalog import catalog_names, load_catalog

CATALOG = ("abelian-trivial", "heisenberg", "nontrivial-bi", "r3-lambda", "so3-dual")


@pytest.fixture(scope="session")
def catalog_models():
    """name -> (document, bialgebra, dual-side form, base-side form)."""
    models = {}
    for name in catalog_names():
        doc = load_catalog(name)
        bi = doc.bialgebra()
        a, am = doc.metrics()
        models[name] = (doc, bi, a, am)
    return models


@pytest.fixture(scope="session")
def r3_lambda(catalog_models):
    return catalog_models["r3-lambda"]


@pytest.fixture(scope="session")
def so3_dual(catalog_models):
    return catalog_models["so3-dual"]


@pytest.fixture(scope="session")
def heisenberg(catalog_models):
    return catalog_models["heisenberg"]


@pytest.fixture(scope="session")
def nontrivial_bi(catalog_models):
    return catalog_models["nontrivial-bi"]


@pytest.fixture(scope="session")
def abelian_trivial(catalog_models):
    return catalog_models["abelian-trivial"]
