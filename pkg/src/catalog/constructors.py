"""
Direct constructors for the built-in groups.
"""
from src.catalog.entry import ParameterAssignment
from src.catalog.instances import instantiate
from src.catalog.loader import builtin_catalog


def _build(entry_id, p, **params):
    catalog = builtin_catalog()
    return instantiate(catalog.get(entry_id), ParameterAssignment.of(p, **params), catalog=catalog)


def cyclic(p, n):
    return _build("C", p, n=n)


def redei_metacyclic(p, n, m):
    """M_p(n, m)."""
    return _build("Mpnm", p, n=n, m=m)


def redei_nonmetacyclic(p, n, m):
    """M_p(n, m, 1)."""
    return _build("Mpnm1", p, n=n, m=m)


def dihedral(n):
    """D_(2^n), of order 2^n."""
    return _build("D", 2, n=n)
