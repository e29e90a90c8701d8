"""Shared test helpers."""

from polegeom.fields import GF, QQ
from polegeom.forms import catalog_tags

# parameter choices satisfying each parametric row's condition per field
CATALOG_PARAMS = {
    "T10_1": {GF(3): 2, GF(5): 2, GF(7): 3, QQ: 2},
    "T11_1": {GF(3): 2, GF(5): 2, GF(7): 3, QQ: 2},
    "T10_2": {GF(2): 1},
    "T11_2": {GF(2): 1},
    "T12": {GF(7): 2, QQ: 2},
}


def desk_instances(fields=(GF(2), GF(3))):
    """All (tag, field, param) triples whose catalog conditions hold."""
    out = []
    for tag in catalog_tags():
        if tag in CATALOG_PARAMS:
            for field, lam in CATALOG_PARAMS[tag].items():
                if field in fields:
                    out.append((tag, field, lam))
        else:
            for field in fields:
                out.append((tag, field, None))
    return out
