"""Bundled golden copies of the orbit catalogs.

Three JSON documents cover every family and prime up to 23: table3 holds
the delta2 orbits, table4 the delta4 orbits and table2 their union.  Rows
are either ``Listed`` with the full sorted vector list or ``Complete``
(all of (Z/pZ)^4 minus zero, vectors omitted).
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

TABLE_NAMES = ("table2", "table3", "table4")
TABLE_SEEDS = {"table2": "union", "table3": "delta2", "table4": "delta4"}


@lru_cache(maxsize=None)
def golden_table(name: str) -> dict:
    if name not in TABLE_NAMES:
        raise KeyError(f"unknown table {name!r}")
    ref = resources.files("cyorbits").joinpath(f"data/golden/{name}.json")
    return json.loads(ref.read_text(encoding="utf-8"))


def golden_rows(name: str) -> list:
    return golden_table(name)["rows"]


def _listed_vectors(name: str, d: int, k: int, p: int) -> frozenset:
    for row in golden_rows(name):
        if (row["d"], row["k"], row["p"]) == (d, k, p):
            return frozenset(tuple(v) for v in row["vectors"])
    raise KeyError(f"no golden row for ({d},{k}) p={p} in {name}")


@lru_cache(maxsize=None)
def quintic_reference_lists() -> tuple:
    """The four quintic lists the conjecture screen tests against.

    Order: (torus mod 2, torus mod 5, sphere mod 2, sphere mod 5), i.e. the
    delta2 orbits at p = 2, 5 followed by the delta4 orbits at p = 2, 5.
    """
    return (
        _listed_vectors("table3", 5, 5, 2),
        _listed_vectors("table3", 5, 5, 5),
        _listed_vectors("table4", 5, 5, 2),
        _listed_vectors("table4", 5, 5, 5),
    )
