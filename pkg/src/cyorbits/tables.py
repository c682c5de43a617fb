"""Generation, serialization and golden diffing of the orbit catalogs.

table3 catalogs the delta2 orbits, table4 the delta4 orbits, table2 their
union, each over all fourteen families and the primes up to 23.  A row is
``Complete`` when the orbit fills (Z/pZ)^4 minus zero, otherwise ``Listed``
with the lexicographically sorted vectors.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .families import DELTA2, DELTA4, Family, catalog
from .golden import TABLE_NAMES, TABLE_SEEDS
from .orbits import is_complete, orbit_mod_p, orbit_union

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


@dataclass(frozen=True)
class TableRow:
    d: int
    k: int
    p: int
    seed_tag: str
    status: str
    vectors: tuple

    @property
    def complete(self) -> bool:
        return self.status == "Complete"


def _rows_for(fam: Family, p: int) -> dict:
    orbit2 = orbit_mod_p(DELTA2, p, fam)
    orbit4 = orbit_mod_p(DELTA4, p, fam)
    complete2 = is_complete(orbit2)
    complete4 = is_complete(orbit4)
    if complete2 or complete4:
        # a complete orbit already covers every nonzero vector
        union_complete, union = True, None
    else:
        union = orbit_union(orbit2, orbit4)
        union_complete = union.shape[0] == p**4 - 1

    def row(tag: str, complete: bool, vectors_fn) -> TableRow:
        # complete rows never materialize their vectors; at p = 23 that
        # would be ~280k tuples per row for nothing
        return TableRow(
            d=fam.d,
            k=fam.k,
            p=p,
            seed_tag=tag,
            status="Complete" if complete else "Listed",
            vectors=() if complete else tuple(vectors_fn()),
        )

    return {
        "table3": row("delta2", complete2, orbit2.vectors),
        "table4": row("delta4", complete4, orbit4.vectors),
        "table2": row(
            "union",
            union_complete,
            lambda: [tuple(int(x) for x in r) for r in union],
        ),
    }


def build_tables(primes=DEFAULT_PRIMES, threads: int = 1) -> dict:
    """Compute all three catalogs; returns {table name: [TableRow, ...]}.

    Jobs are independent per (family, prime); with threads > 1 they run on
    a pool and are reassembled in canonical order, so output is identical
    either way.
    """
    jobs = [(fam, p) for fam in catalog() for p in primes]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda job: _rows_for(*job), jobs))
    else:
        results = [_rows_for(fam, p) for fam, p in jobs]
    tables = {name: [] for name in TABLE_NAMES}
    for cell in results:
        for name in TABLE_NAMES:
            tables[name].append(cell[name])
    return tables


# ---------------- serialization ----------------


def format_vector(v) -> str:
    return "(" + " ".join(str(int(x)) for x in v) + ")"


def rows_to_json(name: str, rows, primes=DEFAULT_PRIMES) -> str:
    doc = {
        "table": name,
        "seed": TABLE_SEEDS[name],
        "primes": list(primes),
        "rows": [
            {
                "d": r.d,
                "k": r.k,
                "p": r.p,
                "seed_tag": r.seed_tag,
                "status": r.status,
                "vectors": [list(v) for v in r.vectors],
            }
            for r in rows
        ],
    }
    return json.dumps(doc, indent=1) + "\n"


def rows_to_csv(rows) -> str:
    lines = ["d,k,p,seed_tag,status,vector"]
    for r in rows:
        if r.complete:
            lines.append(f"{r.d},{r.k},{r.p},{r.seed_tag},Complete,")
        else:
            for v in r.vectors:
                vec = " ".join(str(x) for x in v)
                lines.append(f"{r.d},{r.k},{r.p},{r.seed_tag},Listed,{vec}")
    return "\n".join(lines) + "\n"


def rows_to_markdown(name: str, rows) -> str:
    lines = [
        f"# {name} ({TABLE_SEEDS[name]} orbits)",
        "",
        "| (d,k) | p | orbit |",
        "|---|---|---|",
    ]
    for r in rows:
        cell = "Complete" if r.complete else ", ".join(format_vector(v) for v in r.vectors)
        lines.append(f"| ({r.d},{r.k}) | {r.p} | {cell} |")
    return "\n".join(lines) + "\n"


def render_table(name: str, rows, fmt: str) -> str:
    if fmt == "json":
        return rows_to_json(name, rows)
    if fmt == "csv":
        return rows_to_csv(rows)
    if fmt == "md":
        return rows_to_markdown(name, rows)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------- golden diff ----------------


def diff_rows(name: str, computed, reference) -> list:
    """Compare computed rows against reference rows; returns mismatch
    descriptions, empty when identical."""
    problems = []
    ref_by_key = {(r["d"], r["k"], r["p"]): r for r in reference}
    seen = set()
    for row in computed:
        key = (row.d, row.k, row.p)
        seen.add(key)
        ref = ref_by_key.get(key)
        if ref is None:
            problems.append(f"{name}: no reference row for (d,k)=({row.d},{row.k}) p={row.p}")
            continue
        if row.status != ref["status"]:
            problems.append(
                f"{name}: ({row.d},{row.k}) p={row.p}: status {row.status} != {ref['status']}"
            )
            continue
        ref_vecs = [tuple(v) for v in ref["vectors"]]
        if list(row.vectors) != ref_vecs:
            problems.append(
                f"{name}: ({row.d},{row.k}) p={row.p}: vector list differs"
            )
    for key in ref_by_key.keys() - seen:
        problems.append(f"{name}: computed output missing row (d,k)=({key[0]},{key[1]}) p={key[2]}")
    return problems


def load_reference_dir(path) -> dict:
    """Read previously emitted table JSON files from a directory."""
    import pathlib

    refs = {}
    for name in TABLE_NAMES:
        fp = pathlib.Path(path) / f"{name}.json"
        if not fp.is_file():
            raise FileNotFoundError(f"missing reference file {fp}")
        refs[name] = json.loads(fp.read_text(encoding="utf-8"))["rows"]
    return refs
