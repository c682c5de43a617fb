"""Orbits of homology classes under the monodromy group, over Z/pZ.

The closure is computed with a worklist over the two generators only:
because M0 and M1 act bijectively on the finite set (Z/pZ)^4, the smallest
set containing the seed and stable under v -> v.M0 and v -> v.M1 already
equals the full orbit of the group they generate (inverses come for free).
A literal fixpoint sweep over the words M1^j M0^i with i, j <= p is kept
alongside as an independent reference implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .families import Family, M1, m0
from .linalg import Vec, mat_mod, mat_mul, mat_pow, require_prime, vec_mod

# p**4 bookkeeping arrays grow fast; past this the orbit will not fit in a
# sane amount of memory anyway.
MAX_PRIME = 97


@dataclass(eq=False)
class OrbitSet:
    """An orbit mod p together with its provenance.

    ``members`` is an (N, 4) read-only array of residue vectors sorted
    lexicographically.  Treat instances as immutable.
    """

    family: Family
    p: int
    seed: Vec
    members: np.ndarray

    def __len__(self) -> int:
        return int(self.members.shape[0])

    def __contains__(self, v) -> bool:
        if len(v) != 4:
            return False
        key = _pack_one(vec_mod(tuple(v), self.p), self.p)
        i = int(np.searchsorted(self._packed, key))
        return i < self._packed.size and int(self._packed[i]) == key

    def vectors(self) -> list:
        """Members as a lexicographically sorted list of 4-tuples."""
        return [tuple(int(x) for x in row) for row in self.members]

    @cached_property
    def _packed(self) -> np.ndarray:
        return np.sort(_pack(self.members.astype(np.int64), self.p))


def _pack(rows: np.ndarray, p: int) -> np.ndarray:
    # membership key n1 + n2*p + n3*p^2 + n4*p^3; a machine word holds it
    # for every supported prime
    return rows[:, 0] + p * (rows[:, 1] + p * (rows[:, 2] + p * rows[:, 3]))


def _pack_one(v: Vec, p: int) -> int:
    return v[0] + p * (v[1] + p * (v[2] + p * v[3]))


def _unpack(keys: np.ndarray, p: int) -> np.ndarray:
    out = np.empty((keys.size, 4), dtype=np.int64)
    r = keys
    for i in range(4):
        out[:, i] = r % p
        r = r // p
    return out


def _lex_sorted(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort((rows[:, 3], rows[:, 2], rows[:, 1], rows[:, 0]))
    return rows[order]


def orbit_mod_p(seed: Vec, p: int, fam: Family) -> OrbitSet:
    """Smallest subset of (Z/pZ)^4 containing the seed and closed under
    right multiplication by M0 and M1 mod p."""
    require_prime(p)
    if p > MAX_PRIME:
        raise ValueError(f"p = {p} exceeds the supported bound {MAX_PRIME}")
    if len(seed) != 4:
        raise ValueError("seed must have 4 components")

    gens = [
        np.array(mat_mod(m0(fam), p), dtype=np.int64),
        np.array(mat_mod(M1, p), dtype=np.int64),
    ]
    member = np.zeros(p**4, dtype=bool)
    start = _pack_one(vec_mod(tuple(seed), p), p)
    member[start] = True
    frontier = np.array([start], dtype=np.int64)
    while frontier.size:
        rows = _unpack(frontier, p)
        fresh_parts = []
        for g in gens:
            keys = np.unique(_pack((rows @ g) % p, p))
            fresh = keys[~member[keys]]
            member[fresh] = True
            fresh_parts.append(fresh)
        frontier = np.concatenate(fresh_parts)

    found = _lex_sorted(_unpack(np.flatnonzero(member), p))
    found = found.astype(np.min_scalar_type(p - 1))
    found.setflags(write=False)
    return OrbitSet(family=fam, p=p, seed=tuple(int(x) for x in seed), members=found)


def orbit_mod_p_double_loop(seed: Vec, p: int, fam: Family) -> list:
    """Reference fixpoint enumeration over the words M1^j M0^i, i, j <= p.

    Sweeps the current list, appending every unseen image w * M1^j * M0^i,
    and repeats until a sweep adds nothing.  Quadratic in the orbit size;
    only meant to cross-check :func:`orbit_mod_p` at small primes.
    """
    require_prime(p)
    m0_pows = [mat_mod(mat_pow(m0(fam), i), p) for i in range(p + 1)]
    m1_pows = [mat_mod(mat_pow(M1, j), p) for j in range(p + 1)]
    words = [
        mat_mod(mat_mul(m1_pows[j], m0_pows[i]), p)
        for j in range(p + 1)
        for i in range(p + 1)
    ]

    orb = [vec_mod(tuple(seed), p)]
    seen = {orb[0]}
    grew = True
    while grew:
        length = len(orb)
        for l in range(length):
            v0, v1, v2, v3 = orb[l]
            for w in words:
                r0, r1, r2, r3 = w
                image = (
                    (v0 * r0[0] + v1 * r1[0] + v2 * r2[0] + v3 * r3[0]) % p,
                    (v0 * r0[1] + v1 * r1[1] + v2 * r2[1] + v3 * r3[1]) % p,
                    (v0 * r0[2] + v1 * r1[2] + v2 * r2[2] + v3 * r3[2]) % p,
                    (v0 * r0[3] + v1 * r1[3] + v2 * r2[3] + v3 * r3[3]) % p,
                )
                if image not in seen:
                    seen.add(image)
                    orb.append(image)
        grew = len(orb) > length
    return sorted(seen)


def is_complete(orbit: OrbitSet) -> bool:
    """True when the orbit is all of (Z/pZ)^4 minus the zero vector."""
    return len(orbit) == orbit.p**4 - 1 and (0, 0, 0, 0) not in orbit


def orbit_union(a: OrbitSet, b: OrbitSet) -> np.ndarray:
    """Union of two orbits at the same prime and family, sorted as
    :attr:`OrbitSet.members`."""
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} != {b.p}")
    if a.family != b.family:
        raise ValueError(f"family mismatch: {a.family} != {b.family}")
    keys = np.union1d(
        _pack(a.members.astype(np.int64), a.p),
        _pack(b.members.astype(np.int64), b.p),
    )
    rows = _lex_sorted(_unpack(keys, a.p)).astype(np.min_scalar_type(a.p - 1))
    rows.setflags(write=False)
    return rows


def primitive(v: Vec) -> bool:
    """True when the components have no common factor."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g == 1
