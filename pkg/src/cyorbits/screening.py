"""Screening of integer homology classes against the quintic orbit lists.

A primitive class is a torus candidate when its mod-2 and mod-5 reductions
both land in the delta2 orbit lists, and a sphere candidate when both land
in the delta4 lists.  Candidate means exactly that: membership mod 2 and
mod 5 is a necessary condition for lying in the integral orbit, and the
conjecture under test is that it is also sufficient.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .families import DELTA2, DELTA4, family
from .golden import quintic_reference_lists
from .linalg import Vec, vec_mod
from .orbits import orbit_mod_p, primitive


class Verdict(Enum):
    TORUS_CANDIDATE = "TorusCandidate"
    SPHERE_CANDIDATE = "SphereCandidate"
    NEITHER = "Neither"
    NOT_PRIMITIVE = "NotPrimitive"
    ZERO = "Zero"


@lru_cache(maxsize=None)
def reference_lists() -> tuple:
    """Regenerate the four quintic lists and check them against the golden
    copies; a mismatch means the orbit engine drifted and is fatal.

    Order: (torus mod 2, torus mod 5, sphere mod 2, sphere mod 5).
    """
    quintic = family(5, 5)
    regenerated = (
        frozenset(orbit_mod_p(DELTA2, 2, quintic).vectors()),
        frozenset(orbit_mod_p(DELTA2, 5, quintic).vectors()),
        frozenset(orbit_mod_p(DELTA4, 2, quintic).vectors()),
        frozenset(orbit_mod_p(DELTA4, 5, quintic).vectors()),
    )
    if regenerated != quintic_reference_lists():
        raise RuntimeError(
            "regenerated quintic orbit lists disagree with the golden copies"
        )
    return regenerated


def conjecture_screen(v: Vec) -> Verdict:
    """Classify an integer class by its mod-2 and mod-5 orbit membership."""
    v = tuple(int(x) for x in v)
    if len(v) != 4:
        raise ValueError("expected a 4-component vector")
    if v == (0, 0, 0, 0):
        return Verdict.ZERO
    if not primitive(v):
        return Verdict.NOT_PRIMITIVE
    torus2, torus5, sphere2, sphere5 = reference_lists()
    mod2 = vec_mod(v, 2)
    mod5 = vec_mod(v, 5)
    if mod2 in torus2 and mod5 in torus5:
        return Verdict.TORUS_CANDIDATE
    if mod2 in sphere2 and mod5 in sphere5:
        return Verdict.SPHERE_CANDIDATE
    return Verdict.NEITHER
