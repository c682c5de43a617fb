"""Exact monodromy orbits for the fourteen hypergeometric mirror
Calabi-Yau threefold families, with a numerical Picard-Fuchs cross-check."""

from .families import (
    CATALOG,
    DELTA2,
    DELTA4,
    Family,
    M1,
    catalog,
    family,
    m0,
    m0_power,
    m_infinity,
    quintic_bases,
    verify_identities,
    verify_power_lemma,
)
from .linalg import (
    IDENTITY,
    charpoly,
    det,
    is_prime,
    mat_inverse,
    mat_mod,
    mat_mul,
    mat_pow,
    rank,
    solve_invariant_skew_form,
    vec_mat,
    vec_mod,
)
from .orbits import (
    OrbitSet,
    is_complete,
    orbit_mod_p,
    orbit_mod_p_double_loop,
    orbit_union,
    primitive,
)
from .picard_fuchs import (
    MonodromyEstimate,
    ODEParams,
    PathSpec,
    compare_invariants,
    integrate_path,
    theta_frame_system,
)
from .screening import Verdict, conjecture_screen, reference_lists
from .tables import DEFAULT_PRIMES, TableRow, build_tables
from .words import Word, apply_word, word_search

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "DEFAULT_PRIMES",
    "DELTA2",
    "DELTA4",
    "Family",
    "IDENTITY",
    "M1",
    "MonodromyEstimate",
    "ODEParams",
    "OrbitSet",
    "PathSpec",
    "TableRow",
    "Verdict",
    "Word",
    "apply_word",
    "build_tables",
    "catalog",
    "charpoly",
    "compare_invariants",
    "conjecture_screen",
    "det",
    "family",
    "integrate_path",
    "is_complete",
    "is_prime",
    "m0",
    "m0_power",
    "m_infinity",
    "mat_inverse",
    "mat_mod",
    "mat_mul",
    "mat_pow",
    "orbit_mod_p",
    "orbit_mod_p_double_loop",
    "orbit_union",
    "primitive",
    "quintic_bases",
    "rank",
    "reference_lists",
    "solve_invariant_skew_form",
    "theta_frame_system",
    "vec_mat",
    "vec_mod",
    "verify_identities",
    "verify_power_lemma",
    "word_search",
]
