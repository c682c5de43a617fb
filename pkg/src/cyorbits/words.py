"""Bounded search for monodromy words connecting integer classes.

Words live in the free group on M0 and M1.  The search is a breadth-first
enumeration of freely reduced words applied to a seed vector over Z, pruned
by an entry-size bound; a miss therefore proves nothing, while a hit is a
constructive witness that the target lies in the integral orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import Family, M1, m0
from .linalg import Mat, Vec, mat_inverse, vec_mat


@dataclass(frozen=True)
class Word:
    """Freely reduced word as (generator, exponent) factors, e.g.
    ``(("M0", -1), ("M1", 2))`` for M0^-1 M1^2."""

    factors: tuple

    def __post_init__(self):
        last = None
        for gen, exp in self.factors:
            if gen not in ("M0", "M1"):
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                raise ValueError("zero exponent in word")
            if gen == last:
                raise ValueError("adjacent factors share a generator")
            last = gen

    def __str__(self) -> str:
        if not self.factors:
            return "<empty>"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.factors)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.factors)


IDENTITY_WORD = Word(())


def _word_from_tokens(tokens) -> Word:
    factors = []
    for gen, step in tokens:
        if factors and factors[-1][0] == gen:
            factors[-1] = (gen, factors[-1][1] + step)
        else:
            factors.append((gen, step))
    return Word(tuple((g, e) for g, e in factors))


def generator_actions(fam: Family) -> dict:
    """Matrices for the four elementary steps M0, M0^-1, M1, M1^-1."""
    m0_mat = m0(fam)
    return {
        ("M0", 1): m0_mat,
        ("M0", -1): mat_inverse(m0_mat),
        ("M1", 1): M1,
        ("M1", -1): mat_inverse(M1),
    }


def apply_word(v: Vec, word: Word, fam: Family) -> Vec:
    actions = generator_actions(fam)
    out = tuple(v)
    for gen, exp in word.factors:
        step = actions[(gen, 1 if exp > 0 else -1)]
        for _ in range(abs(exp)):
            out = vec_mat(out, step)
    return out


def word_search(
    seed: Vec,
    target: Vec,
    fam: Family,
    max_len: int = 12,
    max_abs_entry: int = 10**6,
) -> Word | None:
    """Shortest word w with seed.w = target over Z, or None within bounds.

    Breadth-first over freely reduced words (a step never undoes the
    previous one); any image with an entry beyond ``max_abs_entry`` is
    pruned.  None means not found within the bounds, not nonexistence.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    seed = tuple(int(x) for x in seed)
    target = tuple(int(x) for x in target)
    bound = max(max(abs(x) for x in seed), max(abs(x) for x in target))
    if max_abs_entry < bound:
        raise ValueError(
            f"max_abs_entry = {max_abs_entry} is below the seed/target entries"
        )
    if seed == target:
        return IDENTITY_WORD

    actions = generator_actions(fam)
    inverse_token = {
        ("M0", 1): ("M0", -1),
        ("M0", -1): ("M0", 1),
        ("M1", 1): ("M1", -1),
        ("M1", -1): ("M1", 1),
    }
    parent: dict = {seed: None}
    frontier = [(seed, None)]
    for _ in range(max_len):
        nxt = []
        for v, last in frontier:
            for token, g in actions.items():
                if last is not None and token == inverse_token[last]:
                    continue
                w = vec_mat(v, g)
                if w in parent:
                    continue
                if any(abs(x) > max_abs_entry for x in w):
                    continue
                parent[w] = (v, token)
                if w == target:
                    return _reconstruct(parent, w)
                nxt.append((w, token))
        if not nxt:
            break
        frontier = nxt
    return None


def _reconstruct(parent: dict, end: Vec) -> Word:
    tokens = []
    node = end
    while parent[node] is not None:
        node, token = parent[node]
        tokens.append(token)
    tokens.reverse()
    return _word_from_tokens(tokens)
