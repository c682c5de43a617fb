"""The fourteen one-parameter mirror Calabi-Yau families and their monodromy.

Each family is a tuple (d, k, A, B) plus the A-model label of the threefold.
The local monodromy around the maximally-unipotent point is

    M0 = [[1, 1, 0, 0], [0, 1, 0, 0], [d, d, 1, 0], [0, -k, -1, 1]]

and around the conifold point M1 = Id + E(2,4); the third operator is fixed
by M0 * M1 * Minf = Id.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .linalg import (
    IDENTITY,
    Mat,
    Vec,
    mat_inverse,
    mat_mod,
    mat_mul,
    mat_pow,
    vec_mat,
)

DELTA2: Vec = (0, 1, 0, 0)
DELTA4: Vec = (0, 0, 0, 1)

M1: Mat = (
    (1, 0, 0, 0),
    (0, 1, 0, 1),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
)


@dataclass(frozen=True)
class Family:
    d: int
    k: int
    A: Fraction
    B: Fraction
    label: str

    @property
    def dk(self) -> tuple:
        return (self.d, self.k)

    def __str__(self) -> str:
        return f"({self.d},{self.k})"


_F = Fraction

CATALOG: tuple = (
    Family(5, 5, _F(1, 5), _F(2, 5), "X(5) ⊂ P4"),
    Family(2, 4, _F(1, 8), _F(3, 8), "X(8) ⊂ P4(1,1,1,1,4)"),
    Family(1, 4, _F(1, 12), _F(5, 12), "X(2,12) ⊂ P5(1,1,1,1,4,6)"),
    Family(16, 8, _F(1, 2), _F(1, 2), "X(2,2,2,2) ⊂ P7"),
    Family(12, 7, _F(1, 3), _F(1, 2), "X(2,2,3) ⊂ P6"),
    Family(8, 6, _F(1, 4), _F(1, 2), "X(2,4) ⊂ P5"),
    Family(4, 5, _F(1, 6), _F(1, 2), "X(2,6) ⊂ P5(1,1,1,1,1,3)"),
    Family(2, 3, _F(1, 4), _F(1, 3), "X(4,6) ⊂ P5(1,1,1,2,2,3)"),
    Family(1, 2, _F(1, 6), _F(1, 6), "X(6,6) ⊂ P5(1,1,2,2,3,3)"),
    Family(6, 5, _F(1, 6), _F(1, 4), "X(3,4) ⊂ P5(1,1,1,1,1,2)"),
    Family(3, 4, _F(1, 6), _F(1, 3), "X(6) ⊂ P4(1,1,1,1,2)"),
    Family(1, 3, _F(1, 10), _F(3, 10), "X(5) ⊂ P4(1,1,1,2,5)"),
    Family(4, 4, _F(1, 4), _F(1, 4), "X(4,4) ⊂ P5(1,1,1,1,2,2)"),
    Family(9, 6, _F(1, 3), _F(1, 3), "X(3,3) ⊂ P5"),
)

_BY_DK = {f.dk: f for f in CATALOG}


def catalog() -> tuple:
    """All fourteen families, in catalog order."""
    return CATALOG


def family(d: int, k: int) -> Family:
    try:
        return _BY_DK[(d, k)]
    except KeyError:
        raise KeyError(f"no family with (d,k) = ({d},{k})") from None


def m0(fam: Family) -> Mat:
    d, k = fam.d, fam.k
    return (
        (1, 1, 0, 0),
        (0, 1, 0, 0),
        (d, d, 1, 0),
        (0, -k, -1, 1),
    )


def m1() -> Mat:
    return M1


def m_infinity(fam: Family) -> Mat:
    """The third monodromy operator, (M0 * M1)^-1."""
    return mat_inverse(mat_mul(m0(fam), M1))


def m0_power(fam: Family, m: int) -> Mat:
    """Closed form of M0**m.

    The off-diagonal entries are d*m, a_m = d*m(m+1)/2, b_m = d*m(1-m)/2 and
    c_m = d*m(1-m^2)/6 - k*m; each division is exact for every integer m, so
    negative exponents are fine too.
    """
    d, k = fam.d, fam.k
    a_m = d * (m * (m + 1) // 2)
    b_m = d * (m * (1 - m) // 2)
    c_m = d * (m * (1 - m * m) // 6) - k * m
    return (
        (1, m, 0, 0),
        (0, 1, 0, 0),
        (d * m, a_m, 1, 0),
        (b_m, c_m, -m, 1),
    )


# ---------------- quintic reference bases ----------------


class QuinticBases(NamedTuple):
    """The quintic monodromy written in two other standard bases.

    P conjugates T0, T1 into M0, M1; M conjugates S1 into M1 and S_inf
    into M0**5 (the fifth power reflecting the degree-5 cover between the
    two parameterizations of the family).
    """

    T0: Mat
    T1: Mat
    P: Mat
    S1: Mat
    S_INF: Mat
    M: Mat


def quintic_bases() -> QuinticBases:
    return QuinticBases(
        T0=((1, 1, 0, 0), (0, 1, 5, 0), (0, 0, 1, 1), (0, 0, 0, 1)),
        T1=((1, 0, 0, 0), (-5, 1, 0, 0), (-1, 0, 1, 0), (-1, 0, 0, 1)),
        P=((0, 0, 0, -1), (0, 5, 1, 0), (1, 1, 0, 0), (0, 1, 0, 0)),
        S1=((1, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0), (0, 0, 0, 1)),
        S_INF=((51, 90, -25, 0), (0, 1, 0, 0), (100, 175, -49, 0), (-75, -125, 35, 1)),
        M=((3, 0, 1, 0), (0, 1, 0, 0), (5, 0, 2, 0), (0, 0, 0, 1)),
    )


class Check(NamedTuple):
    name: str
    passed: bool


def verify_identities(bases: QuinticBases | None = None) -> list:
    """Exact consistency checks tying the three quintic bases together.

    Returns per-identity pass/fail results and never raises; pass a
    corrupted ``bases`` to exercise the failure paths.
    """
    b = bases if bases is not None else quintic_bases()
    quintic = family(5, 5)
    m0q = m0(quintic)
    checks = []

    p_inv = mat_inverse(b.P)
    checks.append(Check("P^-1 T0 P = M0", mat_mul(mat_mul(p_inv, b.T0), b.P) == m0q))
    checks.append(Check("P^-1 T1 P = M1", mat_mul(mat_mul(p_inv, b.T1), b.P) == M1))

    m_inv = mat_inverse(b.M)
    checks.append(Check("M^-1 S1 M = M1", mat_mul(mat_mul(m_inv, b.S1), b.M) == M1))
    checks.append(
        Check("M^-1 Sinf M = M0^5", mat_mul(mat_mul(m_inv, b.S_INF), b.M) == mat_pow(m0q, 5))
    )
    checks.append(
        Check(
            "delta2 and delta4 fixed by M",
            vec_mat(DELTA2, b.M) == DELTA2 and vec_mat(DELTA4, b.M) == DELTA4,
        )
    )
    return checks


def lemma_exponent(p: int) -> int:
    """Exponent e with M0**e = Id mod p: 4 at p=2, 9 at p=3, p otherwise."""
    if p == 2:
        return 4
    if p == 3:
        return 9
    return p


def verify_power_lemma(fam: Family, p: int) -> list:
    """Check M0**e = Id and M1**p = Id mod p for the family's generators."""
    e = lemma_exponent(p)
    identity_mod = mat_mod(IDENTITY, p)
    return [
        Check(
            f"M0^{e} = Id mod {p} for {fam}",
            mat_mod(mat_pow(m0(fam), e), p) == identity_mod,
        ),
        Check(
            f"M1^{p} = Id mod {p} for {fam}",
            mat_mod(mat_pow(M1, p), p) == identity_mod,
        ),
    ]
