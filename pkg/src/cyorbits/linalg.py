"""Exact 4x4 linear algebra over Z, Q and Z/pZ.

Matrices are tuples of 4 row tuples, vectors are 4-tuples; entries are
plain Python ints, so nothing ever overflows or rounds.  Vectors act on
the right: v -> v.M.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple  # (n1, n2, n3, n4)
Mat = tuple  # ((a11, .., a14), ..., (a41, .., a44))

IDENTITY: Mat = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
)
ZERO_VEC: Vec = (0, 0, 0, 0)


def mat_from_rows(rows: Sequence[Sequence[int]]) -> Mat:
    """Build a 4x4 integer matrix, validating the shape."""
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ValueError("expected 4 rows of 4 entries")
    return tuple(tuple(int(x) for x in r) for r in rows)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def trace(a: Mat) -> int:
    return a[0][0] + a[1][1] + a[2][2] + a[3][3]


def mat_mul(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(4)) for j in range(4))
        for i in range(4)
    )


def mat_pow(a: Mat, m: int) -> Mat:
    """a**m by binary exponentiation; m must be >= 0, a**0 is the identity."""
    if m < 0:
        raise ValueError("negative exponent; invert first")
    result = IDENTITY
    base = a
    while m:
        if m & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        m >>= 1
    return result


def vec_mat(v: Vec, a: Mat) -> Vec:
    """Right action of a matrix on a row vector."""
    return tuple(
        v[0] * a[0][j] + v[1] * a[1][j] + v[2] * a[2][j] + v[3] * a[3][j]
        for j in range(4)
    )


def mat_mod(a: Mat, p: int) -> Mat:
    """Entrywise least-nonnegative residue in [0, p)."""
    return tuple(tuple(x % p for x in row) for row in a)


def vec_mod(v: Vec, p: int) -> Vec:
    return tuple(x % p for x in v)


def vec_mat_mod(v: Vec, a: Mat, p: int) -> Vec:
    return tuple(
        (v[0] * a[0][j] + v[1] * a[1][j] + v[2] * a[2][j] + v[3] * a[3][j]) % p
        for j in range(4)
    )


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def det(a: Mat) -> int:
    """Exact determinant by cofactor expansion along the first row."""
    total = 0
    for j in range(4):
        if a[0][j] == 0:
            continue
        minor = [[a[r][c] for c in range(4) if c != j] for r in (1, 2, 3)]
        total += (-1) ** j * a[0][j] * _det3(minor)
    return total


def adjugate(a: Mat) -> Mat:
    adj = [[0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            minor = [[a[r][c] for c in range(4) if c != j] for r in range(4) if r != i]
            adj[j][i] = (-1) ** (i + j) * _det3(minor)
    return tuple(tuple(row) for row in adj)


def mat_inverse(a: Mat) -> Mat:
    """Exact integer inverse via the adjugate; requires det(a) = +-1."""
    d = det(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    adj = adjugate(a)
    if d == 1:
        return adj
    return tuple(tuple(-x for x in row) for row in adj)


def charpoly(a: Mat) -> tuple:
    """Monic characteristic polynomial det(xI - a) as integer coefficients.

    Returned degree-descending: (1, c3, c2, c1, c0).  Computed with the
    Faddeev-LeVerrier recurrence; every division is exact over Z.
    """
    coeffs = [1]
    b = a
    c = -trace(b)
    coeffs.append(c)
    for k in range(2, 5):
        shifted = tuple(
            tuple(b[i][j] + (c if i == j else 0) for j in range(4)) for i in range(4)
        )
        b = mat_mul(a, shifted)
        t = trace(b)
        if t % k != 0:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        c = -t // k
        coeffs.append(c)
    return tuple(coeffs)


def rank(a: Mat) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in a]
    rnk = 0
    col = 0
    while rnk < 4 and col < 4:
        pivot = next((i for i in range(rnk, 4) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rnk], rows[pivot] = rows[pivot], rows[rnk]
        inv = Fraction(1) / rows[rnk][col]
        rows[rnk] = [x * inv for x in rows[rnk]]
        for i in range(4):
            if i != rnk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rnk])]
        rnk += 1
        col += 1
    return rnk


# ---------------- primality ----------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


# ---------------- invariant skew forms ----------------

_SKEW_SLOTS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _skew_from_coeffs(w: Sequence) -> Mat:
    m = [[0] * 4 for _ in range(4)]
    for (i, j), x in zip(_SKEW_SLOTS, w):
        m[i][j] = x
        m[j][i] = -x
    return tuple(tuple(row) for row in m)


def _nullspace(rows: list, n: int) -> list:
    """Nullspace basis of a rational matrix, from the reduced row echelon form."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -m[ri][free]
        basis.append(v)
    return basis


def _primitive_integer(v: Sequence) -> list:
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def solve_invariant_skew_form(gens: Iterable[Mat]) -> list:
    """Basis of the skew forms W with G W G^T = W for every generator G.

    Solved exactly over Q, then each basis element is scaled to a primitive
    integer matrix whose first nonzero entry (row-major) is positive.  An
    empty list means only the zero form is invariant.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    rows = []
    for g in gens:
        images = []
        for w in range(6):
            e = [0] * 6
            e[w] = 1
            omega = _skew_from_coeffs(e)
            g_omega_gt = mat_mul(mat_mul(g, omega), transpose(g))
            images.append((g_omega_gt, omega))
        for i, j in _SKEW_SLOTS:
            rows.append([Fraction(img[i][j] - om[i][j]) for img, om in images])
    return [_skew_from_coeffs(_primitive_integer(v)) for v in _nullspace(rows, 6)]
