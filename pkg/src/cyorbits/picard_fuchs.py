"""Numerical monodromy of the order-4 hypergeometric Picard-Fuchs operator.

The operator (theta^4 - phi (theta+A)(theta+1-A)(theta+B)(theta+1-B)) y = 0
with theta = phi d/dphi is written first-order in the state
Y = (y, theta y, theta^2 y, theta^3 y):

    theta Y = N(phi) Y,   dY/dphi = N(phi) Y / phi,

where N has ones on the superdiagonal and last row
phi/(1-phi) * [ab, a+b, 1+a+b, 2] with a = A(1-A), b = B(1-B).  A
fundamental matrix is transported around loops at the three singular
points 0, 1, infinity; only conjugation-invariant data (characteristic
polynomial coefficients, Jordan-type ranks) is compared against the exact
integer monodromy, since the numerical frame is not the integer basis.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import solve_ivp

from . import families
from .families import Family
from .linalg import charpoly, mat_inverse

SINGULAR_MARGIN = 0.1
ERR_FLOOR = 1e-15
_REFINE = 0.01  # error pass reruns the transport at tol * _REFINE


class PathError(ValueError):
    """Raised when a loop would come too close to a singular point."""


class IntegrationError(RuntimeError):
    """Raised when the transport fails or produces non-finite values."""


@dataclass(frozen=True)
class ODEParams:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        if not (0 < self.A < 1 and 0 < self.B < 1):
            raise ValueError("exponents must lie in (0, 1)")

    @classmethod
    def from_family(cls, fam: Family) -> "ODEParams":
        return cls(A=fam.A, B=fam.B)

    @property
    def a(self) -> Fraction:
        return self.A * (1 - self.A)

    @property
    def b(self) -> Fraction:
        return self.B * (1 - self.B)


@dataclass(frozen=True)
class PathSpec:
    """Counterclockwise lasso: base point, straight run to the circle of
    the given radius around the center, once around, and back.  The center
    "inf" is realized as the composite of the 0- and 1-loops, reversed.
    ``samples`` controls how densely path invariants are spot-checked."""

    base: complex = 0.5 + 0.25j
    center: object = 0  # 0, 1 or "inf"
    radius: float = 0.45
    samples: int = 2000

    def __post_init__(self):
        if self.center not in (0, 1, "inf"):
            raise ValueError('center must be 0, 1 or "inf"')
        if self.radius < 0:
            raise ValueError("radius must be >= 0")
        if self.samples < 2:
            raise ValueError("samples must be >= 2")


@dataclass(frozen=True)
class MonodromyEstimate:
    """Transported fundamental matrix with a step-refinement error estimate
    (operator norm) and the worst sampled drift of det(Y) away from the
    trace-integral prediction."""

    matrix: np.ndarray
    err: float
    det_dev: float


def theta_frame_system(params: ODEParams, phi: complex) -> np.ndarray:
    """The matrix N(phi) with theta Y = N(phi) Y; phi = 0, 1 are excluded."""
    if phi == 0 or phi == 1:
        raise ValueError(f"phi = {phi} is a singular point")
    a = float(params.a)
    b = float(params.b)
    g = phi / (1.0 - phi)
    n = np.zeros((4, 4), dtype=complex)
    n[0, 1] = n[1, 2] = n[2, 3] = 1.0
    n[3] = (g * a * b, g * (a + b), g * (1.0 + a + b), 2.0 * g)
    return n


# ---------------- path geometry ----------------


@dataclass(frozen=True)
class _Line:
    z0: complex
    z1: complex

    def phi(self, t):
        return self.z0 + t * (self.z1 - self.z0)

    def dphi(self, t):
        return self.z1 - self.z0

    def reversed(self):
        return _Line(self.z1, self.z0)


@dataclass(frozen=True)
class _Arc:
    center: complex
    radius: float
    a0: float
    a1: float

    def phi(self, t):
        return self.center + self.radius * cmath.exp(1j * (self.a0 + t * (self.a1 - self.a0)))

    def dphi(self, t):
        return 1j * (self.a1 - self.a0) * (self.phi(t) - self.center)

    def reversed(self):
        return _Arc(self.center, self.radius, self.a1, self.a0)


def _lasso(base: complex, center: complex, radius: float) -> list:
    direction = base - center
    theta = cmath.phase(direction)
    start = center + radius * cmath.exp(1j * theta)
    return [
        _Line(base, start),
        _Arc(center, radius, theta, theta + 2 * cmath.pi),
        _Line(start, base),
    ]


def _reversed_legs(legs: list) -> list:
    return [leg.reversed() for leg in reversed(legs)]


def path_legs(spec: PathSpec) -> list:
    if spec.radius == 0:
        return []
    if spec.center == "inf":
        forward = _lasso(spec.base, 0.0, spec.radius) + _lasso(spec.base, 1.0, spec.radius)
        return _reversed_legs(forward)
    return _lasso(spec.base, complex(spec.center), spec.radius)


def _validate_path(spec: PathSpec, legs: list) -> None:
    encircled = {0.0, 1.0} if spec.center == "inf" else {float(spec.center)}
    ts = np.linspace(0.0, 1.0, max(16, spec.samples // max(1, len(legs))))
    for leg in legs:
        points = np.array([leg.phi(t) for t in ts])
        for s in (0.0, 1.0):
            dist = float(np.min(np.abs(points - s)))
            if dist < 1e-9:
                raise PathError(f"path passes through the singular point {s}")
            if s not in encircled and dist < SINGULAR_MARGIN:
                raise PathError(
                    f"path comes within {dist:.3g} of the singular point {s} "
                    f"(margin {SINGULAR_MARGIN})"
                )


# ---------------- transport ----------------


def _make_rhs(params: ODEParams, leg):
    a = float(params.a)
    b = float(params.b)
    ab = a * b
    apb = a + b
    one_apb = 1.0 + a + b

    def rhs(t, state):
        y = state[:16].reshape(4, 4)
        phi = leg.phi(t)
        dphi = leg.dphi(t)
        g = phi / (1.0 - phi)
        out = np.empty(17, dtype=complex)
        block = out[:16].reshape(4, 4)
        block[0] = y[1]
        block[1] = y[2]
        block[2] = y[3]
        block[3] = g * (ab * y[0] + apb * y[1] + one_apb * y[2] + 2.0 * y[3])
        block *= dphi / phi
        # log-det companion: d/dt log det Y = tr(dphi/phi * N) = 2 dphi / (1 - phi)
        out[16] = 2.0 * dphi / (1.0 - phi)
        return out

    return rhs


def _transport(params: ODEParams, legs: list, tol: float, samples_per_leg: int):
    """Chain the legs, returning (monodromy, worst |det Y - exp(logdet)|)."""
    state = np.zeros(17, dtype=complex)
    state[:16] = np.eye(4, dtype=complex).reshape(-1)
    det_dev = 0.0
    ts = np.linspace(0.0, 1.0, samples_per_leg)
    for leg in legs:
        sol = solve_ivp(
            _make_rhs(params, leg),
            (0.0, 1.0),
            state,
            method="DOP853",
            rtol=tol,
            atol=tol,
            dense_output=True,
        )
        if not sol.success:
            raise IntegrationError(f"transport failed on {leg}: {sol.message}")
        for t in ts:
            snap = sol.sol(t)
            drift = abs(np.linalg.det(snap[:16].reshape(4, 4)) - np.exp(snap[16]))
            det_dev = max(det_dev, drift)
        state = sol.y[:, -1]
    if not np.all(np.isfinite(state)):
        raise IntegrationError("transport produced non-finite values")
    return state[:16].reshape(4, 4), det_dev


def integrate_path(
    params: ODEParams, path: PathSpec, tol: float = 1e-10, orientation: int = 1
) -> MonodromyEstimate:
    """Transport the identity frame around the loop.

    The result is the connection matrix in the base-point frame.  ``err``
    is the operator-norm discrepancy against a second transport at a
    hundredfold tighter tolerance, floored at 1e-15.  ``orientation=-1``
    traverses the same loop clockwise, which must invert the result.
    """
    if tol < 1e-13:
        raise ValueError("tol below 1e-13 is not resolvable in double precision")
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 (counterclockwise) or -1")
    legs = path_legs(path)
    if orientation == -1:
        legs = _reversed_legs(legs)
    if not legs:
        return MonodromyEstimate(matrix=np.eye(4, dtype=complex), err=0.0, det_dev=0.0)
    _validate_path(path, legs)
    samples_per_leg = max(2, path.samples // len(legs))
    matrix, det_dev = _transport(params, legs, tol, samples_per_leg)
    refined, _ = _transport(params, legs, tol * _REFINE, 2)
    err = max(float(np.linalg.norm(matrix - refined, 2)), ERR_FLOOR)
    return MonodromyEstimate(matrix=matrix, err=err, det_dev=det_dev)


# ---------------- invariant comparison ----------------


@dataclass(frozen=True)
class LoopReport:
    d: int
    k: int
    loop: str
    charpoly_numeric: tuple
    charpoly_integer: tuple
    matched: str  # "direct", "inverse" or "both"
    max_dev: float
    err: float
    passed: bool


def numeric_charpoly(matrix: np.ndarray) -> np.ndarray:
    return np.poly(matrix)


def _loop_report(fam: Family, loop: str, estimate: MonodromyEstimate, integer_mat, tol: float) -> LoopReport:
    numeric = numeric_charpoly(estimate.matrix)
    direct = np.array(charpoly(integer_mat), dtype=complex)
    inverse = np.array(charpoly(mat_inverse(integer_mat)), dtype=complex)
    dev_direct = float(np.max(np.abs(numeric - direct)))
    dev_inverse = float(np.max(np.abs(numeric - inverse)))
    if np.array_equal(direct, inverse):
        matched, max_dev, reference = "both", dev_direct, direct
    elif dev_direct <= dev_inverse:
        matched, max_dev, reference = "direct", dev_direct, direct
    else:
        matched, max_dev, reference = "inverse", dev_inverse, inverse
    return LoopReport(
        d=fam.d,
        k=fam.k,
        loop=loop,
        charpoly_numeric=tuple(complex(c) for c in numeric),
        charpoly_integer=tuple(int(c.real) for c in reference),
        matched=matched,
        max_dev=max_dev,
        err=estimate.err,
        passed=max_dev <= tol,
    )


def compare_invariants(
    fam: Family,
    tol: float = 1e-4,
    base: complex = 0.5 + 0.25j,
    radius: float = 0.45,
    ode_tol: float = 1e-10,
    samples: int = 2000,
) -> list:
    """Loop the three singular points numerically and compare characteristic
    polynomials with the integer monodromy, loop by loop.

    The comparison tries the integer matrix and its inverse and reports
    which matched; generator conventions at infinity are only pinned down
    up to conjugation and inversion, and the characteristic polynomial is
    blind to both.
    """
    params = ODEParams.from_family(fam)
    reports = []
    for loop, integer_mat in (
        ("0", families.m0(fam)),
        ("1", families.M1),
        ("inf", families.m_infinity(fam)),
    ):
        spec = PathSpec(base=base, center=loop if loop == "inf" else int(loop), radius=radius, samples=samples)
        estimate = integrate_path(params, spec, tol=ode_tol)
        reports.append(_loop_report(fam, loop, estimate, integer_mat, tol))
    return reports
