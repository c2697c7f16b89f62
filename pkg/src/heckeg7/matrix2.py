"""2x2 complex matrices and just enough eigenstructure for the invariant-line
oracle: classify a matrix as scalar / defective / semisimple, extract its
eigendirections, and search a family of matrices for a shared eigendirection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerics import VERDICT_TOL, principal_sqrt

Vec2 = tuple[complex, complex]

SCALAR = "scalar"
JORDAN = "jordan"
SEMISIMPLE = "semisimple"


class SingularMatrix(ValueError):
    pass


@dataclass(frozen=True)
class Mat2:
    """Row-major [[a, b], [c, d]]."""

    a: complex
    b: complex
    c: complex
    d: complex

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(1, 0, 0, 1)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def scale(self, k: complex) -> "Mat2":
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def minus_scalar(self, lam: complex) -> "Mat2":
        return Mat2(self.a - lam, self.b, self.c, self.d - lam)

    def apply(self, v: Vec2) -> Vec2:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def trace(self) -> complex:
        return self.a + self.d

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def maxmod(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))


@dataclass(frozen=True)
class EigenReport:
    kind: str  # scalar | jordan | semisimple
    eigenvalues: tuple[complex, ...]
    directions: tuple[Vec2, ...]  # empty for scalar (every direction works)


def inverse(m: Mat2, tol: float = VERDICT_TOL) -> Mat2:
    d = m.det()
    if abs(d) <= tol:
        raise SingularMatrix(f"determinant modulus {abs(d)} below {tol}")
    return Mat2(m.d / d, -m.b / d, -m.c / d, m.a / d)


def cross(u: Vec2, v: Vec2) -> complex:
    """det [u v]; zero iff u and v are linearly dependent."""
    return u[0] * v[1] - u[1] * v[0]


def vec_maxmod(v: Vec2) -> float:
    return max(abs(v[0]), abs(v[1]))


def normalize_direction(v: Vec2) -> Vec2:
    """Divide by the largest-modulus component (ties pick the first), making
    that component exactly 1."""
    pivot = v[0] if abs(v[0]) >= abs(v[1]) else v[1]
    if pivot == 0:
        raise ValueError("zero vector has no direction")
    return (v[0] / pivot, v[1] / pivot)


def parallel(u: Vec2, v: Vec2, tol: float = VERDICT_TOL) -> bool:
    return abs(cross(u, v)) <= tol * max(1.0, vec_maxmod(u) * vec_maxmod(v))


def _kernel_direction(m: Mat2, lam: complex) -> Vec2:
    # (m - lam) annihilates both candidates when lam is an exact eigenvalue;
    # pick the numerically larger one.
    va: Vec2 = (m.b, lam - m.a)
    vb: Vec2 = (lam - m.d, m.c)
    v = va if vec_maxmod(va) >= vec_maxmod(vb) else vb
    if vec_maxmod(v) == 0.0:
        # m is exactly lam*I on this eigenvalue; any direction works
        return (1.0 + 0.0j, 0.0 + 0.0j)
    return normalize_direction(v)


def eigen_directions(m: Mat2, tol: float = VERDICT_TOL) -> EigenReport:
    """Classify m and return eigendirections.

    Scalar: off-diagonal entries and the diagonal gap all vanish within
    tol relative to the matrix magnitude.  Jordan: the characteristic
    discriminant (a-d)^2 + 4bc vanishes within tol * maxmod^2 but the matrix
    is not scalar; a single eigendirection exists.  Semisimple otherwise, two
    directions, eigenvalue order fixed by the principal square root of the
    discriminant (+ root first).
    """
    scale = m.maxmod()
    if max(abs(m.b), abs(m.c), abs(m.a - m.d)) <= tol * max(1.0, scale):
        half = m.trace() / 2
        return EigenReport(SCALAR, (half,), ())
    disc = (m.a - m.d) ** 2 + 4 * m.b * m.c
    if abs(disc) <= tol * scale * scale:
        lam = m.trace() / 2
        return EigenReport(JORDAN, (lam,), (_kernel_direction(m, lam),))
    root = principal_sqrt(disc)
    lam1 = (m.trace() + root) / 2
    lam2 = (m.trace() - root) / 2
    return EigenReport(
        SEMISIMPLE,
        (lam1, lam2),
        (_kernel_direction(m, lam1), _kernel_direction(m, lam2)),
    )


def common_eigenvector(
    matrices: list[Mat2] | tuple[Mat2, ...], tol: float = VERDICT_TOL
) -> Vec2 | None:
    """A direction fixed by every matrix in the family, or None.

    Candidates come from the first non-scalar matrix (one or two directions);
    a 2x2 matrix has at most two eigendirections, so any shared direction is
    among them.  If the whole family is scalar, every direction works and
    (1, 0) is returned.
    """
    candidates: tuple[Vec2, ...] | None = None
    for m in matrices:
        report = eigen_directions(m, tol)
        if report.kind != SCALAR:
            candidates = report.directions
            break
    if candidates is None:
        return (1.0 + 0.0j, 0.0 + 0.0j)
    for v in candidates:
        if all(parallel(m.apply(v), v, tol) for m in matrices):
            return normalize_direction(v)
    return None
