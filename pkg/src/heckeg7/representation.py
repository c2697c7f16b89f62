"""Numeric construction of the two-dimensional generator triple.

A parameter point assigns nonzero complex numbers to (x1, x2, y1, y2, z1, z2);
x1, x2 are the eigenvalues of the first generator, y1, y2 of the second,
z1, z2 of the third.  With r a square root of x1*x2*y1*y2*z1*z2 the three
generators are

    s1 = [[x1, (y1+y2)/(y1*y2) - (z1+z2)*x2/r], [0,  x2]]
    s2 = [[y1+y2,          1/x1], [-y1*y2*x1,   0]]
    s3 = [[0, -r/(y1*y2*x1*x2)],  [r,       z1+z2]]

They satisfy s1*s2*s3 = s2*s3*s1 = s3*s1*s2 and the quadratic relations
(si - eigenvalue1)(si - eigenvalue2) = 0; braid_residual and hecke_residuals
measure those numerically.  The sign choice for r changes the triple (the two
choices are genuinely different specializations), so r_sign is explicit
everywhere and defaults to +1, meaning r = principal_sqrt of the product.

build_equal_x is the x1 = x2 family written with x2 alone; it agrees
entrywise with build_general whenever x1 equals x2 exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix2 import Mat2
from .numerics import VERDICT_TOL, is_finite, principal_sqrt


class InvalidParams(ValueError):
    pass


class DegenerateRegime(ValueError):
    pass


_REQUIRED = ("x1", "x2", "y1", "y2", "z1", "z2")


@dataclass(frozen=True)
class Params:
    x1: complex
    x2: complex
    y1: complex
    y2: complex
    z1: complex
    z2: complex
    y3: complex | None = None  # optional third eigenvalues: cubic relations
    z3: complex | None = None

    def __post_init__(self):
        for name in _REQUIRED:
            object.__setattr__(self, name, complex(getattr(self, name)))
        for name in ("y3", "z3"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, complex(v))

    def as_dict(self) -> dict[str, complex]:
        return {name: getattr(self, name) for name in _REQUIRED}

    def validate(self) -> None:
        for name in _REQUIRED:
            v = getattr(self, name)
            if not is_finite(v):
                raise InvalidParams(f"{name} is not finite")
            if v == 0:
                raise InvalidParams(f"{name} must be nonzero")
        for name in ("y3", "z3"):
            v = getattr(self, name)
            if v is not None:
                if not is_finite(v):
                    raise InvalidParams(f"{name} is not finite")
                if v == 0:
                    raise InvalidParams(f"{name} must be nonzero")


@dataclass(frozen=True)
class GeneratorTriple:
    s1: Mat2
    s2: Mat2
    s3: Mat2
    r_used: complex
    r_sign: int

    def as_list(self) -> list[Mat2]:
        return [self.s1, self.s2, self.s3]


def delta(p: Params) -> complex:
    return p.x1 * p.x2 * p.y1 * p.y2 * p.z1 * p.z2


def _check_sign(r_sign: int) -> int:
    if r_sign not in (1, -1):
        raise InvalidParams(f"r_sign must be +1 or -1, got {r_sign!r}")
    return r_sign


def _assemble(p: Params, x1: complex, x2: complex, r: complex, r_sign: int) -> GeneratorTriple:
    y_prod = p.y1 * p.y2
    y_sum = p.y1 + p.y2
    z_sum = p.z1 + p.z2
    s1 = Mat2(x1, y_sum / y_prod - z_sum * x2 / r, 0, x2)
    s2 = Mat2(y_sum, 1 / x1, -y_prod * x1, 0)
    s3 = Mat2(0, -r / (y_prod * x1 * x2), r, z_sum)
    for m in (s1, s2, s3):
        for entry in (m.a, m.b, m.c, m.d):
            if not is_finite(entry):
                raise InvalidParams("parameter magnitudes overflow the matrix entries")
    return GeneratorTriple(s1, s2, s3, r, r_sign)


def build_general(p: Params, r_sign: int = 1) -> GeneratorTriple:
    """Generator triple at p with r = r_sign * principal_sqrt(x1*x2*y1*y2*z1*z2)."""
    p.validate()
    _check_sign(r_sign)
    r = r_sign * principal_sqrt(delta(p))
    if r == 0:
        raise InvalidParams("parameter product underflows to zero")
    return _assemble(p, p.x1, p.x2, r, r_sign)


def build_equal_x(p: Params, r_sign: int = 1) -> GeneratorTriple:
    """The x1 = x2 family, written with x2 only; r squares to
    x2^2*y1*y2*z1*z2.  The caller decides that the equal-x regime applies."""
    p.validate()
    _check_sign(r_sign)
    r = r_sign * principal_sqrt(p.x2 * p.x2 * p.y1 * p.y2 * p.z1 * p.z2)
    if r == 0:
        raise InvalidParams("parameter product underflows to zero")
    return _assemble(p, p.x2, p.x2, r, r_sign)


def _scaled_product_residual(factors: list[Mat2]) -> float:
    prod = factors[0]
    for f in factors[1:]:
        prod = prod * f
    num = prod.maxmod()
    if num == 0.0:
        return 0.0
    scale = 1.0
    for f in factors:
        scale *= f.maxmod()
    return num / max(1.0, scale)


def braid_residual(g: GeneratorTriple) -> float:
    """Relative deviation of s1*s2*s3 from its two cyclic rotations."""
    p1 = g.s1 * g.s2 * g.s3
    p2 = g.s2 * g.s3 * g.s1
    p3 = g.s3 * g.s1 * g.s2
    scale = max(1.0, p1.maxmod())
    return max((p1 - p2).maxmod(), (p1 - p3).maxmod()) / scale


def hecke_residuals(g: GeneratorTriple, p: Params) -> dict[str, float]:
    """Relative magnitudes of (si - eig1)(si - eig2), keyed s1/s2/s3; when a
    third eigenvalue y3 or z3 is supplied the cubic rows s2_cubic/s3_cubic are
    included (the cubic factors through the quadratic, so these also vanish).
    """
    out = {
        "s1": _scaled_product_residual([g.s1.minus_scalar(p.x1), g.s1.minus_scalar(p.x2)]),
        "s2": _scaled_product_residual([g.s2.minus_scalar(p.y1), g.s2.minus_scalar(p.y2)]),
        "s3": _scaled_product_residual([g.s3.minus_scalar(p.z1), g.s3.minus_scalar(p.z2)]),
    }
    if p.y3 is not None:
        out["s2_cubic"] = _scaled_product_residual(
            [g.s2.minus_scalar(p.y1), g.s2.minus_scalar(p.y2), g.s2.minus_scalar(p.y3)]
        )
    if p.z3 is not None:
        out["s3_cubic"] = _scaled_product_residual(
            [g.s3.minus_scalar(p.z1), g.s3.minus_scalar(p.z2), g.s3.minus_scalar(p.z3)]
        )
    return out


def conjugator(p: Params, g: GeneratorTriple, tol: float = VERDICT_TOL) -> Mat2:
    """Unitriangular T with T^-1 s1 T = diag(x1, x2); T(1,2) = s1(1,2)/(x2-x1).

    Needs x1 != x2 (distinct diagonal) and a nonzero s1(1,2); otherwise s1 is
    already diagonal or scalar and this change of basis is meaningless.
    """
    if abs(p.x1 - p.x2) <= tol * max(1.0, abs(p.x1), abs(p.x2)):
        raise DegenerateRegime("x1 and x2 coincide; no separating conjugation")
    top_right = g.s1.b
    if abs(top_right) <= tol * max(1.0, g.s1.maxmod()):
        raise DegenerateRegime("s1 is already diagonal; conjugation is trivial")
    return Mat2(1, top_right / (p.x2 - p.x1), 0, 1)
