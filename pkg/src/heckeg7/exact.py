"""Exact arithmetic for the identity suite.

Three layers, all over arbitrary-precision integers:

  Poly     sparse polynomials in Z[x1, x2, y1, y2, z1, z2], terms stored as
           a map from exponent vectors to nonzero int coefficients;
  ExtElem  elements p + q*r of the quadratic extension by a formal square
           root r of DELTA = x1*x2*y1*y2*z1*z2, with the rewrite
           r*r -> DELTA applied on every product (r-degree never exceeds 1);
  RatElem  fractions num/den of extension elements.

DELTA is squarefree and not a square, so the extension is an integral domain
and fraction equality by cross-multiplication (n1*d2 == n2*d1) is sound.  No
gcd normalization is ever performed; degrees stay small for every identity
checked here, and equality never depends on reduced form.

Substitution maps variables to RatElems and must be told the image of r,
which is required to square to the image of DELTA (checked exactly).
Numeric evaluation takes one complex value per variable plus a value for r,
required to square to DELTA's value within tolerance.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .numerics import approx_eq

VARS = ("x1", "x2", "y1", "y2", "z1", "z2")
NVARS = len(VARS)
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}

Mono = tuple[int, ...]
ZERO_MONO: Mono = (0,) * NVARS
DELTA_MONO: Mono = (1,) * NVARS


class DivisionByZero(ZeroDivisionError):
    pass


class InconsistentRootImage(ValueError):
    pass


class DenominatorVanishes(ZeroDivisionError):
    pass


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    return tuple(a + b for a, b in zip(m1, m2))


def _mono_str(m: Mono) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """Sparse integer polynomial; terms maps exponent vectors to nonzero
    coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        self.terms: dict[Mono, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff != 0:
                    self.terms[mono] = coeff

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c: int) -> "Poly":
        return Poly({ZERO_MONO: c})

    @staticmethod
    def var(name: str) -> "Poly":
        mono = [0] * NVARS
        mono[_VAR_INDEX[name]] = 1
        return Poly({tuple(mono): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __add__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "Poly":
        return Poly.const(other) - self

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # descending lexicographic order on exponent vectors: deterministic
        pieces = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            body = _mono_str(mono)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    __repr__ = __str__


DELTA_POLY = Poly({DELTA_MONO: 1})

PolyLike = Union[Poly, int]


def _as_poly(x: PolyLike) -> Poly:
    return Poly.const(x) if isinstance(x, int) else x


class ExtElem:
    """p + q*r with r*r rewritten to DELTA."""

    __slots__ = ("p", "q")

    def __init__(self, p: PolyLike = 0, q: PolyLike = 0):
        self.p = _as_poly(p)
        self.q = _as_poly(q)

    @staticmethod
    def r(sign: int = 1) -> "ExtElem":
        return ExtElem(0, sign)

    @staticmethod
    def var(name: str) -> "ExtElem":
        return ExtElem(Poly.var(name), 0)

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        other = _as_ext(other)
        if other is None:
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __neg__(self) -> "ExtElem":
        return ExtElem(-self.p, -self.q)

    def __add__(self, other) -> "ExtElem":
        other = _as_ext(other)
        if other is None:
            return NotImplemented
        return ExtElem(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other) -> "ExtElem":
        other = _as_ext(other)
        if other is None:
            return NotImplemented
        return ExtElem(self.p - other.p, self.q - other.q)

    def __rsub__(self, other) -> "ExtElem":
        other = _as_ext(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ExtElem":
        other = _as_ext(other)
        if other is None:
            return NotImplemented
        return ExtElem(
            self.p * other.p + self.q * other.q * DELTA_POLY,
            self.p * other.q + self.q * other.p,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExtElem":
        if n < 0:
            raise ValueError("negative power of an extension element")
        result = ExtElem(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "ExtElem":
        return ExtElem(self.p, -self.q)

    def __str__(self) -> str:
        if self.q.is_zero():
            return str(self.p)
        if self.p.is_zero():
            return f"({self.q})*r"
        return f"({self.p}) + ({self.q})*r"

    __repr__ = __str__


def _as_ext(x) -> ExtElem | None:
    if isinstance(x, ExtElem):
        return x
    if isinstance(x, Poly):
        return ExtElem(x, 0)
    if isinstance(x, int):
        return ExtElem(Poly.const(x), 0)
    return None


ExtLike = Union[ExtElem, Poly, int]


class RatElem:
    """Fraction of extension elements; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: ExtLike = 0, den: ExtLike = 1):
        n = _as_ext(num)
        d = _as_ext(den)
        if n is None or d is None:
            raise TypeError("numerator/denominator must be ExtElem, Poly or int")
        if d.is_zero():
            raise DivisionByZero("zero denominator")
        self.num = n
        self.den = d

    @staticmethod
    def var(name: str) -> "RatElem":
        return RatElem(ExtElem.var(name), 1)

    @staticmethod
    def r(sign: int = 1) -> "RatElem":
        return RatElem(ExtElem.r(sign), 1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def equals(self, other) -> bool:
        other = _as_rat(other)
        if other is None:
            raise TypeError("cannot compare RatElem with this type")
        return (self.num * other.den - other.num * self.den).is_zero()

    def __eq__(self, other: object) -> bool:
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # semantic equality is not hash-compatible

    def __neg__(self) -> "RatElem":
        return RatElem(-self.num, self.den)

    def __add__(self, other) -> "RatElem":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return RatElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatElem":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatElem":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "RatElem":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return RatElem(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatElem":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RatElem(self.den, self.num)

    def __truediv__(self, other) -> "RatElem":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> "RatElem":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> "RatElem":
        if n < 0:
            return self.inv() ** (-n)
        result = RatElem(1, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        if self.den == ExtElem(1, 0):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _as_rat(x) -> RatElem | None:
    if isinstance(x, RatElem):
        return x
    e = _as_ext(x)
    if e is None:
        return None
    return RatElem(e, 1)


RatLike = Union[RatElem, ExtElem, Poly, int]


# ---------------------------------------------------------------------------
# substitution (exact) and evaluation (numeric)

def _full_images(assignment: Mapping[str, RatElem]) -> dict[str, RatElem]:
    images = {}
    for name in VARS:
        img = assignment.get(name)
        images[name] = RatElem.var(name) if img is None else _as_rat(img)
    unknown = set(assignment) - set(VARS)
    if unknown:
        raise KeyError(f"unknown variables in assignment: {sorted(unknown)}")
    return images


def _poly_substitute(p: Poly, images: Mapping[str, RatElem]) -> RatElem:
    out = RatElem(0, 1)
    powers: dict[tuple[str, int], RatElem] = {}

    def power(name: str, e: int) -> RatElem:
        key = (name, e)
        if key not in powers:
            powers[key] = images[name] ** e
        return powers[key]

    for mono, coeff in p.terms.items():
        term = RatElem(coeff, 1)
        for name, e in zip(VARS, mono):
            if e:
                term = term * power(name, e)
        out = out + term
    return out


def substitute(
    value: RatLike,
    assignment: Mapping[str, RatLike],
    r_image: RatLike,
    check_root: bool = True,
) -> RatElem:
    """Apply variable images and the stated image of r, exactly.

    Raises InconsistentRootImage unless r_image squared equals the image of
    DELTA (checked by cross-multiplication), and DenominatorVanishes when a
    denominator collapses to zero under the assignment.
    """
    images = _full_images({k: _as_rat(v) for k, v in assignment.items()})
    r_img = _as_rat(r_image)
    if r_img is None:
        raise TypeError("r_image must be a RatElem, ExtElem, Poly or int")
    if check_root:
        delta_img = _poly_substitute(DELTA_POLY, images)
        if not (r_img * r_img).equals(delta_img):
            raise InconsistentRootImage(
                "r_image squared does not equal the image of x1*x2*y1*y2*z1*z2"
            )

    def sub_ext(e: ExtElem) -> RatElem:
        return _poly_substitute(e.p, images) + _poly_substitute(e.q, images) * r_img

    val = _as_rat(value)
    if val is None:
        raise TypeError("value must be a RatElem, ExtElem, Poly or int")
    num = sub_ext(val.num)
    den = sub_ext(val.den)
    if den.is_zero():
        raise DenominatorVanishes("denominator vanishes under the assignment")
    return num / den


def poly_eval(p: Poly, values: Mapping[str, complex]) -> complex:
    out = 0j
    for mono, coeff in p.terms.items():
        term = complex(coeff)
        for name, e in zip(VARS, mono):
            if e:
                term *= values[name] ** e
        out += term
    return out


def ext_eval(e: ExtElem, values: Mapping[str, complex], r_value: complex) -> complex:
    return poly_eval(e.p, values) + poly_eval(e.q, values) * r_value


def eval_numeric(
    value: RatLike,
    values: Mapping[str, complex],
    r_value: complex,
    root_tol: float = 1e-9,
) -> complex:
    """Evaluate at complex parameter values with an explicit value for r.

    r_value must square to DELTA's value within root_tol (relative); a
    vanishing denominator raises DenominatorVanishes.
    """
    missing = [name for name in VARS if name not in values]
    if missing:
        raise KeyError(f"missing values for {missing}")
    delta_val = poly_eval(DELTA_POLY, values)
    if not approx_eq(r_value * r_value, delta_val, root_tol):
        raise InconsistentRootImage(
            f"r_value^2 = {r_value * r_value!r} but x1*x2*y1*y2*z1*z2 = {delta_val!r}"
        )
    val = _as_rat(value)
    if val is None:
        raise TypeError("value must be a RatElem, ExtElem, Poly or int")
    den = ext_eval(val.den, values, r_value)
    if den == 0:
        raise DenominatorVanishes("denominator evaluates to zero")
    return ext_eval(val.num, values, r_value) / den


def rat_equals(a: RatLike, b: RatLike) -> bool:
    ra, rb = _as_rat(a), _as_rat(b)
    if ra is None or rb is None:
        raise TypeError("operands must be RatElem, ExtElem, Poly or int")
    return ra.equals(rb)
