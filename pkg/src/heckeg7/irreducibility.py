"""Irreducibility decisions: closed-form criteria against a brute-force oracle.

The closed-form criteria depend only on cross-products of the parameters and
never on the square root r:

  equal-x regime (x1 = x2): irreducible iff
      z1*y2 != y1*z2   and   z1*y1 != y2*z2;
  distinct-x regime: irreducible iff all four of
      x1*y2*z2 != x2*y1*z1,   x1*y1*z2 != x2*y2*z1,
      x1*y2*z1 != x2*y1*z2,   x1*y1*z1 != x2*y2*z2.

The oracle ignores all of that and simply searches the built triple for a
common eigendirection.  The built triple *does* depend on the branch of r, so
the two can disagree when a reducible parameter point is evaluated on the
branch where the invariant line disappears; branch_diagnosis re-runs the
oracle on the flipped branch and reports whether that explains the mismatch.
The oracle is authoritative for the final agreement verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix2 import Vec2, common_eigenvector, normalize_direction
from .numerics import VERDICT_TOL, approx_eq
from .representation import (
    GeneratorTriple,
    Params,
    build_equal_x,
    build_general,
    conjugator,
)

EQUAL_X = "equal_x"
DISTINCT_X = "distinct_x"
IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"


class ConditionNotSatisfied(ValueError):
    pass


class ContradictoryCase(RuntimeError):
    pass


@dataclass(frozen=True)
class ConditionFlag:
    name: str
    lhs: complex
    rhs: complex
    equal: bool


@dataclass(frozen=True)
class BranchDiagnosis:
    applicable: bool
    note: str
    flipped_r_sign: int | None = None
    flipped_oracle_decision: str | None = None
    resolved: bool | None = None
    flipped_invariant_vector: Vec2 | None = None
    conditions: tuple[ConditionFlag, ...] = ()


@dataclass(frozen=True)
class Verdict:
    regime: str
    r_sign: int
    tolerance: float
    theorem_decision: str
    conditions: tuple[ConditionFlag, ...]
    oracle_decision: str
    invariant_vector: Vec2 | None
    agreement: bool
    branch_diagnosis: BranchDiagnosis | None


# Reducibility cases.  Each maps a case id to (condition name,
# lhs(p), rhs(p)); the condition holds when lhs == rhs.  The *solved* forms
# used for constructing reducible tuples are in solve_case below.
_EQUAL_CASES = {
    "equal-x-1": ("z1*y2 = y1*z2", lambda p: p.z1 * p.y2, lambda p: p.y1 * p.z2),
    "equal-x-2": ("z1*y1 = y2*z2", lambda p: p.z1 * p.y1, lambda p: p.y2 * p.z2),
}

_DISTINCT_CASES = {
    "distinct-x-1": (
        "x1*y2*z2 = x2*y1*z1",
        lambda p: p.x1 * p.y2 * p.z2,
        lambda p: p.x2 * p.y1 * p.z1,
    ),
    "distinct-x-2": (
        "x1*y1*z2 = x2*y2*z1",
        lambda p: p.x1 * p.y1 * p.z2,
        lambda p: p.x2 * p.y2 * p.z1,
    ),
    "distinct-x-3": (
        "x1*y2*z1 = x2*y1*z2",
        lambda p: p.x1 * p.y2 * p.z1,
        lambda p: p.x2 * p.y1 * p.z2,
    ),
    "distinct-x-4": (
        "x1*y1*z1 = x2*y2*z2",
        lambda p: p.x1 * p.y1 * p.z1,
        lambda p: p.x2 * p.y2 * p.z2,
    ),
}

ALL_CASES = {**_EQUAL_CASES, **_DISTINCT_CASES}


def solve_case(case_id: str, p: Params) -> Params:
    """Return p with one parameter replaced so the case condition holds
    exactly (in floating point): z1 is solved for the equal-x cases, x1 for
    the distinct-x cases."""
    if case_id == "equal-x-1":
        return Params(p.x2, p.x2, p.y1, p.y2, p.y1 * p.z2 / p.y2, p.z2, p.y3, p.z3)
    if case_id == "equal-x-2":
        return Params(p.x2, p.x2, p.y1, p.y2, p.y2 * p.z2 / p.y1, p.z2, p.y3, p.z3)
    if case_id == "distinct-x-1":
        x1 = p.x2 * p.y1 * p.z1 / (p.y2 * p.z2)
    elif case_id == "distinct-x-2":
        x1 = p.x2 * p.y2 * p.z1 / (p.y1 * p.z2)
    elif case_id == "distinct-x-3":
        x1 = p.x2 * p.y1 * p.z2 / (p.y2 * p.z1)
    elif case_id == "distinct-x-4":
        x1 = p.x2 * p.y2 * p.z2 / (p.y1 * p.z1)
    else:
        raise KeyError(f"unknown case id {case_id!r}")
    return Params(x1, p.x2, p.y1, p.y2, p.z1, p.z2, p.y3, p.z3)


def regime(p: Params, tol: float = VERDICT_TOL) -> str:
    return EQUAL_X if approx_eq(p.x1, p.x2, tol) else DISTINCT_X


def _evaluate_conditions(p: Params, reg: str, tol: float) -> tuple[ConditionFlag, ...]:
    cases = _EQUAL_CASES if reg == EQUAL_X else _DISTINCT_CASES
    flags = []
    for name, lhs_fn, rhs_fn in cases.values():
        lhs, rhs = lhs_fn(p), rhs_fn(p)
        flags.append(ConditionFlag(name, lhs, rhs, approx_eq(lhs, rhs, tol)))
    return tuple(flags)


def _checked_regime(force_regime: str | None, p: Params, tol: float) -> str:
    if force_regime is None:
        return regime(p, tol)
    if force_regime not in (EQUAL_X, DISTINCT_X):
        raise ValueError(f"force_regime must be {EQUAL_X!r} or {DISTINCT_X!r}")
    return force_regime


def theorem_verdict(
    p: Params, tol: float = VERDICT_TOL, force_regime: str | None = None
) -> tuple[str, str, tuple[ConditionFlag, ...]]:
    """(regime, decision, condition flags).  Irreducible iff no reducibility
    condition holds.  Branch-independent: only cross-products of parameters."""
    p.validate()
    reg = _checked_regime(force_regime, p, tol)
    flags = _evaluate_conditions(p, reg, tol)
    decision = REDUCIBLE if any(f.equal for f in flags) else IRREDUCIBLE
    return reg, decision, flags


def _build_for(reg: str, p: Params, r_sign: int) -> GeneratorTriple:
    return build_equal_x(p, r_sign) if reg == EQUAL_X else build_general(p, r_sign)


def oracle_verdict(g: GeneratorTriple, tol: float = VERDICT_TOL) -> tuple[str, Vec2 | None]:
    """Brute-force decision: reducible iff the triple shares an eigendirection."""
    witness = common_eigenvector(g.as_list(), tol)
    if witness is None:
        return IRREDUCIBLE, None
    return REDUCIBLE, witness


def branch_diagnosis(
    p: Params,
    r_sign: int = 1,
    tol: float = VERDICT_TOL,
    force_regime: str | None = None,
) -> BranchDiagnosis:
    """Re-run the oracle on the flipped branch when the criteria and the
    oracle disagree at r_sign; reports whether the flip resolves it."""
    reg, theorem, flags = theorem_verdict(p, tol, force_regime)
    oracle, _ = oracle_verdict(_build_for(reg, p, r_sign), tol)
    if oracle == theorem:
        return BranchDiagnosis(
            applicable=False,
            note="criteria and oracle agree; branch diagnosis not applicable",
            conditions=flags,
        )
    flipped = -r_sign
    oracle2, witness2 = oracle_verdict(_build_for(reg, p, flipped), tol)
    resolved = oracle2 == theorem
    note = (
        "disagreement disappears on the flipped branch"
        if resolved
        else "disagreement persists on both branches"
    )
    return BranchDiagnosis(
        applicable=True,
        note=note,
        flipped_r_sign=flipped,
        flipped_oracle_decision=oracle2,
        resolved=resolved,
        flipped_invariant_vector=witness2,
        conditions=flags,
    )


def decide(
    p: Params,
    r_sign: int = 1,
    tol: float = VERDICT_TOL,
    force_regime: str | None = None,
) -> Verdict:
    """Full pipeline: criteria, oracle at r_sign, agreement, and (only on
    disagreement) the flipped-branch diagnosis."""
    reg, theorem, flags = theorem_verdict(p, tol, force_regime)
    oracle, witness = oracle_verdict(_build_for(reg, p, r_sign), tol)
    agreement = oracle == theorem
    diagnosis = None
    if not agreement:
        flipped = -r_sign
        oracle2, witness2 = oracle_verdict(_build_for(reg, p, flipped), tol)
        resolved = oracle2 == theorem
        diagnosis = BranchDiagnosis(
            applicable=True,
            note=(
                "disagreement disappears on the flipped branch"
                if resolved
                else "disagreement persists on both branches"
            ),
            flipped_r_sign=flipped,
            flipped_oracle_decision=oracle2,
            resolved=resolved,
            flipped_invariant_vector=witness2,
            conditions=flags,
        )
    return Verdict(
        regime=reg,
        r_sign=r_sign,
        tolerance=tol,
        theorem_decision=theorem,
        conditions=flags,
        oracle_decision=oracle,
        invariant_vector=witness,
        agreement=agreement,
        branch_diagnosis=diagnosis,
    )


def invariant_vector_predicted(
    p: Params, case_id: str, r_sign: int = 1, tol: float = VERDICT_TOL
) -> Vec2:
    """The invariant direction each reducibility case predicts.

    Equal-x cases: (-1/(x2*y2), 1), independent of the branch.  Distinct-x
    cases: the second column of the diagonalizing conjugator, (T(1,2), 1) --
    which only exists when s1 has an off-diagonal part.  When the condition
    holds but s1(1,2) vanishes at this branch no invariant line can exist
    here (the family is irreducible on this branch) and ContradictoryCase is
    raised; the flipped branch carries the honest witness.
    """
    p.validate()
    if case_id not in ALL_CASES:
        raise KeyError(f"unknown case id {case_id!r}")
    name, lhs_fn, rhs_fn = ALL_CASES[case_id]
    lhs, rhs = lhs_fn(p), rhs_fn(p)
    if not approx_eq(lhs, rhs, tol):
        raise ConditionNotSatisfied(f"{name} fails: {lhs!r} vs {rhs!r}")
    if case_id in _EQUAL_CASES:
        return normalize_direction((-1 / (p.x2 * p.y2), 1))
    if approx_eq(p.x1, p.x2, tol):
        raise ConditionNotSatisfied(
            f"{case_id} presumes the distinct-x regime but x1 and x2 coincide"
        )
    g = build_general(p, r_sign)
    if abs(g.s1.b) <= tol * max(1.0, g.s1.maxmod()):
        raise ContradictoryCase(
            f"{name} holds yet s1 is diagonal at r_sign {r_sign:+d}; no invariant "
            "line exists on this branch (the flipped branch carries one)"
        )
    t_mat = conjugator(p, g, tol)
    return normalize_direction((t_mat.b, 1))
