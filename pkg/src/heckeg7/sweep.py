"""Randomized validation sweeps over parameter space.

The sweep draws random specializations, runs the closed-form criteria and
the brute-force oracle on each, and tallies agreement.  Because a random
continuous draw satisfies a reducibility condition with probability zero,
the sweep also injects constructed reducible tuples at a configured rate:
five parameters are drawn and the remaining one is solved from a rotating
reducibility case so the condition holds exactly in floating point.  For
every injected tuple the produced invariant vector is re-checked against
all three generators at the branch that produced it.  For the first equal-x
case the predicted direction (-1/(x2*y2), 1) is additionally verified to be
invariant, and the witness must land on it or on the complementary
invariant direction (-1/(x2*y1), 1) -- in that case the representation
splits completely, so the invariant line is not unique and the oracle may
return either one.

Results are JSON-ready dicts with deterministic content: one seed and one
config always produce byte-identical serialized output.  This module also
houses the shared JSON renderings of verdicts and diagnoses used by the
command-line layer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .irreducibility import (
    _EQUAL_CASES,
    _DISTINCT_CASES,
    BranchDiagnosis,
    ConditionFlag,
    EQUAL_X,
    DISTINCT_X,
    Verdict,
    decide,
    solve_case,
)
from .matrix2 import Vec2, normalize_direction, parallel
from .numerics import VERDICT_TOL, approx_eq, from_polar
from .representation import Params, build_equal_x, build_general

SCHEMA_VERSION = 1

POSITIVE_REAL = "positive-real"
UNIT_MODULUS = "unit-modulus"
GENERAL_COMPLEX = "general-complex"
DOMAINS = (POSITIVE_REAL, UNIT_MODULUS, GENERAL_COMPLEX)

AGREE_IRREDUCIBLE = "agree-irreducible"
AGREE_REDUCIBLE = "agree-reducible"
DISAGREE_RESOLVED = "disagree-resolved-by-branch"
DISAGREE_UNRESOLVED = "disagree-unresolved"

_EQUAL_CASE_IDS = tuple(_EQUAL_CASES)
_DISTINCT_CASE_IDS = tuple(_DISTINCT_CASES)

# Injected tuples are redrawn until they are robustly inside their intended
# case: the solved parameter must have sane modulus, distinct-x tuples must
# keep x1 and x2 separated, and equal-x tuples must keep y1 away from +-y2
# (at y1 = +-y2 the two equal-x conditions collapse into each other).
_SEPARATION = 1e-3
_SOLVED_MODULUS_MIN = 1e-6
_SOLVED_MODULUS_MAX = 1e6
_MAX_REDRAWS = 1000


@dataclass(frozen=True)
class SweepConfig:
    samples: int = 10000
    seed: int = 42
    domain: str = POSITIVE_REAL
    tolerance: float = VERDICT_TOL
    r_sign: int = 1
    inject_reducible_rate: float = 0.1
    log10_modulus_min: float = -1.0
    log10_modulus_max: float = 1.0
    regime_filter: str | None = None

    def validate(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.domain not in DOMAINS:
            raise ValueError(f"domain must be one of {DOMAINS}")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.r_sign not in (1, -1):
            raise ValueError("r_sign must be +1 or -1")
        if not 0.0 <= self.inject_reducible_rate <= 1.0:
            raise ValueError("inject_reducible_rate must lie in [0, 1]")
        if self.log10_modulus_min > self.log10_modulus_max:
            raise ValueError("log10 modulus band is empty")
        if self.regime_filter not in (None, EQUAL_X, DISTINCT_X):
            raise ValueError(f"regime_filter must be {EQUAL_X!r}, {DISTINCT_X!r} or None")


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    counts: dict[str, int]
    injected_total: int
    injected_per_case: dict[str, int]
    witness_failures: tuple[int, ...]
    predicted_mismatches: tuple[int, ...]
    disagreements: tuple[dict, ...]

    def unresolved(self) -> int:
        return self.counts[DISAGREE_UNRESOLVED]

    def as_dict(self) -> dict:
        cfg = self.config
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "sweep-summary",
            "config": {
                "samples": cfg.samples,
                "seed": cfg.seed,
                "domain": cfg.domain,
                "tolerance": cfg.tolerance,
                "r-sign": cfg.r_sign,
                "inject-reducible-rate": cfg.inject_reducible_rate,
                "log10-modulus-min": cfg.log10_modulus_min,
                "log10-modulus-max": cfg.log10_modulus_max,
                "regime-filter": cfg.regime_filter,
            },
            "counts": dict(self.counts),
            "injected": {
                "total": self.injected_total,
                "per-case": dict(self.injected_per_case),
                "witness-failures": list(self.witness_failures),
                "predicted-direction-mismatches": list(self.predicted_mismatches),
            },
            "disagreements": list(self.disagreements),
        }


# ---------------------------------------------------------------------------
# JSON-ready renderings (shared with the command-line layer)

def complex_as_dict(z: complex) -> dict:
    z = complex(z)
    return {"re": float(z.real), "im": float(z.imag)}


def vec_as_dict(v: Vec2 | None) -> list | None:
    if v is None:
        return None
    return [complex_as_dict(v[0]), complex_as_dict(v[1])]


def params_as_dict(p: Params) -> dict:
    out = {name: complex_as_dict(value) for name, value in p.as_dict().items()}
    if p.y3 is not None:
        out["y3"] = complex_as_dict(p.y3)
    if p.z3 is not None:
        out["z3"] = complex_as_dict(p.z3)
    return out


def flag_as_dict(f: ConditionFlag) -> dict:
    return {
        "condition": f.name,
        "lhs": complex_as_dict(f.lhs),
        "rhs": complex_as_dict(f.rhs),
        "holds": f.equal,
    }


def diagnosis_as_dict(d: BranchDiagnosis | None) -> dict | None:
    if d is None:
        return None
    return {
        "applicable": d.applicable,
        "note": d.note,
        "flipped-r-sign": d.flipped_r_sign,
        "flipped-oracle-decision": d.flipped_oracle_decision,
        "resolved": d.resolved,
        "flipped-invariant-vector": vec_as_dict(d.flipped_invariant_vector),
        "conditions": [flag_as_dict(f) for f in d.conditions],
    }


def verdict_as_dict(v: Verdict) -> dict:
    return {
        "regime": v.regime,
        "r-sign": v.r_sign,
        "tolerance": v.tolerance,
        "theorem-decision": v.theorem_decision,
        "conditions": [flag_as_dict(f) for f in v.conditions],
        "oracle-decision": v.oracle_decision,
        "invariant-vector": vec_as_dict(v.invariant_vector),
        "agreement": v.agreement,
        "branch-diagnosis": diagnosis_as_dict(v.branch_diagnosis),
    }


# ---------------------------------------------------------------------------
# sampling

def _draw_value(rng: random.Random, cfg: SweepConfig) -> complex:
    if cfg.domain == UNIT_MODULUS:
        modulus = 1.0
    else:
        modulus = 10.0 ** rng.uniform(cfg.log10_modulus_min, cfg.log10_modulus_max)
    if cfg.domain == POSITIVE_REAL:
        argument = 0.0
    else:
        # uniform over (-pi, pi]: random() is in [0, 1)
        argument = math.pi - rng.random() * 2.0 * math.pi
    return from_polar(modulus, argument)


def _draw_base(rng: random.Random, cfg: SweepConfig) -> Params:
    return Params(*(_draw_value(rng, cfg) for _ in range(6)))


def _separated(a: complex, b: complex) -> bool:
    return abs(a - b) >= _SEPARATION * max(1.0, abs(a), abs(b))


def _solved_sane(z: complex) -> bool:
    return _SOLVED_MODULUS_MIN <= abs(z) <= _SOLVED_MODULUS_MAX


def _draw_random_sample(rng: random.Random, cfg: SweepConfig) -> Params:
    for _ in range(_MAX_REDRAWS):
        base = _draw_base(rng, cfg)
        if cfg.regime_filter == EQUAL_X:
            return Params(base.x2, base.x2, base.y1, base.y2, base.z1, base.z2)
        if cfg.regime_filter == DISTINCT_X and not _separated(base.x1, base.x2):
            continue
        return base
    raise RuntimeError("could not draw a sample satisfying the regime filter")


def _draw_injected_sample(
    rng: random.Random, cfg: SweepConfig, case_id: str
) -> Params:
    equal_case = case_id in _EQUAL_CASE_IDS
    for _ in range(_MAX_REDRAWS):
        base = _draw_base(rng, cfg)
        if equal_case:
            if not (_separated(base.y1, base.y2) and _separated(base.y1, -base.y2)):
                continue
            q = solve_case(case_id, base)
            if not _solved_sane(q.z1):
                continue
        else:
            q = solve_case(case_id, base)
            if not (_solved_sane(q.x1) and _separated(q.x1, q.x2)):
                continue
        return q
    raise RuntimeError(f"could not construct a sane tuple for case {case_id}")


def _injection_case(cfg: SweepConfig, injection_index: int) -> str:
    if cfg.regime_filter == EQUAL_X:
        return _EQUAL_CASE_IDS[injection_index % len(_EQUAL_CASE_IDS)]
    if cfg.regime_filter == DISTINCT_X:
        return _DISTINCT_CASE_IDS[injection_index % len(_DISTINCT_CASE_IDS)]
    within = injection_index // 2
    if injection_index % 2 == 0:
        return _EQUAL_CASE_IDS[within % len(_EQUAL_CASE_IDS)]
    return _DISTINCT_CASE_IDS[within % len(_DISTINCT_CASE_IDS)]


def _classify(v: Verdict) -> str:
    if v.agreement:
        return AGREE_REDUCIBLE if v.oracle_decision == "reducible" else AGREE_IRREDUCIBLE
    if v.branch_diagnosis is not None and v.branch_diagnosis.resolved:
        return DISAGREE_RESOLVED
    return DISAGREE_UNRESOLVED


def _build_for(regime_name: str, p: Params, r_sign: int):
    return build_equal_x(p, r_sign) if regime_name == EQUAL_X else build_general(p, r_sign)


def _producing_witness(p: Params, v: Verdict) -> tuple[Vec2, int] | None:
    """The invariant vector the run produced, with the branch it came from."""
    if v.agreement:
        if v.invariant_vector is None:
            return None
        return v.invariant_vector, v.r_sign
    d = v.branch_diagnosis
    if d is not None and d.resolved and d.flipped_invariant_vector is not None:
        return d.flipped_invariant_vector, d.flipped_r_sign
    return None


def _witness_ok(p: Params, v: Verdict, tol: float) -> bool:
    found = _producing_witness(p, v)
    if found is None:
        return False
    witness, sign = found
    g = _build_for(v.regime, p, sign)
    return all(parallel(m.apply(witness), witness, tol) for m in g.as_list())


def _direction_eq(u: Vec2, v: Vec2, tol: float) -> bool:
    un, vn = normalize_direction(u), normalize_direction(v)
    if approx_eq(un[0], vn[0], tol) and approx_eq(un[1], vn[1], tol):
        return True
    # fall back to a parallelism test in case normalization picked different
    # pivot components of two equal-modulus entries
    return parallel(un, vn, tol)


def _predicted_direction_ok(p: Params, v: Verdict, witness: Vec2, sign: int, tol: float) -> bool:
    """The equal-x Case 1 prediction check.

    The predicted invariant direction is (-1/(x2*y2), 1).  The invariant
    line is not unique in this case -- the representation splits completely
    and (-1/(x2*y1), 1) is invariant too (verified exactly by the identity
    suite) -- so the oracle may legitimately return either line.  The check
    requires (a) the predicted direction really is invariant under all three
    generators at the producing branch and (b) the produced witness is
    parallel to one of the two invariant lines.
    """
    predicted = normalize_direction((-1.0 / (p.x2 * p.y2), 1.0))
    complementary = normalize_direction((-1.0 / (p.x2 * p.y1), 1.0))
    g = _build_for(v.regime, p, sign)
    if not all(parallel(m.apply(predicted), predicted, tol) for m in g.as_list()):
        return False
    return _direction_eq(witness, predicted, tol) or _direction_eq(
        witness, complementary, tol
    )


def _disagreement_record(
    index: int, p: Params, case_id: str | None, v: Verdict, classification: str
) -> dict:
    return {
        "index": index,
        "params": params_as_dict(p),
        "injected-case": case_id,
        "classification": classification,
        "verdict": verdict_as_dict(v),
    }


def run_sweep(cfg: SweepConfig) -> SweepResult:
    cfg.validate()
    rng = random.Random(cfg.seed)
    counts = {
        AGREE_IRREDUCIBLE: 0,
        AGREE_REDUCIBLE: 0,
        DISAGREE_RESOLVED: 0,
        DISAGREE_UNRESOLVED: 0,
    }
    injected_total = 0
    injected_per_case: dict[str, int] = {}
    witness_failures: list[int] = []
    predicted_mismatches: list[int] = []
    disagreements: list[dict] = []

    rate = cfg.inject_reducible_rate
    for i in range(cfg.samples):
        inject = math.floor((i + 1) * rate) > math.floor(i * rate)
        case_id: str | None = None
        if inject:
            case_id = _injection_case(cfg, injected_total)
            p = _draw_injected_sample(rng, cfg, case_id)
            injected_total += 1
            injected_per_case[case_id] = injected_per_case.get(case_id, 0) + 1
        else:
            p = _draw_random_sample(rng, cfg)
        v = decide(p, r_sign=cfg.r_sign, tol=cfg.tolerance)
        classification = _classify(v)
        counts[classification] += 1
        if case_id is not None:
            if not _witness_ok(p, v, cfg.tolerance):
                witness_failures.append(i)
            elif case_id == "equal-x-1":
                witness, sign = _producing_witness(p, v)
                if not _predicted_direction_ok(p, v, witness, sign, cfg.tolerance):
                    predicted_mismatches.append(i)
        if classification in (DISAGREE_RESOLVED, DISAGREE_UNRESOLVED):
            disagreements.append(_disagreement_record(i, p, case_id, v, classification))

    return SweepResult(
        config=cfg,
        counts=counts,
        injected_total=injected_total,
        injected_per_case=dict(sorted(injected_per_case.items())),
        witness_failures=tuple(witness_failures),
        predicted_mismatches=tuple(predicted_mismatches),
        disagreements=tuple(disagreements),
    )
