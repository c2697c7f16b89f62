"""Exact symbolic identity suite, plus numeric cross-checks of each identity."""

import math
import random
import time

import pytest

from heckeg7.exact import (
    DELTA_POLY,
    VARS,
    ExtElem,
    Poly,
    RatElem,
    eval_numeric,
    ext_eval,
    rat_equals,
    substitute,
)
from heckeg7.identities import (
    FAILED,
    REGISTRY,
    SIGN_DEPENDENT,
    VERIFIED,
    case_substitution,
    conjugated_upper_right_numerator,
    mat_equals,
    report_as_dict,
    run_all,
    sym_conjugator,
    sym_generators,
    verify_braid_hecke_relations,
    verify_conjugated_upper_right_vanishing,
    verify_conjugation_formulas,
    verify_invariant_line_eigenrelations,
    verify_reducibility_condition_factorization,
    verify_w_factorization,
    w_alpha_beta,
)
from heckeg7.numerics import approx_eq
from heckeg7.representation import Params, build_general, delta

X1, X2, Y1, Y2, Z1, Z2 = (Poly.var(name) for name in VARS)

NUMERIC_TOL = 1e-10


def seeded_points(count: int = 5):
    rng = random.Random(4242)
    for _ in range(count):
        values = {name: complex(10.0 ** rng.uniform(-0.5, 0.5)) for name in VARS}
        product = 1.0
        for v in values.values():
            product *= v.real
        yield values, complex(math.sqrt(product))


class TestSuiteReports:
    def test_registry_contents(self):
        assert list(REGISTRY) == [
            "reducibility-condition-factorization",
            "w-factorization",
            "braid-hecke-relations",
            "conjugation-formulas",
            "conjugated-upper-right-vanishing",
            "invariant-line-eigenrelations",
        ]

    def test_run_all_produces_no_failures(self):
        reports = run_all()
        assert len(reports) == len(REGISTRY)
        assert not any(report.failed() for report in reports)
        statuses = {report.name: report.status for report in reports}
        assert statuses["conjugated-upper-right-vanishing"] == SIGN_DEPENDENT
        for name, status in statuses.items():
            if name != "conjugated-upper-right-vanishing":
                assert status == VERIFIED, name

    def test_run_all_single_selection(self):
        reports = run_all("w-factorization")
        assert len(reports) == 1
        assert reports[0].name == "w-factorization"

    def test_unknown_name_lists_available(self):
        with pytest.raises(KeyError, match="w-factorization"):
            run_all("bogus")

    def test_report_as_dict_is_json_shaped(self):
        doc = report_as_dict(run_all("w-factorization")[0])
        assert doc["name"] == "w-factorization"
        assert doc["status"] == VERIFIED
        assert all(check["ok"] for check in doc["checks"])

    def test_every_check_passes_individually(self):
        for report in run_all():
            for check in report.checks:
                assert check.ok, f"{report.name}: {check.name}"


class TestFactorizations:
    def test_equal_x_condition_difference_factors(self):
        report = verify_reducibility_condition_factorization()
        assert report.status == VERIFIED
        # The identity itself, restated locally: with x1 = x2 the quantity
        # (y1+y2)^2 z1 z2 - (z1+z2)^2 y1 y2 equals -(y1 z1 - y2 z2)(y2 z1 - y1 z2).
        lhs = (Y1 + Y2) ** 2 * Z1 * Z2 - (Z1 + Z2) ** 2 * Y1 * Y2
        rhs = -(Y1 * Z1 - Y2 * Z2) * (Y2 * Z1 - Y1 * Z2)
        assert lhs == rhs

    def test_w_factors_into_alpha_beta(self):
        report = verify_w_factorization()
        assert report.status == VERIFIED
        w, alpha, beta = w_alpha_beta()
        assert w == alpha * beta

    def test_alpha_beta_conjugate_norms(self):
        _, alpha, beta = w_alpha_beta()
        norm_alpha = alpha * alpha.conjugate()
        expected_alpha = ExtElem(
            Y1 * Y2 * (X1 * Y1 * Z2 - X2 * Y2 * Z1) * (X1 * Y2 * Z2 - X2 * Y1 * Z1)
        )
        assert norm_alpha == expected_alpha
        norm_beta = beta * beta.conjugate()
        expected_beta = ExtElem(
            Y1 * Y2 * (X1 * Y2 * Z1 - X2 * Y1 * Z2) * (X1 * Y1 * Z1 - X2 * Y2 * Z2)
        )
        assert norm_beta == expected_beta

    def test_w_numeric_evaluation_matches_direct_formula(self):
        w, _, _ = w_alpha_beta()
        for values, r_value in seeded_points():
            x1, x2 = values["x1"], values["x2"]
            y1, y2 = values["y1"], values["y2"]
            z1, z2 = values["z1"], values["z2"]
            direct = (x1 - x2) ** 2 * y1**2 * y2**2 * z1 * z2 + (
                (y1 + y2) * r_value - x1 * y1 * y2 * (z1 + z2)
            ) * ((y1 + y2) * r_value - x2 * y1 * y2 * (z1 + z2))
            assert approx_eq(ext_eval(w, values, r_value), direct, NUMERIC_TOL)


class TestSymbolicGenerators:
    def test_relations_report(self):
        report = verify_braid_hecke_relations()
        assert report.status == VERIFIED
        # Both root signs are covered.
        assert len(report.checks) == 10

    def test_braid_products_coincide_numerically(self):
        s1, s2, s3 = sym_generators()
        p123 = s1 * s2 * s3
        p231 = s2 * s3 * s1
        p312 = s3 * s1 * s2
        assert mat_equals(p123, p231)
        assert mat_equals(p231, p312)
        for values, r_value in seeded_points(3):
            for pos, entry in p123.entries():
                other = dict(p231.entries())[pos]
                lhs = eval_numeric(entry, values, r_value)
                rhs = eval_numeric(other, values, r_value)
                assert approx_eq(lhs, rhs, NUMERIC_TOL)

    def test_symbolic_generators_match_numeric_build(self):
        for values, r_value in seeded_points(3):
            p = Params(**{k: v for k, v in values.items()})
            g = build_general(p)
            for sym, num in zip(sym_generators(), g.as_list()):
                for pos, entry in sym.entries():
                    got = eval_numeric(entry, values, r_value)
                    want = {
                        "(1,1)": num.a,
                        "(1,2)": num.b,
                        "(2,1)": num.c,
                        "(2,2)": num.d,
                    }[pos]
                    assert approx_eq(got, want, NUMERIC_TOL)

    def test_conjugation_report_covers_both_signs(self):
        report = verify_conjugation_formulas()
        assert report.status == VERIFIED
        assert len(report.checks) == 36

    def test_conjugator_is_unitriangular(self):
        s1, _, _ = sym_generators()
        t, t_inv = sym_conjugator(s1)
        one = RatElem(1)
        zero = RatElem(0)
        assert t.a.equals(one) and t.d.equals(one) and t.c.equals(zero)
        product = t * t_inv
        assert product.a.equals(one) and product.d.equals(one)
        assert product.b.is_zero() and product.c.is_zero()

    def test_conjugated_s1_is_diagonal(self):
        s1, _, _ = sym_generators()
        t, t_inv = sym_conjugator(s1)
        d = t_inv * s1 * t
        assert d.b.is_zero() and d.c.is_zero()
        assert d.a.equals(RatElem.var("x1"))
        assert d.d.equals(RatElem.var("x2"))


class TestCaseSubstitutions:
    def test_all_six_cases_have_consistent_root_images(self):
        # substitute() raises unless the stated root image squares to the
        # image of the six-variable product, so success is the assertion.
        for case_id in (
            "equal-x-1",
            "equal-x-2",
            "distinct-x-1",
            "distinct-x-2",
            "distinct-x-3",
            "distinct-x-4",
        ):
            assignment, root = case_substitution(case_id)
            image = substitute(RatElem(ExtElem(DELTA_POLY)), assignment, root)
            assert image.equals(root * root)

    def test_first_distinct_case_square(self):
        assignment, root = case_substitution("distinct-x-1")
        assert rat_equals(root, RatElem(ExtElem(X2 * Y1 * Z1)))
        image = substitute(RatElem(ExtElem(DELTA_POLY)), assignment, root)
        assert image.equals(RatElem(ExtElem((X2 * Y1 * Z1) ** 2)))

    def test_upper_right_vanishing_is_sign_dependent(self):
        report = verify_conjugated_upper_right_vanishing()
        assert report.status == SIGN_DEPENDENT
        assert not report.failed()
        # Eight checks: four distinct-x cases, two root signs each.
        assert len(report.checks) == 8

    def test_upper_right_numerator_vanishes_under_first_case(self):
        numerator = conjugated_upper_right_numerator()
        assignment, root = case_substitution("distinct-x-1")
        image = substitute(RatElem(numerator), assignment, root)
        assert image.is_zero()
        flipped = substitute(RatElem(numerator), assignment, -root)
        assert not flipped.is_zero()

    def test_eigenrelation_report(self):
        report = verify_invariant_line_eigenrelations()
        assert report.status == VERIFIED
        assert len(report.checks) == 22


class TestBudget:
    def test_full_suite_runs_quickly(self):
        start = time.perf_counter()
        run_all()
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0
