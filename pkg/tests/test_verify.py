"""Tests for the verification reports and the identity suite."""

import json
import math

import pytest
from numpy.testing import assert_allclose

from projheat.verify import (
    JACOBI_REP_CONVENTIONS,
    SuiteProfile,
    full_suite,
    group_names,
    jacobi_rep_check,
    lemma_check,
    make_report,
    theta2_relation_check,
)


class TestReport:
    def test_pass_fail_invariant(self):
        rep = make_report("x", {}, 1.0, 1.0 + 1e-12, 1e-10)
        assert rep.passed and (rep.abs_err <= rep.tol or rep.rel_err <= rep.tol)
        rep = make_report("x", {}, 1.0, 2.0, 1e-10)
        assert not rep.passed and rep.abs_err > rep.tol and rep.rel_err > rep.tol

    def test_relative_kicks_in_for_large_values(self):
        # abs error 1e-6 on values of size 1e6 is a 1e-12 relative match
        rep = make_report("x", {}, 1e6, 1e6 + 1e-6, 1e-10)
        assert rep.passed and rep.rel_err <= 1e-10

    def test_json_roundtrip(self):
        rep = make_report("name", {"a": 1, "b": 0.5}, 2.0, 2.0, 1e-8)
        data = json.loads(rep.to_json())
        assert data["identity"] == "name"
        assert data["parameters"] == {"a": 1, "b": 0.5}
        assert data["passed"] is True


class TestLemma:
    @pytest.mark.parametrize("d", [0.0, 0.3, 0.7, 1.1, 1.4])
    def test_analytic_case_is_two_pi(self, d):
        # n=1, l=0: the laddered term is the constant 8, so the integral
        # collapses to 8 * (pi/4) = 2 pi, matching the closed form exactly
        rep = lemma_check(1, 0, d)
        assert_allclose(rep.rhs, 2.0 * math.pi, rtol=1e-15)
        assert_allclose(rep.lhs, 2.0 * math.pi, rtol=1e-12)
        assert rep.passed

    @pytest.mark.parametrize("n,l,d", [(1, 1, 0.5), (2, 3, 0.2), (3, 8, 1.4), (2, 0, 0.0)])
    def test_general_cases(self, n, l, d):
        rep = lemma_check(n, l, d, tol=1e-9)
        assert rep.passed, (rep.abs_err, rep.rel_err)


class TestJacobiRep:
    def test_shifted_convention_passes(self):
        for n, l, d in ((1, 0, 0.0), (1, 2, 0.7), (2, 1, 0.4), (3, 5, 1.1)):
            rep = jacobi_rep_check(n, l, d, tol=1e-9, convention="2n-2")
            assert rep.passed, rep.parameters

    def test_displayed_convention_fails(self):
        # at n=1, l=0, d=0 the displayed reading compares P_1^(1,0)(1) = 2
        # against an integral worth 1: off by a factor two, not a roundoff
        rep = jacobi_rep_check(1, 0, 0.0, convention="2n-1")
        assert not rep.passed
        assert_allclose(rep.lhs, 2.0, rtol=1e-12)
        assert_allclose(rep.rhs, 1.0, rtol=1e-9)

    def test_rejects_unknown_convention(self):
        from projheat.errors import DomainError

        with pytest.raises(DomainError):
            jacobi_rep_check(1, 0, 0.0, convention="2n")

    def test_suite_resolution_names_winner(self):
        reports = full_suite(SuiteProfile(groups=("jacobi_rep",)))
        res = [r for r in reports if r.identity_name == "jacobi_sqrt_integral_rep_resolution"]
        assert len(res) == 1
        assert res[0].passed
        assert res[0].parameters["passing_convention"] == "2n-2"
        assert res[0].parameters["rejected_max_rel_err"] > 1e-3
        assert set(JACOBI_REP_CONVENTIONS) == {"2n-1", "2n-2"}
        # the emitted point reports all carry the winning convention
        points = [r for r in reports if r.identity_name == "jacobi_sqrt_integral_rep"]
        assert points and all(r.parameters["convention"] == "2n-2" for r in points)
        assert all(r.passed for r in points)


class TestThetaRelation:
    @pytest.mark.parametrize("n,t,x", [(1, 0.5, 0.3), (2, 0.1, 0.0), (3, 2.0, 1.0)])
    def test_passes(self, n, t, x):
        rep = theta2_relation_check(n, t, x, tol=1e-11)
        assert rep.passed

    def test_both_sides_vanish_at_half_pi(self):
        rep = theta2_relation_check(2, 0.4, math.pi / 2, tol=1e-11)
        assert abs(rep.lhs) <= 1e-12 and abs(rep.rhs) <= 1e-12 and rep.passed


class TestSuite:
    def test_group_filter(self):
        reports = full_suite(SuiteProfile(groups=("theta2",)))
        assert reports
        assert {r.identity_name for r in reports} == {"theta_halfinteger_relation"}

    def test_zero_tolerance_fails_everything(self):
        # theta2 compares two independent summations whose discrepancies
        # are roundoff-sized but never exactly zero on this grid
        reports = full_suite(SuiteProfile(tol_override=0.0, groups=("theta2",)))
        assert reports
        assert all(not r.passed for r in reports)
        assert all(r.abs_err > 0 for r in reports)

    def test_k_restriction_drops_other_field(self):
        reports = full_suite(SuiteProfile(ks=(1,), groups=("kernels_equivalence", "lemma")))
        names = {r.identity_name for r in reports}
        assert "gegenbauer_ladder_to_jacobi" not in names  # quaternionic-only group
        ks = {r.parameters["k"] for r in reports if "k" in r.parameters}
        assert ks == {1}

    def test_deterministic_order(self):
        a = full_suite(SuiteProfile(groups=("quadrature_substitution",)))
        b = full_suite(SuiteProfile(groups=("quadrature_substitution",)))
        assert [r.sort_key() for r in a] == [r.sort_key() for r in b]
        assert [r.sort_key() for r in a] == sorted(r.sort_key() for r in a)

    def test_group_names_registered(self):
        names = group_names()
        for expected in ("lemma", "jacobi_rep", "theta2", "kernels_equivalence"):
            assert expected in names
