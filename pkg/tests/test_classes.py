import pytest

from genimpl.bijections import identity_bijection, power_bijection
from genimpl.classes import (
    CONSISTENT,
    EXCLUDED,
    build_intersection_member,
    check_self_dual_phi,
    conjugate_lk_probe,
    r_probe,
    sn_probe,
)
from genimpl.implications import (
    ImplicationCandidate,
    lukasiewicz_candidate,
    piecewise_f_candidate,
    yager_residual_candidate,
)


class TestSNProbe:
    def test_lukasiewicz_consistent(self, small_spec):
        assert sn_probe(lukasiewicz_candidate(), small_spec).overall == CONSISTENT

    def test_plateau_implication_excluded_via_ep(self, small_spec):
        result = sn_probe(piecewise_f_candidate(), small_spec)
        assert result.overall == EXCLUDED
        failed = [r.property for r in result.verdicts if not r.holds]
        assert "EP" in failed
        assert result.witness is not None

    def test_goedel_excluded_by_discontinuous_negation(self, small_spec):
        # I_GD(x, 0) jumps from 1 to 0 at x = 0, so N_I is not continuous
        goedel = ImplicationCandidate(
            lambda x, y: 1.0 if x <= y else y, "I_GD"
        )
        result = sn_probe(goedel, small_spec)
        assert result.overall == EXCLUDED
        failed = [r.property for r in result.verdicts if not r.holds]
        assert "negation-continuity" in failed


class TestRProbe:
    def test_yager_residual_consistent(self, small_spec):
        assert (
            r_probe(yager_residual_candidate(2.0), small_spec).overall
            == CONSISTENT
        )

    def test_reichenbach_excluded_by_op(self, small_spec):
        rc = ImplicationCandidate(lambda x, y: 1.0 - x + x * y, "RC")
        result = r_probe(rc, small_spec)
        assert result.overall == EXCLUDED
        failed = [r.property for r in result.verdicts if not r.holds]
        assert "OP" in failed


class TestConjugateLKProbe:
    def test_conjugates_consistent(self, small_spec):
        for phi in (identity_bijection(), power_bijection(2.0)):
            member = build_intersection_member(phi)
            assert conjugate_lk_probe(member, small_spec).overall == CONSISTENT

    def test_plateau_implication_excluded(self, small_spec):
        result = conjugate_lk_probe(piecewise_f_candidate(), small_spec)
        assert result.overall == EXCLUDED

    def test_result_serializes(self, small_spec):
        result = conjugate_lk_probe(lukasiewicz_candidate(), small_spec)
        d = result.as_dict()
        assert d["class_id"] == "phi-conjugate-LK"
        assert d["overall"] == CONSISTENT
        assert len(d["verdicts"]) == 3


class TestIntersectionMember:
    def test_identity_gives_lukasiewicz(self, small_spec):
        member = build_intersection_member(identity_bijection())
        ilk = lukasiewicz_candidate()
        for x in small_spec.grid():
            for y in small_spec.grid():
                assert member(x, y) == ilk(x, y)

    def test_conjugate_keeps_op(self, small_spec):
        member = build_intersection_member(power_bijection(0.5))
        for x, y in small_spec.pairs():
            assert (member(x, y) == 1.0) == (x <= y)


class TestSelfDualPhi:
    def test_identity_is_self_dual(self, small_spec):
        assert check_self_dual_phi(identity_bijection(), small_spec).holds

    def test_square_is_not(self, small_spec):
        report = check_self_dual_phi(power_bijection(2.0), small_spec)
        assert not report.holds
        assert report.witness is not None
