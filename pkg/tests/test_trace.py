import pytest

from hbtrace.errors import ConjecturalTraceError, DomainError
from hbtrace.monomials import ideal, ring
from hbtrace.trace import (
    GenGorObstruction,
    NGCase,
    TraceBasis,
    canonical_trace,
    classify_ng_height2,
    classify_ng_two_vars,
    is_generically_gorenstein,
    is_gorenstein_h2,
    is_nearly_gorenstein_h2,
    verify_classification_consistency,
)

R2 = ring("x", "y")
R3 = ring("x1", "x2", "x3")
R4 = ring("x1", "x2", "x3", "x4")

I_332 = ideal(R2, (3, 0), (2, 1), (0, 2))
I_E = ideal(R4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1))
PATH = ideal(R3, (0, 1, 0), (1, 0, 1))
M2 = ideal(R2, (2, 0), (1, 1), (0, 2))


class TestGenericallyGorenstein:
    def test_path_ideal(self):
        ok, witness = is_generically_gorenstein(PATH)
        assert ok and witness is None

    def test_primary_fat_point(self):
        ok, witness = is_generically_gorenstein(M2)
        assert not ok
        assert isinstance(witness, GenGorObstruction)
        assert witness.prime == frozenset({0, 1})
        assert witness.localization.mu == 3

    def test_complete_intersection(self):
        ok, _ = is_generically_gorenstein(ideal(R2, (3, 0), (0, 2)))
        assert ok

    def test_guards(self):
        with pytest.raises(DomainError):
            is_generically_gorenstein(ideal(R2, (1, 1)))  # height 1


class TestCanonicalTrace:
    def test_two_variable_example(self):
        rep = canonical_trace(I_332)
        assert rep.trace_gens_in_S == ideal(R2, (1, 0), (0, 1))
        assert rep.basis is TraceBasis.TWO_VARIABLES
        assert rep.is_nearly_gorenstein and not rep.is_gorenstein

    def test_case_e(self):
        rep = canonical_trace(I_E)
        assert rep.trace_gens_in_S == ideal(
            R4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
        )
        assert rep.basis is TraceBasis.GENERICALLY_GORENSTEIN
        assert rep.is_nearly_gorenstein

    def test_complete_intersection_gorenstein(self):
        rep = canonical_trace(ideal(R2, (3, 0), (0, 5)))
        assert rep.trace_gens_in_S.is_unit()
        assert rep.is_gorenstein and rep.is_nearly_gorenstein

    def test_conjectural_flagging(self):
        R5 = ring("x1", "x2", "x3", "x4", "x5")
        # m^2 in two of five variables: CM height 2, not generically Gorenstein
        I = ideal(R5, (2, 0, 0, 0, 0), (1, 1, 0, 0, 0), (0, 2, 0, 0, 0))
        rep = canonical_trace(I)
        assert rep.basis is TraceBasis.CONJECTURAL_ONLY
        assert not rep.is_generically_gorenstein
        assert rep.trace_gens_in_S.contains_ideal(I)

    def test_guards(self):
        with pytest.raises(DomainError):
            canonical_trace(ideal(R2, (2, 1)))  # height 1
        from hbtrace.graphs import build_ideal, edge_data

        edges = [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")]
        with pytest.raises(DomainError):
            canonical_trace(build_ideal(edge_data(edges, [1] * 5, [1] * 5)))  # not CM

    def test_trace_contains_ideal_always(self, rng):
        from hbtrace.sweeps import random_two_variable_ideal

        for _ in range(25):
            I = random_two_variable_ideal(rng, max_m=5, max_exp=6, cohen_macaulay=True)
            rep = canonical_trace(I)
            assert rep.trace_gens_in_S.contains_ideal(I)


class TestGorenstein:
    def test_three_way_agreement(self):
        assert is_gorenstein_h2(ideal(R2, (2, 0), (0, 3)))
        assert not is_gorenstein_h2(M2)
        assert is_gorenstein_h2(PATH)


class TestNearlyGorenstein:
    def test_examples(self):
        assert not is_nearly_gorenstein_h2(ideal(R2, (4, 0), (2, 2), (0, 4)))
        assert is_nearly_gorenstein_h2(I_332)
        # mu = 4 fast filter
        assert not is_nearly_gorenstein_h2(
            ideal(R2, (3, 0), (2, 1), (1, 2), (0, 3))
        )

    def test_conjectural_refusal(self):
        R5 = ring("x1", "x2", "x3", "x4", "x5")
        I = ideal(R5, (2, 0, 0, 0, 0), (1, 1, 0, 0, 0), (0, 2, 0, 0, 0))
        with pytest.raises(ConjecturalTraceError):
            is_nearly_gorenstein_h2(I)


class TestClassifyTwoVars:
    def test_ng_triple(self):
        cls = classify_ng_two_vars(I_332)
        assert cls.case is NGCase.B_TWO_VARS
        assert cls.witness["params"] == {"a": 3, "b": 2, "c": 1, "d": 2}

    def test_failing_conditions(self):
        assert classify_ng_two_vars(ideal(R2, (4, 0), (2, 2), (0, 4))).case is NGCase.NOT_NG

    def test_gorenstein_bucket(self):
        assert classify_ng_two_vars(ideal(R2, (2, 0), (0, 1))).case is NGCase.A_TWO_GENS
        assert classify_ng_two_vars(ideal(R2, (2, 3))).case is NGCase.A_TWO_GENS

    def test_mu_four_never(self):
        cls = classify_ng_two_vars(ideal(R2, (3, 0), (2, 1), (1, 2), (0, 3)))
        assert cls.case is NGCase.NOT_NG

    def test_non_cm_rejected(self):
        with pytest.raises(DomainError):
            classify_ng_two_vars(ideal(R2, (3, 1), (2, 2), (0, 3)))


class TestClassifyHeight2:
    def test_case_e(self):
        assert classify_ng_height2(I_E).case is NGCase.E

    def test_case_c(self):
        I = ideal(R3, (2, 1, 0), (1, 0, 1), (0, 1, 1))
        cls = classify_ng_height2(I)
        assert cls.case is NGCase.C
        assert cls.witness["params"] == {"a": 2, "b": 1}

    def test_case_c_with_b_zero(self):
        I = ideal(R3, (2, 0, 0), (1, 0, 1), (0, 1, 1))
        cls = classify_ng_height2(I)
        assert cls.case is NGCase.C
        assert cls.witness["params"] == {"a": 2, "b": 0}

    def test_case_d(self):
        I = ideal(R3, (1, 3, 0), (0, 4, 0), (1, 0, 1))
        cls = classify_ng_height2(I)
        assert cls.case is NGCase.D
        assert cls.witness["params"] == {"b": 3}

    def test_case_b_via_support(self):
        cls = classify_ng_height2(M2)
        assert cls.case is NGCase.B_TWO_VARS
        assert cls.witness["params"] == {"a": 2, "b": 1, "c": 1, "d": 2}

    def test_case_a_with_excess(self):
        I = ideal(R4, (2, 0, 0, 0), (0, 0, 3, 0))
        cls = classify_ng_height2(I)
        assert cls.case is NGCase.A_TWO_GENS
        assert cls.ambient_excess_vars == ("x2", "x4")
        assert cls.effective_nearly_gorenstein()

    def test_excess_blocks_non_gorenstein_cases(self):
        # the two-variable fat point in a three-variable ring
        I = ideal(R3, (2, 0, 0), (1, 1, 0), (0, 2, 0))
        cls = classify_ng_height2(I)
        assert cls.case is NGCase.B_TWO_VARS
        assert cls.ambient_excess_vars == ("x3",)
        assert not cls.effective_nearly_gorenstein()

    def test_permutation_invariance(self):
        # case (e) with variables relabeled
        I = ideal(R4, (0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0))
        assert classify_ng_height2(I).case is NGCase.E

    def test_not_ng(self):
        I = ideal(R3, (2, 1, 0), (1, 0, 2), (0, 2, 1))
        if classify_ng_height2(I).case is not NGCase.NOT_NG:
            pytest.skip("unexpected pattern hit")
        assert classify_ng_height2(I).case is NGCase.NOT_NG


class TestConsistency:
    def test_m_squared_consistent(self):
        rep = verify_classification_consistency(M2)
        assert rep.consistent and rep.ng_from_trace

    def test_case_instances_consistent(self):
        for I in (I_332, I_E, PATH, ideal(R2, (4, 0), (2, 2), (0, 4))):
            assert verify_classification_consistency(I).consistent
