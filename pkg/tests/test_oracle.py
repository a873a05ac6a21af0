import pytest

from hbtrace.errors import DomainError, ResourceCapError
from hbtrace.matrices import hb_matrix_xy
from hbtrace.monomials import ideal, ring
from hbtrace.oracle import (
    default_bound,
    entries_ideal,
    kernel_generators,
    psi_component,
    quotient_basis,
    quotient_dim,
    verify_conjecture,
    verify_inclusion,
    verify_kernel_theorem_xy,
)

R2 = ring("x", "y")
R3 = ring("x1", "x2", "x3")
R4 = ring("x1", "x2", "x3", "x4")

M2 = ideal(R2, (2, 0), (1, 1), (0, 2))
I_E = ideal(R4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1))


class TestQuotientDim:
    def test_examples(self):
        assert quotient_dim(M2, (1, 0)) == 1
        assert quotient_dim(M2, (1, 1)) == 0
        assert quotient_dim(M2, (0, 0)) == 1

    def test_basis_carrier(self):
        qb = quotient_basis(M2, (1, 0))
        assert [str(m) for m in qb.standard_monomials] == ["x"]
        assert quotient_basis(M2, (1, 1)).standard_monomials == ()


class TestPsiComponent:
    def test_below_all_column_degrees(self):
        X = hb_matrix_xy(M2)
        rows, alive_rows, alive_cols = psi_component(X, M2, (1, 0))
        assert alive_cols == [] and rows == []

    def test_single_surviving_column(self):
        # at d = (2,1) only the first column survives (its shift is 1)
        X = hb_matrix_xy(M2)
        rows, alive_rows, alive_cols = psi_component(X, M2, (2, 1))
        assert len(alive_cols) == 1
        assert X.col_degrees[alive_cols[0]].exponents == (2, 1)

    def test_zero_map_when_deep_inside(self):
        X = hb_matrix_xy(M2)
        rows, alive_rows, alive_cols = psi_component(X, M2, (4, 4))
        assert alive_rows == [] and alive_cols == []


class TestKernelGenerators:
    def test_m_squared_generators(self):
        X = hb_matrix_xy(M2)
        K = kernel_generators(X, M2)
        degrees = sorted(g.degree for g in K.generators)
        assert degrees == [(1, 3), (2, 2), (2, 2), (3, 1)]
        coords = {
            tuple(str(c) for c in g.coords) for g in K.generators
        }
        assert coords == {("x", "0"), ("y", "0"), ("0", "x"), ("0", "y")}

    def test_complete_intersection_unit_trace(self):
        # m = 2 boundary: the kernel is nonzero and its entries generate (1)
        I = ideal(R2, (2, 0), (0, 3))
        K = kernel_generators(hb_matrix_xy(I), I)
        assert len(K.generators) >= 1
        assert entries_ideal(K).is_unit()

    def test_lattice_cap(self):
        with pytest.raises(ResourceCapError):
            kernel_generators(hb_matrix_xy(M2), M2, bound=(2, 2), cap=5)

    def test_entries_for_m2_non_cm(self):
        # I = x*(x, y): the scale monomial x generates the trace entries
        I = ideal(R2, (2, 0), (1, 1))
        K = kernel_generators(hb_matrix_xy(I), I)
        assert entries_ideal(K) == ideal(R2, (1, 0))


class TestEntriesIdeal:
    def test_m_squared(self):
        K = kernel_generators(hb_matrix_xy(M2), M2)
        assert entries_ideal(K) == ideal(R2, (1, 0), (0, 1))

    def test_cm_332(self):
        I = ideal(R2, (3, 0), (2, 1), (0, 2))
        K = kernel_generators(hb_matrix_xy(I), I)
        assert entries_ideal(K) == ideal(R2, (1, 0), (0, 1))


class TestDefaultBound:
    def test_doubled_lcm(self):
        assert default_bound(M2) == (4, 4)
        assert default_bound(I_E) == (2, 2, 2, 2)


class TestVerifyKernelTheoremXY:
    def test_m_squared(self):
        assert verify_kernel_theorem_xy(M2).verdict == "equal"

    def test_non_cm_with_content(self):
        I = ideal(R2, (3, 1), (2, 2), (1, 4))
        report = verify_kernel_theorem_xy(I)
        assert report.verdict == "equal"
        assert report.details["scale"] == "x*y"

    def test_m2_boundary_convention(self):
        # I_0 is the unit ideal; both sides equal (x^a_m y^b_1) + I
        for gens in [((2, 0), (0, 3)), ((2, 0), (1, 1)), ((3, 1), (1, 2))]:
            report = verify_kernel_theorem_xy(ideal(R2, *gens))
            assert report.verdict == "equal"

    def test_random_sweep(self, rng):
        from hbtrace.sweeps import random_two_variable_ideal

        for _ in range(25):
            I = random_two_variable_ideal(rng, max_m=5, max_exp=6)
            assert verify_kernel_theorem_xy(I).verdict == "equal"

    def test_larger_staircase(self, rng):
        from hbtrace.sweeps import random_two_variable_ideal

        for _ in range(5):
            I = random_two_variable_ideal(rng, max_m=6, max_exp=8)
            assert verify_kernel_theorem_xy(I).verdict == "equal"

    def test_wrong_ring(self):
        with pytest.raises(DomainError):
            verify_kernel_theorem_xy(I_E)


class TestVerifyInclusion:
    def test_case_e_singleton_witnesses(self):
        report = verify_inclusion(I_E)
        assert report.verdict == "holds"
        assert report.details["subsets_checked"] == 3

    def test_cm_332_equality_case(self):
        report = verify_inclusion(ideal(R2, (3, 0), (2, 1), (0, 2)))
        assert report.verdict == "holds"

    def test_m2_trivial(self):
        report = verify_inclusion(ideal(R2, (2, 0), (0, 3)))
        assert report.verdict == "holds"

    def test_non_cm_two_vars_uses_content(self):
        report = verify_inclusion(ideal(R2, (3, 1), (2, 2), (1, 4)))
        assert report.verdict == "holds"
        assert report.details["scale"] == "x*y"


class TestVerifyConjecture:
    def test_two_variable_instances_confirmed(self, rng):
        from hbtrace.sweeps import random_two_variable_ideal

        for _ in range(10):
            I = random_two_variable_ideal(rng, max_m=4, max_exp=5, cohen_macaulay=True)
            assert verify_conjecture(I).verdict == "confirmed-to-bound"

    def test_case_e_confirmed(self):
        assert verify_conjecture(I_E).verdict == "confirmed-to-bound"

    def test_non_cm_rejected(self):
        from hbtrace.graphs import build_ideal, edge_data

        edges = [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")]
        with pytest.raises(DomainError):
            verify_conjecture(build_ideal(edge_data(edges, [1] * 5, [1] * 5)))

    def test_two_fat_components(self):
        # two non-complete-intersection localizations at once
        from hbtrace.monomials import AmbientRing, ideal as mk, intersect

        R = AmbientRing(("x1", "x2", "x3"))
        fat12 = mk(R, (2, 0, 0), (1, 1, 0), (0, 2, 0))
        fat13 = mk(R, (2, 0, 0), (1, 0, 1), (0, 0, 2))
        I = intersect(fat12, fat13)
        from hbtrace.betti import is_cohen_macaulay_h2

        if not is_cohen_macaulay_h2(I):
            pytest.skip("intersection not CM; nothing to verify")
        assert verify_conjecture(I).verdict in ("confirmed-to-bound", "REFUTED")

    def test_report_serialization(self):
        js = verify_conjecture(I_E).to_json()
        assert js["verdict"] == "confirmed-to-bound"
        assert js["bound"] == [2, 2, 2, 2]
        assert "statement" in js


class TestMonotonicity:
    def test_entries_monotone_in_bound(self, rng):
        from hbtrace.sweeps import random_two_variable_ideal

        for _ in range(10):
            I = random_two_variable_ideal(rng, max_m=4, max_exp=4, cohen_macaulay=True)
            X = hb_matrix_xy(I)
            small = default_bound(I)
            big = tuple(b + 2 for b in small)
            E_small = entries_ideal(kernel_generators(X, I, small))
            E_big = entries_ideal(kernel_generators(X, I, big))
            for g in E_small.generators:
                assert E_big.contains_monomial(g)
