import pytest

from conftest import brute_force_has_long_induced_cycle
from hbtrace.errors import DomainError
from hbtrace.graphs import (
    EdgeSequenceData,
    RecoveryObstruction,
    build_ideal,
    complement,
    edge_data,
    edge_ideal,
    graph,
    intersection_graph,
    is_chordal,
    is_cochordal,
    is_induced_cycle,
    is_perfect_elimination_ordering,
    recover_data,
)
from hbtrace.monomials import ideal, ring
from hbtrace.sweeps import random_labeled_graph


def cycle(n):
    vs = [f"v{i}" for i in range(1, n + 1)]
    return graph(vs, list(zip(vs, vs[1:] + vs[:1])))


def path(n):
    vs = [f"v{i}" for i in range(1, n + 1)]
    return graph(vs, list(zip(vs, vs[1:])))


class TestComplement:
    def test_c4(self):
        H = complement(cycle(4))
        assert H.edges == frozenset(
            {frozenset(("v1", "v3")), frozenset(("v2", "v4"))}
        )

    def test_involution(self):
        G = path(5)
        assert complement(complement(G)) == G

    def test_k3(self):
        K3 = graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        assert complement(K3).edges == frozenset()


class TestChordal:
    def test_c4_not_chordal_with_certificate(self):
        ok, cert = is_chordal(cycle(4))
        assert not ok
        assert is_induced_cycle(cycle(4), cert)

    def test_trees_chordal(self):
        for n in (1, 2, 5, 8):
            ok, cert = is_chordal(path(n))
            assert ok
            assert is_perfect_elimination_ordering(path(n), cert)

    def test_c4_plus_chord(self):
        G = graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])
        ok, cert = is_chordal(G)
        assert ok
        assert is_perfect_elimination_ordering(G, cert)
        assert not brute_force_has_long_induced_cycle(G)

    def test_c5_certificate_has_length_5(self):
        ok, cert = is_chordal(cycle(5))
        assert not ok and len(cert) == 5

    def test_against_bruteforce_random(self, rng):
        for _ in range(150):
            G = random_labeled_graph(rng, rng.randint(1, 7), rng.random())
            ok, cert = is_chordal(G)
            assert ok == (not brute_force_has_long_induced_cycle(G))
            if ok:
                assert is_perfect_elimination_ordering(G, cert)
            else:
                assert is_induced_cycle(G, cert)


class TestCochordal:
    def test_examples(self):
        assert is_cochordal(cycle(4))  # complement is 2K2, a forest
        assert not is_cochordal(cycle(5))  # self-complementary
        assert is_cochordal(path(3))


class TestEdgeSequenceData:
    def test_validation(self):
        with pytest.raises(DomainError):
            edge_data([("a", "a")], [1], [1])
        with pytest.raises(DomainError):
            edge_data([("a", "b"), ("b", "a")], [1, 1], [1, 1])
        with pytest.raises(DomainError):
            edge_data([("a", "b")], [0], [1])
        with pytest.raises(DomainError):
            edge_data([("a", "b")], [1, 2], [1])


class TestBuildIdeal:
    def test_path(self):
        d = edge_data([("x1", "x2"), ("x2", "x3")], [1, 1], [1, 1])
        R = ring("x1", "x2", "x3")
        assert build_ideal(d) == ideal(R, (0, 1, 0), (1, 0, 1))

    def test_single_edge(self):
        d = edge_data([("x1", "x2")], [2], [1])
        assert build_ideal(d) == ideal(ring("x1", "x2"), (2, 0), (0, 1))
        d = edge_data([("x1", "x2")], [2], [3])
        assert build_ideal(d) == ideal(ring("x1", "x2"), (2, 0), (0, 3))


class TestIntersectionGraph:
    def test_single_edge_2_1(self):
        d = edge_data([("x1", "x2")], [2], [1])
        H = intersection_graph(d)
        assert H.vertices == ("x1_1", "x1_2", "x2_1")
        assert H.edges == frozenset(
            {frozenset(("x1_1", "x2_1")), frozenset(("x1_2", "x2_1"))}
        )

    def test_all_ones_recovers_graph(self):
        d = edge_data([("x1", "x2"), ("x2", "x3")], [1, 1], [1, 1])
        H = intersection_graph(d)
        assert H.vertices == ("x1_1", "x2_1", "x3_1")
        assert len(H.edges) == 2

    def test_path_with_mixed_exponents(self):
        d = edge_data([("x1", "x2"), ("x2", "x3")], [1, 1], [2, 1])
        H = intersection_graph(d)
        expected = {
            frozenset(("x1_1", "x2_1")),
            frozenset(("x1_1", "x2_2")),
            frozenset(("x2_1", "x3_1")),
        }
        assert H.edges == expected


class TestRecoverData:
    def test_path_ideal(self):
        R = ring("x1", "x2", "x3")
        I = ideal(R, (0, 1, 0), (1, 0, 1))
        d = recover_data(I)
        assert isinstance(d, EdgeSequenceData)
        assert d.edge_order == (("x1", "x2"), ("x2", "x3"))
        assert d.a == (1, 1) and d.b == (1, 1)
        assert build_ideal(d) == I

    def test_obstruction(self):
        R = ring("x", "y")
        out = recover_data(ideal(R, (2, 0), (1, 1), (0, 2)))
        assert isinstance(out, RecoveryObstruction)
        assert out.primary == ideal(R, (2, 0), (1, 1), (0, 2))

    def test_single_edge(self):
        R = ring("x1", "x2")
        d = recover_data(ideal(R, (2, 0), (0, 1)))
        assert isinstance(d, EdgeSequenceData)
        assert d.a == (2,) and d.b == (1,)

    def test_wrong_height_rejected(self):
        R = ring("x", "y")
        with pytest.raises(DomainError):
            recover_data(ideal(R, (1, 1)))

    def test_roundtrip_random(self, rng):
        from hbtrace.sweeps import random_edge_sequence_data

        for _ in range(40):
            d = random_edge_sequence_data(rng, max_t=4, max_vertices=5)
            I = build_ideal(d)
            d2 = recover_data(I)
            assert isinstance(d2, EdgeSequenceData)
            assert build_ideal(d2) == I


class TestEdgeIdeal:
    def test_examples(self):
        G = graph(("x1", "x2"), [("x1", "x2")])
        assert edge_ideal(G) == ideal(ring("x1", "x2"), (1, 1))
        C4 = graph(
            ("x1", "x2", "x3", "x4"),
            [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x1")],
        )
        assert edge_ideal(C4).mu == 4
        empty = graph(("x1", "x2"), [])
        assert edge_ideal(empty).is_zero()


class TestPolarizationIdentityChain:
    def test_on_random_data(self, rng):
        from hbtrace.monomials import alexander_dual, polarize
        from hbtrace.sweeps import random_edge_sequence_data

        for _ in range(25):
            d = random_edge_sequence_data(rng, max_t=3, max_vertices=4)
            I = build_ideal(d)
            P, _ = polarize(I)
            H = intersection_graph(d)
            # the polarization is the all-ones ideal of the intersection graph
            edges = sorted(tuple(sorted(e, key=H.vertices.index)) for e in H.edges)
            ones = EdgeSequenceData(
                H, tuple(edges), (1,) * len(edges), (1,) * len(edges)
            )
            assert P == build_ideal(ones)
            # and its Alexander dual is the edge ideal of that graph
            assert alexander_dual(P) == edge_ideal(H)
