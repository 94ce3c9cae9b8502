from fractions import Fraction

import pytest

from outerplanar.bounds import prox_bound_2conn, radius_bound, remoteness_bound
from outerplanar.embedding import interior_faces, max_face_length, recognize, verify_embedding
from outerplanar.families import (
    gen_cycle,
    gen_fan,
    gen_hn3,
    gen_hnq,
    gen_ladder,
    gen_path,
    generate_family,
    nearest_valid_hnq_order,
)
from outerplanar.graphs import global_metrics


class TestPathCycle:
    def test_cycle7_proximity(self):
        assert global_metrics(gen_cycle(7).graph).proximity == Fraction(2)

    def test_path6_remoteness(self):
        assert global_metrics(gen_path(6).graph).remoteness == Fraction(3)

    def test_cycle3(self):
        assert global_metrics(gen_cycle(3).graph).proximity == 1

    def test_path_has_no_embedding(self):
        assert gen_path(5).embedding is None

    def test_domain(self):
        with pytest.raises(ValueError):
            gen_path(1)
        with pytest.raises(ValueError):
            gen_cycle(2)


class TestHnq:
    def test_12_4_is_full_ladder(self):
        gg = gen_hnq(12, 4)
        assert global_metrics(gg.graph).proximity == Fraction(24, 11)
        assert max_face_length(gg.embedding) == 4

    def test_12_8_single_long_face(self):
        gg = gen_hnq(12, 8)
        lengths = sorted(f.length for f in interior_faces(gg.embedding))
        assert lengths == [4, 4, 8]
        assert max_face_length(gg.embedding) == 8

    def test_13_5_odd_variant(self):
        gg = gen_hnq(13, 5)
        assert gg.graph.n == 13
        assert sum(1 for lab in gg.labels if lab.startswith("a")) == 6
        assert sum(1 for lab in gg.labels if lab.startswith("b")) == 7
        lengths = sorted(f.length for f in interior_faces(gg.embedding))
        assert lengths == [4, 4, 4, 4, 5]

    def test_exactly_one_long_face(self):
        # for q = 4 every face has length 4; from q = 5 up exactly one face
        # has length q and the rest have length 4
        for n, q in [(13, 5), (16, 8), (17, 5), (20, 12), (21, 9), (24, 4)]:
            gg = gen_hnq(n, q)
            lengths = [f.length for f in interior_faces(gg.embedding)]
            if q == 4:
                assert set(lengths) == {4}
            else:
                assert sorted(set(lengths)) == ([4, q] if n > q else [q])
                assert lengths.count(q) == 1

    def test_degenerate_n_equals_q(self):
        for q in (4, 5, 8):
            gg = gen_hnq(q, q)
            assert gg.embedding.chords == ()

    def test_invalid_orders_rejected(self):
        with pytest.raises(ValueError):
            gen_hnq(13, 4)
        with pytest.raises(ValueError):
            gen_hnq(10, 11)
        with pytest.raises(ValueError):
            gen_hnq(10, 3)

    def test_nearest_helper(self):
        assert nearest_valid_hnq_order(13, 4) == 12
        assert nearest_valid_hnq_order(12, 4) == 12
        assert nearest_valid_hnq_order(18, 5) == 17

    def test_proximity_strictly_below_cap_all_parities(self):
        for q in range(4, 12):
            for n in range(q, 41, 4):
                gg = gen_hnq(n, q)
                pi = global_metrics(gg.graph).proximity
                assert pi < prox_bound_2conn(n, q), (n, q)


class TestHn3:
    def test_19_reference_structure(self):
        gg = gen_hn3(19)
        assert gg.params == {"n": 19, "k": 5, "k_prime": 3}
        assert gg.graph.m == 2 * 19 - 3
        assert all(f.length == 3 for f in interior_faces(gg.embedding))
        a0 = gg.id_of("a0")
        assert gg.graph.degree(a0) == 4

    def test_12(self):
        gg = gen_hn3(12)
        assert gg.params["k"] == 3 and gg.params["k_prime"] == 4
        assert all(f.length == 3 for f in interior_faces(gg.embedding))

    def test_orders_10_to_40(self):
        for n in range(10, 41):
            gg = gen_hn3(n)
            assert gg.graph.n == n
            assert gg.graph.m == 2 * n - 3
            assert max_face_length(gg.embedding) == 3

    def test_domain(self):
        with pytest.raises(ValueError):
            gen_hn3(9)


class TestFan:
    @pytest.mark.parametrize("n,expected", [(6, Fraction(9, 5)), (7, Fraction(2)), (3, Fraction(1))])
    def test_remoteness_attained(self, n, expected):
        gg = gen_fan(n)
        rep = global_metrics(gg.graph)
        assert rep.remoteness == expected == remoteness_bound(n)

    def test_attained_at_end_vertex(self):
        for n in (6, 7, 10, 15):
            gg = gen_fan(n)
            rep = global_metrics(gg.graph)
            a0 = gg.id_of("a0")
            assert Fraction(rep.transmission[a0], n - 1) == rep.remoteness

    def test_maximal(self):
        for n in range(3, 30):
            assert gen_fan(n).graph.m == 2 * n - 3


class TestLadder:
    @pytest.mark.parametrize("n,expected", [(8, 3), (9, 3), (16, 5)])
    def test_radius(self, n, expected):
        assert global_metrics(gen_ladder(n).graph).radius == expected == radius_bound(n)

    def test_odd_has_one_triangle(self):
        lengths = sorted(f.length for f in interior_faces(gen_ladder(9).embedding))
        assert lengths == [3, 4, 4, 4]

    def test_even_all_quads(self):
        lengths = [f.length for f in interior_faces(gen_ladder(8).embedding)]
        assert lengths == [4, 4, 4]


class TestEmbeddingsRoundTrip:
    def test_all_families_verify_and_rerecognise(self):
        cases = [
            gen_cycle(11),
            gen_hnq(16, 4),
            gen_hnq(16, 8),
            gen_hnq(17, 5),
            gen_hnq(21, 9),
            gen_hn3(11),
            gen_hn3(13),
            gen_hn3(22),
            gen_fan(8),
            gen_fan(13),
            gen_ladder(10),
            gen_ladder(15),
        ]
        for gg in cases:
            assert verify_embedding(gg.graph, gg.embedding).ok, gg.family
            assert recognize(gg.graph) == gg.embedding, gg.family

    def test_generate_family_dispatch(self):
        assert generate_family("fan", 6).family == "fan"
        with pytest.raises(ValueError):
            generate_family("frob", 6)
        with pytest.raises(ValueError):
            generate_family("hnq", 12)  # needs q
