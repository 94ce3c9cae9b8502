import pytest

from outerplanar.bounds import prox_cert_numerator, radius_bound
from outerplanar.embedding import interior_faces, recognize
from outerplanar.families import gen_cycle, gen_hn3, gen_hnq, gen_ladder
from outerplanar.graphs import bfs_distances, build_graph, global_metrics
from outerplanar.medians import central_face, cycle_weighted_transmission
from outerplanar.witness import (
    FaceTooLong,
    boundary_weights,
    f_cap,
    proximity_witness,
    radius_witness,
    segment_decomposition,
)


class TestFCap:
    @pytest.mark.parametrize("x,expected", [(0, 0), (3, 4), (4, 6), (1, 1), (2, 2)])
    def test_values(self, x, expected):
        assert f_cap(x) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            f_cap(-1)

    def test_rearrangement_inequality_small(self):
        for a in range(1, 20):
            for b in range(1, a + 1):
                assert f_cap(a + 1) + f_cap(b - 1) >= f_cap(a) + f_cap(b)


class TestSegmentDecomposition:
    def test_cycle_whole_polygon(self):
        gg = gen_cycle(8)
        sd = segment_decomposition(gg.embedding, central_face(gg.embedding))
        assert sd.k == 8
        assert sd.p == (0,) * 8
        assert sd.face_vertices[0] == 0

    def test_h12_4_central(self):
        gg = gen_hnq(12, 4)
        sd = segment_decomposition(gg.embedding, central_face(gg.embedding))
        assert sd.p == (0, 4, 0, 4)
        assert [gg.labels[v] for v in sd.face_vertices] == ["a2", "a3", "b3", "b2"]

    def test_triangle_with_long_tail(self):
        # triangle {0,1,2} plus a 7-vertex outer path joining 2 back to 0
        n = 10
        edges = [(i, (i + 1) % n) for i in range(n)] + [(0, 2)]
        g = build_graph(n, edges)
        emb = recognize(g)
        faces = interior_faces(emb)
        tri = next(f for f in faces if f.length == 3)
        sd = segment_decomposition(emb, tri)
        assert sd.k == 3
        assert sum(sd.p) == 7

    def test_fan_hexagon_central_triangle(self):
        g = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 2), (0, 3), (0, 4)])
        emb = recognize(g)
        sd = segment_decomposition(emb, central_face(emb))
        assert sd.k == 3
        assert sum(sd.p) == 3


class TestBoundaryWeights:
    def test_cycle_unit_weights(self):
        gg = gen_cycle(6)
        sd = segment_decomposition(gg.embedding, central_face(gg.embedding))
        assert boundary_weights(sd).doubled_weights == (2,) * 6

    def test_h12_4_weights(self):
        gg = gen_hnq(12, 4)
        sd = segment_decomposition(gg.embedding, central_face(gg.embedding))
        assert boundary_weights(sd).doubled_weights == (6, 6, 6, 6)

    def test_formula_direct(self):
        from outerplanar.witness import SegmentDecomposition
        from outerplanar.embedding import Face

        sd = SegmentDecomposition(face=Face(boundary=(0, 1, 2)), face_vertices=(0, 1, 2), p=(3, 0, 0))
        assert boundary_weights(sd).doubled_weights == (5, 5, 2)


class TestProximityWitness:
    def test_h12_4(self):
        gg = gen_hnq(12, 4)
        cert = proximity_witness(gg.graph)
        assert cert.case_tag == "case1"
        assert gg.labels[cert.vertex] in ("a2", "a3", "b2", "b3")
        assert cert.exact_value == 24
        assert cert.guaranteed_bound_times8 == 196
        assert 8 * 24 <= 196
        assert cert.holds

    def test_c5(self):
        cert = proximity_witness(gen_cycle(5).graph)
        assert cert.case_tag == "case1"
        assert cert.k == 5
        assert cert.exact_value == 6
        assert cert.guaranteed_bound_times8 == 54
        assert cert.holds

    def test_dominant_segment_case(self):
        n = 10
        g = build_graph(n, [(i, (i + 1) % n) for i in range(n)] + [(0, 2)])
        cert = proximity_witness(g)
        assert cert.holds
        # verify the exact value against an independent BFS
        assert cert.exact_value == sum(bfs_distances(g, cert.vertex))
        assert 8 * cert.exact_value <= prox_cert_numerator(n, cert.k)

    def test_case1_vertex_is_true_weighted_median(self):
        # the chosen vertex minimises the doubled weighted transmission over
        # the face boundary whenever the balanced case applies
        for gg in (gen_hnq(12, 4), gen_hnq(16, 4), gen_hn3(12), gen_cycle(9)):
            emb = gg.embedding
            sd = segment_decomposition(emb, central_face(emb))
            cert = proximity_witness(gg.graph)
            if cert.case_tag != "case1":
                continue
            wc = boundary_weights(sd)
            values = [cycle_weighted_transmission(wc, i) for i in range(sd.k)]
            chosen = sd.face_vertices.index(cert.vertex)
            assert values[chosen] == min(values)

    def test_certificate_value_recomputed_in_graph(self):
        for gg in (gen_hnq(13, 5), gen_hn3(19), gen_ladder(14)):
            cert = proximity_witness(gg.graph)
            assert cert.exact_value == sum(bfs_distances(gg.graph, cert.vertex))
            assert cert.holds


class TestRadiusWitness:
    def test_c6_face_too_long(self):
        with pytest.raises(FaceTooLong):
            radius_witness(gen_cycle(6).graph)

    def test_ladder16(self):
        gg = gen_ladder(16)
        cert = radius_witness(gg.graph)
        assert cert.guaranteed_bound_times8 == 8 * 5
        assert cert.exact_value <= 5
        assert cert.holds
        assert global_metrics(gg.graph).radius == 5

    def test_hn3_19(self):
        gg = gen_hn3(19)
        cert = radius_witness(gg.graph)
        assert cert.q == 3
        assert cert.exact_value <= 5
        assert cert.holds

    def test_parameters_recorded(self):
        cert = radius_witness(gen_ladder(16).graph)
        assert cert.ell is not None and cert.ell >= 1
        assert cert.j is not None and 1 <= cert.j <= cert.k // 2
        assert cert.case_tag in ("v_ell", "v_j")
        assert cert.exact_value == max(bfs_distances(gen_ladder(16).graph, cert.vertex))

    def test_ladders_across_orders(self):
        # face length 4 satisfies the (n+2)/4 precondition only from n = 14 up
        for n in range(14, 40):
            gg = gen_ladder(n)
            cert = radius_witness(gg.graph)
            assert cert.holds, n
            assert cert.exact_value <= radius_bound(n)
        with pytest.raises(FaceTooLong):
            radius_witness(gen_ladder(13).graph)
