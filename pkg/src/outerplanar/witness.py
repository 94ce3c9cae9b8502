"""Constructive witness vertices for the proximity and radius caps.

Both constructions start from the central face: a vertex of low average
distance sits on its boundary (cycle median of the segment-absorbing
weights, or the endpoint of a dominant segment), and a vertex of low
eccentricity sits a computed number of steps around it. Certificates record
the construction parameters and the true BFS-computed value in the input
graph, never a value inherited from any auxiliary structure, so each
certificate can be re-checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import prox_cert_numerator, radius_bound
from .embedding import Face, OuterplaneEmbedding, interior_faces, recognize
from .graphs import Graph, bfs_distances
from .medians import WeightedCycle, central_face, cycle_median

__all__ = [
    "SegmentDecomposition",
    "WitnessCertificate",
    "FaceTooLong",
    "f_cap",
    "segment_decomposition",
    "boundary_weights",
    "proximity_witness",
    "proximity_witness_embedded",
    "radius_witness",
    "radius_witness_embedded",
]


class FaceTooLong(ValueError):
    """The radius construction needs every face length at most (n+2)/4."""


def f_cap(x: int) -> int:
    """floor((x+1)^2 / 4): the largest possible distance sum into a segment of x inner vertices."""
    if x < 0:
        raise ValueError(f"argument must be nonnegative, got {x}")
    return (x + 1) * (x + 1) // 4


@dataclass(frozen=True)
class SegmentDecomposition:
    """A face plus the Hamiltonian-cycle segments hanging between its consecutive vertices.

    face_vertices lists the face's vertex ids in cycle order starting from
    the smallest id; p[i] counts the cycle vertices strictly between
    face_vertices[i] and face_vertices[(i+1) % k].
    """

    face: Face
    face_vertices: tuple[int, ...]
    p: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.face_vertices)


def segment_decomposition(emb: OuterplaneEmbedding, face: Face) -> SegmentDecomposition:
    """Split the outer cycle into the arcs between consecutive vertices of `face`."""
    n = emb.n
    positions = face.boundary
    k = len(positions)
    verts = [emb.outer[t] for t in positions]
    start = verts.index(min(verts))
    ordered_pos = [positions[(start + s) % k] for s in range(k)]
    gaps = []
    for s in range(k):
        a, b = ordered_pos[s], ordered_pos[(s + 1) % k]
        gaps.append((b - a - 1) % n)
    assert sum(gaps) == n - k
    return SegmentDecomposition(
        face=face,
        face_vertices=tuple(emb.outer[t] for t in ordered_pos),
        p=tuple(gaps),
    )


def boundary_weights(sd: SegmentDecomposition) -> WeightedCycle:
    """Face-cycle weights absorbing half of each incident segment, doubled: 2 + p[i] + p[i-1]."""
    k = sd.k
    doubled = tuple(2 + sd.p[i] + sd.p[i - 1] for i in range(k))
    assert sum(doubled) == 2 * (sum(sd.p) + k)
    return WeightedCycle(doubled_weights=doubled)


@dataclass(frozen=True)
class WitnessCertificate:
    """A constructed witness vertex with its parameters and guarantee.

    `exact_value` is sigma(vertex) for kind "proximity" and ecc(vertex) for
    kind "radius", recomputed by BFS in the actual graph. The guarantee is
    carried times 8 so the inequality 8 * exact_value <= guaranteed_bound_times8
    is pure-integer.
    """

    kind: str
    vertex: int
    exact_value: int
    guaranteed_bound_times8: int
    case_tag: str
    n: int
    k: int
    q: int
    p: tuple[int, ...]
    ell: int | None = None
    j: int | None = None

    @property
    def holds(self) -> bool:
        return 8 * self.exact_value <= self.guaranteed_bound_times8


def proximity_witness_embedded(
    g: Graph,
    emb: OuterplaneEmbedding,
    faces: list[Face] | None = None,
) -> WitnessCertificate:
    """Proximity witness for a graph whose embedding is already known."""
    n = g.n
    if faces is None:
        faces = interior_faces(emb)
    q = max(f.length for f in faces)
    sd = segment_decomposition(emb, central_face(emb, faces))
    k = sd.k
    if max(sd.p) <= (n - k) // 2:
        pos, _, _ = cycle_median(boundary_weights(sd))
        w = sd.face_vertices[pos]
        tag = "case1"
    else:
        m = sd.p.index(max(sd.p))
        w = sd.face_vertices[m]
        tag = "case2"
    sigma = sum(bfs_distances(g, w))
    return WitnessCertificate(
        kind="proximity",
        vertex=w,
        exact_value=sigma,
        guaranteed_bound_times8=prox_cert_numerator(n, k),
        case_tag=tag,
        n=n,
        k=k,
        q=q,
        p=sd.p,
    )


def proximity_witness(g: Graph) -> WitnessCertificate:
    """Find a vertex w with 8 * sigma(w) <= n^2 + 4n + k^2 - 4k + 4, k the central face length.

    Requires g to be 2-connected outerplanar; recognition errors propagate.
    """
    return proximity_witness_embedded(g, recognize(g))


def radius_witness_embedded(
    g: Graph,
    emb: OuterplaneEmbedding,
    faces: list[Face] | None = None,
) -> WitnessCertificate:
    """Radius witness for a graph whose embedding is already known."""
    n = g.n
    if faces is None:
        faces = interior_faces(emb)
    q = max(f.length for f in faces)
    if 4 * q > n + 2:
        raise FaceTooLong(f"face of length {q} exceeds (n+2)/4 = {(n + 2) / 4}")
    sd = segment_decomposition(emb, central_face(emb, faces))
    k = sd.k

    # rotate so the heaviest segment sits at index 0 (smallest index on ties)
    m = sd.p.index(max(sd.p))
    verts = tuple(sd.face_vertices[(m + t) % k] for t in range(k))
    p = tuple(sd.p[(m + t) % k] for t in range(k))

    p0 = p[0]
    rest_max = max(p[1:])
    j = 1 + p[1:].index(rest_max)
    if j > k // 2:
        # reflect the face orientation, keeping segment 0 in place; the
        # heaviest remaining segment then lands in the first half
        verts = tuple(verts[(1 - t) % k] for t in range(k))
        p = tuple(p[-t % k] for t in range(k))
        assert p[0] == p0 and max(p[1:]) == rest_max
        j = 1 + p[1:].index(rest_max)
        assert j <= k // 2

    ell = (n + 4) // 4 - (p[0] + 2) // 2 + 1
    assert ell >= 1, f"step count {ell} < 1; central face guarantee violated"
    if ell <= j:
        u = verts[ell]
        tag = "v_ell"
    else:
        u = verts[j]
        tag = "v_j"
    ecc = max(bfs_distances(g, u))
    return WitnessCertificate(
        kind="radius",
        vertex=u,
        exact_value=ecc,
        guaranteed_bound_times8=8 * radius_bound(n),
        case_tag=tag,
        n=n,
        k=k,
        q=q,
        p=p,
        ell=ell,
        j=j,
    )


def radius_witness(g: Graph) -> WitnessCertificate:
    """Find a vertex u with ecc(u) <= floor(n/4) + 1, given every face length is at most (n+2)/4.

    Raises FaceTooLong when the face precondition fails; recognition errors
    propagate.
    """
    return radius_witness_embedded(g, recognize(g))
