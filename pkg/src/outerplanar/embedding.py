"""Recognition of 2-connected outerplanar graphs with certified embeddings.

A 2-connected outerplanar graph has a unique Hamiltonian cycle; together with
the remaining edges (pairwise non-crossing chords of that polygon) it forms
the unique outerplane embedding. `recognize` finds it by repeatedly smoothing
degree-2 vertices while tracking which original path each contracted edge
stands for, peeling off chords whenever a contracted arc closes up against a
real edge. Every accepted embedding is re-checked by `verify_embedding`, so
the reducer's shortcuts can never certify a wrong answer; rejections are
cross-examined against a brute-force oracle in the test suite.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from dataclasses import dataclass

from .graphs import DisconnectedGraph, Graph

__all__ = [
    "OuterplaneEmbedding",
    "Face",
    "WeakDualTree",
    "EmbeddingCheck",
    "NotBiconnected",
    "NotOuterplanar",
    "recognize",
    "verify_embedding",
    "interior_faces",
    "face_position_tuples",
    "weak_dual",
    "max_face_length",
]


class NotBiconnected(ValueError):
    """The graph has a cut vertex (or too few vertices), so no outer Hamiltonian cycle exists."""


class NotOuterplanar(ValueError):
    """The graph is 2-connected but admits no outerplane embedding."""


@dataclass(frozen=True)
class OuterplaneEmbedding:
    """Certified outerplane embedding: the outer Hamiltonian cycle plus non-crossing chords.

    `outer[t]` is the vertex at polygon position t. Chords are position pairs
    (i, j) with i + 2 <= j and (i, j) != (0, n-1), stored sorted.
    """

    outer: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.outer)

    def position_of(self) -> dict[int, int]:
        return {v: t for t, v in enumerate(self.outer)}

    def outer_edges(self) -> list[tuple[int, int]]:
        """Cycle edges as vertex pairs (u < v)."""
        n = len(self.outer)
        out = []
        for t in range(n):
            u, v = self.outer[t], self.outer[(t + 1) % n]
            out.append((u, v) if u < v else (v, u))
        return out

    def chord_vertex_pairs(self) -> list[tuple[int, int]]:
        out = []
        for i, j in self.chords:
            u, v = self.outer[i], self.outer[j]
            out.append((u, v) if u < v else (v, u))
        return out


@dataclass(frozen=True)
class Face:
    """Interior face given by its boundary positions in cyclic order (ascending for a dissection)."""

    boundary: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Boundary edges as sorted position pairs."""
        b = self.boundary
        k = len(b)
        out = []
        for s in range(k):
            i, j = b[s], b[(s + 1) % k]
            out.append((i, j) if i < j else (j, i))
        return out


@dataclass(frozen=True)
class WeakDualTree:
    """Tree on interior faces; two faces adjacent iff they share a chord.

    Node i corresponds to faces[i] from `interior_faces`; weights[i] is the
    face length minus 2, so the weights total n - 2.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    reason: str | None = None


def _check_biconnected(g: Graph) -> None:
    """Raise DisconnectedGraph / NotBiconnected unless g is connected with no cut vertex."""
    n = g.n
    if n < 3:
        raise NotBiconnected(f"order {n} < 3")
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    disc[0] = low[0] = 0
    timer = 1
    root_children = 0
    stack: list[list[int]] = [[0, 0]]
    while stack:
        v, i = stack[-1]
        if i < len(g.adj[v]):
            stack[-1][1] += 1
            u = g.adj[v][i]
            if disc[u] < 0:
                parent[u] = v
                disc[u] = low[u] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append([u, 0])
            elif u != parent[v]:
                if disc[u] < low[v]:
                    low[v] = disc[u]
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    raise NotBiconnected(f"cut vertex {p}")
    if timer != n:
        raise DisconnectedGraph("graph is disconnected")
    if root_children > 1:
        raise NotBiconnected("cut vertex 0")
    if any(len(a) < 2 for a in g.adj):
        raise NotBiconnected("vertex of degree < 2")


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate/orient a vertex cycle to start at 0 and move toward 0's smaller cycle neighbour."""
    n = len(cycle)
    i = cycle.index(0)
    nxt, prv = cycle[(i + 1) % n], cycle[(i - 1) % n]
    if nxt <= prv:
        return tuple(cycle[i:] + cycle[:i])
    rev = cycle[i::-1] + cycle[:i:-1]
    return tuple(rev)


def recognize(g: Graph) -> OuterplaneEmbedding:
    """Find the unique outerplane embedding of a 2-connected outerplanar graph.

    Raises NotBiconnected / NotOuterplanar / DisconnectedGraph. On success the
    returned embedding has been re-verified against g, starts at vertex 0 and
    runs toward 0's smaller-id neighbour on the cycle, so output is
    deterministic.
    """
    _check_biconnected(g)
    n = g.n
    if g.m > 2 * n - 3:
        raise NotOuterplanar(f"too many edges: {g.m} > 2n-3 = {2 * n - 3}")

    # contracted multigraph: each edge knows the real path it stands for
    ends: dict[int, tuple[int, int]] = {}
    paths: dict[int, tuple[int, ...]] = {}        # interior vertices, oriented ends[e][0] -> ends[e][1]
    inc: dict[int, set[int]] = {v: set() for v in range(n)}
    pair_edges: dict[tuple[int, int], set[int]] = {}
    next_eid = 0

    def add_edge(u: int, v: int, path: tuple[int, ...]) -> int:
        nonlocal next_eid
        e = next_eid
        next_eid += 1
        ends[e] = (u, v)
        paths[e] = path
        inc[u].add(e)
        inc[v].add(e)
        key = (u, v) if u < v else (v, u)
        pair_edges.setdefault(key, set()).add(e)
        return e

    def drop_edge(e: int) -> None:
        u, v = ends.pop(e)
        paths.pop(e)
        inc[u].discard(e)
        inc[v].discard(e)
        key = (u, v) if u < v else (v, u)
        s = pair_edges[key]
        s.discard(e)
        if not s:
            del pair_edges[key]

    def path_from(e: int, start: int) -> tuple[int, ...]:
        u, v = ends[e]
        return paths[e] if start == u else paths[e][::-1]

    for u in range(n):
        for v in g.adj[u]:
            if u < v:
                add_edge(u, v, ())

    chords: list[tuple[int, int]] = []
    alive = set(range(n))
    deg2: list[int] = [v for v in range(n) if len(inc[v]) == 2]
    heapq.heapify(deg2)
    parallel: list[tuple[int, int]] = []

    while len(alive) > 2:
        while parallel:
            key = heapq.heappop(parallel)
            es = pair_edges.get(key)
            if not es or len(es) < 2:
                continue
            if len(es) > 2:
                raise NotOuterplanar(f"three internally disjoint paths between {key[0]} and {key[1]}")
            direct = [e for e in es if not paths[e]]
            if not direct:
                raise NotOuterplanar(f"two disjoint paths close a cycle at {key} with vertices left outside")
            drop_edge(direct[0])
            chords.append(key)
            for x in key:
                d = len(inc[x])
                if d < 2:
                    raise NotOuterplanar(f"vertex {x} isolated while peeling chord {key}")
                if d == 2:
                    heapq.heappush(deg2, x)
        if len(alive) <= 2:
            break

        v = None
        while deg2:
            cand = heapq.heappop(deg2)
            if cand in alive and len(inc[cand]) == 2:
                v = cand
                break
        if v is None:
            raise NotOuterplanar("no degree-2 vertex left to smooth")

        e1, e2 = sorted(inc[v])
        u = ends[e1][0] if ends[e1][1] == v else ends[e1][1]
        w = ends[e2][0] if ends[e2][1] == v else ends[e2][1]
        if u == w:
            raise NotOuterplanar(f"vertex {v} doubled back onto {u}")
        merged = path_from(e1, u) + (v,) + path_from(e2, v)
        drop_edge(e1)
        drop_edge(e2)
        alive.discard(v)
        add_edge(u, w, merged)
        key = (u, w) if u < w else (w, u)
        if len(pair_edges[key]) >= 2:
            heapq.heappush(parallel, key)

    u, w = sorted(alive)
    es = sorted(pair_edges.get((u, w), ()))
    if len(inc[u]) != len(es) or len(inc[w]) != len(es):
        raise NotOuterplanar("terminal state is not a two-vertex bundle")
    direct = [e for e in es if not paths[e]]
    virtual = [e for e in es if paths[e]]
    if len(es) == 2 and len(direct) == 1:
        cycle = [u, *path_from(virtual[0], u), w]
    elif len(es) == 2 and len(direct) == 0:
        cycle = [u, *path_from(virtual[0], u), w, *path_from(virtual[1], w)]
    elif len(es) == 3 and len(direct) == 1:
        cycle = [u, *path_from(virtual[0], u), w, *path_from(virtual[1], w)]
        chords.append((u, w))
    else:
        raise NotOuterplanar(f"{len(es)} parallel arcs remain between {u} and {w}")
    if len(cycle) != n or len(set(cycle)) != n:
        raise NotOuterplanar("contracted arcs do not assemble into a spanning cycle")

    outer = _canonical_cycle(cycle)
    pos = {v: t for t, v in enumerate(outer)}
    chord_positions = []
    for a, b in chords:
        i, j = pos[a], pos[b]
        if i > j:
            i, j = j, i
        chord_positions.append((i, j))
    emb = OuterplaneEmbedding(outer=outer, chords=tuple(sorted(chord_positions)))
    check = verify_embedding(g, emb)
    if not check.ok:
        raise NotOuterplanar(f"candidate embedding failed verification: {check.reason}")
    return emb


def verify_embedding(g: Graph, emb: OuterplaneEmbedding) -> EmbeddingCheck:
    """Soundness certificate: accept iff emb is a valid outerplane embedding of g.

    Checks, in order: the outer order is a permutation, outer edges and chord
    endpoints exist in g, chord indices are legal and duplicate-free, the
    chords are pairwise non-crossing (linear stack scan, the offending pair is
    reported), and outer edges plus chords account for every edge of g.
    """
    n = g.n
    if len(emb.outer) != n or sorted(emb.outer) != list(range(n)):
        return EmbeddingCheck(False, "outer order is not a permutation of the vertices")
    for t in range(n):
        a, b = emb.outer[t], emb.outer[(t + 1) % n]
        if not g.has_edge(a, b):
            return EmbeddingCheck(False, f"missing edge: outer pair ({a}, {b}) not in graph")
    seen = set()
    for i, j in emb.chords:
        if not (0 <= i < j < n) or j - i < 2 or (i, j) == (0, n - 1):
            return EmbeddingCheck(False, f"invalid chord positions ({i}, {j})")
        if (i, j) in seen:
            return EmbeddingCheck(False, f"duplicate chord ({i}, {j})")
        seen.add((i, j))
        a, b = emb.outer[i], emb.outer[j]
        if not g.has_edge(a, b):
            return EmbeddingCheck(False, f"missing edge: chord pair ({a}, {b}) not in graph")

    opens: dict[int, list[int]] = {}
    closes: dict[int, list[int]] = {}
    for i, j in emb.chords:
        opens.setdefault(i, []).append(j)
        closes.setdefault(j, []).append(i)
    stack: list[tuple[int, int]] = []
    for t in range(n):
        pending = {(i, t) for i in closes.get(t, ())}
        while stack and stack[-1][1] == t:
            pending.discard(stack.pop())
        if pending:
            c = min(pending)
            return EmbeddingCheck(False, f"crossing pair: chords {c} and {stack[-1]}")
        for j in sorted(opens.get(t, ()), reverse=True):
            stack.append((t, j))
    assert not stack

    covered = set(emb.outer_edges()) | set(emb.chord_vertex_pairs())
    actual = set(g.edges())
    extra = actual - covered
    if extra:
        return EmbeddingCheck(False, f"extra edge: graph edges {sorted(extra)} not covered by the embedding")
    if len(covered) != n + len(emb.chords):
        return EmbeddingCheck(False, "outer edges and chords overlap")
    return EmbeddingCheck(True, None)


@lru_cache(maxsize=512)
def dissection_structure(
    n: int, chords: tuple[tuple[int, int], ...]
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, int], ...]]:
    """(interior face boundaries, weak-dual edges) of a polygon dissection.

    One iterative walk over chord intervals: within an interval the face
    boundary always jumps along the outermost chord available (chords from
    one position are nested, never crossing), and each chord jumped joins the
    current face to the face walked inside it. Faces come back sorted by
    boundary tuple; dual edges refer to that order.
    """
    starts: dict[int, list[int]] = {}
    for i, j in chords:
        starts.setdefault(i, []).append(j)
    for js in starts.values():
        js.sort(reverse=True)

    faces: list[tuple[int, ...]] = []
    links: list[tuple[int, int]] = []
    work: list[tuple[int, int, int]] = [(0, n - 1, -1)]
    while work:
        lo, hi, parent = work.pop()
        fid = len(faces)
        if parent >= 0:
            links.append((parent, fid))
        boundary = [lo]
        t = lo
        while t < hi:
            nxt = t + 1
            for j in starts.get(t, ()):
                if j <= hi and (t, j) != (lo, hi):
                    nxt = j
                    break
            boundary.append(nxt)
            if nxt > t + 1:
                work.append((t, nxt, fid))
            t = nxt
        faces.append(tuple(boundary))

    order = sorted(range(len(faces)), key=faces.__getitem__)
    rank = [0] * len(faces)
    for new, old in enumerate(order):
        rank[old] = new
    sorted_faces = tuple(faces[old] for old in order)
    dual_edges = tuple(sorted(tuple(sorted((rank[a], rank[b]))) for a, b in links))
    return sorted_faces, dual_edges


def face_position_tuples(n: int, chords) -> list[tuple[int, ...]]:
    """Interior face boundaries of a polygon dissection as sorted position tuples."""
    return list(dissection_structure(n, tuple(chords))[0])


def interior_faces(emb: OuterplaneEmbedding) -> list[Face]:
    """All interior faces of the embedding, ascending by boundary positions."""
    result = [Face(boundary=b) for b in face_position_tuples(emb.n, emb.chords)]
    assert len(result) == len(emb.chords) + 1
    return result


def weak_dual(emb: OuterplaneEmbedding) -> WeakDualTree:
    """Weak dual of the embedding: one node per interior face, joined across shared chords."""
    boundaries, dual_edges = dissection_structure(emb.n, emb.chords)
    tree = WeakDualTree(
        node_count=len(boundaries),
        edges=dual_edges,
        weights=tuple(len(b) - 2 for b in boundaries),
    )
    assert tree.node_count == len(emb.chords) + 1
    assert sum(tree.weights) == emb.n - 2
    return tree


def max_face_length(emb: OuterplaneEmbedding) -> int:
    """Largest interior face length of the embedding."""
    return max(f.length for f in interior_faces(emb))
