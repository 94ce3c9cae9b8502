"""Named graph families with analytically known embeddings.

Each generator lays its vertices out along the outer Hamiltonian cycle, so
ids 0..n-1 are cycle positions and the embedding is emitted directly rather
than re-derived; recognition is used as a cross-check in the tests only.
Human-readable construction labels are kept alongside for debugging and for
pinning family claims to specific vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import OuterplaneEmbedding
from .graphs import Graph, build_graph

__all__ = [
    "GeneratedGraph",
    "gen_path",
    "gen_cycle",
    "gen_hnq",
    "gen_hn3",
    "gen_fan",
    "gen_ladder",
    "FAMILIES",
    "generate_family",
    "nearest_valid_hnq_order",
]


@dataclass(frozen=True)
class GeneratedGraph:
    """A family member: graph, its embedding (None for the path family), labels, parameters."""

    family: str
    graph: Graph
    embedding: OuterplaneEmbedding | None
    labels: tuple[str, ...]
    params: dict = field(default_factory=dict)

    def id_of(self, label: str) -> int:
        return self.labels.index(label)


def _assemble(family: str, cycle_labels: list[str], label_edges: set[tuple[str, str]], params: dict) -> GeneratedGraph:
    """Map a labelled construction onto cycle-position ids and split edges into cycle + chords."""
    n = len(cycle_labels)
    idx = {lab: t for t, lab in enumerate(cycle_labels)}
    assert len(idx) == n, "duplicate labels on the cycle"
    edges = {tuple(sorted((idx[a], idx[b]))) for a, b in label_edges}
    g = build_graph(n, edges)
    cycle_pairs = {tuple(sorted((t, (t + 1) % n))) for t in range(n)}
    missing = cycle_pairs - edges
    assert not missing, f"cycle edges missing from construction: {sorted(missing)}"
    chords = sorted(edges - cycle_pairs)
    emb = OuterplaneEmbedding(outer=tuple(range(n)), chords=tuple(chords))
    return GeneratedGraph(family=family, graph=g, embedding=emb, labels=tuple(cycle_labels), params=params)


def gen_path(n: int) -> GeneratedGraph:
    """Path on n vertices (no outerplane embedding: not 2-connected)."""
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    g = build_graph(n, [(i, i + 1) for i in range(n - 1)])
    return GeneratedGraph(
        family="path",
        graph=g,
        embedding=None,
        labels=tuple(f"v{i}" for i in range(n)),
        params={"n": n},
    )


def gen_cycle(n: int) -> GeneratedGraph:
    """Cycle on n vertices; the single interior face is the whole polygon."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    labels = [f"v{i}" for i in range(n)]
    edges = {(labels[i], labels[(i + 1) % n]) for i in range(n)}
    return _assemble("cycle", labels, edges, {"n": n})


def nearest_valid_hnq_order(n: int, q: int) -> int:
    """Largest n' <= n with n' >= q and n' - q divisible by 4."""
    if q < 4 or n < q:
        raise ValueError(f"need q >= 4 and n >= q, got n={n}, q={q}")
    return n - (n - q) % 4


def gen_hnq(n: int, q: int) -> GeneratedGraph:
    """Two rails joined by rungs leaving one designated face of length q, all others length 4.

    Requires q >= 4, n >= q and n - q divisible by 4 (rejected otherwise, not
    rounded). Even q uses straight rungs a_i b_i on two equal rails; odd q
    uses rails of (n-1)/2 and (n+1)/2 vertices with skew rungs a_i b_{i+1}
    past the long face.
    """
    if q < 4:
        raise ValueError(f"face length must be at least 4, got {q}")
    if n < q:
        raise ValueError(f"order {n} smaller than face length {q}")
    if (n - q) % 4 != 0:
        raise ValueError(f"n - q = {n - q} must be a multiple of 4")

    edges: set[tuple[str, str]] = set()
    if q % 2 == 0:
        half = n // 2
        a = [f"a{i}" for i in range(half)]
        b = [f"b{i}" for i in range(half)]
        for i in range(half - 1):
            edges.add((a[i], a[i + 1]))
            edges.add((b[i], b[i + 1]))
        lo = (n - q) // 4
        hi = (n + q) // 4 - 1
        for i in range(half):
            if i <= lo or i >= hi:
                edges.add((a[i], b[i]))
        cycle = a + b[::-1]
    else:
        na, nb = (n - 1) // 2, (n + 1) // 2
        a = [f"a{i}" for i in range(na)]
        b = [f"b{i}" for i in range(nb)]
        for i in range(na - 1):
            edges.add((a[i], a[i + 1]))
        for i in range(nb - 1):
            edges.add((b[i], b[i + 1]))
        for i in range((n - q) // 4 + 1):
            edges.add((a[i], b[i]))
        for i in range((n + q - 2) // 4 - 1, na):
            edges.add((a[i], b[i + 1]))
        cycle = a + b[::-1]
    return _assemble("hnq", cycle, edges, {"n": n, "q": q})


def gen_hn3(n: int) -> GeneratedGraph:
    """Four rails around a hub: the maximal outerplanar family for the q = 3 cap.

    Stages 1..k-2 carry four vertices a_i, b_i, c_i, d_i; stage k-1 carries
    three; a trailing path x^1..x^{k'} (k' = n - 4k + 4 in {2..5},
    k = floor((n+2)/4)) pads the order. All interior faces are triangles.
    """
    if n < 10:
        raise ValueError(f"four-rail family needs n >= 10, got {n}")
    k = (n + 2) // 4
    kp = n - 4 * k + 4
    assert kp in (2, 3, 4, 5)

    edges: set[tuple[str, str]] = set()

    def ed(u: str, v: str) -> None:
        edges.add((u, v))

    for i in range(1, k - 1):
        ed(f"a{i}", f"b{i}")
        ed(f"b{i}", f"c{i}")
        ed(f"c{i}", f"d{i}")
    ed(f"a{k-1}", f"b{k-1}")
    ed(f"b{k-1}", f"c{k-1}")
    for jx in range(1, kp):
        ed(f"x{jx}", f"x{jx+1}")
    for r in "abcd":
        ed("a0", f"{r}1")
    for i in range(1, k - 2):
        for r in "abcd":
            ed(f"{r}{i}", f"{r}{i+1}")
    for i in range(1, k - 1):
        ed(f"a{i}", f"b{i+1}")
    for i in range(1, k - 2):
        ed(f"d{i}", f"c{i+1}")
    ed(f"a{k-2}", f"a{k-1}")
    ed(f"b{k-2}", f"b{k-1}")
    ed(f"c{k-2}", f"c{k-1}")
    ed(f"d{k-2}", f"c{k-1}")
    ed(f"a{k-1}", "x1")
    ed(f"a{k-1}", "x2")
    for jx in range(2, kp + 1):
        ed(f"b{k-1}", f"x{jx}")
    for i in range(2, k):
        edges.discard((f"b{i}", f"c{i}"))

    cycle = (
        ["a0"]
        + [f"a{i}" for i in range(1, k)]
        + [f"x{jx}" for jx in range(1, kp + 1)]
        + [f"b{i}" for i in range(k - 1, 0, -1)]
        + [f"c{i}" for i in range(1, k)]
        + [f"d{i}" for i in range(k - 2, 0, -1)]
    )
    gg = _assemble("hn3", cycle, edges, {"n": n, "k": k, "k_prime": kp})
    assert gg.graph.m == 2 * n - 3, "four-rail family must be maximal outerplanar"
    return gg


def gen_fan(n: int) -> GeneratedGraph:
    """Interleaved double path a_i / b_j with a_i b_j whenever j is i or i+1.

    Maximal outerplanar; the end vertex a_0 attains the remoteness cap.
    """
    if n < 3:
        raise ValueError(f"fan needs n >= 3, got {n}")
    la = (n - 1) // 2          # a_0 .. a_la
    mb = n - 1 - la            # b_1 .. b_mb
    edges: set[tuple[str, str]] = set()
    for i in range(la):
        edges.add((f"a{i}", f"a{i+1}"))
    for jx in range(1, mb):
        edges.add((f"b{jx}", f"b{jx+1}"))
    for i in range(la + 1):
        for jx in (i, i + 1):
            if 1 <= jx <= mb:
                edges.add((f"a{i}", f"b{jx}"))
    cycle = [f"a{i}" for i in range(la + 1)] + [f"b{jx}" for jx in range(mb, 0, -1)]
    gg = _assemble("fan", cycle, edges, {"n": n})
    assert gg.graph.m == 2 * n - 3
    return gg


def gen_ladder(n: int) -> GeneratedGraph:
    """Two equal rails with every rung; odd orders add an apex joined to the first rung.

    Every interior face has length 4 except the apex triangle; the radius
    attains floor(n/4) + 1.
    """
    if n < 4:
        raise ValueError(f"ladder needs n >= 4, got {n}")
    half = n // 2
    edges: set[tuple[str, str]] = set()
    for i in range(1, half):
        edges.add((f"a{i}", f"a{i+1}"))
        edges.add((f"b{i}", f"b{i+1}"))
    for i in range(1, half + 1):
        edges.add((f"a{i}", f"b{i}"))
    cycle = [f"a{i}" for i in range(1, half + 1)] + [f"b{i}" for i in range(half, 0, -1)]
    if n % 2 == 1:
        edges.add(("apex", "a1"))
        edges.add(("apex", "b1"))
        cycle = ["apex"] + cycle
    return _assemble("ladder", cycle, edges, {"n": n})


def _hnq_dispatch(n: int, q: int | None) -> GeneratedGraph:
    if q is None:
        raise ValueError("family hnq needs the face length q")
    return gen_hnq(n, q)


FAMILIES = {
    "path": lambda n, q=None: gen_path(n),
    "cycle": lambda n, q=None: gen_cycle(n),
    "hnq": _hnq_dispatch,
    "hn3": lambda n, q=None: gen_hn3(n),
    "fan": lambda n, q=None: gen_fan(n),
    "ladder": lambda n, q=None: gen_ladder(n),
}


def generate_family(family: str, n: int, q: int | None = None) -> GeneratedGraph:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[family](n, q)
