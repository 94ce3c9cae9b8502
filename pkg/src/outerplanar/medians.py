"""Weighted medians on trees and cycles, and central-face selection.

Cycle weights are half-integers in the application (a face vertex absorbs
half of each incident segment), so they are carried as doubled integers
end-to-end; every bound comparison happens after clearing denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .embedding import Face, OuterplaneEmbedding, interior_faces, weak_dual

__all__ = [
    "WeightedTree",
    "WeightedCycle",
    "ZeroTotalWeight",
    "tree_median",
    "central_face",
    "cycle_weighted_transmission",
    "cycle_median",
]


class ZeroTotalWeight(ValueError):
    """Median of an all-zero weighting is meaningless."""


@dataclass(frozen=True)
class WeightedTree:
    """Tree with nonnegative integer node weights."""

    node_count: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.edges) == self.node_count - 1
        assert len(self.weights) == self.node_count
        assert all(w >= 0 for w in self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)


@dataclass(frozen=True)
class WeightedCycle:
    """Cycle of length k >= 3; doubled_weights[i] = twice the weight at position i."""

    doubled_weights: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.doubled_weights) >= 3
        assert all(w >= 0 for w in self.doubled_weights)

    @property
    def k(self) -> int:
        return len(self.doubled_weights)


def tree_median(t: WeightedTree) -> tuple[int, int]:
    """Node whose heaviest branch is lightest, with that branch weight.

    The returned node v satisfies: every component of t - v has weight at
    most half the total (the weighted-median characterisation). Ties break to
    the smallest node id.
    """
    total = t.total_weight
    if total == 0:
        raise ZeroTotalWeight("tree weights sum to zero")
    nc = t.node_count
    if nc == 1:
        return 0, 0
    adj: list[list[int]] = [[] for _ in range(nc)]
    for a, b in t.edges:
        adj[a].append(b)
        adj[b].append(a)

    # root at 0, children subtree weights bottom-up, then
    # bw(v) = max(child subtrees, everything above v)
    order: list[int] = [0]
    parent = [-1] * nc
    for v in order:
        for u in adj[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    assert len(order) == nc, "weighted tree is not connected"
    sub = list(t.weights)
    for v in reversed(order[1:]):
        sub[parent[v]] += sub[v]
    assert sub[0] == total

    best_node, best_bw = -1, -1
    for v in range(nc):
        bw = total - sub[v] if v != 0 else 0
        for u in adj[v]:
            if u != parent[v] and sub[u] > bw:
                bw = sub[u]
        if 2 * bw <= total and best_node < 0:
            best_node, best_bw = v, bw
    assert best_node >= 0, "no median found; tree invariants violated"
    return best_node, best_bw


def _arc_gaps(n: int, positions: tuple[int, ...]) -> list[int]:
    """Numbers of polygon positions strictly between consecutive face positions."""
    k = len(positions)
    gaps = [positions[s + 1] - positions[s] - 1 for s in range(k - 1)]
    gaps.append(positions[0] + n - positions[-1] - 1)
    return gaps


def central_face(emb: OuterplaneEmbedding, faces: list[Face] | None = None) -> Face:
    """The interior face whose removal leaves only small components.

    Selected as the face of a median node of the weak dual weighted by face
    length minus 2; the conclusion (every component of G - V(F) has at most
    (n-2)/2 vertices) is re-checked on every call. For a dissection the
    components of G - V(F) are exactly the polygon arcs strictly between
    consecutive face positions, so the check is a gap scan.
    """
    if faces is None:
        faces = interior_faces(emb)
    dual = weak_dual(emb)
    tree = WeightedTree(node_count=dual.node_count, edges=dual.edges, weights=dual.weights)
    node, _ = tree_median(tree)
    face = faces[node]
    n = emb.n
    assert all(2 * gap <= n - 2 for gap in _arc_gaps(n, face.boundary)), (
        f"central face {face.boundary} leaves a component larger than (n-2)/2"
    )
    return face


def cycle_weighted_transmission(wc: WeightedCycle, position: int) -> int:
    """Twice the weighted distance sum from `position` (exact integer)."""
    k = wc.k
    dw = wc.doubled_weights
    if not 0 <= position < k:
        raise IndexError(f"position {position} out of range for cycle of length {k}")
    total = 0
    for j in range(k):
        t = (j - position) % k
        total += dw[j] * (t if t <= k - t else k - t)
    return total


def _all_doubled_transmissions(dw: tuple[int, ...]) -> list[int]:
    """Doubled weighted transmissions at every position in O(k) by sliding window sums."""
    k = len(dw)
    h = k // 2
    t0 = 0
    for t in range(1, k):
        t0 += dw[t] * (t if t <= k - t else k - t)
    out = [t0]
    s_neg = sum(dw[t % k] for t in range(1, h + 1))
    pos_start = h + 2 if k % 2 else h + 1
    s_pos = sum(dw[t % k] for t in range(pos_start, k))
    cur = t0
    for i in range(k - 1):
        cur = cur + dw[i] - s_neg + s_pos
        out.append(cur)
        s_neg += dw[(i + 1 + h) % k] - dw[(i + 1) % k]
        if k % 2:
            s_pos += dw[i % k] - dw[(i + h + 2) % k]
        else:
            s_pos += dw[i % k] - dw[(i + h + 1) % k]
    return out


def cycle_median_bound_doubled(wc: WeightedCycle) -> Fraction:
    """Doubled form of the guaranteed weighted transmission of some cycle vertex."""
    k = wc.k
    dsum = sum(wc.doubled_weights)  # = 2N
    if k % 2 == 0:
        return Fraction(k * dsum, 4)
    return Fraction((k * k - 1) * dsum, 4 * k)


def cycle_median(wc: WeightedCycle) -> tuple[int, int, Fraction]:
    """(position, doubled transmission, doubled guarantee) of a weighted cycle median.

    The minimising position (smallest index on ties) always meets the
    guarantee kN/4 for even k and (k^2-1)N/(4k) for odd k; that inequality is
    asserted here in cleared-integer form.
    """
    dsum = sum(wc.doubled_weights)
    if dsum == 0:
        raise ZeroTotalWeight("cycle weights sum to zero")
    sigmas = _all_doubled_transmissions(wc.doubled_weights)
    best = min(sigmas)
    pos = sigmas.index(best)
    k = wc.k
    if k % 2 == 0:
        assert 4 * best <= k * dsum
    else:
        assert 4 * k * best <= (k * k - 1) * dsum
    return pos, best, cycle_median_bound_doubled(wc)
