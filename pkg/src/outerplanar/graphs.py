"""Simple undirected graphs and exact distance invariants.

Vertices are ids 0..n-1. All averages (proximity, remoteness) are exact
`fractions.Fraction` values; transmissions and eccentricities are plain ints.
Graphs are immutable after construction, so everything here is safe to call
from concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Graph",
    "MetricsReport",
    "ClassicalBoundsReport",
    "GraphInputError",
    "DisconnectedGraph",
    "build_graph",
    "bfs_distances",
    "all_distances",
    "vertex_metrics",
    "global_metrics",
    "check_classical_bounds",
    "classical_proximity_upper",
    "DISTANCE_MATRIX_CAP",
]

# Above this order the full n x n matrix is refused; callers stream
# per-vertex BFS instead (enumeration workloads hit metrics millions of
# times on tiny graphs, the matrix only exists for those).
DISTANCE_MATRIX_CAP = 4096


class GraphInputError(ValueError):
    """Raised for malformed construction input (bad ids, self-loops)."""


class DisconnectedGraph(ValueError):
    """Raised when an operation needs a connected graph and some pair is unreachable."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph: order plus sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in ascending order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def build_graph(n: int, edges) -> Graph:
    """Build a validated Graph from an edge list.

    Duplicate pairs collapse silently; out-of-range ids and self-loops are
    rejected.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    seen: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        seen[u].add(v)
        seen[v].add(u)
    return Graph(n=n, adj=tuple(tuple(sorted(s)) for s in seen))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from `source` to every vertex; raises if some vertex is unreachable."""
    n = g.n
    adj = g.adj
    dist = [-1] * n
    dist[source] = 0
    frontier = [source]
    reached = 1
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = d
                    nxt.append(v)
        reached += len(nxt)
        frontier = nxt
    if reached != n:
        raise DisconnectedGraph(f"vertex {dist.index(-1)} unreachable from {source}")
    return dist


def all_distances(g: Graph, cap: int = DISTANCE_MATRIX_CAP) -> list[list[int]]:
    """Full distance matrix by BFS from every vertex.

    Refuses orders above `cap`: past that point callers should stream
    `bfs_distances` per vertex instead of materialising n^2 ints.
    """
    if g.n > cap:
        raise ValueError(f"order {g.n} exceeds distance-matrix cap {cap}; stream bfs_distances instead")
    return [bfs_distances(g, v) for v in range(g.n)]


def vertex_metrics(g: Graph, v: int) -> tuple[int, Fraction, int]:
    """(transmission, average distance, eccentricity) of a single vertex."""
    if g.n < 2:
        raise ValueError("vertex metrics need order >= 2")
    dist = bfs_distances(g, v)
    sigma = sum(dist)
    return sigma, Fraction(sigma, g.n - 1), max(dist)


@dataclass(frozen=True)
class MetricsReport:
    """Every distance invariant of a connected graph in one shot."""

    n: int
    transmission: tuple[int, ...]
    eccentricity: tuple[int, ...]
    proximity: Fraction
    remoteness: Fraction
    radius: int
    diameter: int
    medians: tuple[int, ...]
    centers: tuple[int, ...]

    def __post_init__(self) -> None:
        # folklore sanity: these hold on every connected graph, so a failure
        # here is a bug in the BFS, not in the input
        assert self.proximity <= self.remoteness
        assert self.radius <= self.diameter <= 2 * self.radius
        assert self.medians and self.centers
        assert self.proximity * (self.n - 1) == min(self.transmission)


def global_metrics(g: Graph) -> MetricsReport:
    """Transmissions, eccentricities, proximity/remoteness, radius/diameter, medians, centers."""
    n = g.n
    if n < 2:
        raise ValueError("global metrics need order >= 2")
    sig: list[int] = []
    ecc: list[int] = []
    for v in range(n):
        dist = bfs_distances(g, v)
        sig.append(sum(dist))
        ecc.append(max(dist))
    smin, smax = min(sig), max(sig)
    rad, diam = min(ecc), max(ecc)
    return MetricsReport(
        n=n,
        transmission=tuple(sig),
        eccentricity=tuple(ecc),
        proximity=Fraction(smin, n - 1),
        remoteness=Fraction(smax, n - 1),
        radius=rad,
        diameter=diam,
        medians=tuple(v for v in range(n) if sig[v] == smin),
        centers=tuple(v for v in range(n) if ecc[v] == rad),
    )


def classical_proximity_upper(n: int) -> Fraction:
    """Largest possible proximity of a connected graph of order n (attained by paths and cycles)."""
    if n % 2 == 1:
        return Fraction(n + 1, 4)
    return Fraction(n + 1, 4) + Fraction(1, 4 * (n - 1))


def _is_path(g: Graph) -> bool:
    degs = sorted(g.degree(v) for v in range(g.n))
    if g.n == 2:
        return degs == [1, 1]
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]) and g.m == g.n - 1


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)) and g.m == g.n


@dataclass(frozen=True)
class ClassicalBoundsReport:
    """Order-only bounds on proximity, remoteness and radius, with equality diagnostics.

    `*_holds` flags say the bound is satisfied (always true on correct code:
    they re-check theorems). `*_equal` flags say the extremal value is
    attained, and are cross-checkable against the structural
    characterisations recorded here (path/cycle, universal vertex, ...).
    """

    n: int
    proximity: Fraction
    remoteness: Fraction
    radius: int
    pi_upper: Fraction
    pi_upper_holds: bool
    pi_upper_equal: bool
    pi_lower_equal: bool          # proximity == 1
    has_universal_vertex: bool    # degree n-1 vertex (pi lower equality class)
    is_path: bool
    is_cycle: bool
    rho_upper_holds: bool         # remoteness <= n/2
    rho_upper_equal: bool
    rad_upper_holds: bool         # radius <= n/2


def check_classical_bounds(g: Graph) -> ClassicalBoundsReport:
    """Evaluate the order-only proximity/remoteness/radius bounds exactly."""
    rep = global_metrics(g)
    n = g.n
    pi_ub = classical_proximity_upper(n)
    rho_ub = Fraction(n, 2)
    return ClassicalBoundsReport(
        n=n,
        proximity=rep.proximity,
        remoteness=rep.remoteness,
        radius=rep.radius,
        pi_upper=pi_ub,
        pi_upper_holds=rep.proximity <= pi_ub,
        pi_upper_equal=rep.proximity == pi_ub,
        pi_lower_equal=rep.proximity == 1,
        has_universal_vertex=any(g.degree(v) == n - 1 for v in range(n)),
        is_path=_is_path(g),
        is_cycle=_is_cycle(g),
        rho_upper_holds=rep.remoteness <= rho_ub,
        rho_upper_equal=rep.remoteness == rho_ub,
        rad_upper_holds=Fraction(rep.radius) <= rho_ub,
    )
