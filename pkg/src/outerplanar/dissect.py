"""Exhaustive enumeration of 2-connected outerplanar graphs of small order.

With the outer cycle fixed as 0..n-1, these graphs are exactly the
dissections of a convex n-gon by non-crossing chords; dihedral equivalence
of chord sets is graph isomorphism. Enumeration streams chord sets in a
deterministic order (no corpus is materialised), verification folds over the
stream, and the fold can be sharded by the first chord's smallest endpoint
so parallel runs merge to bit-identical reports.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .bounds import chordal_radius_interval, prox_cert_numerator, radius_bound
from .embedding import Face, OuterplaneEmbedding, face_position_tuples
from .graphs import Graph
from .witness import proximity_witness_embedded, radius_witness_embedded

__all__ = [
    "Dissection",
    "CheckResult",
    "VerificationSummary",
    "QnReport",
    "DEFAULT_ENUMERATION_CAP",
    "enumerate_dissections",
    "iter_chord_sets",
    "canonical_form",
    "count_dissections",
    "count_triangulations",
    "verify_bounds_over",
    "estimate_qn",
]

DEFAULT_ENUMERATION_CAP = 16

# translated-interval results are cached only up to this gap; above it the
# candidate lists would dominate memory (gap 10 already holds 103049 entries)
_MEMO_GAP = 9

_interval_memo: dict[tuple[int, int], list[tuple[tuple[int, int], ...]]] = {}


@dataclass(frozen=True)
class Dissection:
    """A polygon dissection: order plus a sorted tuple of non-crossing chord position pairs."""

    n: int
    chords: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        return _graph_of(self.n, self.chords)

    def embedding(self) -> OuterplaneEmbedding:
        return OuterplaneEmbedding(outer=tuple(range(self.n)), chords=self.chords)


def _graph_of(n: int, chords) -> Graph:
    adj: list[list[int]] = [[(i - 1) % n, (i + 1) % n] for i in range(n)]
    for i, j in chords:
        adj[i].append(j)
        adj[j].append(i)
    return Graph(n=n, adj=tuple(tuple(sorted(a)) for a in adj))


def _max_parts(max_face: int | None) -> int | None:
    # a face of length L contributes L - 1 interval parts
    return None if max_face is None else max_face - 1


def _gen_interval(lo: int, hi: int, max_face: int | None):
    """Yield chord tuples dissecting the sub-polygon lo..hi (base side (lo, hi) excluded)."""
    gap = hi - lo
    if gap == 1:
        yield ()
        return
    if gap <= _MEMO_GAP:
        key = (gap, max_face or 0)
        cached = _interval_memo.get(key)
        if cached is None:
            cached = list(_gen_interval_raw(0, gap, max_face))
            _interval_memo[key] = cached
        if lo == 0:
            yield from cached
        else:
            for cs in cached:
                yield tuple((a + lo, b + lo) for a, b in cs)
        return
    yield from _gen_interval_raw(lo, hi, max_face)


def _gen_interval_raw(lo: int, hi: int, max_face: int | None):
    interior = range(lo + 1, hi)
    top = len(interior)
    parts_cap = _max_parts(max_face)
    if parts_cap is not None:
        top = min(top, parts_cap - 1)
    for r in range(1, top + 1):
        for mids in combinations(interior, r):
            seq = (lo, *mids, hi)
            sub = [(seq[s], seq[s + 1]) for s in range(len(seq) - 1) if seq[s + 1] - seq[s] >= 2]
            if not sub:
                yield ()
                continue
            yield from _product_intervals(sub, 0, (), max_face)


def _product_intervals(sub: list[tuple[int, int]], idx: int, acc: tuple, max_face: int | None):
    if idx == len(sub):
        yield acc
        return
    a, b = sub[idx]
    for inner in _gen_interval(a, b, max_face):
        yield from _product_intervals(sub, idx + 1, acc + ((a, b),) + inner, max_face)


def iter_chord_sets(n: int, max_face: int | None = None):
    """Stream every non-crossing chord set of the n-gon (sorted tuples, deterministic order)."""
    if n < 3:
        raise ValueError(f"polygon needs n >= 3, got {n}")
    if max_face is not None and max_face < 3:
        raise ValueError(f"max_face must be at least 3, got {max_face}")
    for cs in _gen_interval(0, n - 1, max_face):
        yield tuple(sorted(cs))


def enumerate_dissections(
    n: int,
    max_face: int | None = None,
    triangulations_only: bool = False,
    up_to_symmetry: bool = False,
    cap: int = DEFAULT_ENUMERATION_CAP,
):
    """Stream dissections of the n-gon, optionally filtered.

    `max_face` keeps only dissections whose interior faces all have length at
    most q (pruned during generation, not post-filtered);
    `triangulations_only` is the max_face=3 special case; `up_to_symmetry`
    emits one representative per dihedral orbit (the canonical one).
    """
    if n > cap:
        raise ValueError(f"order {n} exceeds enumeration cap {cap}")
    mf = max_face
    if triangulations_only:
        mf = 3 if mf is None else min(mf, 3)
    for chords in iter_chord_sets(n, mf):
        d = Dissection(n=n, chords=chords)
        if up_to_symmetry and canonical_form(d) != d:
            continue
        yield d


def canonical_form(d: Dissection) -> Dissection:
    """Lexicographically smallest chord set over the 2n rotations/reflections."""
    n = d.n
    if not d.chords:
        return d
    best: tuple | None = None
    for r in range(n):
        for sign in (1, -1):
            mapped = []
            for i, j in d.chords:
                a = (sign * i + r) % n
                b = (sign * j + r) % n
                mapped.append((a, b) if a < b else (b, a))
            mapped.sort()
            key = tuple(mapped)
            if best is None or key < best:
                best = key
    return Dissection(n=n, chords=best)


def count_dissections(n: int, max_face: int | None = None) -> int:
    """Number of dissections of the n-gon by interval recursion (no enumeration).

    W(gap) counts dissections of a sub-polygon spanning `gap` sides: the face
    on its base side splits the interval into r parts (r+1 = face length,
    capped by max_face), each part a plain side or a smaller dissected
    interval, so W(gap) is a sum of r-fold convolutions of W with itself.
    """
    if n < 3:
        raise ValueError(f"polygon needs n >= 3, got {n}")
    parts_cap = _max_parts(max_face)
    goal = n - 1
    w = [0] * (goal + 1)
    w[1] = 1
    for gap in range(2, goal + 1):
        top = gap if parts_cap is None else min(gap, parts_cap)
        part_counts = w[:gap] + [0]          # compositions into 1 part
        total = 0
        for _ in range(2, top + 1):
            nxt = [0] * (gap + 1)
            for have in range(1, gap):
                c = part_counts[have]
                if c:
                    for part in range(1, gap - have + 1):
                        nxt[have + part] += c * w[part]
            total += nxt[gap]
            part_counts = nxt
        w[gap] = total
    return w[goal]


def count_triangulations(n: int) -> int:
    """Catalan count C_{n-2} of triangulations of the n-gon, by the classic recursion."""
    if n < 3:
        raise ValueError(f"polygon needs n >= 3, got {n}")
    cat = [1]
    for m in range(1, n - 1):
        cat.append(sum(cat[i] * cat[m - 1 - i] for i in range(m)))
    return cat[n - 2]


def _shard_key(chords: tuple) -> int:
    return chords[0][0] + 1 if chords else 0


def _sig_ecc(adj: tuple[tuple[int, ...], ...], n: int) -> tuple[list[int], list[int]]:
    sig = []
    ecc = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        d = 0
        total = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if dist[v] < 0:
                        dist[v] = d
                        nxt.append(v)
            total += d * len(nxt)
            frontier = nxt
        sig.append(total)
        ecc.append(d - 1)
    return sig, ecc


@dataclass
class CheckResult:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


_CHECK_NAMES = (
    "proximity_bound",
    "proximity_witness",
    "radius_bound_bounded_faces",
    "radius_witness",
    "mop_radius_bound",
    "mop_radius_diameter_window",
)


@dataclass
class VerificationSummary:
    """Outcome of folding the theorem checks over one enumeration stream."""

    n: int
    mode: str
    max_face: int | None
    radius_cap: int
    workers: int
    labeled_count: int
    canonical_count: int | None
    checks: dict[str, CheckResult]
    extremal_pi: dict | None
    extremal_rad: dict | None
    qn: int | None
    qn_failing_witness: dict | None

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def to_payload(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "mode": self.mode,
            "max_face": self.max_face,
            "radius_cap": self.radius_cap,
            "workers": self.workers,
            "labeled_count": self.labeled_count,
            "canonical_count": self.canonical_count,
            "checks": {
                name: {"checked": c.checked, "violations": [list(map(list, v)) for v in c.violations]}
                for name, c in self.checks.items()
            },
            "extremal_pi": self.extremal_pi,
            "extremal_rad": self.extremal_rad,
            "qn": self.qn,
            "qn_failing_witness": self.qn_failing_witness,
            "all_ok": self.all_ok,
        }


def _fold_shard(args) -> dict:
    n, max_face, mode, radius_cap, workers, wid = args
    rbound = radius_bound(n)
    counts = {name: 0 for name in _CHECK_NAMES}
    violations: dict[str, list] = {name: [] for name in _CHECK_NAMES}
    labeled = 0
    best_sigma = None      # (min transmission, chords) maximising proximity
    best_rad = None        # (radius, chords)
    lmax_maxrad: dict[int, int] = {}
    lmax_violator: dict[int, tuple] = {}

    for chords in iter_chord_sets(n, max_face):
        if workers > 1 and _shard_key(chords) % workers != wid:
            continue
        labeled += 1
        faces = [Face(boundary=b) for b in face_position_tuples(n, chords)]
        q = max(f.length for f in faces)
        emb = OuterplaneEmbedding(outer=tuple(range(n)), chords=chords)
        g = _graph_of(n, chords)

        if mode == "full":
            sig, ecc = _sig_ecc(g.adj, n)
            smin = min(sig)
            rad = min(ecc)
            diam = max(ecc)

            counts["proximity_bound"] += 1
            if 8 * smin > prox_cert_numerator(n, q):
                violations["proximity_bound"].append(chords)

            cert = proximity_witness_embedded(g, emb, faces)
            counts["proximity_witness"] += 1
            if not cert.holds:
                violations["proximity_witness"].append(chords)

            if 4 * q <= n + 2 and n <= radius_cap:
                counts["radius_bound_bounded_faces"] += 1
                if rad > rbound:
                    violations["radius_bound_bounded_faces"].append(chords)
                rcert = radius_witness_embedded(g, emb, faces)
                counts["radius_witness"] += 1
                if not rcert.holds:
                    violations["radius_witness"].append(chords)

            if q == 3:
                counts["mop_radius_bound"] += 1
                if rad > rbound:
                    violations["mop_radius_bound"].append(chords)
                counts["mop_radius_diameter_window"] += 1
                lo, hi = chordal_radius_interval(diam)
                if not lo <= rad <= hi:
                    violations["mop_radius_diameter_window"].append(chords)

            if best_sigma is None or smin > best_sigma[0] or (smin == best_sigma[0] and chords < best_sigma[1]):
                best_sigma = (smin, chords, q)
            if best_rad is None or rad > best_rad[0] or (rad == best_rad[0] and chords < best_rad[1]):
                best_rad = (rad, chords)
            if rad > lmax_maxrad.get(q, -1):
                lmax_maxrad[q] = rad
            if rad > rbound and (q not in lmax_violator or chords < lmax_violator[q][0]):
                lmax_violator[q] = (chords, rad)
        else:  # radius-only fast path: one BFS unless the certificate fails
            if 4 * q <= n + 2 and n <= radius_cap:
                rcert = radius_witness_embedded(g, emb, faces)
                counts["radius_witness"] += 1
                counts["radius_bound_bounded_faces"] += 1
                if not rcert.holds:
                    violations["radius_witness"].append(chords)
                    _, ecc = _sig_ecc(g.adj, n)
                    if min(ecc) > rbound:
                        violations["radius_bound_bounded_faces"].append(chords)

    return {
        "labeled": labeled,
        "counts": counts,
        "violations": violations,
        "best_sigma": best_sigma,
        "best_rad": best_rad,
        "lmax_maxrad": lmax_maxrad,
        "lmax_violator": lmax_violator,
    }


def _merge_shards(shards: list[dict]) -> dict:
    out = shards[0]
    for sh in shards[1:]:
        out["labeled"] += sh["labeled"]
        for name in _CHECK_NAMES:
            out["counts"][name] += sh["counts"][name]
            out["violations"][name].extend(sh["violations"][name])
        for key in ("best_sigma", "best_rad"):
            a, b = out[key], sh[key]
            if a is None:
                out[key] = b
            elif b is not None:
                out[key] = min((a, b), key=lambda r: (-r[0], r[1]))
        for l, r in sh["lmax_maxrad"].items():
            if r > out["lmax_maxrad"].get(l, -1):
                out["lmax_maxrad"][l] = r
        for l, w in sh["lmax_violator"].items():
            if l not in out["lmax_violator"] or w[0] < out["lmax_violator"][l][0]:
                out["lmax_violator"][l] = w
    for name in _CHECK_NAMES:
        out["violations"][name].sort()
    return out


def verify_bounds_over(
    n: int,
    max_face: int | None = None,
    mode: str = "full",
    radius_cap: int = 14,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
    include_canonical_count: bool | None = None,
) -> VerificationSummary:
    """Run every applicable theorem check over all dissections of the n-gon.

    mode "full" checks the proximity bound, the proximity witness, the radius
    bound and witness on eligible graphs, the radius/diameter window on
    triangulations, and gathers extremal records plus the radius threshold
    table. mode "radius" only runs the radius checks, certificate-first (one
    BFS per graph unless a certificate fails), for the large filtered orders.
    """
    if n > cap:
        raise ValueError(f"order {n} exceeds enumeration cap {cap}")
    if mode not in ("full", "radius"):
        raise ValueError(f"unknown mode {mode!r}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    args = [(n, max_face, mode, radius_cap, workers, wid) for wid in range(workers)]
    if workers == 1:
        shards = [_fold_shard(args[0])]
    else:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            shards = pool.map(_fold_shard, args)
    merged = _merge_shards(shards)

    checks = {
        name: CheckResult(checked=merged["counts"][name], violations=merged["violations"][name])
        for name in _CHECK_NAMES
    }

    extremal_pi = None
    extremal_rad = None
    qn = None
    qn_witness = None
    if mode == "full":
        smin, chords, q = merged["best_sigma"]
        pi = Fraction(smin, n - 1)
        bound = Fraction(prox_cert_numerator(n, q), 8 * (n - 1))
        extremal_pi = {
            "chords": [list(c) for c in chords],
            "sigma_min": smin,
            "proximity": f"{pi.numerator}/{pi.denominator}",
            "max_face": q,
            "bound": f"{bound.numerator}/{bound.denominator}",
            "gap": f"{(bound - pi).numerator}/{(bound - pi).denominator}",
        }
        rad, rchords = merged["best_rad"]
        extremal_rad = {"chords": [list(c) for c in rchords], "radius": rad}
        if max_face is None:
            qn, qn_witness = _qn_from_table(n, merged["lmax_maxrad"], merged["lmax_violator"])

    canonical_count = None
    if include_canonical_count is None:
        include_canonical_count = n <= 10
    if include_canonical_count:
        canonical_count = sum(
            1 for _ in enumerate_dissections(n, max_face=max_face, up_to_symmetry=True, cap=cap)
        )

    return VerificationSummary(
        n=n,
        mode=mode,
        max_face=max_face,
        radius_cap=radius_cap,
        workers=workers,
        labeled_count=merged["labeled"],
        canonical_count=canonical_count,
        checks=checks,
        extremal_pi=extremal_pi,
        extremal_rad=extremal_rad,
        qn=qn,
        qn_failing_witness=qn_witness,
    )


def _qn_from_table(n: int, lmax_maxrad: dict[int, int], lmax_violator: dict[int, tuple]):
    rbound = radius_bound(n)
    violating = sorted(l for l, r in lmax_maxrad.items() if r > rbound)
    if not violating:
        return n, None
    qn = violating[0] - 1
    chords, rad = lmax_violator[violating[0]]
    witness = {"chords": [list(c) for c in chords], "max_face": violating[0], "radius": rad}
    return qn, witness


@dataclass
class QnReport:
    """Exact largest face-length threshold under which the radius cap holds at order n."""

    n: int
    qn: int
    rad_bound: int
    graphs_scanned: int
    pass_count_at_qn: int
    failing_witness: dict | None
    lower_bracket: int
    upper_bracket: Fraction
    lower_bracket_ok: bool
    upper_bracket_ok: bool

    def to_payload(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "qn": self.qn,
            "rad_bound": self.rad_bound,
            "graphs_scanned": self.graphs_scanned,
            "pass_count_at_qn": self.pass_count_at_qn,
            "failing_witness": self.failing_witness,
            "lower_bracket": self.lower_bracket,
            "upper_bracket": f"{self.upper_bracket.numerator}/{self.upper_bracket.denominator}",
            "lower_bracket_ok": self.lower_bracket_ok,
            "upper_bracket_ok": self.upper_bracket_ok,
        }


def _qn_shard(args) -> dict:
    n, workers, wid = args
    rbound = radius_bound(n)
    lmax_count: dict[int, int] = {}
    lmax_maxrad: dict[int, int] = {}
    lmax_violator: dict[int, tuple] = {}
    scanned = 0
    for chords in iter_chord_sets(n):
        if workers > 1 and _shard_key(chords) % workers != wid:
            continue
        scanned += 1
        q = max(len(b) for b in face_position_tuples(n, chords))
        lmax_count[q] = lmax_count.get(q, 0) + 1
        adj = _graph_of(n, chords).adj
        # early exit: any vertex within the cap settles the pass
        rad_known = None
        best = None
        for s in range(n):
            dist = [-1] * n
            dist[s] = 0
            frontier = [s]
            d = 0
            while frontier:
                d += 1
                nxt = []
                for u in frontier:
                    for v in adj[u]:
                        if dist[v] < 0:
                            dist[v] = d
                            nxt.append(v)
                frontier = nxt
            e = d - 1
            best = e if best is None or e < best else best
            if e <= rbound:
                rad_known = "pass"
                break
        if rad_known is None and best > rbound:
            if q not in lmax_maxrad or best > lmax_maxrad[q]:
                lmax_maxrad[q] = best
            if q not in lmax_violator or chords < lmax_violator[q][0]:
                lmax_violator[q] = (chords, best)
    return {
        "scanned": scanned,
        "lmax_count": lmax_count,
        "lmax_maxrad": lmax_maxrad,
        "lmax_violator": lmax_violator,
    }


def estimate_qn(n: int, workers: int = 1, cap: int = DEFAULT_ENUMERATION_CAP) -> QnReport:
    """Exact q_n for enumerable n: the largest face cap under which rad <= floor(n/4)+1 always holds.

    Scans every dissection once; emits the failing witness at q_n + 1 (when
    one exists) and the count of graphs passing at q_n, and reports q_n
    against the brackets floor((n+2)/4) <= q_n < n/2 + 3.
    """
    if n > cap:
        raise ValueError(f"order {n} exceeds enumeration cap {cap}")
    args = [(n, workers, wid) for wid in range(workers)]
    if workers == 1:
        shards = [_qn_shard(args[0])]
    else:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            shards = pool.map(_qn_shard, args)
    scanned = sum(sh["scanned"] for sh in shards)
    lmax_count: dict[int, int] = {}
    lmax_maxrad: dict[int, int] = {}
    lmax_violator: dict[int, tuple] = {}
    for sh in shards:
        for l, c in sh["lmax_count"].items():
            lmax_count[l] = lmax_count.get(l, 0) + c
        for l, r in sh["lmax_maxrad"].items():
            if r > lmax_maxrad.get(l, -1):
                lmax_maxrad[l] = r
        for l, w in sh["lmax_violator"].items():
            if l not in lmax_violator or w[0] < lmax_violator[l][0]:
                lmax_violator[l] = w

    qn, witness = _qn_from_table(n, lmax_maxrad, lmax_violator)
    upper = Fraction(n, 2) + 3
    return QnReport(
        n=n,
        qn=qn,
        rad_bound=radius_bound(n),
        graphs_scanned=scanned,
        pass_count_at_qn=sum(c for l, c in lmax_count.items() if l <= qn),
        failing_witness=witness,
        lower_bracket=(n + 2) // 4,
        upper_bracket=upper,
        lower_bracket_ok=(n + 2) // 4 <= qn,
        upper_bracket_ok=Fraction(qn) < upper,
    )
