"""4-path and 6-cycle census for two-mode graphs.

The analysis walks every 4-path (v0-w0-v1-w1-v2) whose three outer
nodes sit on the analysis side, classifies it by how many of the two
possible extra edges (v0-w1, v2-w0) are present, and looks for closing
nodes w2 adjacent to both ends.  A closure turns the path into a
6-cycle whose class equals the path's extra edges, plus one when the
closing node is also adjacent to the path's center.

Counting happens at two granularities:

* path level: each 4-path belongs to exactly one center; a path is
  "closed for class c" when at least one of its closures has class c,
  and (path, closure) pairs are tallied separately.
* configuration level: the 5-node set {three analysis nodes, two via
  nodes} induced by a path.  A configuration of class e (its induced
  edge count minus 4) has e+1 centers and closes to class c when any
  of its internal paths does.  Per-node counts anchor a configuration
  at each of its centers; global totals count it once.

The configuration level is what the clustering coefficients use by
default; the path level feeds the alternate closure policies and the
reference measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .errors import BimotifError
from .graph import BipartiteGraph, Side


class NotAPath(BimotifError):
    """The given nodes do not form a valid 4-path."""


class TooLarge(BimotifError):
    """Graph exceeds the brute-force size guard."""


class SixCycleClass(IntEnum):
    """6-cycle classes, valued by the number of extra edges among the six nodes."""

    UNCONNECTED = 0
    SPARSE = 1
    HIGH = 2
    COMPLETE = 3


@dataclass(frozen=True)
class FourPath:
    """A canonical 4-path: ends-(vias)-center on the analysis side.

    ``ends`` are the outer analysis nodes (v0, v2), ``vias`` the
    opposite-side nodes (w0, w1) with w0 on the v0 branch.  For
    extra_edges == 1 the orientation puts the extra edge at v0-w1;
    otherwise ends are ordered by index.
    """

    center: int
    ends: tuple[int, int]
    vias: tuple[int, int]
    extra_edges: int


@dataclass(frozen=True)
class MotifCensus:
    """Per-node and aggregate counts from one census run.

    Path-level globals are sums of the per-node values; configuration
    totals are deduplicated (a configuration with several centers is
    counted once globally), so they are stored explicitly.
    """

    path_counts: tuple[tuple[int, int, int], ...]
    path_closed: tuple[tuple[int, int, int, int], ...]
    closure_pairs: tuple[tuple[int, int, int, int], ...]
    path_closed_any: tuple[int, ...]
    config_counts: tuple[tuple[int, int, int], ...]
    config_closed: tuple[tuple[int, int, int, int], ...]
    config_totals: tuple[int, int, int]
    config_closed_totals: tuple[int, int, int, int]

    @property
    def node_count(self) -> int:
        return len(self.path_counts)

    def _summed(self, rows, width):
        totals = [0] * width
        for row in rows:
            for k in range(width):
                totals[k] += row[k]
        return tuple(totals)

    @property
    def path_totals(self) -> tuple[int, int, int]:
        return self._summed(self.path_counts, 3)

    @property
    def path_closed_totals(self) -> tuple[int, int, int, int]:
        return self._summed(self.path_closed, 4)

    @property
    def closure_pair_totals(self) -> tuple[int, int, int, int]:
        return self._summed(self.closure_pairs, 4)

    @property
    def path_closed_any_total(self) -> int:
        return sum(self.path_closed_any)


@dataclass(frozen=True)
class OpsahlStats:
    """Reference 4-path closure measure, global and per node."""

    tau_star: int
    tau_star_closed: int
    c_star: Optional[Fraction]
    per_node_tau: tuple[int, ...]
    per_node_closed: tuple[int, ...]
    per_node_c: tuple[Optional[Fraction], ...]


def _adjacency_sets(g: BipartiteGraph, side: Side):
    """(analysis-side, other-side) adjacency as sets for membership tests."""
    return (
        [set(t) for t in g.adjacency(side)],
        [set(t) for t in g.adjacency(side.other())],
    )


def canonical_four_path(
    g: BipartiteGraph, v0: int, w0: int, v1: int, w1: int, v2: int,
    side: Side = Side.PRIMARY,
) -> FourPath:
    """Validate the nodes as a 4-path and return its canonical form."""
    adj_a, _ = _adjacency_sets(g, side)
    na = g.node_count(side)
    ns = g.node_count(side.other())
    for v in (v0, v1, v2):
        if not 0 <= v < na:
            raise NotAPath(f"analysis node {v} out of range")
    for w in (w0, w1):
        if not 0 <= w < ns:
            raise NotAPath(f"via node {w} out of range")
    if len({v0, v1, v2}) != 3 or w0 == w1:
        raise NotAPath("path nodes repeat")
    for v, w in ((v0, w0), (v1, w0), (v1, w1), (v2, w1)):
        if w not in adj_a[v]:
            raise NotAPath(f"missing edge between {v} and {w}")
    extra_a = w1 in adj_a[v0]
    extra_b = w0 in adj_a[v2]
    extra = int(extra_a) + int(extra_b)
    if (extra == 1 and extra_b) or (extra != 1 and v2 < v0):
        v0, v2 = v2, v0
        w0, w1 = w1, w0
    return FourPath(center=v1, ends=(v0, v2), vias=(w0, w1), extra_edges=extra)


def classify_four_path(
    g: BipartiteGraph, v0: int, w0: int, v1: int, w1: int, v2: int,
    side: Side = Side.PRIMARY,
) -> int:
    """Number of extra edges (0, 1 or 2) on a validated 4-path."""
    return canonical_four_path(g, v0, w0, v1, w1, v2, side).extra_edges


def closures_of(
    g: BipartiteGraph, p: FourPath, side: Side = Side.PRIMARY,
) -> list[tuple[int, SixCycleClass]]:
    """All closing nodes of a path with the class of the resulting 6-cycle."""
    adj_a, _ = _adjacency_sets(g, side)
    v0, v2 = p.ends
    candidates = (adj_a[v0] & adj_a[v2]) - set(p.vias)
    out = []
    for w2 in sorted(candidates):
        bump = 1 if w2 in adj_a[p.center] else 0
        cls = SixCycleClass(p.extra_edges + bump)
        out.append((w2, cls))
    return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def census(g: BipartiteGraph, side: Side = Side.PRIMARY) -> MotifCensus:
    """Count paths, configurations and their closures for one side.

    Single pass over pairs of opposite-side nodes.  For a pair
    (w0, w1): B holds the analysis nodes adjacent to both (the possible
    centers), U0/U1 those adjacent to only one (the possible ends).
    Every configuration on the pair is then one of: center + one end
    from each U (class 0), two centers + one end (class 1), or three
    centers (class 2).
    """
    na = g.node_count(side)
    adj_a = [0] * na
    for i, nbrs in enumerate(g.adjacency(side)):
        for w in nbrs:
            adj_a[i] |= 1 << w
    other = g.adjacency(side.other())
    ns = len(other)
    adj_w = [0] * ns
    for w, nbrs in enumerate(other):
        for i in nbrs:
            adj_w[w] |= 1 << i

    paths = [[0, 0, 0] for _ in range(na)]
    path_closed = [[0, 0, 0, 0] for _ in range(na)]
    pairs = [[0, 0, 0, 0] for _ in range(na)]
    path_any = [0] * na
    configs = [[0, 0, 0] for _ in range(na)]
    config_closed = [[0, 0, 0, 0] for _ in range(na)]
    config_totals = [0, 0, 0]
    closed_totals = [0, 0, 0, 0]

    for w0 in range(ns):
        m0 = adj_w[w0]
        for w1 in range(w0 + 1, ns):
            m1 = adj_w[w1]
            both = m0 & m1
            if not both:
                continue
            excl = ~((1 << w0) | (1 << w1))
            bl = _bits(both)
            u0l = _bits(m0 & ~m1)
            u1l = _bits(m1 & ~m0)
            nb = len(bl)
            n0 = len(u0l)
            n1 = len(u1l)

            config_totals[0] += nb * n0 * n1
            config_totals[1] += comb(nb, 2) * (n0 + n1)
            config_totals[2] += comb(nb, 3)
            for c in bl:
                configs[c][0] += n0 * n1
                configs[c][1] += (nb - 1) * (n0 + n1)
                configs[c][2] += comb(nb - 1, 2)
                paths[c][0] += n0 * n1
                paths[c][1] += (nb - 1) * (n0 + n1)
                paths[c][2] += 2 * comb(nb - 1, 2)

            # class 0: one center, one end on each branch, one path
            for x in u0l:
                ax = adj_a[x]
                for y in u1l:
                    common = ax & adj_a[y] & excl
                    if not common:
                        continue
                    for c in bl:
                        flat = common & ~adj_a[c]
                        up = common & adj_a[c]
                        path_any[c] += 1
                        if flat:
                            closed_totals[0] += 1
                            config_closed[c][0] += 1
                            path_closed[c][0] += 1
                            pairs[c][0] += flat.bit_count()
                        if up:
                            closed_totals[1] += 1
                            config_closed[c][1] += 1
                            path_closed[c][1] += 1
                            pairs[c][1] += up.bit_count()

            # class 1: two centers and one end; two internal paths,
            # one per choice of center
            if nb >= 2 and (n0 or n1):
                ul = u0l + u1l
                for i in range(nb):
                    c1 = bl[i]
                    a1 = adj_a[c1]
                    for j in range(i + 1, nb):
                        c2 = bl[j]
                        a2 = adj_a[c2]
                        for u in ul:
                            au = adj_a[u]
                            com1 = a2 & au & excl  # path centered at c1
                            com2 = a1 & au & excl  # path centered at c2
                            flat1 = com1 & ~a1
                            up1 = com1 & a1
                            flat2 = com2 & ~a2
                            up2 = com2 & a2
                            if com1:
                                path_any[c1] += 1
                            if com2:
                                path_any[c2] += 1
                            if flat1:
                                path_closed[c1][1] += 1
                                pairs[c1][1] += flat1.bit_count()
                            if up1:
                                path_closed[c1][2] += 1
                                pairs[c1][2] += up1.bit_count()
                            if flat2:
                                path_closed[c2][1] += 1
                                pairs[c2][1] += flat2.bit_count()
                            if up2:
                                path_closed[c2][2] += 1
                                pairs[c2][2] += up2.bit_count()
                            if flat1 or flat2:
                                closed_totals[1] += 1
                                config_closed[c1][1] += 1
                                config_closed[c2][1] += 1
                            if up1 or up2:
                                closed_totals[2] += 1
                                config_closed[c1][2] += 1
                                config_closed[c2][2] += 1

            # class 2: three centers; each center yields two paths that
            # differ only in via orientation, so tallies go up in twos
            if nb >= 3:
                for ti in range(nb):
                    for tj in range(ti + 1, nb):
                        for tk in range(tj + 1, nb):
                            triple = (bl[ti], bl[tj], bl[tk])
                            any_flat = False
                            any_up = False
                            for z in triple:
                                p, q = (t for t in triple if t != z)
                                com = adj_a[p] & adj_a[q] & excl
                                flat = com & ~adj_a[z]
                                up = com & adj_a[z]
                                if com:
                                    path_any[z] += 2
                                if flat:
                                    any_flat = True
                                    path_closed[z][2] += 2
                                    pairs[z][2] += 2 * flat.bit_count()
                                if up:
                                    any_up = True
                                    path_closed[z][3] += 2
                                    pairs[z][3] += 2 * up.bit_count()
                            if any_flat:
                                closed_totals[2] += 1
                            if any_up:
                                closed_totals[3] += 1
                            for z in triple:
                                if any_flat:
                                    config_closed[z][2] += 1
                                if any_up:
                                    config_closed[z][3] += 1

    return MotifCensus(
        path_counts=tuple(tuple(r) for r in paths),
        path_closed=tuple(tuple(r) for r in path_closed),
        closure_pairs=tuple(tuple(r) for r in pairs),
        path_closed_any=tuple(path_any),
        config_counts=tuple(tuple(r) for r in configs),
        config_closed=tuple(tuple(r) for r in config_closed),
        config_totals=tuple(config_totals),
        config_closed_totals=tuple(closed_totals),
    )


def opsahl(g: BipartiteGraph, side: Side = Side.PRIMARY) -> OpsahlStats:
    """Reference closure measure: closed 4-paths over all 4-paths.

    Deliberately computed by a separate traversal (center first, then
    via pairs) so it can cross-check the census path counts.
    """
    adj_a, adj_w = _adjacency_sets(g, side)
    na = g.node_count(side)
    per_tau = [0] * na
    per_closed = [0] * na
    for i in range(na):
        vias = sorted(adj_a[i])
        for ai in range(len(vias)):
            a = vias[ai]
            left = adj_w[a] - {i}
            for bi in range(ai + 1, len(vias)):
                b = vias[bi]
                right = adj_w[b] - {i}
                per_tau[i] += len(left) * len(right) - len(left & right)
                for v0 in left:
                    ends0 = adj_a[v0]
                    for v2 in right:
                        if v2 == v0:
                            continue
                        if (ends0 & adj_a[v2]) - {a, b}:
                            per_closed[i] += 1
    tau = sum(per_tau)
    closed = sum(per_closed)
    per_c = tuple(
        Fraction(c, t) if t else None for c, t in zip(per_closed, per_tau)
    )
    return OpsahlStats(
        tau_star=tau,
        tau_star_closed=closed,
        c_star=Fraction(closed, tau) if tau else None,
        per_node_tau=tuple(per_tau),
        per_node_closed=tuple(per_closed),
        per_node_c=per_c,
    )


def brute_force_census(g: BipartiteGraph, side: Side = Side.PRIMARY) -> MotifCensus:
    """Census by exhaustive 5-tuple iteration; test oracle, small graphs only.

    Enumerates every ordered node 5-tuple, keeps the valid 4-paths via
    explicit canonicalization, then assembles configurations by
    grouping paths on their 5-node support.  Intentionally simple and
    slow.
    """
    na = g.node_count(side)
    ns = g.node_count(side.other())
    if na > 16 or ns > 16:
        raise TooLarge(f"brute force limited to 16 nodes per side, got {na}x{ns}")
    adj_a, _ = _adjacency_sets(g, side)

    found: set[FourPath] = set()
    for v0 in range(na):
        for w0 in range(ns):
            if w0 not in adj_a[v0]:
                continue
            for v1 in range(na):
                if v1 == v0 or w0 not in adj_a[v1]:
                    continue
                for w1 in range(ns):
                    if w1 == w0 or w1 not in adj_a[v1]:
                        continue
                    for v2 in range(na):
                        if v2 in (v0, v1) or w1 not in adj_a[v2]:
                            continue
                        found.add(canonical_four_path(g, v0, w0, v1, w1, v2, side))

    paths = [[0, 0, 0] for _ in range(na)]
    path_closed = [[0, 0, 0, 0] for _ in range(na)]
    pairs = [[0, 0, 0, 0] for _ in range(na)]
    path_any = [0] * na
    by_support: dict[tuple, list[FourPath]] = {}
    for p in found:
        paths[p.center][p.extra_edges] += 1
        closures = closures_of(g, p, side)
        classes = set()
        for _, cls in closures:
            pairs[p.center][cls] += 1
            classes.add(cls)
        for cls in classes:
            path_closed[p.center][cls] += 1
        if closures:
            path_any[p.center] += 1
        key = (frozenset({p.center, *p.ends}), frozenset(p.vias))
        by_support.setdefault(key, []).append(p)

    configs = [[0, 0, 0] for _ in range(na)]
    config_closed = [[0, 0, 0, 0] for _ in range(na)]
    config_totals = [0, 0, 0]
    closed_totals = [0, 0, 0, 0]
    for (vs, ws), members in by_support.items():
        induced = sum(1 for v in vs for w in ws if w in adj_a[v])
        cls = induced - 4
        assert all(p.extra_edges == cls for p in members)
        centers = {p.center for p in members}
        assert len(centers) == cls + 1
        config_totals[cls] += 1
        closed_to = set()
        for p in members:
            for _, c in closures_of(g, p, side):
                closed_to.add(c)
        for c in closed_to:
            closed_totals[c] += 1
        for z in centers:
            configs[z][cls] += 1
            for c in closed_to:
                config_closed[z][c] += 1

    return MotifCensus(
        path_counts=tuple(tuple(r) for r in paths),
        path_closed=tuple(tuple(r) for r in path_closed),
        closure_pairs=tuple(tuple(r) for r in pairs),
        path_closed_any=tuple(path_any),
        config_counts=tuple(tuple(r) for r in configs),
        config_closed=tuple(tuple(r) for r in config_closed),
        config_totals=tuple(config_totals),
        config_closed_totals=tuple(closed_totals),
    )
