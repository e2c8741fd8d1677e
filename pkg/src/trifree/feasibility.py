"""Degree-distribution feasibility via neighborhood-deletion counting.

Deleting the closed neighborhood of a degree-d vertex from a triangle-free
graph with independence below l leaves a triangle-free graph on n - 1 - d
vertices with independence below l - 1, and removes exactly deg2(v) edges
(the sum of the neighbor degrees).  So every degree-d vertex must satisfy
deg2(v) <= cap(d) := e - floor(l - 1, n - 1 - d), where floor is any lower
bound on the reduced graph's edges.  Summing the per-vertex constraint
against the cheapest conceivable second degrees gives the defect

    gamma = sum_d n_d * cap(d) - sum_d n_d * d^2 >= 0,

a necessary condition on the degree distribution (n_d) of any such graph.
A negative defect, or one of the optional refinements below, rules the
distribution out; enumerating the survivors over all distributions with
the right vertex and degree sums bounds e(l, n) from below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .bounds import (
    INF,
    L_MAX,
    L_MIN,
    N_MAX,
    N_MIN,
    BoundsTable,
    default_table,
    formula_floor,
    general_value,
)

DEFAULT_REFINEMENTS = frozenset({"r1"})
ALL_REFINEMENTS = frozenset({"r1", "r2", "r3"})


class UnknownRegionError(ValueError):
    """No edge floor is available for the requested reduced graphs."""


@dataclass(frozen=True)
class DegreeDistribution:
    """Degree multiset as ((degree, count), ...) in ascending degree order.

    Absent degrees mean count zero; stored counts are always positive.
    """

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = -1
        for d, c in self.counts:
            if d <= last:
                raise ValueError("degrees must be strictly ascending")
            if d < 0 or c < 1:
                raise ValueError(f"bad entry ({d},{c}): need degree >= 0, count >= 1")
            last = d

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> "DegreeDistribution":
        items = []
        for d, c in sorted(mapping.items()):
            if c < 0:
                raise ValueError(f"negative count for degree {d}")
            if c:
                items.append((int(d), int(c)))
        return cls(tuple(items))

    @classmethod
    def from_graph(cls, g) -> "DegreeDistribution":
        return cls.from_dict(Counter(g.degrees()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def vertex_count(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def degree_sum(self) -> int:
        return sum(d * c for d, c in self.counts)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{d}:{c}" for d, c in self.counts) + "}"


@dataclass(frozen=True)
class DefectReport:
    """Outcome of the counting test for one distribution.

    caps pair each present degree with its second-degree budget (None when
    the degree is outright impossible), defect is the raw counting slack
    before any refinement, and cap_sources records where each budget's
    edge floor came from.
    """

    distribution: DegreeDistribution
    caps: tuple[tuple[int, int | None], ...]
    defect: int | None
    feasible: bool
    eliminated_by: str | None
    cap_sources: tuple[tuple[int, str], ...]


def _min_edges_floor(l: int, m: int, table: BoundsTable) -> tuple[int | float, str]:
    """Best known lower bound on e(l, m), with a short provenance note."""
    if m <= 0:
        return 0, "trivial"
    if l < 1:
        raise UnknownRegionError(f"no edge floors below l=1, got l={l}")
    if l == 1:
        # a single vertex is already an independent set
        return INF, "trivial"
    if l <= L_MAX and m <= N_MAX:
        cell = table.lookup(l, m)
        return cell.lower, ",".join(cell.provenance)
    cell = general_value(l - 1, m)
    return cell.lower, ",".join(cell.provenance)


def degree_cap(l: int, n: int, e: int, d: int, table: BoundsTable | None = None) -> int | None:
    """Second-degree budget for a degree-d vertex, or None when impossible.

    None means no graph of the reduced order exists at independence l - 1,
    so no vertex of degree d can occur at all.  The budget may be negative;
    that alone already dooms any distribution using the degree.
    """
    if table is None:
        table = default_table()
    if l < 2:
        raise UnknownRegionError(f"reduced graphs need l >= 2, got l={l}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if e < 0:
        raise ValueError(f"need e >= 0, got {e}")
    if not 0 <= d <= min(l - 1, n - 1):
        raise ValueError(f"degree {d} outside 0..min(l-1, n-1) = {min(l - 1, n - 1)}")
    lb, _ = _min_edges_floor(l - 1, n - 1 - d, table)
    if lb == INF:
        return None
    return e - lb


def total_defect(
    dist: DegreeDistribution,
    l: int,
    n: int,
    e: int,
    table: BoundsTable | None = None,
) -> DefectReport:
    """Raw counting test for one distribution; refinements are not applied."""
    if table is None:
        table = default_table()
    if dist.vertex_count != n:
        raise ValueError(f"distribution covers {dist.vertex_count} vertices, not {n}")
    if dist.degree_sum != 2 * e:
        raise ValueError(f"distribution degree sum {dist.degree_sum} != 2e = {2 * e}")
    caps = []
    sources = []
    impossible = None
    for d, _ in dist.counts:
        cap = degree_cap(l, n, e, d, table)
        _, src = _min_edges_floor(l - 1, n - 1 - d, table)
        caps.append((d, cap))
        sources.append((d, src))
        if cap is None and impossible is None:
            impossible = d
    if impossible is not None:
        return DefectReport(
            distribution=dist,
            caps=tuple(caps),
            defect=None,
            feasible=False,
            eliminated_by=f"impossible-degree:{impossible}",
            cap_sources=tuple(sources),
        )
    gamma = sum(c * (cap - d * d) for (d, c), (_, cap) in zip(dist.counts, caps))
    return DefectReport(
        distribution=dist,
        caps=tuple(caps),
        defect=gamma,
        feasible=gamma >= 0,
        eliminated_by=None if gamma >= 0 else "negative-defect",
        cap_sources=tuple(sources),
    )


# ---------------------------------------------------------------------------
# refinements
#
# Each refinement is a further necessary condition on realizable
# distributions; none may ever reject the distribution of an actual
# (l, n, e)-graph.


def _r1_eliminates(present: tuple[tuple[int, int], ...], caps: Mapping[int, int]) -> bool:
    """Single-max-vertex sharpening of the caps.

    A vertex cannot neighbor itself, so when the top degree occurs once,
    the neighbors of that vertex have degrees at most the next class down.
    Every budget also caps at d times the best available neighbor degree.
    """
    delta = present[0][0]
    dmax, cmax = present[-1]
    if cmax == 1:
        # the unique top vertex can only neighbor the next class down
        alt = present[-2][0] if len(present) >= 2 else 0
    else:
        alt = dmax
    gamma_eff = 0
    for d, c in present:
        other = dmax if (cmax >= 2 or d != dmax) else alt
        ecap = min(caps[d], d * other)
        if d * delta > ecap:
            return True
        gamma_eff += c * (ecap - d * d)
    return gamma_eff < 0


def _r2_eliminates(present: tuple[tuple[int, int], ...], caps: Mapping[int, int]) -> bool:
    """Minimum-degree neighbor sufficiency.

    A minimum-degree vertex needs delta neighbors drawn from the other
    vertices; even the cheapest choice of neighbor degrees must fit under
    its budget.
    """
    delta = present[0][0]
    budget = caps[delta]
    take = delta
    total = 0
    for d, c in present:
        avail = c - 1 if d == delta else c
        use = min(avail, take)
        total += use * d
        take -= use
        if take == 0:
            break
    assert take == 0, "degree exceeds vertex count, ruled out earlier"
    return total > budget


def _r3_eliminates(present: tuple[tuple[int, int], ...], caps: Mapping[int, int]) -> bool:
    """Matching bound on edges inside the minimum-degree class.

    If every minimum-degree vertex needs at least q neighbors of minimum
    degree to fit its budget, the class spans at least q*n_delta/2 edges;
    triangle-freeness caps the class at floor(n_delta^2/4) edges.
    """
    delta, cdelta = present[0]
    budget = caps[delta]
    d2 = present[1][0] if len(present) >= 2 else delta
    q = None
    for t in range(delta + 1):
        if t * delta + (delta - t) * d2 <= budget:
            q = t
            break
    if q is None:
        return True
    if q == 0:
        return False
    return q * cdelta > 2 * (cdelta * cdelta // 4)


_REFINEMENT_TESTS = (("r1", _r1_eliminates), ("r2", _r2_eliminates), ("r3", _r3_eliminates))


def _check_refinements(refset, present, caps) -> str | None:
    for name, test in _REFINEMENT_TESTS:
        if name in refset and test(present, caps):
            return name
    return None


def enumerate_feasible(
    l: int,
    n: int,
    e: int,
    table: BoundsTable | None = None,
    refinements: Iterable[str] = DEFAULT_REFINEMENTS,
) -> list[DefectReport]:
    """All degree distributions the counting test cannot rule out.

    Enumerates every (n_d) with sum n_d = n and sum d*n_d = 2e over the
    possible degrees, keeps those with nonnegative defect that survive the
    enabled refinements, and returns their reports in lexicographic order
    of the count vectors (ascending degrees).  An empty result proves no
    (l, n, e)-graph exists.
    """
    if table is None:
        table = default_table()
    refset = frozenset(refinements)
    unknown = refset - ALL_REFINEMENTS
    if unknown:
        raise ValueError(f"unknown refinements: {sorted(unknown)}")
    if l < 2:
        raise UnknownRegionError(f"reduced graphs need l >= 2, got l={l}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if e < 0:
        raise ValueError(f"need e >= 0, got {e}")

    dmax = min(l - 1, n - 1)
    caps: dict[int, int] = {}
    sources: dict[int, str] = {}
    for d in range(dmax + 1):
        lb, src = _min_edges_floor(l - 1, n - 1 - d, table)
        if lb == INF:
            continue
        caps[d] = e - lb
        sources[d] = src
    degs = sorted(caps)
    if not degs:
        return []

    target = 2 * e
    nd = len(degs)
    contrib = [caps[d] - d * d for d in degs]

    # Exact suffix DP: layers[i][v*(target+1) + s] is the largest defect a
    # completion over degs[i:] can collect using exactly v vertices of
    # total degree s, and -inf when (v, s) is unreachable.  It turns the
    # enumeration below output-sensitive: a branch is cut the moment no
    # completion of it can reach a nonnegative defect.
    NEG = float("-inf")
    width = target + 1
    cells = (n + 1) * width
    layers = [[NEG] * cells for _ in range(nd + 1)]
    layers[nd][0] = 0
    for i in range(nd - 1, -1, -1):
        d = degs[i]
        cv = contrib[i]
        cur = layers[i]
        nxt = layers[i + 1]
        for v in range(n + 1):
            row = v * width
            for s in range(target + 1):
                b = nxt[row + s]
                if v and s >= d:
                    c2 = cur[row - width + s - d] + cv
                    if c2 > b:
                        b = c2
                cur[row + s] = b

    reports: list[DefectReport] = []
    counts = [0] * nd

    def emit(gamma: int) -> None:
        present = tuple((degs[i], counts[i]) for i in range(nd) if counts[i])
        if _check_refinements(refset, present, caps) is not None:
            return
        reports.append(
            DefectReport(
                distribution=DegreeDistribution(present),
                caps=tuple((d, caps[d]) for d, _ in present),
                defect=gamma,
                feasible=True,
                eliminated_by=None,
                cap_sources=tuple((d, sources[d]) for d, _ in present),
            )
        )

    def walk(i: int, left_n: int, left_s: int, gamma: int) -> None:
        if i == nd:
            if left_n == 0 and left_s == 0 and gamma >= 0:
                emit(gamma)
            return
        if gamma + layers[i][left_n * width + left_s] < 0:
            return
        d = degs[i]
        cmax = left_n if d == 0 else min(left_n, left_s // d)
        cv = contrib[i]
        for c in range(cmax + 1):
            counts[i] = c
            walk(i + 1, left_n - c, left_s - c * d, gamma + c * cv)
        counts[i] = 0

    walk(0, n, target, 0)
    return reports


def raise_lower_bound(
    l: int,
    n: int,
    table: BoundsTable | None = None,
    refinements: Iterable[str] = DEFAULT_REFINEMENTS,
) -> int | float:
    """Smallest edge count the counting test cannot rule out.

    Scans upward from the best finite lower bound already known.  The
    result is a sound lower bound on e(l, n) whenever a graph exists; INF
    means the scan emptied the whole degree-sum range, which proves no
    (l, n)-graph exists at all.
    """
    if table is None:
        table = default_table()
    if l < 2:
        raise UnknownRegionError(f"reduced graphs need l >= 2, got l={l}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if L_MIN <= l <= L_MAX and N_MIN <= n <= N_MAX:
        start = table.finite_lower(l, n)
    else:
        start = formula_floor(l - 1, n)
    # max degree l-1 and simple-graph limits bound the scan
    stop = min(n * (l - 1), n * (n - 1)) // 2
    for e in range(start, stop + 1):
        if enumerate_feasible(l, n, e, table, refinements):
            return e
    return INF
