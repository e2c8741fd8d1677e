"""Independent exhaustive oracles for small minimum-edge values.

Two tiers deliberately share no code with the bounds machinery:

* naive_min_edges scans every edge subset on up to 7 vertices.  Slow and
  obviously correct; it exists to check the clever tier.
* min_edges_exhaustive grows graphs one vertex at a time with isomorphism
  rejection per level, iterating an edge budget upward from the known
  value one order below.  The first budget admitting a graph is exact.

Values confirmed here feed cross_validate, which compares them against
the published table and re-verifies every witness through the graph-core
classifier (a third, separately written code path).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .bounds import INF, L_MAX, N_MAX, BoundsTable, EBound, default_table, general_value
from .graph import Graph, classify, write_graph6

DEFAULT_BUDGET = 5_000_000


class InconclusiveError(RuntimeError):
    """The search budget ran out before the value was settled."""


class OracleMismatchError(RuntimeError):
    """Oracle value disagrees with the table; carries the witness if any."""

    def __init__(self, message: str, witness: Graph | None = None) -> None:
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class OracleResult:
    value: int | float
    witness: Graph | None
    nodes: int


# ---------------------------------------------------------------------------
# small helpers shared by both tiers


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _alpha_scan(adj: Sequence[int]) -> int:
    """Independence number by plain take/skip branching on the lowest bit.

    Kept intentionally separate from graph.independence_number so the two
    implementations can check each other.
    """
    best = 0

    def go(avail: int, size: int) -> None:
        nonlocal best
        while avail:
            if size + avail.bit_count() <= best:
                return
            low = avail & -avail
            v = low.bit_length() - 1
            go(avail & ~(adj[v] | low), size + 1)
            avail ^= low
        if size > best:
            best = size

    go((1 << len(adj)) - 1, 0)
    return best


# bit-reversal table for up to 12-bit signatures; longer ones fall back to
# string reversal (placement prefixes that long do not occur in practice)
_REV12 = [0] * 4096
for _i in range(4096):
    _v = 0
    for _b in range(12):
        if (_i >> _b) & 1:
            _v |= 1 << (11 - _b)
    _REV12[_i] = _v


def _rev(x: int, p: int) -> int:
    if p == 0:
        return 0
    if p <= 12:
        return _REV12[x] >> (12 - p)
    return int(format(x, f"0{p}b")[::-1], 2)


def canonical_key(adj: Sequence[int], n: int) -> tuple:
    """Isomorphism-invariant key: equal keys if and only if isomorphic.

    Greedy max-lex placement: vertices are placed one at a time, always
    choosing a next vertex whose adjacency row to the already-placed
    prefix is lexicographically largest; all tied placements are carried
    forward, so the resulting row sequence is a true maximum over vertex
    orders.  Isolated vertices only contribute to the count.
    """
    verts = [v for v in range(n) if adj[v]]
    m = len(verts)
    if m == 0:
        return (n, 0)
    index = {v: i for i, v in enumerate(verts)}
    local = [0] * m
    for v in verts:
        row = 0
        for w in _bits(adj[v]):
            if w in index:
                row |= 1 << index[w]
        local[index[v]] = row

    rows: list[int] = []
    frontier = {(0, (0,) * m)}
    for step in range(m):
        best_row = -1
        nxt: set[tuple[int, tuple[int, ...]]] = set()
        for mask, sigs in frontier:
            for w in range(m):
                if (mask >> w) & 1:
                    continue
                row = _rev(sigs[w], step)
                if row < best_row:
                    continue
                new_sigs = list(sigs)
                new_sigs[w] = 0
                bit = 1 << step
                for u in _bits(local[w]):
                    if not (mask >> u) & 1 and u != w:
                        new_sigs[u] |= bit
                cand = (mask | (1 << w), tuple(new_sigs))
                if row > best_row:
                    best_row = row
                    nxt = {cand}
                else:
                    nxt.add(cand)
        rows.append(best_row)
        frontier = nxt
    return (n, m, *rows)


# ---------------------------------------------------------------------------
# tier 1: brute force over all edge subsets


def naive_min_edges(l: int, n: int) -> int | float:
    """Reference value by scanning all 2^C(n,2) graphs; only for n <= 7."""
    if not 1 <= n <= 7:
        raise ValueError(f"naive tier handles 1 <= n <= 7, got n={n}")
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    pairs = list(combinations(range(n), 2))
    bit = {p: 1 << i for i, p in enumerate(pairs)}
    indep_masks = []
    if l <= n:
        for sub in combinations(range(n), l):
            pm = 0
            for p in combinations(sub, 2):
                pm |= bit[p]
            indep_masks.append(pm)
    tri_masks = [
        bit[(a, b)] | bit[(a, c)] | bit[(b, c)]
        for a, b, c in combinations(range(n), 3)
    ]
    best = None
    for mask in range(1 << len(pairs)):
        if best is not None and mask.bit_count() >= best:
            continue
        ok = True
        for pm in indep_masks:
            if mask & pm == 0:
                ok = False
                break
        if ok:
            for tm in tri_masks:
                if mask & tm == tm:
                    ok = False
                    break
        if ok:
            best = mask.bit_count()
            if best == 0:
                break
    return INF if best is None else best


# ---------------------------------------------------------------------------
# tier 2: vertex extension with isomorph rejection


_CACHE: dict[tuple[int, int], tuple[int | float, tuple[int, ...] | None]] = {}


def clear_cache() -> None:
    _CACHE.clear()


def _round(l: int, m: int, t: int, floors: Sequence[int], counter: list[int], budget: int):
    """Adjacency rows of some m-vertex graph with alpha < l and <= t edges, or None."""
    kmax = l - 1
    states: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for p in range(m):
        rem = m - p - 1
        floor_rem = floors[rem]
        nxt: dict[tuple, tuple[tuple[int, ...], int]] = {}
        for rows, ep in states:
            if ep + floors[m - p] > t:
                continue
            elig = [v for v in range(p) if rows[v].bit_count() < kmax]
            level = [0]
            size = 0
            while True:
                if ep + size + floor_rem > t:
                    break
                for smask in level:
                    child = list(rows)
                    for v in _bits(smask):
                        child[v] |= 1 << p
                    child.append(smask)
                    a2 = _alpha_scan(child)
                    if a2 >= l:
                        continue
                    counter[0] += 1
                    if counter[0] > budget:
                        raise InconclusiveError(
                            f"budget {budget} exhausted while settling order {m} at independence {l}"
                        )
                    if a2 + rem <= kmax:
                        # padding with isolated vertices is the cheapest
                        # completion, and it stays below independence l
                        child.extend([0] * rem)
                        return child
                    key = canonical_key(child, p + 1)
                    if key not in nxt:
                        nxt[key] = (tuple(child), ep + size)
                if size == min(kmax, len(elig)):
                    break
                bigger = []
                for smask in level:
                    start = smask.bit_length()
                    for v in elig:
                        if v < start:
                            continue
                        if rows[v] & smask == 0:
                            bigger.append(smask | (1 << v))
                if not bigger:
                    break
                level = bigger
                size += 1
        states = list(nxt.values())
        if not states:
            return None
    return None


def _solve(l: int, m: int, counter: list[int], budget: int) -> tuple[int | float, tuple[int, ...] | None]:
    if m == 0:
        return 0, ()
    prev, _ = _CACHE[(l, m - 1)]
    if prev == INF:
        # no graph one order below means none here either
        return INF, None
    floors = [_CACHE[(l, r)][0] for r in range(m)]
    floors.append(prev)  # stand-in for the unknown floors[m], sound by monotonicity
    kmax = l - 1
    tmax = min(m * kmax // 2, m * m // 4)
    for t in range(int(prev), tmax + 1):
        wit = _round(l, m, t, floors, counter, budget)
        if wit is not None:
            return t, tuple(wit)
    return INF, None


def min_edges_exhaustive(l: int, n: int, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Exact minimum edge count at independence below l on n vertices.

    Iterates the edge budget upward from the value one order below, so the
    first admitted graph is automatically minimal.  Values and witnesses
    are memoized per (l, n); nodes counts only the work done by this call.
    """
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    counter = [0]
    for m in range(n + 1):
        if (l, m) not in _CACHE:
            _CACHE[(l, m)] = _solve(l, m, counter, budget)
    value, wadj = _CACHE[(l, n)]
    witness = None
    if wadj is not None:
        witness = Graph.from_adj(list(wadj))
    return OracleResult(value=value, witness=witness, nodes=counter[0])


# ---------------------------------------------------------------------------
# cross-validation against the table


@dataclass(frozen=True)
class CrossEntry:
    l: int
    n: int
    value: int | float
    bound: EBound
    ok: bool


@dataclass(frozen=True)
class CrossReport:
    entries: tuple[CrossEntry, ...]
    nodes: int

    def all_ok(self) -> bool:
        return all(entry.ok for entry in self.entries)

    def lines(self) -> list[str]:
        out = []
        for entry in self.entries:
            val = "inf" if entry.value == INF else str(entry.value)
            mark = "ok" if entry.ok else "MISMATCH"
            out.append(f"l={entry.l} n={entry.n}: oracle {val}, table {entry.bound.display()}: {mark}")
        return out


def _consistent(value: int | float, bound: EBound) -> bool:
    if bound.status == "exact":
        return value == bound.lower
    if bound.status == "infinite":
        return value == INF
    if bound.status == "open-above":
        return value == INF or value >= bound.lower
    if value == INF:
        # a finite-range cell asserts existence
        return False
    return bound.lower <= value and (bound.upper is None or value <= bound.upper)


def cross_validate(
    l_max: int,
    n_max: int,
    table: BoundsTable | None = None,
    budget: int = DEFAULT_BUDGET,
) -> CrossReport:
    """Compare the oracle against the table on every cell l <= l_max, n <= n_max.

    Every finite witness is re-verified through the graph-core classifier.
    Any inconsistency raises OracleMismatchError with the witness attached;
    the returned report lists every cell checked.
    """
    if table is None:
        table = default_table()
    entries = []
    nodes = 0
    for l in range(2, l_max + 1):
        for n in range(1, n_max + 1):
            res = min_edges_exhaustive(l, n, budget)
            nodes += res.nodes
            if 2 <= l <= L_MAX and 1 <= n <= N_MAX:
                bound = table.lookup(l, n)
            else:
                bound = general_value(l - 1, n)
            ok = _consistent(res.value, bound)
            if ok and res.value != INF:
                cls = classify(res.witness)
                if not cls.matches(l, n, res.value):
                    raise OracleMismatchError(
                        f"witness for ({l},{n}) fails re-verification: "
                        f"alpha={cls.alpha} n={cls.n} e={cls.e} "
                        f"graph6={write_graph6(res.witness).decode('ascii')}",
                        witness=res.witness,
                    )
            entries.append(CrossEntry(l=l, n=n, value=res.value, bound=bound, ok=ok))
            if not ok:
                g6 = ""
                if res.witness is not None:
                    g6 = " witness " + write_graph6(res.witness).decode("ascii")
                raise OracleMismatchError(
                    f"cell ({l},{n}): oracle {res.value} contradicts table {bound.display()}{g6}",
                    witness=res.witness,
                )
    return CrossReport(entries=tuple(entries), nodes=nodes)
