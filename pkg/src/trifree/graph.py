"""Exact graph primitives on adjacency bitsets.

Vertices are labeled 0..n-1 and every adjacency row is a Python int used
as a bitset, so the hot operations (common neighborhoods, independence
tests, triangle checks) are single AND/popcount steps.  Graphs are
immutable after construction and safe to share.

Triangle-freeness is deliberately not a construction invariant: the
verifier has to be able to load arbitrary graphs.  Operations that only
make sense on triangle-free input say so and assert it in debug mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128

GRAPH6_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    The zero-vertex graph is allowed; deleting a closed neighborhood can
    empty a graph out entirely.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        """Build from raw adjacency bitmasks; symmetry and loops are checked."""
        n = len(adj)
        g = cls(n)
        mask_all = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~mask_all:
                raise ValueError(f"adjacency row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for w in _bits(row):
                if not (adj[w] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        g.adj = tuple(adj)
        return g

    # basic accessors

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in _bits(rest):
                out.append((u, u + 1 + off))
        return out

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to 0..k-1 in ascending vertex order."""
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise ValueError("induced vertex set out of range")
        index = {v: i for i, v in enumerate(keep)}
        g = Graph(len(keep))
        adj = [0] * len(keep)
        for v in keep:
            i = index[v]
            for w in _bits(self.adj[v]):
                if w in index:
                    adj[i] |= 1 << index[w]
        g.adj = tuple(adj)
        return g

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count()})"


@dataclass(frozen=True)
class GraphClass:
    """Classification record: what kind of graph is this.

    A caller asking "is g a witness for (l, n, e)?" tests matches(l, n, e),
    which requires triangle-freeness and independence number below l.
    """

    triangle_free: bool
    alpha: int
    n: int
    e: int

    def matches(self, l: int, n: int, e: int) -> bool:
        return self.triangle_free and self.alpha < l and self.n == n and self.e == e


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent."""
    adj = g.adj
    for u in range(g.n):
        rest = adj[u] >> (u + 1)
        base = u + 1
        while rest:
            low = rest & -rest
            w = base + low.bit_length() - 1
            if adj[u] & adj[w]:
                return False
            rest ^= low
    return True


def independence_number(g: Graph) -> int:
    """Exact independence number via branch and bound on bitsets.

    Branches on a maximum-degree vertex: either exclude it, or include it
    and delete its closed neighborhood.  Vertices of degree at most one
    are taken greedily (always optimal), and a greedy clique cover of the
    remaining vertices supplies the pruning bound.  Always exact; intended
    for n <= 128.
    """
    if g.n == 0:
        return 0
    adj = g.adj

    def cover_bound(avail: int) -> int:
        # Each clique meets an independent set in at most one vertex.
        b = 0
        rest = avail
        while rest:
            b += 1
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cand = adj[v] & rest
            while cand:
                wlow = cand & -cand
                w = wlow.bit_length() - 1
                rest &= ~wlow
                cand &= adj[w]
        return b

    best = 0

    def bb(avail: int, size: int) -> None:
        nonlocal best
        while True:
            changed = False
            scan = avail
            while scan:
                low = scan & -scan
                scan ^= low
                if not avail & low:
                    continue
                v = low.bit_length() - 1
                nb = adj[v] & avail
                if nb == 0:
                    avail ^= low
                    size += 1
                    changed = True
                elif nb & (nb - 1) == 0:
                    # degree one: taking v is always optimal
                    avail &= ~(low | nb)
                    size += 1
                    changed = True
            if not changed:
                break
        if avail == 0:
            if size > best:
                best = size
            return
        if size + avail.bit_count() <= best:
            return
        if size + cover_bound(avail) <= best:
            return
        v_pick, d_pick = -1, -1
        scan = avail
        while scan:
            low = scan & -scan
            scan ^= low
            v = low.bit_length() - 1
            d = (adj[v] & avail).bit_count()
            if d > d_pick:
                v_pick, d_pick = v, d
        vbit = 1 << v_pick
        bb(avail & ~(adj[v_pick] | vbit), size + 1)
        bb(avail & ~vbit, size)

    bb((1 << g.n) - 1, 0)
    return best


def second_degree(g: Graph, v: int) -> int:
    """Sum of the degrees over v's neighbors."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return sum(g.adj[w].bit_count() for w in _bits(g.adj[v]))


def reduced_graph(g: Graph, v: int) -> Graph:
    """Induced subgraph on everything outside the closed neighborhood of v.

    For triangle-free g the edge count drops by exactly second_degree(g, v),
    since a neighborhood carries no internal edges then.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    drop = g.adj[v] | (1 << v)
    return g.induced(u for u in range(g.n) if not (drop >> u) & 1)


def edge_slack(g: Graph) -> int:
    """The linear invariant e - 6n + 13*alpha; nonnegative on triangle-free graphs."""
    assert is_triangle_free(g), "edge_slack is only meaningful on triangle-free graphs"
    return g.edge_count() - 6 * g.n + 13 * independence_number(g)


def classify(g: Graph) -> GraphClass:
    return GraphClass(
        triangle_free=is_triangle_free(g),
        alpha=independence_number(g),
        n=g.n,
        e=g.edge_count(),
    )


def find_induced_k24(g: Graph):
    """First induced complete bipartite K_{2,4}, or None.

    Returns ((a1, a2), (b1, b2, b3, b4)): the a-side is a nonadjacent pair,
    the b-side four of their pairwise-nonadjacent common neighbors.  In a
    triangle-free graph both independence conditions are automatic, but
    they are checked here so arbitrary graphs can be probed too.
    """
    adj = g.adj
    for a1 in range(g.n):
        for a2 in range(a1 + 1, g.n):
            if (adj[a1] >> a2) & 1:
                continue
            common = adj[a1] & adj[a2]
            if common.bit_count() < 4:
                continue
            cands = list(_bits(common))
            for quad in combinations(cands, 4):
                if all(not (adj[x] >> y) & 1 for x, y in combinations(quad, 2)):
                    return ((a1, a2), quad)
    return None


# graph6 I/O, bit-exact per the published format description.
# Column-major upper triangle; 6-bit groups offset by 63; optional
# ">>graph6<<" header; one graph per line.


def _encode_count(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    # the 4-byte form covers everything up to our 128-vertex cap
    return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])


def write_graph6(g: Graph) -> bytes:
    """Encode one graph as a graph6 line (no trailing newline)."""
    n = g.n
    out = bytearray(_encode_count(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(acc + 63)
    return bytes(out)


def _decode_line(line: bytes, where: str = "") -> Graph:
    s = line
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error(f"empty graph6 record{where}")
    for c in s:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} outside graph6 alphabet{where}")
    if s[0] == 126:
        if len(s) >= 2 and s[1] == 126:
            raise Graph6Error(f"8-byte vertex counts not supported{where}")
        if len(s) < 4:
            raise Graph6Error(f"truncated vertex count{where}")
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63)
        body = s[4:]
    else:
        n = s[0] - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}{where}")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated bit stream ({len(body)} of {need} bytes){where}")
    if len(body) > need:
        raise Graph6Error(f"trailing data after bit stream{where}")
    adj = [0] * n
    # pairs in column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), ...
    i, j = 0, 1
    idx = 0
    for c in body:
        bits = c - 63
        for k in range(5, -1, -1):
            bit = (bits >> k) & 1
            if idx < npairs:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error(f"nonzero padding bits{where}")
            idx += 1
    g = Graph(n)
    g.adj = tuple(adj)
    return g


def parse_graph6(data: bytes | str) -> list[Graph]:
    """Parse graph6 text, one graph per line.  Empty input gives []."""
    if isinstance(data, str):
        data = data.encode("ascii")
    graphs = []
    for no, raw in enumerate(data.split(b"\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        graphs.append(_decode_line(line, where=f" (line {no})"))
    return graphs
