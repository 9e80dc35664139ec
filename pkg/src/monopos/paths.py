"""Induced (chordless) path machinery.

The workhorse is a depth-first enumeration of induced paths from a source
vertex.  A partial path p0..pk is extended only to neighbors of pk outside
the union of closed neighborhoods of p0..p(k-1); this keeps every partial
path chordless, endpoints included.  The endpoint rule matters: an induced
u,v-path longer than one edge must have non-adjacent endpoints, so when u
and v are adjacent the edge uv is the only induced u,v-path.  The forbidden
set enforces that for free, because v is masked out as soon as any earlier
path vertex is its neighbor.

Every node of the search tree is itself an induced path from the source to
its last vertex, so one traversal from u yields, for every endpoint w, the
union of all induced u,w-paths.  Intervals are therefore computed one
source row at a time and cached.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bit, full_mask, iter_bits, to_tuple
from .errors import BudgetExceeded, CapExceeded, InputError
from .graph import Graph

#: Default node-expansion budget for one enumeration (one source or pair).
DEFAULT_BUDGET = 10_000_000

LONGEST_PATH_CAP = 30
PARTITION_CAP = 16


# ---------------------------------------------------------------------------
# core enumeration
# ---------------------------------------------------------------------------


def interval_row(g: Graph, u: int, budget: int = DEFAULT_BUDGET) -> tuple[list[int], int]:
    """For every w, the union of vertices over induced u,w-paths.

    Returns ``(row, expansions)``; ``row[w] == 0`` when w is unreachable
    from u (and ``row[u] == bit(u)``).  Iterative so that the 512-vertex
    fallback regime cannot hit the interpreter recursion limit.
    """
    adj = g.adj
    n = g.n
    row = [0] * n
    row[u] = bit(u)
    expansions = 0
    lasts = [0] * (n + 1)
    pmasks = [0] * (n + 1)
    forbs = [0] * (n + 1)
    exts = [0] * (n + 1)
    top = 0
    lasts[0], pmasks[0], forbs[0], exts[0] = u, bit(u), bit(u), adj[u]
    while top >= 0:
        ext = exts[top]
        if not ext:
            top -= 1
            continue
        b = ext & -ext
        exts[top] = ext ^ b
        w = b.bit_length() - 1
        npm = pmasks[top] | b
        row[w] |= npm
        expansions += 1
        if expansions > budget:
            raise BudgetExceeded(f"induced-path budget {budget} exhausted at source {u}")
        nforb = forbs[top] | adj[lasts[top]] | b
        nxt = adj[w] & ~nforb
        if nxt:
            top += 1
            lasts[top], pmasks[top], forbs[top], exts[top] = w, npm, nforb, nxt
    return row, expansions


def induced_paths(g: Graph, u: int, v: int, budget: int = DEFAULT_BUDGET):
    """Yield every induced u,v-path as a vertex tuple, neighbors ascending."""
    if u == v:
        raise InputError("path endpoints must differ")
    adj = g.adj
    expansions = 0
    path = [u]

    def dfs(last: int, forb: int):
        nonlocal expansions
        ext = adj[last] & ~forb
        child_base = forb | adj[last]
        while ext:
            b = ext & -ext
            ext ^= b
            w = b.bit_length() - 1
            expansions += 1
            if expansions > budget:
                raise BudgetExceeded(f"induced-path budget {budget} exhausted for pair ({u},{v})")
            path.append(w)
            if w == v:
                yield tuple(path)
            else:
                yield from dfs(w, child_base | b)
            path.pop()

    yield from dfs(u, bit(u))


@dataclass(frozen=True)
class InducedPathQuery:
    """One enumeration request: endpoints, aggregation mode, node budget.

    Modes: ``collect`` returns the union mask of vertices on induced
    u,v-paths; ``count`` the number of such paths; ``hit`` whether the probe
    vertex lies on at least one of them.
    """

    u: int
    v: int
    mode: str = "collect"
    probe: int | None = None
    budget: int = DEFAULT_BUDGET


def enumerate_induced_paths(g: Graph, q: InducedPathQuery):
    if q.mode not in ("collect", "count", "hit"):
        raise InputError(f"unknown enumeration mode {q.mode!r}")
    if q.budget <= 0:
        raise InputError("budget must be positive")
    if q.mode == "hit":
        if q.probe is None:
            raise InputError("hit mode needs a probe vertex")
        for p in induced_paths(g, q.u, q.v, q.budget):
            if q.probe in p:
                return True
        return False
    if q.mode == "count":
        return sum(1 for _ in induced_paths(g, q.u, q.v, q.budget))
    acc = 0
    for p in induced_paths(g, q.u, q.v, q.budget):
        for w in p:
            acc |= bit(w)
    return acc


# ---------------------------------------------------------------------------
# intervals, closures, hulls
# ---------------------------------------------------------------------------


class IntervalCache:
    """Memoized interval rows for one fixed graph.

    Rows are computed per source and published whole; readers may share a
    cache after a row is in place, but concurrent writers need external
    exclusion (the toolkit itself uses one cache per worker).
    """

    def __init__(self, g: Graph):
        self.fingerprint = (g.n, g.adj)
        self._g = g
        self._rows: dict[int, list[int]] = {}
        self.expansions = 0

    def _check(self, g: Graph):
        if (g.n, g.adj) != self.fingerprint:
            raise InputError("interval cache used with a different graph")

    def row(self, u: int, budget: int = DEFAULT_BUDGET) -> list[int]:
        if u not in self._rows:
            row, exp = interval_row(self._g, u, budget)
            self.expansions += exp
            self._rows[u] = row
        return self._rows[u]

    def interval(self, u: int, v: int, budget: int = DEFAULT_BUDGET) -> int:
        """K[u,v]; equals {u,v} when u and v sit in different components."""
        if u == v:
            raise InputError("interval endpoints must differ")
        got = self.row(u, budget)[v]
        if got == 0:
            return bit(u) | bit(v)
        return got


def monophonic_interval(g: Graph, u: int, v: int, cache: IntervalCache | None = None,
                        budget: int = DEFAULT_BUDGET) -> int:
    cache = cache if cache is not None else IntervalCache(g)
    cache._check(g)
    return cache.interval(u, v, budget)


def monophonic_closure(g: Graph, m: int, cache: IntervalCache | None = None,
                       budget: int = DEFAULT_BUDGET) -> int:
    """Union of pairwise intervals over m; always contains m."""
    if m == 0:
        raise InputError("closure of the empty set is undefined")
    cache = cache if cache is not None else IntervalCache(g)
    cache._check(g)
    out = m
    verts = to_tuple(m)
    for i, u in enumerate(verts):
        row = cache.row(u, budget)
        for v in verts[i + 1:]:
            out |= row[v] if row[v] else bit(u) | bit(v)
    return out


def monophonic_hull(g: Graph, m: int, cache: IntervalCache | None = None,
                    budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """Iterate closure to its fixpoint; returns (hull, iterations).

    The iteration count is the smallest r with closure^r(m) == closure^(r+1)(m).
    """
    cache = cache if cache is not None else IntervalCache(g)
    current = m
    r = 0
    while True:
        nxt = monophonic_closure(g, current, cache, budget)
        if nxt == current:
            return current, r
        current = nxt
        r += 1


def interior_vertices(g: Graph, m: int, cache: IntervalCache | None = None,
                      budget: int = DEFAULT_BUDGET) -> int:
    """Members of m lying in the closure of the rest of m."""
    if m.bit_count() < 2:
        raise InputError("interior vertices need a set of size at least 2")
    cache = cache if cache is not None else IntervalCache(g)
    out = 0
    for u in iter_bits(m):
        rest = m & ~bit(u)
        if rest.bit_count() >= 2 and monophonic_closure(g, rest, cache, budget) & bit(u):
            out |= bit(u)
    return out


# ---------------------------------------------------------------------------
# longest induced path, induced path partition
# ---------------------------------------------------------------------------


def longest_induced_path_length(g: Graph, cap: int = LONGEST_PATH_CAP,
                                budget: int = DEFAULT_BUDGET) -> int:
    """Exact maximum length (edges) over all induced paths."""
    if g.n > cap:
        raise CapExceeded(f"longest induced path cap {cap} exceeded by order {g.n}")
    adj = g.adj
    best = 0
    expansions = 0

    def dfs(last: int, depth: int, forb: int):
        nonlocal best, expansions
        ext = adj[last] & ~forb
        child_base = forb | adj[last]
        while ext:
            b = ext & -ext
            ext ^= b
            w = b.bit_length() - 1
            expansions += 1
            if expansions > budget:
                raise BudgetExceeded(f"longest-path budget {budget} exhausted")
            if depth + 1 > best:
                best = depth + 1
            dfs(w, depth + 1, child_base | b)

    for u in range(g.n):
        dfs(u, 0, bit(u))
    return best


def _is_induced_path_mask(g: Graph, mask: int) -> bool:
    k = mask.bit_count()
    if k == 0:
        return False
    if k == 1:
        return True
    edges = 0
    ends = 0
    for v in iter_bits(mask):
        d = (g.adj[v] & mask).bit_count()
        if d > 2:
            return False
        if d == 1:
            ends += 1
        edges += d
    if edges != 2 * (k - 1) or ends != 2:
        return False
    v = (mask & -mask).bit_length() - 1
    return g.component_of(v, within=mask) == mask


def induced_path_partition(g: Graph, cap: int = PARTITION_CAP) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Minimum number of vertex-disjoint induced paths covering all vertices.

    Enumerates every subset inducing a path, then runs a set-partition DP
    over subset masks.  Exact, so explicitly capped.
    """
    if g.n > cap:
        raise CapExceeded(f"induced path partition cap {cap} exceeded by order {g.n}")
    n = g.n
    full = full_mask(n)
    paths_by_low: list[list[int]] = [[] for _ in range(n)]
    for mask in range(1, full + 1):
        if _is_induced_path_mask(g, mask):
            paths_by_low[(mask & -mask).bit_length() - 1].append(mask)

    INF = n + 1
    dp = [INF] * (full + 1)
    choice = [0] * (full + 1)
    dp[0] = 0
    for mask in range(1, full + 1):
        low = (mask & -mask).bit_length() - 1
        best = INF
        pick = 0
        for p in paths_by_low[low]:
            if p & ~mask:
                continue
            c = dp[mask & ~p]
            if c + 1 < best:
                best = c + 1
                pick = p
        dp[mask] = best
        choice[mask] = pick
    parts = []
    mask = full
    while mask:
        p = choice[mask]
        parts.append(to_tuple(p))
        mask &= ~p
    return dp[full], tuple(parts)


# ---------------------------------------------------------------------------
# independent oracle: simple-path filter
# ---------------------------------------------------------------------------

ORACLE_PATH_CAP = 9


def simple_path_interval(g: Graph, u: int, v: int, cap: int = ORACLE_PATH_CAP) -> int:
    """K[u,v] recomputed the slow way: list all simple paths, keep the
    chordless ones.  Exists purely to cross-check the pruned enumeration."""
    if g.n > cap:
        raise CapExceeded(f"simple-path oracle cap {cap} exceeded by order {g.n}")
    adj = g.adj
    acc = 0
    path = [u]

    def chordless(p: list[int]) -> bool:
        for i in range(len(p)):
            for j in range(i + 2, len(p)):
                if adj[p[i]] & bit(p[j]):
                    return False
        return True

    def dfs(last: int, seen: int):
        nonlocal acc
        for w in iter_bits(adj[last] & ~seen):
            path.append(w)
            if w == v:
                if chordless(path):
                    m = 0
                    for x in path:
                        m |= bit(x)
                    acc |= m
            else:
                dfs(w, seen | bit(w))
            path.pop()

    dfs(u, bit(u))
    if acc == 0:
        acc = bit(u) | bit(v)
    return acc


def count_induced_paths_oracle(g: Graph, u: int, v: int, cap: int = ORACLE_PATH_CAP + 1) -> int:
    """Number of induced u,v-paths via the simple-path filter."""
    if g.n > cap:
        raise CapExceeded(f"simple-path oracle cap {cap} exceeded by order {g.n}")
    adj = g.adj
    count = 0
    path = [u]

    def chordless(p: list[int]) -> bool:
        for i in range(len(p)):
            for j in range(i + 2, len(p)):
                if adj[p[i]] & bit(p[j]):
                    return False
        return True

    def dfs(last: int, seen: int):
        nonlocal count
        for w in iter_bits(adj[last] & ~seen):
            path.append(w)
            if w == v:
                if chordless(path):
                    count += 1
            else:
                dfs(w, seen | bit(w))
            path.pop()

    dfs(u, bit(u))
    return count
