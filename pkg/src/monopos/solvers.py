"""Exact solvers for position-type parameters and the monophonic hull number.

All five position parameters (mp, gp, gp2, imp, igp) run through one model:
a set S is "in position" exactly when no pair {x,z} of S has a third member
of S among its interior witnesses, where the witness notion depends on the
path mode.  Monophonic mode takes witnesses from induced-path intervals,
geodesic mode from the distance identity d(x,y) + d(y,z) = d(x,z), and the
length-two mode restricts geodesic witnesses to pairs at distance exactly
two.  One branch-and-bound maximizer serves all modes; the independent
variants add a neighborhood filter when a vertex is taken.

Node limits are hard failures.  The solver never degrades to a bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .bitset import bit, iter_bits, to_tuple
from .errors import CapExceeded, InputError, InternalCheckError, NodeLimitExceeded
from .graph import SOLVER_CAP, Graph
from .graph6 import emit_graph6
from .invariants import DIST_INF, distance_matrix, simplicial_vertices
from .paths import DEFAULT_BUDGET, IntervalCache, simple_path_interval


class PathMode(Enum):
    MONOPHONIC = "mono"
    GEODESIC = "geo"
    GEODESIC_LEN2 = "geo2"

    @classmethod
    def from_string(cls, text: str) -> "PathMode":
        for mode in cls:
            if mode.value == text:
                return mode
        raise InputError(f"unknown path mode {text!r} (expected mono, geo or geo2)")


def parameter_name(mode: PathMode, independent: bool) -> str:
    base = {PathMode.MONOPHONIC: "mp", PathMode.GEODESIC: "gp", PathMode.GEODESIC_LEN2: "gp2"}[mode]
    if independent:
        if mode is PathMode.GEODESIC_LEN2:
            raise InputError("independent variant is not defined for the length-two mode")
        return "imp" if mode is PathMode.MONOPHONIC else "igp"
    return base


@dataclass
class TripleIndex:
    """Interior witnesses per unordered vertex pair, for one graph and mode."""

    graph: Graph
    mode: PathMode
    witness: list[list[int]]
    expansions: int = 0
    _wit_of: list[list[int]] | None = field(default=None, repr=False)

    def pairs_with_witnesses(self):
        n = self.graph.n
        for x in range(n):
            for z in range(x + 1, n):
                if self.witness[x][z]:
                    yield x, z, self.witness[x][z]

    def witness_of(self) -> list[list[int]]:
        """wit_of[u][y] = mask of w such that y witnesses the pair {u,w}."""
        if self._wit_of is None:
            n = self.graph.n
            wo = [[0] * n for _ in range(n)]
            for x in range(n):
                wx = self.witness[x]
                for z in range(n):
                    if z == x:
                        continue
                    for y in iter_bits(wx[z]):
                        wo[x][y] |= bit(z)
            self._wit_of = wo
        return self._wit_of


def build_triple_index(g: Graph, mode: PathMode, cache: IntervalCache | None = None,
                       budget: int = DEFAULT_BUDGET, cap: int = SOLVER_CAP) -> TripleIndex:
    if g.n > cap:
        raise CapExceeded(f"triple index cap {cap} exceeded by order {g.n}")
    n = g.n
    witness = [[0] * n for _ in range(n)]
    expansions = 0
    if mode is PathMode.MONOPHONIC:
        cache = cache if cache is not None else IntervalCache(g)
        before = cache.expansions
        for x in range(n):
            row = cache.row(x, budget)
            for z in range(x + 1, n):
                w = row[z] & ~(bit(x) | bit(z))
                witness[x][z] = witness[z][x] = w
        expansions = cache.expansions - before
    else:
        dist = distance_matrix(g)
        for x in range(n):
            for z in range(x + 1, n):
                d = int(dist[x, z])
                if d >= DIST_INF:
                    continue
                if mode is PathMode.GEODESIC_LEN2:
                    if d == 2:
                        witness[x][z] = witness[z][x] = g.adj[x] & g.adj[z]
                    continue
                w = 0
                for y in range(n):
                    if y != x and y != z and int(dist[x, y]) + int(dist[y, z]) == d:
                        w |= bit(y)
                witness[x][z] = witness[z][x] = w
    return TripleIndex(g, mode, witness, expansions)


def is_position_set(idx: TripleIndex, s: int) -> tuple[bool, tuple[int, int, int] | None]:
    """Check the no-witness condition; on failure return one (x, y, z)."""
    verts = to_tuple(s)
    for i, x in enumerate(verts):
        wx = idx.witness[x]
        for z in verts[i + 1:]:
            hit = wx[z] & s
            if hit:
                return False, (x, (hit & -hit).bit_length() - 1, z)
    return True, None


@dataclass(frozen=True)
class SolverOptions:
    require_independent: bool = False
    node_limit: int = 20_000_000
    allowed: int | None = None
    #: With False, skip the lexmin witness pass and report the first optimum
    #: found (still verified); value-only callers use this to save work.
    lexmin_witness: bool = True


@dataclass
class ParameterReport:
    graph_id: str
    parameter: str
    value: int
    witness: tuple[int, ...]
    method: str
    expansions: int
    ms: float

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "parameter": self.parameter,
            "value": self.value,
            "witness": list(self.witness),
            "method": self.method,
            "expansions": self.expansions,
            "ms": round(self.ms, 3),
        }


class _Done(Exception):
    pass


class _PositionSearch:
    """Branch and bound over candidate vertices.

    Candidates are ordered by descending witness participation.  Taking a
    vertex v kills, for every already chosen u: the witnesses of {u,v}, the
    vertices w whose pair {u,w} is witnessed by v, and the vertices w whose
    pair {v,w} is witnessed by u.  The bound is chosen + surviving
    candidates not yet passed over.
    """

    def __init__(self, idx: TripleIndex, independent: bool, node_limit: int):
        self.idx = idx
        self.g = idx.graph
        self.independent = independent
        self.node_limit = node_limit
        self.nodes = 0
        n = self.g.n
        deg = [0] * n
        for x, z, w in idx.pairs_with_witnesses():
            c = w.bit_count()
            deg[x] += c
            deg[z] += c
            for y in iter_bits(w):
                deg[y] += 1
        self.order = sorted(range(n), key=lambda v: (-deg[v], v))
        self.suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] | bit(self.order[i])
        self.wit_of = idx.witness_of()

    def _kill_mask(self, chosen: list[int], v: int) -> int:
        kill = 0
        wv = self.idx.witness[v]
        wov = self.wit_of[v]
        for u in chosen:
            kill |= wv[u] | self.wit_of[u][v] | wov[u]
        if self.independent:
            kill |= self.g.adj[v]
        return kill

    def run(self, forced: int, allowed: int, target: int | None) -> tuple[int, int]:
        """Best (size, mask) with forced included; stops early at target."""
        chosen: list[int] = []
        cand = allowed & ~forced
        smask = 0
        for v in iter_bits(forced):
            if self.independent and self.g.adj[v] & forced:
                return 0, 0
            cand &= ~self._kill_mask(chosen, v)
            chosen.append(v)
            smask |= bit(v)
        ok, _ = is_position_set(self.idx, forced)
        if not ok:
            return 0, 0
        self.best = forced.bit_count()
        self.best_mask = smask
        self.target = target
        try:
            self._rec(chosen, smask, cand, 0)
        except _Done:
            pass
        return self.best, self.best_mask

    def _rec(self, chosen: list[int], smask: int, cand: int, oi: int):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise NodeLimitExceeded(f"position solver node limit {self.node_limit} exceeded")
        size = len(chosen)
        if size > self.best:
            self.best = size
            self.best_mask = smask
            if self.target is not None and self.best >= self.target:
                raise _Done
        order = self.order
        suffix = self.suffix
        i = oi
        n = len(order)
        while i < n:
            if size + (cand & suffix[i]).bit_count() <= self.best:
                return
            v = order[i]
            vb = bit(v)
            if cand & vb:
                kill = self._kill_mask(chosen, v)
                chosen.append(v)
                self._rec(chosen, smask | vb, (cand & ~kill) & ~vb, i + 1)
                chosen.pop()
                cand &= ~vb
            i += 1


def max_position_set(idx: TripleIndex, opts: SolverOptions = SolverOptions()) -> ParameterReport:
    """Exact maximum position set with a lexmin witness."""
    t0 = time.perf_counter()
    g = idx.graph
    allowed = g.full() if opts.allowed is None else opts.allowed
    search = _PositionSearch(idx, opts.require_independent, opts.node_limit)
    value, found = search.run(0, allowed, None)

    if opts.lexmin_witness:
        forced = 0
        box = allowed
        for v in range(g.n - 1, -1, -1):
            if not box & bit(v) or forced & bit(v):
                continue
            got, _ = search.run(forced, box & ~bit(v), value)
            if got >= value:
                box &= ~bit(v)
            else:
                forced |= bit(v)
        if forced.bit_count() != value:
            raise InternalCheckError("position lexmin pass lost feasibility")
    else:
        forced = found
    ok, _ = is_position_set(idx, forced)
    if not ok or (opts.require_independent and not g.is_independent_mask(forced)):
        raise InternalCheckError("position witness failed verification")
    ms = (time.perf_counter() - t0) * 1000.0
    return ParameterReport(
        graph_id=emit_graph6(g),
        parameter=parameter_name(idx.mode, opts.require_independent),
        value=value,
        witness=to_tuple(forced),
        method="branch_and_bound",
        expansions=search.nodes,
        ms=ms,
    )


#: Canonical position parameter names mapped to (mode, independent).
POSITION_PARAMS: dict[str, tuple[PathMode, bool]] = {
    "mp": (PathMode.MONOPHONIC, False),
    "gp": (PathMode.GEODESIC, False),
    "gp2": (PathMode.GEODESIC_LEN2, False),
    "imp": (PathMode.MONOPHONIC, True),
    "igp": (PathMode.GEODESIC, True),
}


class GraphSolver:
    """Memoizing front end: one interval cache and one triple index per mode."""

    def __init__(self, g: Graph, node_limit: int = 20_000_000, lexmin: bool = False,
                 cap: int = SOLVER_CAP):
        self.g = g
        self.node_limit = node_limit
        self.lexmin = lexmin
        self.cap = cap
        self.cache = IntervalCache(g)
        self._indexes: dict[PathMode, TripleIndex] = {}
        self._reports: dict[str, ParameterReport] = {}

    def triple_index(self, mode: PathMode) -> TripleIndex:
        if mode not in self._indexes:
            self._indexes[mode] = build_triple_index(self.g, mode, self.cache, cap=self.cap)
        return self._indexes[mode]

    def report(self, name: str) -> ParameterReport:
        if name == "hm":
            if name not in self._reports:
                self._reports[name] = hull_number(self.g, self.cache, cap=self.cap)
            return self._reports[name]
        if name not in POSITION_PARAMS:
            raise InputError(f"unknown position parameter {name!r}")
        if name not in self._reports:
            mode, independent = POSITION_PARAMS[name]
            opts = SolverOptions(require_independent=independent, node_limit=self.node_limit,
                                 lexmin_witness=self.lexmin)
            self._reports[name] = max_position_set(self.triple_index(mode), opts)
        return self._reports[name]

    def value(self, name: str) -> int:
        return self.report(name).value


BRUTE_FORCE_CAP = 12
BRUTE_FORCE_ORACLE_CAP = 9


def brute_force_position(g: Graph, mode: PathMode, independent: bool = False,
                         interval_source: str = "dfs") -> ParameterReport:
    """Subset-enumeration oracle used to certify the branch and bound.

    Witness data is reassembled here rather than taken from a TripleIndex;
    with ``interval_source="oracle"`` monophonic intervals additionally come
    from the simple-path filter, fully independent of the pruned DFS.
    """
    t0 = time.perf_counter()
    cap = BRUTE_FORCE_ORACLE_CAP if interval_source == "oracle" else BRUTE_FORCE_CAP
    if g.n > cap:
        raise CapExceeded(f"brute force cap {cap} exceeded by order {g.n}")
    n = g.n
    constraints: list[tuple[int, int]] = []
    if mode is PathMode.MONOPHONIC:
        if interval_source == "oracle":
            rows = {u: [simple_path_interval(g, u, v) if v != u else 0 for v in range(n)]
                    for u in range(n)}
        elif interval_source == "dfs":
            cache = IntervalCache(g)
            rows = {u: [cache.interval(u, v) if v != u else 0 for v in range(n)] for u in range(n)}
        else:
            raise InputError(f"unknown interval source {interval_source!r}")
        for x in range(n):
            for z in range(x + 1, n):
                w = rows[x][z] & ~(bit(x) | bit(z))
                if w:
                    constraints.append((bit(x) | bit(z), w))
    else:
        dist = distance_matrix(g)
        for x in range(n):
            for z in range(x + 1, n):
                d = int(dist[x, z])
                if d >= DIST_INF:
                    continue
                if mode is PathMode.GEODESIC_LEN2:
                    w = g.adj[x] & g.adj[z] if d == 2 else 0
                else:
                    w = 0
                    for y in range(n):
                        if y != x and y != z and int(dist[x, y]) + int(dist[y, z]) == d:
                            w |= bit(y)
                if w:
                    constraints.append((bit(x) | bit(z), w))
    if independent:
        for u, v in g.edges():
            constraints.append((bit(u) | bit(v), g.full()))

    best, best_mask = 0, 0
    for s in range(1 << n):
        if s.bit_count() <= best:
            continue
        ok = True
        for pm, wm in constraints:
            if pm & s == pm and wm & s:
                ok = False
                break
        if ok:
            best, best_mask = s.bit_count(), s
    ms = (time.perf_counter() - t0) * 1000.0
    return ParameterReport(
        graph_id=emit_graph6(g),
        parameter=parameter_name(mode, independent),
        value=best,
        witness=to_tuple(best_mask),
        method="oracle",
        expansions=1 << n,
        ms=ms,
    )


# ---------------------------------------------------------------------------
# monophonic hull number
# ---------------------------------------------------------------------------

HULL_SET_BUDGET = 2_000_000


def hull_number(g: Graph, cache: IntervalCache | None = None, cap: int = SOLVER_CAP,
                set_budget: int = HULL_SET_BUDGET) -> ParameterReport:
    """Smallest set whose monophonic hull is the whole vertex set.

    Every hull set contains every simplicial vertex, so the search starts
    from that seed and grows by cardinality; candidate sets that put one
    member strictly inside an interval of two others are skipped, since a
    minimum hull set never does that.
    """
    t0 = time.perf_counter()
    if not g.is_connected():
        raise InputError("hull_number requires a connected graph")
    if g.n > cap:
        raise CapExceeded(f"hull cap {cap} exceeded by order {g.n}")
    cache = cache if cache is not None else IntervalCache(g)
    n = g.n
    before = cache.expansions

    def finish(mask: int, tested: int) -> ParameterReport:
        ms = (time.perf_counter() - t0) * 1000.0
        return ParameterReport(
            graph_id=emit_graph6(g),
            parameter="hm",
            value=mask.bit_count(),
            witness=to_tuple(mask),
            method="branch_and_bound",
            expansions=cache.expansions - before + tested,
            ms=ms,
        )

    if n == 1:
        return finish(1, 0)

    def hull_of(mask: int) -> int:
        current = mask
        while True:
            nxt = current
            verts = to_tuple(current)
            for i, u in enumerate(verts):
                row = cache.row(u)
                for v in verts[i + 1:]:
                    nxt |= row[v]
            if nxt == current:
                return current
            current = nxt

    seed = simplicial_vertices(g)
    tested = 0
    if seed.bit_count() >= 2 and hull_of(seed) == g.full():
        return finish(seed, 1)

    idx = build_triple_index(g, PathMode.MONOPHONIC, cache)
    others = [v for v in range(n) if not seed & bit(v)]
    blocked = 0
    seed_list = to_tuple(seed)
    for i, a in enumerate(seed_list):
        for b in seed_list[i + 1:]:
            blocked |= idx.witness[a][b]
    others = [v for v in others if not blocked & bit(v)]

    start = max(2, seed.bit_count())
    for size in range(start, n + 1):
        extra = size - seed.bit_count()
        if extra < 0 or extra > len(others):
            continue
        for combo in combinations(others, extra):
            tested += 1
            if tested > set_budget:
                raise CapExceeded(f"hull search budget {set_budget} exhausted")
            mask = seed
            for v in combo:
                mask |= bit(v)
            ok, _ = is_position_set(idx, mask)
            if not ok:
                continue
            if hull_of(mask) == g.full():
                return finish(mask, tested)
    raise InternalCheckError("no hull set found up to the full vertex set")


def hull_number_oracle(g: Graph, cap: int = 12) -> int:
    """Plain cardinality-ascending hull search without any seeding or
    pruning; certifies :func:`hull_number` on small graphs."""
    if not g.is_connected():
        raise InputError("hull oracle requires a connected graph")
    if g.n > cap:
        raise CapExceeded(f"hull oracle cap {cap} exceeded by order {g.n}")
    if g.n == 1:
        return 1
    cache = IntervalCache(g)
    full = g.full()
    from .paths import monophonic_hull

    for size in range(2, g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= bit(v)
            hull, _ = monophonic_hull(g, mask, cache)
            if hull == full:
                return size
    raise InternalCheckError("no hull set found up to the full vertex set")


# ---------------------------------------------------------------------------
# full parameter bundle
# ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    """Every parameter the caps allow, plus names of the refused ones."""

    reports: dict[str, ParameterReport]
    skipped: dict[str, str]

    def value(self, name: str) -> int:
        return self.reports[name].value


def parameter_suite(g: Graph, node_limit: int = 20_000_000,
                    oracle_cap: int = 20, rho_cap: int = 16,
                    longest_cap: int = 30, hull_cap: int = SOLVER_CAP) -> SuiteResult:
    """Compute mp, gp, gp2, imp, igp, hull number and the supporting
    invariants in one bundle.  Parameters over their cap are reported as
    skipped, never silently dropped."""
    from .errors import LimitError
    from .invariants import (alpha_omega_number, clique_number, dissociation_number,
                             independence_number)
    from .paths import induced_path_partition, longest_induced_path_length

    gid = emit_graph6(g)
    reports: dict[str, ParameterReport] = {}
    skipped: dict[str, str] = {}
    cache = IntervalCache(g)

    def wrap(name: str, fn, method: str):
        t0 = time.perf_counter()
        try:
            value, witness = fn()
        except LimitError as exc:
            skipped[name] = str(exc)
            return
        ms = (time.perf_counter() - t0) * 1000.0
        reports[name] = ParameterReport(gid, name, value, witness, method, 0, ms)

    wrap("omega", lambda: _pair(clique_number(g)), "branch_and_bound")
    wrap("alpha", lambda: _pair(independence_number(g)), "branch_and_bound")
    wrap("alphaomega", lambda: _pair(alpha_omega_number(g, oracle_cap)), "branch_and_bound")
    wrap("diss", lambda: _pair(dissociation_number(g, oracle_cap)), "branch_and_bound")
    wrap("simplicial", lambda: _pair((simplicial_vertices(g).bit_count(), simplicial_vertices(g))), "closed_form")
    wrap("L", lambda: (longest_induced_path_length(g, longest_cap), ()), "branch_and_bound")
    wrap("rho", lambda: (induced_path_partition(g, rho_cap)[0], ()), "oracle")

    for mode, independent in ((PathMode.MONOPHONIC, False), (PathMode.GEODESIC, False),
                              (PathMode.GEODESIC_LEN2, False), (PathMode.MONOPHONIC, True),
                              (PathMode.GEODESIC, True)):
        name = parameter_name(mode, independent)
        try:
            idx = build_triple_index(g, mode, cache)
            reports[name] = max_position_set(idx, SolverOptions(require_independent=independent,
                                                                node_limit=node_limit))
        except LimitError as exc:
            skipped[name] = str(exc)

    if g.is_connected():
        try:
            reports["hm"] = hull_number(g, cache, hull_cap)
        except LimitError as exc:
            skipped["hm"] = str(exc)
    else:
        skipped["hm"] = "hull number undefined for disconnected graphs"
    return SuiteResult(reports, skipped)


def _pair(result: tuple[int, int]) -> tuple[int, tuple[int, ...]]:
    value, mask = result
    return value, to_tuple(mask)
