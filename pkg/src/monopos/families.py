"""Graph family generators and closed-form parameter predictors.

Generators are pure functions of (family, params, seed); identical specs
produce identical graph6 strings.  Vertex layouts are fixed and documented
per family so witnesses stay reproducible.

Predictors return :class:`PredictedValue` records carrying the predicted
parameter, the rule it came from and the applicability condition that was
checked.  The verification harness compares every prediction against the
exact solvers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bitset import bit, iter_bits
from .errors import CapExceeded, InputError
from .graph import (Graph, add_pendant, cartesian_product, complete_graph,
                    complete_multipartite, corona, cycle_graph, join, path_graph)
from .invariants import (alpha_omega_number, bipartition, clique_number,
                         deficiency_witness, diameter, independence_number,
                         is_block_graph, leaves, phi_separated, psi_uniform,
                         simplicial_vertices, split_partition, SplitPartition)
from .solvers import PathMode, build_triple_index, max_position_set


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int | None = None
    subspecs: tuple["FamilySpec", ...] = ()

    def text(self) -> str:
        parts = [self.family]
        items = [f"({s.text()})" for s in self.subspecs] + [str(p) for p in self.params]
        if items:
            parts.append(",".join(items))
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        return ":".join(parts)


@dataclass(frozen=True)
class PredictedValue:
    parameter: str
    value: int
    rule: str
    applies: str

    def to_dict(self) -> dict:
        return {"parameter": self.parameter, "value": self.value,
                "rule": self.rule, "applies": self.applies}


# ---------------------------------------------------------------------------
# spec text parsing
# ---------------------------------------------------------------------------


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``family:p1,p2,...[:seed=k]``; nested specs in parentheses."""
    text = text.strip()
    if not text:
        raise InputError("empty family spec")
    depth = 0
    colon_chunks = [""]
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InputError(f"unbalanced parentheses in spec {text!r}")
        if ch == ":" and depth == 0:
            colon_chunks.append("")
        else:
            colon_chunks[-1] += ch
    if depth != 0:
        raise InputError(f"unbalanced parentheses in spec {text!r}")
    family = colon_chunks[0]
    seed = None
    param_chunks: list[str] = []
    for chunk in colon_chunks[1:]:
        if chunk.startswith("seed="):
            try:
                seed = int(chunk[5:])
            except ValueError as exc:
                raise InputError(f"bad seed in spec {text!r}") from exc
        else:
            param_chunks.append(chunk)
    params: list[int] = []
    subspecs: list[FamilySpec] = []
    for chunk in param_chunks:
        depth = 0
        items = [""]
        for ch in chunk:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "," and depth == 0:
                items.append("")
            else:
                items[-1] += ch
        for item in items:
            item = item.strip()
            if not item:
                raise InputError(f"empty parameter in spec {text!r}")
            if item.startswith("(") and item.endswith(")"):
                subspecs.append(parse_family_spec(item[1:-1]))
            else:
                try:
                    params.append(int(item))
                except ValueError as exc:
                    raise InputError(f"bad parameter {item!r} in spec {text!r}") from exc
    return FamilySpec(family, tuple(params), seed, tuple(subspecs))


# ---------------------------------------------------------------------------
# deterministic constructions
# ---------------------------------------------------------------------------


def half_wheel(r: int) -> Graph:
    """Cycle of length 2r (ids 0..2r-1 carrying labels 1..2r) plus a hub
    (id 2r) joined to the even-labelled rim vertices (odd ids)."""
    if r < 2:
        raise InputError("half_wheel needs r >= 2")
    n = 2 * r + 1
    edges = [(i, (i + 1) % (2 * r)) for i in range(2 * r)]
    edges += [(2 * r, i) for i in range(1, 2 * r, 2)]
    return Graph.from_edges(n, edges)


def half_wheel_pendant(b: int, a: int) -> Graph:
    """Half-wheel on parameter b-a+2 with a-2 pendants on the hub."""
    if a < 3 or b < a + 2:
        raise InputError("half_wheel_pendant needs 3 <= a and b >= a+2")
    g = half_wheel(b - a + 2)
    hub = g.n - 1
    for _ in range(a - 2):
        g = add_pendant(g, hub)
    return g


def wheel_pendant(a: int) -> Graph:
    """Order-six wheel (5-cycle ids 0..4, hub id 5) with a-2 pendants on the hub."""
    if a < 3:
        raise InputError("wheel_pendant needs a >= 3")
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)]
    g = Graph.from_edges(6, edges)
    for _ in range(a - 2):
        g = add_pendant(g, 5)
    return g


def r_graph(r: int, s: int) -> Graph:
    """Clique on s+1 vertices (ids 0..s) with r leaves attached to vertex 0."""
    if r < 0 or s < 1:
        raise InputError("r_graph needs r >= 0 and s >= 1")
    g = complete_graph(s + 1)
    for _ in range(r):
        g = add_pendant(g, 0)
    return g


def p_graph(r: int, s: int) -> Graph:
    """Balanced complete bipartite graph minus a perfect matching (sides
    ids 0..s-1 and s..2s-1, with i !~ s+i), an apex (id 2s) joined to the
    first side, and r leaves on the apex."""
    if r < 0 or s < 2:
        raise InputError("p_graph needs r >= 0 and s >= 2")
    edges = [(i, s + j) for i in range(s) for j in range(s) if i != j]
    edges += [(2 * s, i) for i in range(s)]
    g = Graph.from_edges(2 * s + 1, edges)
    for _ in range(r):
        g = add_pendant(g, 2 * s)
    return g


def g_abl(a: int, b: int, length: int) -> Graph:
    """Clique of order b (ids 0..b-1); a path of the given length with
    vertices b..b+length; the path start joined to the first b-a+1 clique
    vertices.  Order b + length + 1."""
    if not (2 <= a <= b) or length < 1:
        raise InputError("g_abl needs 2 <= a <= b and length >= 1")
    g = complete_graph(b)
    edges = list(g.edges())
    edges += [(b, i) for i in range(b - a + 1)]
    edges += [(b + i, b + i + 1) for i in range(length)]
    return Graph.from_edges(b + length + 1, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def _lcf(n: int, pattern: list[int]) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append((i, (i + pattern[i % len(pattern)]) % n))
    return Graph.from_edges(n, set(tuple(sorted(e)) for e in edges))


def heawood_graph() -> Graph:
    return _lcf(14, [5, -5])


def mcgee_graph() -> Graph:
    return _lcf(24, [12, 7, -7])


def star_graph(k: int) -> Graph:
    if k < 1:
        raise InputError("star needs at least one leaf")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def caterpillar_graph(spine: int) -> Graph:
    """Path of the given order with one extra leaf on every internal vertex."""
    if spine < 2:
        raise InputError("caterpillar needs spine order >= 2")
    g = path_graph(spine)
    for v in range(1, spine - 1):
        g = add_pendant(g, v)
    return g


def hypercube(k: int) -> Graph:
    if k < 0:
        raise InputError("hypercube dimension must be >= 0")
    g = complete_graph(1)
    for _ in range(k):
        g = cartesian_product(g, complete_graph(2))
    return g


def grid_graph(n: int, m: int) -> Graph:
    """Grid with n*m vertices (n columns of paths of order m, row-major ids)."""
    if n < 1 or m < 1:
        raise InputError("grid sides must be >= 1")
    return cartesian_product(path_graph(n), path_graph(m))


# ---------------------------------------------------------------------------
# randomized constructions
# ---------------------------------------------------------------------------


def random_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    p = rng.uniform(0.2, 0.7) if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    if n < 1:
        raise InputError("order must be positive")
    while True:
        g = random_graph(n, rng, p)
        if g.is_connected():
            return g


def random_tree(n: int, rng: random.Random) -> Graph:
    if n < 1:
        raise InputError("order must be positive")
    if n <= 2:
        return path_graph(n)
    pruefer = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in pruefer:
        deg[x] += 1
    edges = []
    import heapq

    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    for x in pruefer:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, x)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_unicyclic(n: int, rng: random.Random) -> Graph:
    """Random tree plus one extra edge (creates exactly one cycle)."""
    if n < 3:
        raise InputError("unicyclic graphs need n >= 3")
    while True:
        t = random_tree(n, rng)
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not t.has_edge(u, v)]
        if non_edges:
            u, v = rng.choice(non_edges)
            return Graph.from_edges(n, t.edges() + [(u, v)])


def random_block_graph(n: int, rng: random.Random) -> Graph:
    """Tree of cliques glued at single vertices."""
    if n < 1:
        raise InputError("order must be positive")
    adj = [0] * n
    built = 1
    while built < n:
        host = rng.randrange(built)
        size = min(rng.randint(1, 3), n - built)
        clique = [host] + list(range(built, built + size))
        built += size
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                adj[u] |= bit(v)
                adj[v] |= bit(u)
    return Graph(n, tuple(adj))


def random_distance_hereditary(n: int, rng: random.Random) -> Graph:
    """Grow from one vertex by pendants, true twins and false twins."""
    if n < 1:
        raise InputError("order must be positive")
    adj = [0]
    for new in range(1, n):
        anchor = rng.randrange(new)
        kind = rng.choice(("pendant", "true_twin", "false_twin"))
        if kind == "false_twin" and adj[anchor] == 0:
            kind = "pendant"
        adj.append(0)
        if kind == "pendant":
            adj[new] = bit(anchor)
            adj[anchor] |= bit(new)
        else:
            adj[new] = adj[anchor]
            for u in list(iter_bits(adj[anchor])):
                adj[u] |= bit(new)
            if kind == "true_twin":
                adj[new] |= bit(anchor)
                adj[anchor] |= bit(new)
    return Graph(n, tuple(adj))


def random_split_graph(n: int, rng: random.Random) -> Graph:
    """Random connected split graph; sometimes plants a divided vertex."""
    if n < 2:
        raise InputError("order must be >= 2")
    while True:
        c = rng.randint(1, n - 1)
        cset = list(range(c))
        iset = list(range(c, n))
        edges = [(u, v) for u in cset for v in cset if u < v]
        for v in iset:
            hood = [u for u in cset if rng.random() < rng.uniform(0.2, 0.8)]
            if not hood:
                hood = [rng.choice(cset)]
            edges += [(u, v) for u in hood]
        if iset and rng.random() < 0.25:
            v = iset[0]
            edges = [e for e in edges if v not in e] + [(u, v) for u in cset]
        g = Graph.from_edges(n, sorted(set(edges)))
        if g.is_connected() and split_partition(g) is not None:
            return g


def random_bipartite_graph(na: int, nb: int, rng: random.Random) -> Graph:
    """Random connected bipartite graph with the given side sizes."""
    if na < 1 or nb < 1:
        raise InputError("side sizes must be positive")
    while True:
        p = rng.uniform(0.25, 0.8)
        edges = [(u, na + v) for u in range(na) for v in range(nb) if rng.random() < p]
        g = Graph.from_edges(na + nb, edges)
        if g.is_connected():
            return g


def random_cubic_graph(n: int, rng: random.Random) -> Graph:
    """Random connected 3-regular graph by pairing-model rejection."""
    if n < 4 or n % 2:
        raise InputError("cubic graphs need even n >= 4")
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph.from_edges(n, sorted(edges))
        if g.is_connected():
            return g


# ---------------------------------------------------------------------------
# family registry
# ---------------------------------------------------------------------------


def generate(spec: FamilySpec) -> tuple[Graph, dict]:
    """Build the graph for a family spec and attach metadata with predictions."""
    rng = random.Random(spec.seed if spec.seed is not None else 0)
    fam = spec.family
    p = spec.params

    def need(k: int):
        if len(p) != k or len(spec.subspecs) != 0:
            raise InputError(f"family {fam!r} expects {k} integer parameter(s)")

    if fam == "path":
        need(1)
        g = path_graph(p[0])
    elif fam == "cycle":
        need(1)
        g = cycle_graph(p[0])
    elif fam == "complete":
        need(1)
        g = complete_graph(p[0])
    elif fam == "complete_multipartite":
        if not p:
            raise InputError("complete_multipartite needs at least one part")
        g = complete_multipartite(list(p))
    elif fam == "star":
        need(1)
        g = star_graph(p[0])
    elif fam == "caterpillar":
        need(1)
        g = caterpillar_graph(p[0])
    elif fam == "random_tree":
        need(1)
        g = random_tree(p[0], rng)
    elif fam == "random_block":
        need(1)
        g = random_block_graph(p[0], rng)
    elif fam == "random_unicyclic":
        need(1)
        g = random_unicyclic(p[0], rng)
    elif fam == "hypercube":
        need(1)
        g = hypercube(p[0])
    elif fam == "grid":
        need(2)
        g = grid_graph(p[0], p[1])
    elif fam == "half_wheel":
        need(1)
        g = half_wheel(p[0])
    elif fam == "half_wheel_pendant":
        need(2)
        g = half_wheel_pendant(p[0], p[1])
    elif fam == "wheel_pendant_W":
        need(1)
        g = wheel_pendant(p[0])
    elif fam == "R_graph":
        need(2)
        g = r_graph(p[0], p[1])
    elif fam == "P_graph":
        need(2)
        g = p_graph(p[0], p[1])
    elif fam == "G_abl":
        need(3)
        g = g_abl(p[0], p[1], p[2])
    elif fam == "petersen":
        need(0)
        g = petersen_graph()
    elif fam == "heawood":
        need(0)
        g = heawood_graph()
    elif fam == "mcgee":
        need(0)
        g = mcgee_graph()
    elif fam == "random_split":
        need(1)
        g = random_split_graph(p[0], rng)
    elif fam == "random_bipartite":
        need(2)
        g = random_bipartite_graph(p[0], p[1], rng)
    elif fam in ("corona_of", "join_of"):
        if len(spec.subspecs) != 2 or p:
            raise InputError(f"family {fam!r} expects two nested specs")
        g1, _ = generate(spec.subspecs[0])
        g2, _ = generate(spec.subspecs[1])
        g = corona(g1, g2) if fam == "corona_of" else join(g1, g2)
    else:
        raise InputError(f"unknown family {fam!r}")

    meta = {
        "spec": spec.text(),
        "family": fam,
        "params": list(p),
        "seed": spec.seed,
        "order": g.n,
        "size": g.edge_count(),
        "predictions": [pv.to_dict() for pv in predict_for_spec(spec, g)],
    }
    return g, meta


# ---------------------------------------------------------------------------
# predictors
# ---------------------------------------------------------------------------


def _mp_of(g: Graph) -> int:
    idx = build_triple_index(g, PathMode.MONOPHONIC)
    return max_position_set(idx).value


def predict_block_graph(g: Graph) -> list[PredictedValue]:
    """Block graphs: mp and gp both equal the number of simplicial vertices."""
    if not g.is_connected() or not is_block_graph(g):
        raise InputError("not a connected block graph")
    s = simplicial_vertices(g).bit_count()
    why = "connected block graph"
    return [PredictedValue("mp", s, "block-graph-simplicial", why),
            PredictedValue("gp", s, "block-graph-simplicial", why)]


def predict_multipartite(parts: list[int]) -> list[PredictedValue]:
    if not parts or any(q < 1 for q in parts):
        raise InputError("parts must be positive")
    value = max(max(parts), len(parts))
    why = f"complete multipartite with parts {sorted(parts, reverse=True)}"
    return [PredictedValue("mp", value, "multipartite-max", why),
            PredictedValue("gp", value, "multipartite-max", why)]


def _unique_cycle(g: Graph) -> list[int]:
    """Ordered vertex list of the unique cycle of a unicyclic graph."""
    deg = [g.degree(v) for v in range(g.n)]
    queue = [v for v in range(g.n) if deg[v] == 1]
    removed = 0
    while queue:
        v = queue.pop()
        removed |= bit(v)
        deg[v] = 0
        for u in iter_bits(g.adj[v]):
            if not removed & bit(u):
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    core = g.full() & ~removed
    start = (core & -core).bit_length() - 1
    cycle = [start]
    prev = -1
    while True:
        nxt = None
        for u in iter_bits(g.adj[cycle[-1]] & core):
            if u != prev:
                nxt = u
                break
        if nxt == start:
            break
        prev = cycle[-1]
        cycle.append(nxt)
    return cycle


def predict_unicyclic(g: Graph) -> PredictedValue:
    """Case formula for connected graphs with exactly one cycle."""
    if not g.is_connected() or g.edge_count() != g.n:
        raise InputError("not a connected unicyclic graph")
    if g.n == 3:
        return PredictedValue("mp", 3, "unicyclic-cases", "triangle")
    cycle = _unique_cycle(g)
    s = len(cycle)
    lv = leaves(g).bit_count()
    branch = [i for i in range(s) if g.degree(cycle[i]) >= 3]
    r = len(branch)
    if r == 0:
        return PredictedValue("mp", 2, "unicyclic-cases", f"pure cycle of length {s}")
    if r == 1:
        return PredictedValue("mp", lv + 2, "unicyclic-cases", "one branch vertex")
    if r == 2:
        i, j = branch
        adjacent = (j - i == 1) or (i == 0 and j == s - 1)
        if adjacent:
            return PredictedValue("mp", lv + 1, "unicyclic-cases", "two adjacent branch vertices")

        def hangs_one_leaf(pos: int) -> bool:
            # the tree at cycle[pos] is a path starting there, i.e. it
            # carries exactly one leaf of the whole graph
            prev_v = cycle[(pos - 1) % s]
            next_v = cycle[(pos + 1) % s]
            within = g.full() & ~bit(prev_v) & ~bit(next_v)
            comp = g.component_of(cycle[pos], within=within)
            return (comp & leaves(g)).bit_count() == 1

        if hangs_one_leaf(i) or hangs_one_leaf(j):
            return PredictedValue("mp", lv + 1, "unicyclic-cases",
                                  "two branch vertices, one hanging tree is a pendant path")
        return PredictedValue("mp", lv, "unicyclic-cases",
                              "two non-adjacent branch vertices, no pendant-path tree")
    return PredictedValue("mp", lv, "unicyclic-cases", f"{r} branch vertices")


def predict_corona(g: Graph, h: Graph) -> list[PredictedValue]:
    """Corona: mp scales the factor count; gp scales the clique-union number."""
    if not g.is_connected():
        raise InputError("corona prediction needs a connected first factor")
    why = f"corona with base order {g.n}"
    out = [PredictedValue("mp", g.n * _mp_of(h), "corona-product", why)]
    try:
        aw, _ = alpha_omega_number(h)
        out.append(PredictedValue("gp", g.n * aw, "corona-product-gp", why))
    except CapExceeded:
        pass
    return out


def predict_join(g: Graph, h: Graph) -> list[PredictedValue]:
    og, _ = clique_number(g)
    oh, _ = clique_number(h)
    mp_val = max(og + oh, _mp_of(g), _mp_of(h))
    out = [PredictedValue("mp", mp_val, "join-max", "join of the two factors")]
    try:
        ag, _ = alpha_omega_number(g)
        ah, _ = alpha_omega_number(h)
        out.append(PredictedValue("gp", max(og + oh, ag, ah), "join-max-gp",
                                  "join of the two factors"))
    except CapExceeded:
        pass
    return out


def predict_bipartite_complement(g: Graph) -> PredictedValue:
    """mp of the complement of a connected bipartite graph."""
    bp, odd = bipartition(g)
    if bp is None:
        raise InputError(f"graph is not bipartite (odd cycle {odd})")
    alpha, _ = independence_number(g)
    psi, _ = psi_uniform(g, bp)
    return PredictedValue("mp_complement", max(alpha, psi), "bipartite-complement-max",
                          "connected bipartite base graph")


def predict_tree_complement(t: Graph) -> PredictedValue:
    if not t.is_connected() or t.edge_count() != t.n - 1:
        raise InputError("not a tree")
    if t.n < 3:
        raise InputError("tree complement rule needs order >= 3")
    if diameter(t) <= 2:
        return PredictedValue("mp_complement", t.n, "tree-complement", "diameter <= 2")
    alpha, _ = independence_number(t)
    return PredictedValue("mp_complement", alpha, "tree-complement", "diameter >= 3")


def predict_grid_complement(n: int, m: int) -> PredictedValue:
    """mp of the complement of the n*m-vertex grid (vertex-count convention)."""
    if n < 2 or m < 2:
        raise InputError("grid complement rule needs both sides >= 2")
    if n == 2 and m == 2:
        return PredictedValue("mp_complement", 4, "grid-complement", "2x2 grid (disconnected complement)")
    value = -(-n // 2) * -(-m // 2) + (n // 2) * (m // 2)
    return PredictedValue("mp_complement", value, "grid-complement", f"{n}x{m} vertex grid")


def predict_hypercube_complement(k: int) -> PredictedValue:
    if k < 3:
        raise InputError("hypercube complement rule needs k >= 3")
    return PredictedValue("mp_complement", 2 ** (k - 1), "hypercube-complement", f"dimension {k}")


def hall_equality_condition(g: Graph, sp: SplitPartition) -> bool:
    """Saturating-matching test deciding when mp equals max(omega, alpha).

    Without a divided vertex: some matching between the sides saturates one
    of them.  With a divided vertex v: the same, after dropping v from the
    independent side.
    """
    cmask, imask = sp.clique, sp.independent
    if sp.divided is not None:
        imask &= ~bit(sp.divided)
    _, _, msize = deficiency_witness(g, cmask, imask)
    return msize == cmask.bit_count() or msize == imask.bit_count()


def predict_split(g: Graph) -> tuple[PredictedValue, bool]:
    """mp of a connected split graph, plus whether equality with
    max(omega, alpha) is predicted by the saturating-matching condition."""
    if not g.is_connected():
        raise InputError("split prediction needs a connected graph")
    sp = split_partition(g)
    if sp is None:
        raise InputError("not a split graph")
    value, _ = phi_separated(g, sp)
    return (PredictedValue("mp", value, "split-separated", "connected split graph"),
            hall_equality_condition(g, sp))


def predict_realization(spec: FamilySpec) -> list[PredictedValue]:
    """Predicted parameter tuples for the purpose-built families."""
    fam, p = spec.family, spec.params
    if fam == "half_wheel":
        (r,) = p
        if r < 4:
            raise InputError("half_wheel values predicted for r >= 4 only")
        return [PredictedValue("mp", 2, "half-wheel", f"r={r} >= 4"),
                PredictedValue("gp", r, "half-wheel", f"r={r} >= 4")]
    if fam == "half_wheel_pendant":
        b, a = p
        if a < 3 or b < a + 2:
            raise InputError("half_wheel_pendant needs 3 <= a, b >= a+2")
        return [PredictedValue("mp", a, "half-wheel-pendant", f"a={a}, b={b}"),
                PredictedValue("gp", b, "half-wheel-pendant", f"a={a}, b={b}")]
    if fam == "wheel_pendant_W":
        (a,) = p
        if a < 3:
            raise InputError("wheel_pendant_W needs a >= 3")
        return [PredictedValue("mp", a, "wheel-pendant", f"a={a}"),
                PredictedValue("gp", a + 1, "wheel-pendant", f"a={a}")]
    if fam == "R_graph":
        r, s = p
        out = []
        if r >= 1 and s >= 1:
            why = f"r={r} >= 1, s={s} >= 1"
            out.append(PredictedValue("mp", r + s, "leafed-clique", why))
            out.append(PredictedValue("igp", r + 1, "leafed-clique", why))
        if s >= 2:
            why = f"r={r} >= 0, s={s} >= 2"
            out.append(PredictedValue("diss", r + 2, "leafed-clique", why))
            out.append(PredictedValue("gp2", r + s, "leafed-clique", why))
        if not out:
            raise InputError("no predicted values for these R_graph parameters")
        return out
    if fam == "P_graph":
        r, s = p
        out = [PredictedValue("mp", r + 2, "apexed-cocktail", f"r={r} >= 0, s={s} >= 2")]
        if r >= 1:
            out.append(PredictedValue("igp", r + s, "apexed-cocktail", f"r={r} >= 1, s={s} >= 2"))
        elif s >= 3:
            # with no leaves the apex is itself available to the
            # independent side, giving one more than the leafed formula
            out.append(PredictedValue("igp", s + 1, "apexed-cocktail", "r=0, apex joins the set"))
        else:
            # P(0,2) degenerates to a 5-vertex path
            out.append(PredictedValue("igp", 2, "apexed-cocktail", "r=0, s=2 (a path)"))
        return out
    if fam == "G_abl":
        a, b, length = p
        why = f"a={a}, b={b}, path length {length}"
        return [PredictedValue("hm", a, "clique-with-tail", why),
                PredictedValue("mp", b, "clique-with-tail", why)]
    if fam == "petersen":
        return [PredictedValue("mp", 3, "cage-value", "girth-5 cubic cage"),
                PredictedValue("gp", 6, "cage-value", "girth-5 cubic cage")]
    if fam == "heawood":
        return [PredictedValue("mp", 3, "cage-value", "girth-6 cubic cage")]
    if fam == "mcgee":
        return [PredictedValue("mp", 2, "cage-value", "girth-7 cubic cage")]
    raise InputError(f"no realization prediction for family {fam!r}")


_REALIZATION_FAMILIES = {"half_wheel", "half_wheel_pendant", "wheel_pendant_W",
                         "R_graph", "P_graph", "G_abl", "petersen", "heawood", "mcgee"}


def predict_for_spec(spec: FamilySpec, g: Graph) -> list[PredictedValue]:
    """Predictions attached to generated metadata; empty when no rule applies."""
    fam = spec.family
    try:
        if fam in _REALIZATION_FAMILIES:
            return predict_realization(spec)
        if fam in ("path", "star", "caterpillar", "random_tree", "random_block"):
            return predict_block_graph(g)
        if fam == "complete":
            return predict_block_graph(g)
        if fam == "complete_multipartite":
            return predict_multipartite(list(spec.params))
        if fam == "cycle":
            value = 3 if g.n == 3 else 2
            return [PredictedValue("mp", value, "cycle-value", f"cycle of length {g.n}")]
        if fam == "random_unicyclic":
            return [predict_unicyclic(g)]
        if fam == "random_split":
            pv, _ = predict_split(g)
            return [pv]
        if fam == "random_bipartite":
            return [predict_bipartite_complement(g)]
        if fam == "corona_of":
            g1, _ = generate(spec.subspecs[0])
            g2, _ = generate(spec.subspecs[1])
            if g1.n >= 2 and g.n <= 24:
                return predict_corona(g1, g2)
        if fam == "join_of":
            g1, _ = generate(spec.subspecs[0])
            g2, _ = generate(spec.subspecs[1])
            if g.n <= 24:
                return predict_join(g1, g2)
    except (InputError, CapExceeded):
        return []
    return []
