"""Core graph value type and exact small-graph algorithms.

Graphs are simple, undirected, and immutable.  Vertices are the integers
1..n in construction order; an edge is a pair (i, j) with i < j.  Everything
here is sized for exhaustive desk-scale verification (n up to about 12), not
for large instances: isomorphism and automorphism counting are backtracking
searches, and the canonical form is an exact partition-refinement search.

Two facts are computed by deliberately independent routes so they can be
cross-checked: graph isomorphism (backtracking on adjacency) versus canonical
form equality (refinement search), and threshold recognition by vertex
elimination versus the induced-subgraph characterisation (no induced P4, C4,
or 2K2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

# Exact algorithms below enumerate permutations or subsets; these bounds keep
# every operation tractable in pure Python.
MAX_EXACT_N = 12
MAX_AUTOMORPHISM_N = 10


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 1..n with edges (i, j), i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i}, {j}) invalid for n={self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Graph":
        """Build a graph from unordered vertex pairs, normalising each pair."""
        edges = set()
        for a, b in pairs:
            if a == b:
                raise ValueError(f"loop ({a}, {b}) not allowed")
            edges.add((a, b) if a < b else (b, a))
        return cls(n, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted descending."""
        degs = [0] * (self.n + 1)
        for i, j in self.edges:
            degs[i] += 1
            degs[j] += 1
        return tuple(sorted(degs[1:], reverse=True))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(1, n) for j in range(i + 1, n + 1)))


def path_graph(n: int) -> Graph:
    """Path on vertices 1..n in order; P1 is a single vertex."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, frozenset((t, t + 1) for t in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    edges = {(t, t + 1) for t in range(1, n)}
    edges.add((1, n))
    return Graph(n, frozenset(edges))


def complete_bipartite(l: int, m: int) -> Graph:
    """K_{l,m} with parts 1..l and l+1..l+m."""
    return Graph(l + m, frozenset((i, l + j) for i in range(1, l + 1) for j in range(1, m + 1)))


def complete_split(l: int, m: int) -> Graph:
    """Join of a clique on 1..l with an independent set on l+1..l+m."""
    return join(complete_graph(l), empty_graph(m))


def linear_forest(lengths) -> Graph:
    """Disjoint union of paths with the given component sizes, in order."""
    g = empty_graph(0)
    for r in lengths:
        g = disjoint_union(g, path_graph(r))
    return g


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

def add_vertex(g: Graph, attach) -> Graph:
    """Add vertex n+1 adjacent to exactly the vertices in `attach`."""
    attach = set(attach)
    for v in attach:
        if not (1 <= v <= g.n):
            raise ValueError(f"attachment vertex {v} outside 1..{g.n}")
    new = g.n + 1
    return Graph(new, g.edges | frozenset((v, new) for v in attach))


def remove_last_vertex(g: Graph) -> Graph:
    """Delete vertex n; inverse of add_vertex for the final vertex."""
    if g.n == 0:
        raise ValueError("cannot remove a vertex from the empty graph")
    return Graph(g.n - 1, frozenset(e for e in g.edges if g.n not in e))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = set(g.edges)
    edges.update((i + shift, j + shift) for i, j in h.edges)
    return Graph(g.n + h.n, frozenset(edges))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    shift = g.n
    base = disjoint_union(g, h)
    cross = {(i, shift + j) for i in range(1, g.n + 1) for j in range(1, h.n + 1)}
    return Graph(base.n, base.edges | cross)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph on `vertices`, relabelled 1..k preserving order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    index = {v: p + 1 for p, v in enumerate(vs)}
    edges = {(index[i], index[j]) for i, j in g.edges if i in index and j in index}
    return Graph(len(vs), frozenset(edges))


def relabel(g: Graph, perm: dict[int, int]) -> Graph:
    """Apply a vertex permutation {old: new}; must be a bijection on 1..n."""
    if sorted(perm) != list(range(1, g.n + 1)) or sorted(perm.values()) != list(range(1, g.n + 1)):
        raise ValueError("perm must be a bijection on 1..n")
    return Graph.from_pairs(g.n, ((perm[i], perm[j]) for i, j in g.edges))


# ---------------------------------------------------------------------------
# bitmask internals
# ---------------------------------------------------------------------------
# A graph on n vertices is packed into an integer over the C(n,2) dyad
# positions (i, j), i < j, enumerated row-major.  Rows are per-vertex
# neighbour masks with bit v standing for vertex v.

@lru_cache(maxsize=None)
def _dyads(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def _dyad_pos(n: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(_dyads(n))}


def _edge_mask(g: Graph) -> int:
    pos = _dyad_pos(g.n)
    mask = 0
    for e in g.edges:
        mask |= 1 << pos[e]
    return mask


def _mask_to_graph(n: int, mask: int) -> Graph:
    dyads = _dyads(n)
    return Graph(n, frozenset(dyads[k] for k in range(len(dyads)) if (mask >> k) & 1))


def _rows(g: Graph) -> list[int]:
    rows = [0] * (g.n + 1)
    for i, j in g.edges:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return rows


# ---------------------------------------------------------------------------
# isomorphism and automorphisms (backtracking route)
# ---------------------------------------------------------------------------

def _neighbor_degree_profile(g: Graph) -> dict[int, tuple[int, ...]]:
    degs = {v: g.degree(v) for v in range(1, g.n + 1)}
    return {v: tuple(sorted(degs[u] for u in g.neighbors(v))) for v in range(1, g.n + 1)}


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking vertex assignment."""
    if g.n != h.n:
        return False
    if g.n > MAX_EXACT_N:
        raise ValueError(f"isomorphism supported for n <= {MAX_EXACT_N}, got {g.n}")
    if len(g.edges) != len(h.edges):
        return False
    if g.edges == h.edges:
        return True
    if g.degree_sequence() != h.degree_sequence():
        return False
    pg = _neighbor_degree_profile(g)
    ph = _neighbor_degree_profile(h)
    sig_g = {v: (g.degree(v), pg[v]) for v in pg}
    sig_h = {v: (h.degree(v), ph[v]) for v in ph}
    if sorted(sig_g.values()) != sorted(sig_h.values()):
        return False
    return _find_mapping(g, h, sig_g, sig_h, count_all=False) > 0


def automorphism_count(g: Graph) -> int:
    """Number of adjacency-preserving permutations of 1..n."""
    if g.n > MAX_AUTOMORPHISM_N:
        raise ValueError(f"automorphism counting supported for n <= {MAX_AUTOMORPHISM_N}")
    if g.n == 0:
        return 1
    prof = _neighbor_degree_profile(g)
    sig = {v: (g.degree(v), prof[v]) for v in prof}
    return _find_mapping(g, g, sig, sig, count_all=True)


def _find_mapping(g: Graph, h: Graph, sig_g, sig_h, count_all: bool) -> int:
    n = g.n
    rows_g = _rows(g)
    rows_h = _rows(h)
    # Assign scarce signatures first to prune early.
    order = sorted(range(1, n + 1), key=lambda v: (sorted(sig_g.values()).count(sig_g[v]), -g.degree(v)))
    candidates = {v: [u for u in range(1, n + 1) if sig_h[u] == sig_g[v]] for v in order}
    image = {}
    used = set()
    found = 0

    def extend(k: int) -> bool:
        nonlocal found
        if k == n:
            found += 1
            return not count_all
        v = order[k]
        rv = rows_g[v]
        for u in candidates[v]:
            if u in used:
                continue
            ok = True
            for w, fw in image.items():
                if bool((rv >> w) & 1) != bool((rows_h[u] >> fw) & 1):
                    ok = False
                    break
            if ok:
                image[v] = u
                used.add(u)
                if extend(k + 1):
                    return True
                used.discard(u)
                del image[v]
        return False

    extend(0)
    return found


# ---------------------------------------------------------------------------
# canonical form (refinement route)
# ---------------------------------------------------------------------------
# Certificate: b"<n>:<bits>" where <bits> is the lexicographically least
# upper-triangle adjacency string over the vertex orderings visited by an
# individualisation-refinement search.  The visited set is closed under
# isomorphism, so the certificate is equal exactly for isomorphic graphs.

_CANON_CACHE: dict[tuple[int, int], bytes] = {}


def canonical_form(g: Graph) -> bytes:
    if g.n > MAX_EXACT_N:
        raise ValueError(f"canonical form supported for n <= {MAX_EXACT_N}, got {g.n}")
    n = g.n
    if n <= 1:
        return f"{n}:".encode()
    mask = _edge_mask(g)
    key = (n, mask)
    cached = _CANON_CACHE.get(key)
    if cached is not None:
        return cached
    total = comb(n, 2)
    m = len(g.edges)
    if m == 0:
        bits = "0" * total
    elif m == total:
        bits = "1" * total
    else:
        bits = _canon_search(n, _rows(g))
    cert = f"{n}:{bits}".encode()
    _CANON_CACHE[key] = cert
    return cert


def _refine(rows: list[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Equitable refinement; splits are ordered by neighbour count, so the
    resulting ordered partition is invariant under vertex relabelling."""
    while True:
        for splitter in list(cells):
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new_cells: list[tuple[int, ...]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    buckets.setdefault((rows[v] & smask).bit_count(), []).append(v)
                if len(buckets) == 1:
                    new_cells.append(cell)
                else:
                    split = True
                    for k in sorted(buckets):
                        new_cells.append(tuple(buckets[k]))
            if split:
                cells = new_cells
                break
        else:
            return cells


def _pairwise_twins(rows: list[int], cell: tuple[int, ...]) -> bool:
    """True when every pair in the cell has identical neighbourhoods outside
    the pair; then all orderings of the cell are automorphic."""
    for a, b in combinations(cell, 2):
        outside = ~((1 << a) | (1 << b))
        if rows[a] & outside != rows[b] & outside:
            return False
    return True


def _canon_search(n: int, rows: list[int]) -> str:
    best: list[str | None] = [None]

    def leaf(order: list[int]) -> None:
        chunks = []
        for p in range(n):
            rp = rows[order[p]]
            chunks.append("".join("1" if (rp >> order[q]) & 1 else "0" for q in range(p + 1, n)))
        s = "".join(chunks)
        if best[0] is None or s < best[0]:
            best[0] = s

    def search(cells: list[tuple[int, ...]]) -> None:
        cells = _refine(rows, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            leaf([c[0] for c in cells])
            return
        cell = cells[idx]
        branch = (cell[0],) if _pairwise_twins(rows, cell) else cell
        for v in branch:
            rest = tuple(u for u in cell if u != v)
            search(cells[:idx] + [(v,), rest] + cells[idx + 1 :])

    search([tuple(range(1, n + 1))])
    assert best[0] is not None
    return best[0]


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (empty_graph(0),)
    reps: dict[bytes, Graph] = {canonical_form(empty_graph(1)): empty_graph(1)}
    for size in range(2, n + 1):
        grown: dict[bytes, Graph] = {}
        for g in reps.values():
            for attach_mask in range(1 << (size - 1)):
                h = add_vertex(g, [v for v in range(1, size) if (attach_mask >> (v - 1)) & 1])
                key = canonical_form(h)
                if key not in grown:
                    grown[key] = h
        reps = grown
    return tuple(reps[k] for k in sorted(reps))


def enumerate_graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class on exactly n vertices,
    generated by extending smaller representatives one vertex at a time.
    Deterministic order (sorted by canonical certificate)."""
    if n > 7:
        raise ValueError("class enumeration supported for n <= 7")
    return list(_graph_classes(n))


# ---------------------------------------------------------------------------
# induced-subgraph containment
# ---------------------------------------------------------------------------

_SMALL_MASK_CACHE: dict[bytes, frozenset[int]] = {}


def _small_iso_masks(h: Graph) -> frozenset[int]:
    """All edge masks on |V(h)| labelled vertices isomorphic to h (|V| <= 4)."""
    key = canonical_form(h)
    hit = _SMALL_MASK_CACHE.get(key)
    if hit is not None:
        return hit
    k = h.n
    masks = frozenset(
        m for m in range(1 << comb(k, 2)) if is_isomorphic(_mask_to_graph(k, m), h)
    )
    _SMALL_MASK_CACHE[key] = masks
    return masks


def contains_induced(g: Graph, h: Graph) -> bool:
    """True when some vertex subset of g induces a copy of h."""
    k = h.n
    if k > g.n:
        return False
    if k == 0:
        return True
    rows = _rows(g)
    if k <= 4:
        table = _small_iso_masks(h)
        dyad_pos = _dyad_pos(k)
        for subset in combinations(range(1, g.n + 1), k):
            m = 0
            for a in range(k):
                ra = rows[subset[a]]
                for b in range(a + 1, k):
                    if (ra >> subset[b]) & 1:
                        m |= 1 << dyad_pos[(a + 1, b + 1)]
            if m in table:
                return True
        return False
    target_deg = h.degree_sequence()
    target_m = len(h.edges)
    for subset in combinations(range(1, g.n + 1), k):
        sub = induced_subgraph(g, subset)
        if len(sub.edges) != target_m or sub.degree_sequence() != target_deg:
            continue
        if is_isomorphic(sub, h):
            return True
    return False


# ---------------------------------------------------------------------------
# threshold recognition (two independent routes)
# ---------------------------------------------------------------------------

def is_threshold(g: Graph) -> bool:
    """Elimination route: repeatedly delete an isolated or dominating vertex;
    the graph is threshold exactly when this empties it."""
    alive = set(range(1, g.n + 1))
    adj = {v: g.neighbors(v) for v in alive}
    while alive:
        pick = None
        full = len(alive) - 1
        for v in alive:
            d = len(adj[v])
            if d == 0 or d == full:
                pick = v
                break
        if pick is None:
            return False
        for u in adj[pick]:
            adj[u].discard(pick)
        del adj[pick]
        alive.discard(pick)
    return True


def is_threshold_by_forbidden(g: Graph) -> bool:
    """Characterisation route: no induced P4, C4, or 2K2."""
    bad = (
        _small_iso_masks(path_graph(4))
        | _small_iso_masks(cycle_graph(4))
        | _small_iso_masks(disjoint_union(path_graph(2), path_graph(2)))
    )
    rows = _rows(g)
    dyad_pos = _dyad_pos(4)
    for subset in combinations(range(1, g.n + 1), 4):
        m = 0
        for a in range(4):
            ra = rows[subset[a]]
            for b in range(a + 1, 4):
                if (ra >> subset[b]) & 1:
                    m |= 1 << dyad_pos[(a + 1, b + 1)]
        if m in bad:
            return False
    return True


# ---------------------------------------------------------------------------
# connectivity helpers
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    rows = _rows(g)
    seen: set[int] = set()
    out = []
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            mask = rows[v]
            u = 1
            while mask >> u:
                if (mask >> u) & 1 and u not in comp:
                    stack.append(u)
                u += 1
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def is_tree(g: Graph) -> bool:
    """Connected and acyclic (single-vertex graphs count; E_0 does not)."""
    return g.n >= 1 and g.edge_count == g.n - 1 and len(connected_components(g)) == 1


def is_linear_forest(g: Graph) -> bool:
    """Every component is a path (isolated vertices are paths of size 1)."""
    if any(g.degree(v) > 2 for v in range(1, g.n + 1)):
        return False
    return g.edge_count == g.n - len(connected_components(g))


# ---------------------------------------------------------------------------
# serialization (all byte-deterministic)
# ---------------------------------------------------------------------------

def to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g), sort_keys=True, separators=(",", ":"))


def from_json_obj(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        pairs = [(int(a), int(b)) for a, b in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph object: {exc}") from exc
    return Graph.from_pairs(n, pairs)


def from_json(text: str) -> Graph:
    return from_json_obj(json.loads(text))


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(1, g.n + 1))
    lines.extend(f"  {i} -- {j};" for i, j in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_bitstring(g: Graph) -> str:
    """Upper-triangle adjacency bits, row-major; empty string for n <= 1."""
    rows = _rows(g)
    return "".join(
        "1" if (rows[i] >> j) & 1 else "0" for i, j in _dyads(g.n)
    )
