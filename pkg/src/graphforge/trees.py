"""Random and instruction-driven tree growth.

The uniform attachment process grows a tree one vertex at a time: vertex t
picks its single neighbour uniformly among 1..t-1.  Every tree it can emit
is a recursive tree (labels increase along every path from the root, vertex
1), and every recursive tree occurs with probability 1/(n-1)!, so the
likelihood of a tree shape is the number of its recursive labellings over
(n-1)!.

The same parent-per-vertex data doubles as a deterministic instruction
stream: the parent of vertex t fits in b(t-1) = floor(log2(t-1)) + 1 bits,
so a tree on n vertices costs sum_{t=1}^{n-1} b(t) instruction bits (and the
same amount of memory to hold the indices), which is O(n log n).

Pruefer coding is included as the classical bijection between labelled trees
and sequences; jointly with the enumeration helpers it drives the exhaustive
tests.  Convention: repeatedly remove the smallest-labelled leaf and record
its neighbour.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .graphs import (
    Graph,
    canonical_form,
    is_isomorphic,
    is_tree,
    _mask_to_graph,
)
from .machines import ResourceCost
from .randomness import MAX_LIKELIHOOD_N, distinct_labeled_copies

MAX_TREE_CLASS_N = 7  # class enumeration walks all n^(n-2) Pruefer sequences


@dataclass(frozen=True)
class ParentVector:
    """parents[k] is the parent of vertex k+2; vertex 1 is the root."""

    n: int
    parents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if len(self.parents) != self.n - 1:
            raise ValueError(f"need parents for vertices 2..{self.n}")
        for t, p in enumerate(self.parents, start=2):
            if not (1 <= p < t):
                raise ValueError(f"parent of vertex {t} must lie in 1..{t - 1}, got {p}")

    def parent(self, t: int) -> int:
        if not (2 <= t <= self.n):
            raise ValueError(f"vertex {t} has no parent entry")
        return self.parents[t - 2]

    def to_json_array(self) -> list[int | None]:
        """1-indexed array form: entries 0 and 1 are unused (null)."""
        return [None, None, *self.parents]


def build_tree_from_instructions(pv: ParentVector) -> Graph:
    """Realize the parent vector: vertex t attaches to parent(t)."""
    return Graph(pv.n, frozenset((pv.parents[t - 2], t) for t in range(2, pv.n + 1)))


def sample_ua_parents(n: int, seed: int) -> ParentVector:
    """Uniform attachment: the parent of vertex t is uniform on 1..t-1."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    return ParentVector(n, tuple(rng.randrange(1, t) for t in range(2, n + 1)))


def sample_ua(n: int, seed: int) -> Graph:
    """One uniform-attachment tree on n vertices."""
    return build_tree_from_instructions(sample_ua_parents(n, seed))


def is_recursive_tree(g: Graph) -> bool:
    """True when g is a tree and, walking from vertex 1, every vertex's
    neighbour toward the root has a smaller label (equivalently the labels
    along every root path increase).  This re-derives the parent relation by
    search instead of trusting any construction record."""
    if not is_tree(g):
        return False
    parent = {1: 0}
    queue = [1]
    while queue:
        v = queue.pop()
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return all(parent[v] < v for v in range(2, g.n + 1))


def root_path(g: Graph, v: int) -> tuple[int, ...]:
    """The unique path from vertex 1 to v in a tree, endpoints included."""
    if not is_tree(g):
        raise ValueError("root paths are defined for trees only")
    parent: dict[int, int] = {1: 0}
    queue = [1]
    while queue:
        w = queue.pop()
        for u in g.neighbors(w):
            if u not in parent:
                parent[u] = w
                queue.append(u)
    path = [v]
    while path[-1] != 1:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def leaves(g: Graph) -> tuple[int, ...]:
    """Degree-1 vertices in increasing order."""
    return tuple(v for v in range(1, g.n + 1) if g.degree(v) == 1)


# ---------------------------------------------------------------------------
# Pruefer coding
# ---------------------------------------------------------------------------

def prufer_encode(g: Graph) -> tuple[int, ...]:
    """Length n-2 code: remove the smallest leaf, record its neighbour."""
    if g.n < 2:
        raise ValueError("encoding needs at least two vertices")
    if not is_tree(g):
        raise ValueError("only trees have a code")
    adj = {v: g.neighbors(v) for v in range(1, g.n + 1)}
    heap = [v for v in adj if len(adj[v]) == 1]
    heapq.heapify(heap)
    code = []
    for _ in range(g.n - 2):
        leaf = heapq.heappop(heap)
        nb = next(iter(adj[leaf]))
        code.append(nb)
        adj[nb].discard(leaf)
        del adj[leaf]
        if len(adj[nb]) == 1:
            heapq.heappush(heap, nb)
    return tuple(code)


def prufer_decode(code) -> Graph:
    """Inverse of prufer_encode; a code of length k yields a tree on k+2
    vertices."""
    code = tuple(code)
    n = len(code) + 2
    for entry in code:
        if not (1 <= entry <= n):
            raise ValueError(f"code entry {entry} outside 1..{n}")
    remaining = [0] * (n + 1)
    for entry in code:
        remaining[entry] += 1
    heap = [v for v in range(1, n + 1) if remaining[v] == 0]
    heapq.heapify(heap)
    edges = []
    for entry in code:
        leaf = heapq.heappop(heap)
        edges.append((leaf, entry) if leaf < entry else (entry, leaf))
        remaining[entry] -= 1
        if remaining[entry] == 0:
            heapq.heappush(heap, entry)
    a = heapq.heappop(heap)
    b = heapq.heappop(heap)
    edges.append((a, b) if a < b else (b, a))
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# likelihood under uniform attachment
# ---------------------------------------------------------------------------

def ua_likelihood_exact(t_graph: Graph) -> Fraction:
    """Probability that uniform attachment on n vertices produces a tree
    isomorphic to t_graph: each recursive labelling occurs with probability
    1/(n-1)!, so count the recursive labelled copies."""
    if not is_tree(t_graph):
        raise ValueError("likelihood under uniform attachment needs a tree")
    n = t_graph.n
    if n > MAX_LIKELIHOOD_N:
        raise ValueError(f"exact tree likelihood supported for n <= {MAX_LIKELIHOOD_N}")
    if n == 1:
        return Fraction(1)
    recursive = sum(
        1 for mask in distinct_labeled_copies(t_graph) if is_recursive_tree(_mask_to_graph(n, mask))
    )
    return Fraction(recursive, factorial(n - 1))


def tree_positivity_check(t_graph: Graph, samples: int, seed: int) -> tuple[int, float]:
    """Count uniform-attachment samples isomorphic to t_graph; any tree shape
    has positive likelihood, so enough samples should always score hits."""
    if samples < 1:
        raise ValueError("need at least one sample")
    if not is_tree(t_graph):
        raise ValueError("positivity check needs a tree")
    n = t_graph.n
    rng = random.Random(seed)
    target_deg = t_graph.degree_sequence()
    hits = 0
    for _ in range(samples):
        parents = [rng.randrange(1, t) for t in range(2, n + 1)]
        degs = [0] * (n + 1)
        for t, p in enumerate(parents, start=2):
            degs[t] += 1
            degs[p] += 1
        if tuple(sorted(degs[1:], reverse=True)) != target_deg:
            continue
        g = Graph(n, frozenset((p, t) for t, p in enumerate(parents, start=2)))
        if is_isomorphic(g, t_graph):
            hits += 1
    return hits, hits / samples


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_labeled_trees(n: int) -> list[Graph]:
    """All labelled trees on n vertices (n^(n-2) of them) via Pruefer codes."""
    if not (1 <= n <= MAX_TREE_CLASS_N):
        raise ValueError(f"labelled-tree enumeration supported for 1 <= n <= {MAX_TREE_CLASS_N}")
    if n == 1:
        return [Graph(1, frozenset())]
    if n == 2:
        return [Graph(2, frozenset({(1, 2)}))]
    out = []
    code = [1] * (n - 2)
    while True:
        out.append(prufer_decode(code))
        k = n - 3
        while k >= 0 and code[k] == n:
            code[k] = 1
            k -= 1
        if k < 0:
            return out
        code[k] += 1


def enumerate_tree_classes(n: int) -> list[Graph]:
    """One representative per tree isomorphism class on n vertices, sorted by
    canonical certificate.  Deduplicates the Pruefer enumeration by degree
    sequence and pairwise isomorphism."""
    buckets: dict[tuple[int, ...], list[Graph]] = {}
    for g in enumerate_labeled_trees(n):
        key = g.degree_sequence()
        reps = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    classes = [g for reps in buckets.values() for g in reps]
    return sorted(classes, key=canonical_form)


# ---------------------------------------------------------------------------
# instruction-bit accounting
# ---------------------------------------------------------------------------

def index_bits(k: int) -> int:
    """b(k) = floor(log2 k) + 1, the fixed width holding a value in 1..k."""
    if k < 1:
        raise ValueError("width defined for k >= 1")
    return k.bit_length()


def tree_cost(n: int) -> ResourceCost:
    """Deterministic-construction cost of an n-vertex tree: the parent of
    vertex t is shipped and stored in b(t-1) bits, and no randomness is
    spent."""
    if n < 1:
        raise ValueError("need at least one vertex")
    total = sum(index_bits(t) for t in range(1, n))
    return ResourceCost(instruction_bits=total, memory_bits=total, random_bits=0)


def encode_parent_bits(pv: ParentVector) -> str:
    """Concatenate (parent(t) - 1) as a big-endian b(t-1)-bit field for
    t = 2..n; total length is tree_cost(n).instruction_bits."""
    chunks = []
    for t in range(2, pv.n + 1):
        width = index_bits(t - 1)
        chunks.append(format(pv.parent(t) - 1, f"0{width}b"))
    return "".join(chunks)


def decode_parent_bits(bits: str, n: int) -> ParentVector:
    """Inverse of encode_parent_bits for a known vertex count."""
    if any(ch not in "01" for ch in bits):
        raise ValueError("bit stream must be over 0/1")
    parents = []
    at = 0
    for t in range(2, n + 1):
        width = index_bits(t - 1)
        field = bits[at : at + width]
        if len(field) < width:
            raise ValueError(f"bit stream too short for vertex {t}")
        value = int(field, 2) + 1
        if value >= t:
            raise ValueError(f"parent field {field!r} decodes outside 1..{t - 1}")
        parents.append(value)
        at += width
    if at != len(bits):
        raise ValueError(f"{len(bits) - at} trailing bits after vertex {n}")
    return ParentVector(n, tuple(parents))
