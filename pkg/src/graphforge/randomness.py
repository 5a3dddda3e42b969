"""Random graph processes and exact likelihoods, on a coin-flip budget.

The binomial random graph G(n, 1/2) spends one fair coin per vertex pair,
C(n,2) bits in total.  The vertex-addition process spends far less: vertex t
arrives, an in-degree k is drawn from a distribution on {0..t-1}, and a
uniform k-subset of the earlier vertices becomes its neighbourhood.  With
the binomial in-degree Bi(t-1, p) the process reproduces G(n, p) exactly;
with the uniform in-degree it is a different distribution whose likelihood
of hitting a given graph shape is computed here in exact rational
arithmetic.

Likelihood is taken up to isomorphism: likelihood_exact(G) is the
probability that the uniform vertex-addition process on |V(G)| vertices
produces a graph isomorphic to G, i.e. the sum over all distinct labelled
copies H of G of

    prod_{t=2..n}  (1/t) * C(t-1, indeg_H(t))^(-1)

where indeg_H(t) counts neighbours of t smaller than t.  Lower and upper
bounds come from the automorphism count: the number of labelled copies is
n!/|Aut(G)|, each copy's probability is at most 1/n! and at least
1/(n! * prod_i C(i-1, floor((i-1)/2))).

randomness_cost_a(n) is the running bit cost of driving the uniform process
with a stream of fair coins: at step t, drawing the in-degree costs
floor(log2(t-1)) + 1 bits and drawing the subset costs b(t) bits where
b(t) = floor(log2(C(t-1, ...) - 1)) + 1 with the middle binomial
coefficient, even and odd steps differing in which one.  It grows as
Theta(n^2), the same order as the dyad budget C(n,2).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb

from .graphs import (
    Graph,
    automorphism_count,
    canonical_form,
    complete_bipartite,
    enumerate_graph_classes,
    is_isomorphic,
    _dyad_pos,
)

# ---------------------------------------------------------------------------
# in-degree distributions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Uniform:
    """In-degree of vertex t uniform on {0, ..., t-1}."""


@dataclass(frozen=True)
class Binomial:
    """In-degree of vertex t distributed Bi(t-1, p)."""

    p: Fraction | float


def _draw_in_degree(dist, rng: random.Random, t: int) -> int:
    if isinstance(dist, Uniform):
        return rng.randrange(t)
    if isinstance(dist, Binomial):
        return sum(rng.random() < dist.p for _ in range(t - 1))
    raise ValueError(f"unknown in-degree distribution: {dist!r}")


# ---------------------------------------------------------------------------
# samplers (deterministic under a mandatory seed)
# ---------------------------------------------------------------------------

def sample_gnp(n: int, p, seed: int) -> Graph:
    """One draw of G(n, p): an independent biased coin per vertex pair."""
    rng = random.Random(seed)
    edges = frozenset(
        (i, j) for i in range(1, n) for j in range(i + 1, n + 1) if rng.random() < p
    )
    return Graph(n, edges)


def _sample_va_edges(n: int, dist, rng: random.Random) -> list[tuple[int, int]]:
    edges: list[tuple[int, int]] = []
    for t in range(2, n + 1):
        k = _draw_in_degree(dist, rng, t)
        if k:
            for i in rng.sample(range(1, t), k):
                edges.append((i, t))
    return edges


def sample_vertex_addition(n: int, dist, seed: int) -> Graph:
    """One draw of the vertex-addition process: start from a single vertex,
    then each arriving vertex picks an in-degree from `dist` and a uniform
    subset of earlier vertices of that size."""
    if n < 1:
        raise ValueError("process needs at least one vertex")
    rng = random.Random(seed)
    return Graph(n, frozenset(_sample_va_edges(n, dist, rng)))


# ---------------------------------------------------------------------------
# exact likelihood under the uniform vertex-addition process
# ---------------------------------------------------------------------------

MAX_LIKELIHOOD_N = 7  # labelled-copy enumeration iterates n! permutations


def distinct_labeled_copies(g: Graph) -> list[int]:
    """Edge masks of all distinct labelled graphs isomorphic to g; the count
    equals n!/|Aut(g)|."""
    n = g.n
    if n > MAX_LIKELIHOOD_N:
        raise ValueError(f"labelled-copy enumeration supported for n <= {MAX_LIKELIHOOD_N}")
    pos = _dyad_pos(n)
    base = [(i - 1, j - 1) for i, j in g.sorted_edges()]
    masks: set[int] = set()
    for perm in permutations(range(1, n + 1)):
        m = 0
        for a, b in base:
            pa, pb = perm[a], perm[b]
            m |= 1 << pos[(pa, pb) if pa < pb else (pb, pa)]
        masks.add(m)
    return sorted(masks)


def _down_masks(n: int) -> list[int]:
    """down[t] has the bits of all dyad positions (i, t), i < t."""
    pos = _dyad_pos(n)
    down = [0] * (n + 1)
    for (i, j), k in pos.items():
        down[j] |= 1 << k
    return down


def likelihood_exact(g: Graph) -> Fraction:
    """Probability the uniform vertex-addition process on n = |V(g)| vertices
    produces a graph isomorphic to g."""
    n = g.n
    if n == 0:
        raise ValueError("likelihood needs at least one vertex")
    down = _down_masks(n)
    total = Fraction(0)
    for mask in distinct_labeled_copies(g):
        pr = Fraction(1)
        for t in range(2, n + 1):
            d = (mask & down[t]).bit_count()
            pr /= t * comb(t - 1, d)
        total += pr
    return total


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    stderr: float
    hits: int
    samples: int
    seed: int


def likelihood_mc(g: Graph, samples: int, seed: int) -> McEstimate:
    """Monte Carlo estimate of likelihood_exact(g): run the uniform process
    `samples` times and count draws isomorphic to g."""
    from .graphs import is_isomorphic  # local import keeps module load light

    if samples < 1:
        raise ValueError("need at least one sample")
    n = g.n
    rng = random.Random(seed)
    dist = Uniform()
    target_m = g.edge_count
    target_deg = g.degree_sequence()
    hits = 0
    for _ in range(samples):
        edges = _sample_va_edges(n, dist, rng)
        if len(edges) != target_m:
            continue
        degs = [0] * (n + 1)
        for i, j in edges:
            degs[i] += 1
            degs[j] += 1
        if tuple(sorted(degs[1:], reverse=True)) != target_deg:
            continue
        if is_isomorphic(Graph(n, frozenset(edges)), g):
            hits += 1
    p_hat = hits / samples
    stderr = (p_hat * (1.0 - p_hat) / samples) ** 0.5
    return McEstimate(p_hat, stderr, hits, samples, seed)


def likelihood_bounds(g: Graph) -> tuple[Fraction, Fraction]:
    """(lower, upper) bounds from the automorphism count alone."""
    n = g.n
    if n == 0:
        raise ValueError("likelihood needs at least one vertex")
    aut = automorphism_count(g)
    denom = aut
    for i in range(1, n + 1):
        denom *= comb(i - 1, (i - 1) // 2)
    return Fraction(1, denom), Fraction(1, aut)


# ---------------------------------------------------------------------------
# per-class tables and extremes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassLikelihood:
    graph: Graph
    certificate: str
    edge_count: int
    aut: int
    likelihood: Fraction
    lower: Fraction
    upper: Fraction


@dataclass(frozen=True)
class LikelihoodTable:
    n: int
    rows: tuple[ClassLikelihood, ...]  # ascending by (likelihood, certificate)

    @property
    def argmin(self) -> ClassLikelihood:
        return min(self.rows, key=lambda r: (r.likelihood, r.certificate))

    @property
    def argmax(self) -> ClassLikelihood:
        best = max(row.likelihood for row in self.rows)
        return min((row for row in self.rows if row.likelihood == best), key=lambda r: r.certificate)

    @property
    def argmin_classes(self) -> tuple[ClassLikelihood, ...]:
        """Every class attaining the minimum (the distribution is invariant
        under graph complement, so exact ties are common)."""
        least = min(row.likelihood for row in self.rows)
        return tuple(row for row in self.rows if row.likelihood == least)

    def argmin_is_balanced_bipartite(self) -> bool:
        """Whether the minimum is attained by the complete bipartite graph
        with part sizes floor(n/2) and ceil(n/2)."""
        balanced = complete_bipartite(self.n // 2, self.n - self.n // 2)
        return any(is_isomorphic(row.graph, balanced) for row in self.argmin_classes)

    def total(self) -> Fraction:
        return sum((row.likelihood for row in self.rows), Fraction(0))

    def to_csv(self) -> str:
        lines = ["certificate,n,edges,aut,likelihood,likelihood_float,lower,upper"]
        for row in self.rows:
            lines.append(
                f"{row.certificate},{self.n},{row.edge_count},{row.aut},"
                f"{row.likelihood},{float(row.likelihood)!r},{row.lower},{row.upper}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "classes": [
                {
                    "certificate": row.certificate,
                    "edges": row.edge_count,
                    "aut": row.aut,
                    "likelihood": str(row.likelihood),
                    "likelihood_float": float(row.likelihood),
                    "lower": str(row.lower),
                    "upper": str(row.upper),
                }
                for row in self.rows
            ],
            "argmin": self.argmin.certificate,
            "argmin_ties": [row.certificate for row in self.argmin_classes],
            "argmax": self.argmax.certificate,
            "argmin_balanced_bipartite": self.argmin_is_balanced_bipartite(),
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def likelihood_extremes(n: int) -> LikelihoodTable:
    """Exact likelihood of every isomorphism class on n vertices (n <= 6),
    one row per class, sorted by canonical certificate."""
    if not (1 <= n <= 6):
        raise ValueError("extremes computed for 1 <= n <= 6")
    rows = []
    for g in enumerate_graph_classes(n):
        lo, up = likelihood_bounds(g)
        rows.append(
            ClassLikelihood(
                graph=g,
                certificate=canonical_form(g).decode(),
                edge_count=g.edge_count,
                aut=automorphism_count(g),
                likelihood=likelihood_exact(g),
                lower=lo,
                upper=up,
            )
        )
    rows.sort(key=lambda r: r.certificate)
    return LikelihoodTable(n, tuple(rows))


# ---------------------------------------------------------------------------
# bit costs
# ---------------------------------------------------------------------------

def dyad_bits(n: int) -> int:
    """Fair coins spent by G(n, 1/2): one per vertex pair."""
    return comb(n, 2)


def subset_bits_even(n: int) -> int:
    """b_e(n) = floor(log2(C(n-1, n/2) - 1)) + 1 for even n >= 4."""
    if n < 3 or n % 2:
        raise ValueError(f"even-step subset cost needs even n >= 4, got {n}")
    return (comb(n - 1, n // 2) - 1).bit_length()


def subset_bits_odd(n: int) -> int:
    """b_o(n) = floor(log2(C(n-1, (n-1)/2) - 1)) + 1 for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"odd-step subset cost needs odd n >= 3, got {n}")
    return (comb(n - 1, (n - 1) // 2) - 1).bit_length()


def randomness_cost_a(n: int) -> int:
    """Coin budget a(n) of the uniform vertex-addition process, by the
    recurrence a(1)=0, a(2)=1,
    a(n) = a(n-1) + b(n) + floor(log2(n-1)) + 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    a = 0
    if n >= 2:
        a = 1
    for i in range(3, n + 1):
        b = subset_bits_even(i) if i % 2 == 0 else subset_bits_odd(i)
        a += b + (i - 1).bit_length()
    return a


def randomness_cost_a_closed(n: int) -> int:
    """Closed-form summation for a(n), n >= 4; agrees with the recurrence.
    (Both subset-cost sums run up to n inclusive: stopping them at n-1 loses
    the final step's subset draw and already misses a(4).)"""
    if n < 4:
        raise ValueError("closed form stated for n >= 4")
    s_even = sum((comb(i - 1, i // 2) - 1).bit_length() - 1 for i in range(4, n + 1, 2))
    s_odd = sum((comb(i - 1, (i - 1) // 2) - 1).bit_length() - 1 for i in range(3, n + 1, 2))
    s_log = sum((i - 1).bit_length() - 1 for i in range(2, n + 1))
    return s_even + s_odd + s_log + 2 * n - 3


__all__ = [
    "Uniform",
    "Binomial",
    "sample_gnp",
    "sample_vertex_addition",
    "distinct_labeled_copies",
    "likelihood_exact",
    "likelihood_mc",
    "likelihood_bounds",
    "ClassLikelihood",
    "LikelihoodTable",
    "likelihood_extremes",
    "McEstimate",
    "dyad_bits",
    "subset_bits_even",
    "subset_bits_odd",
    "randomness_cost_a",
    "randomness_cost_a_closed",
    "MAX_LIKELIHOOD_N",
]
