"""Instruction-indexed graph families and run statistics.

An instruction string x over {0,1} is 1-indexed: x_t is the label of vertex
t.  For each canonical rule table this module gives the closed-form edge
predicate of the graph the machine builds, stated directly on index pairs
(i, j), i < j, so machine runs can be checked against an independent
construction:

  full memory                       fading memory (window 2)
  0>-,1>-  never                    never
  0>1,1>-  x_i=1 and x_j=0          consecutive and x_i=1, x_j=0
  0>0,1>-  x_i=0 and x_j=0          consecutive and x_i=0, x_j=0
  0>E,1>-  x_j=0                    x_j=0
  0>1,1>0  x_i != x_j               consecutive and x_i != x_j
  0>0,1>0  x_i=0                    consecutive and x_i=0
  0>E,1>0  x_i=0 or x_j=0           x_j=0, or consecutive and x_i=0
  0>0,1>1  x_i = x_j                consecutive and x_i = x_j
  0>E,1>1  x_i=x_j, or x_i=1,x_j=0  x_j=0, or consecutive and x_i=x_j=1
  0>E,1>E  always                   always

("consecutive" means i = j - 1.)  The named families E_(x), K_(x), K~_(x)
are the three full-memory tables whose edge set depends on the arrival
order, not just on how many vertices carry each bit; K'_(x) and E'_(x) are
their fading-memory counterparts.

The fading tables with no DominateAll action only ever link consecutive
vertices, so their outputs are linear forests; the run statistics R, S, Q,
A below give the path sizes, with leftover positions staying isolated.
"""

from __future__ import annotations

from .graphs import Graph
from .machines import LabeledGraph, RuleSet

RunStatistics = tuple[int, ...]


def check_bits(x: str) -> tuple[int, ...]:
    if any(ch not in "01" for ch in x):
        raise ValueError(f"instruction string must be over 0/1, got {x!r}")
    return tuple(int(ch) for ch in x)


# ---------------------------------------------------------------------------
# run statistics
# ---------------------------------------------------------------------------

def runs_of_zeros(x: str) -> RunStatistics:
    """Lengths of maximal blocks of 0s, left to right."""
    check_bits(x)
    return tuple(len(block) for block in x.split("1") if block)


def runs_of_ones(x: str) -> RunStatistics:
    """Lengths of maximal blocks of 1s, left to right."""
    check_bits(x)
    return tuple(len(block) for block in x.split("0") if block)


def alternating_runs(x: str) -> RunStatistics:
    """Lengths (at least 2) of maximal substrings whose consecutive bits all
    differ.  Single positions flanked by equal bits are not counted."""
    check_bits(x)
    out = []
    run = 1
    for t in range(1, len(x)):
        if x[t] != x[t - 1]:
            run += 1
        else:
            if run >= 2:
                out.append(run)
            run = 1
    if run >= 2:
        out.append(run)
    return tuple(out)


def zero_anchored_blocks(x: str) -> RunStatistics:
    """Component sizes (at least 2) when position t is linked to t+1 exactly
    for x_t = 0: each 0 pulls its successor into the same block."""
    check_bits(x)
    out = []
    size = 1
    for t in range(1, len(x)):
        if x[t - 1] == "0":
            size += 1
        else:
            if size >= 2:
                out.append(size)
            size = 1
    if size >= 2:
        out.append(size)
    return tuple(out)


# ---------------------------------------------------------------------------
# closed-form constructors
# ---------------------------------------------------------------------------

def _from_predicate(x: str, pred) -> LabeledGraph:
    labels = check_bits(x)
    n = len(labels)
    edges = frozenset(
        (i, j)
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        if pred(labels[i - 1], labels[j - 1], i, j)
    )
    return LabeledGraph(Graph(n, edges), labels)


def family_E(x: str) -> LabeledGraph:
    """Bipartite-with-order family: edge exactly when a 1 precedes a 0."""
    return _from_predicate(x, lambda bi, bj, i, j: bi == 1 and bj == 0)


def family_K(x: str) -> LabeledGraph:
    """Split-with-order family: edge exactly when the earlier vertex is a 0."""
    return _from_predicate(x, lambda bi, bj, i, j: bi == 0)


def family_Ktilde(x: str) -> LabeledGraph:
    """Two cliques plus the cross edges where the 0 arrives after the 1."""
    return _from_predicate(x, lambda bi, bj, i, j: bi == bj or (bi == 1 and bj == 0))


def threshold_creation(x: str) -> LabeledGraph:
    """Threshold graph with creation sequence x: each 0 dominates on arrival,
    each 1 arrives isolated."""
    return _from_predicate(x, lambda bi, bj, i, j: bj == 0)


def family_Kprime(x: str) -> LabeledGraph:
    """Fading counterpart of the split family: 0s dominate on arrival, and a
    1 also links back to an immediately preceding 0."""
    return _from_predicate(
        x, lambda bi, bj, i, j: bj == 0 or (i == j - 1 and bi == 0 and bj == 1)
    )


def family_Eprime(x: str) -> LabeledGraph:
    """Fading counterpart of K~: 0s dominate on arrival, and a 1 links back
    to an immediately preceding 1."""
    return _from_predicate(
        x, lambda bi, bj, i, j: bj == 0 or (i == j - 1 and bi == 1 and bj == 1)
    )


_FULL_PREDICATES = {
    "0>-,1>-": lambda bi, bj, i, j: False,
    "0>1,1>-": lambda bi, bj, i, j: bi == 1 and bj == 0,
    "0>0,1>-": lambda bi, bj, i, j: bi == 0 and bj == 0,
    "0>E,1>-": lambda bi, bj, i, j: bj == 0,
    "0>1,1>0": lambda bi, bj, i, j: bi != bj,
    "0>0,1>0": lambda bi, bj, i, j: bi == 0,
    "0>E,1>0": lambda bi, bj, i, j: bi == 0 or bj == 0,
    "0>0,1>1": lambda bi, bj, i, j: bi == bj,
    "0>E,1>1": lambda bi, bj, i, j: bi == bj or (bi == 1 and bj == 0),
    "0>E,1>E": lambda bi, bj, i, j: True,
}

_FADING_PREDICATES = {
    "0>-,1>-": lambda bi, bj, i, j: False,
    "0>1,1>-": lambda bi, bj, i, j: i == j - 1 and bi == 1 and bj == 0,
    "0>0,1>-": lambda bi, bj, i, j: i == j - 1 and bi == 0 and bj == 0,
    "0>E,1>-": lambda bi, bj, i, j: bj == 0,
    "0>1,1>0": lambda bi, bj, i, j: i == j - 1 and bi != bj,
    "0>0,1>0": lambda bi, bj, i, j: i == j - 1 and bi == 0,
    "0>E,1>0": lambda bi, bj, i, j: bj == 0 or (i == j - 1 and bi == 0 and bj == 1),
    "0>0,1>1": lambda bi, bj, i, j: i == j - 1 and bi == bj,
    "0>E,1>1": lambda bi, bj, i, j: bj == 0 or (i == j - 1 and bi == 1 and bj == 1),
    "0>E,1>E": lambda bi, bj, i, j: True,
}


def full_table_family(rule: RuleSet, x: str) -> LabeledGraph:
    """Closed-form graph the full-memory machine is claimed to build."""
    try:
        pred = _FULL_PREDICATES[rule.mnemonic]
    except KeyError:
        raise ValueError(f"rule {rule.mnemonic} is not one of the canonical tables") from None
    return _from_predicate(x, pred)


def fading_table_family(rule: RuleSet, x: str) -> LabeledGraph:
    """Closed-form graph the fading-memory machine is claimed to build."""
    try:
        pred = _FADING_PREDICATES[rule.mnemonic]
    except KeyError:
        raise ValueError(f"rule {rule.mnemonic} is not one of the canonical tables") from None
    return _from_predicate(x, pred)


def fading_path_sizes(rule: RuleSet, x: str) -> RunStatistics | None:
    """For the fading tables with no DominateAll action, the path sizes of
    the resulting linear forest (positions not covered stay isolated);
    None for the other tables."""
    check_bits(x)
    table = {
        "0>-,1>-": lambda: (),
        "0>0,1>-": lambda: runs_of_zeros(x),
        "0>1,1>-": lambda: (2,) * _count_overlapping(x, "10"),
        "0>1,1>0": lambda: alternating_runs(x),
        "0>0,1>0": lambda: zero_anchored_blocks(x),
        "0>0,1>1": lambda: runs_of_zeros(x) + runs_of_ones(x),
    }
    fn = table.get(rule.mnemonic)
    return None if fn is None else tuple(r for r in fn() if r >= 2)


def _count_overlapping(x: str, pattern: str) -> int:
    count = 0
    start = 0
    while True:
        hit = x.find(pattern, start)
        if hit < 0:
            return count
        count += 1
        start = hit + 1
