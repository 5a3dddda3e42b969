"""Exhaustive desk-scale verification of the construction-machine claims.

Each check enumerates every instruction string up to a length bound (and,
for the modifiable model, every per-step choice sequence) and compares the
machine output against an independently coded expectation: a closed-form
predicate, a named family constructor, a forbidden-subgraph scan, or a
recogniser.  Failures are collected as replayable counterexamples rather
than raised, so a report always describes the whole parameter range.

Check ids (CLI names in parentheses):

  P2 (no-memory tables)    the three memoryless rules produce exactly the
                           empty graphs, the complete graphs, and the
                           threshold graphs
  P3 (full-memory tables)  each of the ten rules matches its closed form,
                           labelled-vertex for labelled-vertex
  P5 (fading tables)       same for the two-step memory window, plus the
                           path-decomposition reading of the label-only rules
  C_modifiable             every rewrite step leaves a complete split,
                           complete bipartite, or complete graph behind
  C_pnfree                 full-memory outputs never contain an induced path
                           or cycle on 5 or 6 vertices, though P4 and C4 occur

The reachability helpers (enumerate_outputs, reachable_classes,
find_constructions, expressiveness_count, hierarchy_report) answer which
isomorphism classes each memory model can emit at all.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import product

from .families import (
    alternating_runs,
    fading_path_sizes,
    fading_table_family,
    full_table_family,
    runs_of_ones,
    runs_of_zeros,
    threshold_creation,
    zero_anchored_blocks,
)
from .graphs import (
    Graph,
    canonical_form,
    complete_bipartite,
    complete_graph,
    complete_split,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graph_classes,
    is_isomorphic,
    is_linear_forest,
    is_threshold,
    is_threshold_by_forbidden,
    linear_forest,
    path_graph,
    to_json,
)
from .machines import (
    FULL_MEMORY,
    FULL_RULES,
    MODIFIABLE,
    NO_MEMORY,
    NO_MEMORY_RULES,
    MemoryModel,
    RuleSet,
    fading_memory,
    interpret,
    interpret_modifiable,
    memory_modifiable_steps,
    parse_rule,
)

PROPOSITION_IDS = ("P2", "P3", "P5", "C_modifiable", "C_pnfree")

_DEFAULT_MAX_N = {"P2": 10, "P3": 8, "P5": 8, "C_modifiable": 6, "C_pnfree": 8}


@dataclass(frozen=True)
class Counterexample:
    rule: str
    model: str
    x: str
    choices: str | None
    expected: str
    got: str

    def to_json_obj(self) -> dict:
        return {
            "rule": self.rule,
            "model": self.model,
            "x": self.x,
            "choices": self.choices,
            "expected": self.expected,
            "got": self.got,
        }


@dataclass(frozen=True)
class VerificationReport:
    proposition: str
    max_n: int
    rules: tuple[str, ...]
    models: tuple[str, ...]
    checked: int
    counterexamples: tuple[Counterexample, ...]
    notes: tuple[str, ...]
    wall_time: float

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json_obj(self, include_wall_time: bool = False) -> dict:
        obj = {
            "proposition": self.proposition,
            "max_n": self.max_n,
            "rules": list(self.rules),
            "models": list(self.models),
            "checked": self.checked,
            "counterexamples": [c.to_json_obj() for c in self.counterexamples],
            "notes": list(self.notes),
            "passed": self.passed,
        }
        if include_wall_time:
            obj["wall_time"] = self.wall_time
        return obj

    def to_json(self, include_wall_time: bool = False) -> str:
        return json.dumps(self.to_json_obj(include_wall_time), sort_keys=True, separators=(",", ":"))

    def to_text(self, max_listed: int = 20) -> str:
        lines = [
            f"check: {self.proposition}",
            f"max_n: {self.max_n}",
            f"rules: {', '.join(self.rules)}",
            f"models: {', '.join(self.models)}",
            f"checked: {self.checked}",
        ]
        lines.extend(f"note: {note}" for note in self.notes)
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        for c in self.counterexamples[:max_listed]:
            where = f"rule {c.rule} x {c.x!r}" + (f" choices {c.choices}" if c.choices else "")
            lines.append(f"  {where}: expected {c.expected}, got {c.got}")
        if len(self.counterexamples) > max_listed:
            lines.append(f"  ... and {len(self.counterexamples) - max_listed} more")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _strings(n: int):
    """All instruction strings of length n in numeric order."""
    if n == 0:
        yield ""
        return
    for v in range(1 << n):
        yield format(v, f"0{n}b")


def _rules_for(model: MemoryModel) -> tuple[RuleSet, ...]:
    return NO_MEMORY_RULES if model.kind == "none" else FULL_RULES


def _choice_strings(rule: RuleSet, x: str):
    """Every legal choice sequence: a step may modify only when its action is
    a label join."""
    options = []
    for ch in x:
        action = rule.action_for(int(ch))
        options.append("sm" if action.join_target is not None else "s")
    yield from map("".join, product(*options))


# ---------------------------------------------------------------------------
# reachability
# ---------------------------------------------------------------------------

def _reachable_with_witnesses(model: MemoryModel, n: int) -> dict[bytes, tuple[str, str]]:
    """Canonical certificate -> first (rule mnemonic, x) reaching it."""
    out: dict[bytes, tuple[str, str]] = {}
    for rule in _rules_for(model):
        for x in _strings(n):
            if model.kind == "modifiable":
                for choices in _choice_strings(rule, x):
                    cert = canonical_form(interpret_modifiable(rule, x, choices).final.graph)
                    out.setdefault(cert, (rule.mnemonic, x))
            else:
                cert = canonical_form(interpret(rule, model, x).final.graph)
                out.setdefault(cert, (rule.mnemonic, x))
    return out


def enumerate_outputs(rule: RuleSet, model: MemoryModel, n: int) -> set[bytes]:
    """Canonical forms of every output of the rule at string length n."""
    if n > 12 or (model.kind == "modifiable" and n > 7):
        raise ValueError("output enumeration bounds: n <= 12, modifiable n <= 7")
    out: set[bytes] = set()
    for x in _strings(n):
        if model.kind == "modifiable":
            for choices in _choice_strings(rule, x):
                out.add(canonical_form(interpret_modifiable(rule, x, choices).final.graph))
        else:
            out.add(canonical_form(interpret(rule, model, x).final.graph))
    return out


def reachable_classes(model: MemoryModel, n: int) -> set[bytes]:
    """Canonical forms reachable under any rule legal for the model."""
    if n > 12 or (model.kind == "modifiable" and n > 7):
        raise ValueError("output enumeration bounds: n <= 12, modifiable n <= 7")
    return set(_reachable_with_witnesses(model, n))


def expressiveness_count(model: MemoryModel, n: int) -> int:
    """Number of isomorphism classes the model can emit on n vertices."""
    if n > 8:
        raise ValueError("expressiveness counting supported for n <= 8")
    return len(reachable_classes(model, n))


def find_constructions(g: Graph, model: MemoryModel) -> list[tuple[str, str]]:
    """All (rule, x) whose output is isomorphic to g; for the modifiable
    model a pair is included when some choice sequence reaches g."""
    n = g.n
    if n > 12 or (model.kind == "modifiable" and n > 7):
        raise ValueError("construction search bounds: n <= 12, modifiable n <= 7")
    hits = []
    for rule in _rules_for(model):
        for x in _strings(n):
            if model.kind == "modifiable":
                if any(
                    is_isomorphic(interpret_modifiable(rule, x, ch).final.graph, g)
                    for ch in _choice_strings(rule, x)
                ):
                    hits.append((rule.mnemonic, x))
            elif is_isomorphic(interpret(rule, model, x).final.graph, g):
                hits.append((rule.mnemonic, x))
    return hits


# ---------------------------------------------------------------------------
# proposition checks
# ---------------------------------------------------------------------------

def _report(proposition, max_n, rules, models, checked, cxs, notes, started) -> VerificationReport:
    return VerificationReport(
        proposition=proposition,
        max_n=max_n,
        rules=tuple(r.mnemonic for r in rules),
        models=tuple(str(m) for m in models),
        checked=checked,
        counterexamples=tuple(cxs),
        notes=tuple(notes),
        wall_time=time.monotonic() - started,
    )


def _verify_no_memory(max_n: int) -> VerificationReport:
    started = time.monotonic()
    rule_empty, rule_threshold, rule_complete = NO_MEMORY_RULES
    cxs: list[Counterexample] = []
    notes: list[str] = []
    checked = 0

    def fail(rule, x, expected, got_graph):
        cxs.append(Counterexample(rule.mnemonic, "none", x, None, expected, to_json(got_graph)))

    for n in range(max_n + 1):
        seen: dict[bytes, str] = {}
        for x in _strings(n):
            g_empty = interpret(rule_empty, NO_MEMORY, x).final.graph
            checked += 1
            if g_empty != empty_graph(n):
                fail(rule_empty, x, "the empty graph", g_empty)
            g_full = interpret(rule_complete, NO_MEMORY, x).final.graph
            checked += 1
            if g_full != complete_graph(n):
                fail(rule_complete, x, "the complete graph", g_full)
            g = interpret(rule_threshold, NO_MEMORY, x).final.graph
            checked += 1
            if g != threshold_creation(x).graph:
                fail(rule_threshold, x, "the creation-sequence closed form", g)
            if not is_threshold(g):
                fail(rule_threshold, x, "a threshold graph (elimination test)", g)
            if not is_threshold_by_forbidden(g):
                fail(rule_threshold, x, "a threshold graph (forbidden-subgraph test)", g)
            seen.setdefault(canonical_form(g), x)
        if n >= 1 and len(seen) != 2 ** (n - 1):
            cxs.append(
                Counterexample(
                    rule_threshold.mnemonic,
                    "none",
                    f"all strings of length {n}",
                    None,
                    f"exactly {2 ** (n - 1)} distinct classes",
                    str(len(seen)),
                )
            )
        if n <= 6:
            wanted = {canonical_form(c) for c in enumerate_graph_classes(n) if is_threshold(c)}
            checked += 1
            if set(seen) != wanted:
                cxs.append(
                    Counterexample(
                        rule_threshold.mnemonic,
                        "none",
                        f"all strings of length {n}",
                        None,
                        "exactly the threshold isomorphism classes",
                        f"{len(seen)} classes vs {len(wanted)} threshold classes",
                    )
                )
        notes.append(f"n={n}: {len(seen)} threshold classes reached")
    return _report("P2", max_n, NO_MEMORY_RULES, (NO_MEMORY,), checked, cxs, notes, started)


# Rules whose full-memory output is, as an unlabelled graph, a named family
# assembled from l = #0s and m = #1s.
_NAMED_FULL_SHAPES = {
    "0>-,1>-": lambda l, m: empty_graph(l + m),
    "0>0,1>-": lambda l, m: disjoint_union(complete_graph(l), empty_graph(m)),
    "0>1,1>0": lambda l, m: complete_bipartite(l, m),
    "0>E,1>0": lambda l, m: complete_split(l, m),
    "0>0,1>1": lambda l, m: disjoint_union(complete_graph(l), complete_graph(m)),
    "0>E,1>E": lambda l, m: complete_graph(l + m),
}


def _verify_full_memory(max_n: int) -> VerificationReport:
    started = time.monotonic()
    cxs: list[Counterexample] = []
    checked = 0
    for rule in FULL_RULES:
        shape = _NAMED_FULL_SHAPES.get(rule.mnemonic)
        for n in range(max_n + 1):
            for x in _strings(n):
                got = interpret(rule, FULL_MEMORY, x).final
                want = full_table_family(rule, x)
                checked += 1
                if got.graph != want.graph or got.labels != want.labels:
                    cxs.append(
                        Counterexample(
                            rule.mnemonic, "full", x, None,
                            f"closed form {to_json(want.graph)}", to_json(got.graph),
                        )
                    )
                    continue
                if shape is not None:
                    l = x.count("0")
                    m = x.count("1")
                    if not is_isomorphic(got.graph, shape(l, m)):
                        cxs.append(
                            Counterexample(
                                rule.mnemonic, "full", x, None,
                                "the named family shape", to_json(got.graph),
                            )
                        )
                if rule.mnemonic == "0>E,1>-" and not (
                    is_threshold(got.graph) and is_threshold_by_forbidden(got.graph)
                ):
                    cxs.append(
                        Counterexample(
                            rule.mnemonic, "full", x, None, "a threshold graph", to_json(got.graph)
                        )
                    )
    return _report("P3", max_n, FULL_RULES, (FULL_MEMORY,), checked, cxs, (), started)


_RUN_STAT_EXAMPLE = "00110100010"
_RUN_STAT_EXPECTED = {
    "zero runs": (runs_of_zeros, (2, 1, 3, 1)),
    "one runs": (runs_of_ones, (2, 1, 1)),
    "alternating runs": (alternating_runs, (2, 4, 3)),
    "zero-anchored blocks": (zero_anchored_blocks, (3, 2, 4)),
}


def _verify_fading_memory(max_n: int) -> VerificationReport:
    started = time.monotonic()
    fading = fading_memory(2)
    cxs: list[Counterexample] = []
    notes: list[str] = []
    checked = 0
    for name, (fn, expected) in _RUN_STAT_EXPECTED.items():
        checked += 1
        got = fn(_RUN_STAT_EXAMPLE)
        if got != expected:
            cxs.append(
                Counterexample(
                    "run-stats", "fading(2)", _RUN_STAT_EXAMPLE, None,
                    f"{name} {expected}", str(got),
                )
            )
        else:
            notes.append(f"{name}({_RUN_STAT_EXAMPLE}) = {expected}")
    for rule in FULL_RULES:
        for n in range(max_n + 1):
            for x in _strings(n):
                got = interpret(rule, fading, x).final
                want = fading_table_family(rule, x)
                checked += 1
                if got.graph != want.graph or got.labels != want.labels:
                    cxs.append(
                        Counterexample(
                            rule.mnemonic, "fading(2)", x, None,
                            f"closed form {to_json(want.graph)}", to_json(got.graph),
                        )
                    )
                    continue
                sizes = fading_path_sizes(rule, x)
                if sizes is not None:
                    expected_forest = linear_forest(list(sizes) + [1] * (n - sum(sizes)))
                    if not (
                        is_linear_forest(got.graph)
                        and is_isomorphic(got.graph, expected_forest)
                    ):
                        cxs.append(
                            Counterexample(
                                rule.mnemonic, "fading(2)", x, None,
                                f"linear forest with path sizes {sizes}", to_json(got.graph),
                            )
                        )
    return _report("P5", max_n, FULL_RULES, (fading,), checked, cxs, notes, started)


def _modifiable_family_member(g: Graph) -> bool:
    """Complete split, complete bipartite, or complete (degenerate sizes
    allowed)."""
    n = g.n
    if g.edge_count == n * (n - 1) // 2:
        return True
    return any(
        is_isomorphic(g, complete_bipartite(l, n - l)) for l in range(n // 2 + 1)
    ) or any(is_isomorphic(g, complete_split(l, n - l)) for l in range(n + 1))


def _verify_modifiable(max_n: int) -> VerificationReport:
    started = time.monotonic()
    cxs: list[Counterexample] = []
    notes: list[str] = []
    checked = 0
    family_cache: dict[bytes, bool] = {}

    worked = interpret_modifiable(parse_rule("0>1,1>-"), "00010", "ssssm")
    checked += 1
    if is_isomorphic(worked.final.graph, complete_bipartite(1, 4)) and memory_modifiable_steps(
        worked
    ) == [5]:
        notes.append("rule 0>1,1>- x 00010 with a final rewrite yields the 4-star")
    else:
        cxs.append(
            Counterexample(
                "0>1,1>-", "modifiable", "00010", "ssssm",
                "the complete bipartite graph on 1+4 vertices, rewritten at step 5",
                to_json(worked.final.graph),
            )
        )

    flagged_total = 0
    for rule in FULL_RULES:
        for n in range(max_n + 1):
            for x in _strings(n):
                for choices in _choice_strings(rule, x):
                    trace = interpret_modifiable(rule, x, choices)
                    checked += 1
                    flagged = memory_modifiable_steps(trace)
                    if not flagged:
                        continue
                    per_step = trace.graphs_per_step()
                    for t in flagged:
                        flagged_total += 1
                        g_t = per_step[t]
                        cert = canonical_form(g_t)
                        ok = family_cache.get(cert)
                        if ok is None:
                            ok = _modifiable_family_member(g_t)
                            family_cache[cert] = ok
                        if not ok:
                            cxs.append(
                                Counterexample(
                                    rule.mnemonic, "modifiable", x, choices,
                                    f"step-{t} graph in the rewrite families "
                                    "(complete split / complete bipartite / complete)",
                                    to_json(g_t),
                                )
                            )
    notes.append(f"{flagged_total} rewrite steps examined")
    return _report("C_modifiable", max_n, FULL_RULES, (MODIFIABLE,), checked, cxs, notes, started)


def _verify_path_cycle_free(max_n: int) -> VerificationReport:
    started = time.monotonic()
    cxs: list[Counterexample] = []
    notes: list[str] = []
    checked = 0

    witnesses: dict[bytes, tuple[str, str]] = {}
    for rule in FULL_RULES:
        for n in range(max_n + 1):
            for x in _strings(n):
                g = interpret(rule, FULL_MEMORY, x).final.graph
                witnesses.setdefault(canonical_form(g), (rule.mnemonic, x))
    notes.append(f"{len(witnesses)} distinct output classes at n <= {max_n}")

    forbidden = [
        ("induced 5-path", path_graph(5)),
        ("induced 5-cycle", cycle_graph(5)),
        ("induced 6-path", path_graph(6)),
        ("induced 6-cycle", cycle_graph(6)),
    ]
    p4_seen = False
    c4_seen = False
    for cert in sorted(witnesses):
        rule_name, x = witnesses[cert]
        g = interpret(parse_rule(rule_name), FULL_MEMORY, x).final.graph
        for label, h in forbidden:
            checked += 1
            if contains_induced(g, h):
                cxs.append(
                    Counterexample(rule_name, "full", x, None, f"no {label}", to_json(g))
                )
        if not p4_seen and contains_induced(g, path_graph(4)):
            p4_seen = True
            notes.append(f"induced 4-path witness: rule {rule_name} x {x}")
        if not c4_seen and contains_induced(g, cycle_graph(4)):
            c4_seen = True
            notes.append(f"induced 4-cycle witness: rule {rule_name} x {x}")

    example = interpret(parse_rule("0>1,1>-"), FULL_MEMORY, "10010").final.graph
    checked += 1
    if not contains_induced(example, path_graph(4)):
        cxs.append(
            Counterexample(
                "0>1,1>-", "full", "10010", None, "an induced 4-path", to_json(example)
            )
        )
    if not p4_seen:
        cxs.append(
            Counterexample("any", "full", f"|x| <= {max_n}", None, "some induced 4-path", "none")
        )
    if not c4_seen:
        cxs.append(
            Counterexample("any", "full", f"|x| <= {max_n}", None, "some induced 4-cycle", "none")
        )
    return _report("C_pnfree", max_n, FULL_RULES, (FULL_MEMORY,), checked, cxs, notes, started)


_CHECKS = {
    "P2": _verify_no_memory,
    "P3": _verify_full_memory,
    "P5": _verify_fading_memory,
    "C_modifiable": _verify_modifiable,
    "C_pnfree": _verify_path_cycle_free,
}


def verify_proposition(proposition: str, max_n: int | None = None) -> VerificationReport:
    """Run one check over all strings up to max_n (defaults per check)."""
    try:
        fn = _CHECKS[proposition]
    except KeyError:
        raise ValueError(
            f"unknown check {proposition!r}; expected one of {', '.join(PROPOSITION_IDS)}"
        ) from None
    bound = _DEFAULT_MAX_N[proposition] if max_n is None else max_n
    if bound < 0:
        raise ValueError("max_n must be nonnegative")
    cap = 7 if proposition == "C_modifiable" else 8 if proposition != "P2" else 10
    if bound > cap:
        raise ValueError(f"{proposition} supports max_n <= {cap}")
    return fn(bound)


def hierarchy_report(max_n: int = 8) -> VerificationReport:
    """Compare the class sets reachable per memory model at every size up to
    max_n: the memoryless classes must embed into both richer models, and
    the report records whether the fading classes embed into full memory
    (they do not: fading memory reaches long induced paths that full-memory
    outputs never contain)."""
    if max_n > 8:
        raise ValueError("hierarchy comparison supported for max_n <= 8")
    started = time.monotonic()
    fading = fading_memory(2)
    cxs: list[Counterexample] = []
    notes: list[str] = []
    checked = 0
    for n in range(max_n + 1):
        none_w = _reachable_with_witnesses(NO_MEMORY, n)
        fading_w = _reachable_with_witnesses(fading, n)
        full_w = _reachable_with_witnesses(FULL_MEMORY, n)
        notes.append(f"n={n}: none {len(none_w)}, fading {len(fading_w)}, full {len(full_w)}")
        for cert in sorted(none_w):
            checked += 2
            rule_name, x = none_w[cert]
            g = interpret(parse_rule(rule_name), NO_MEMORY, x).final.graph
            if cert not in fading_w:
                cxs.append(
                    Counterexample(rule_name, "none", x, None, "reachable under fading memory", to_json(g))
                )
            if cert not in full_w:
                cxs.append(
                    Counterexample(rule_name, "none", x, None, "reachable under full memory", to_json(g))
                )
        for cert in sorted(fading_w):
            checked += 1
            if cert not in full_w:
                rule_name, x = fading_w[cert]
                g = interpret(parse_rule(rule_name), fading, x).final.graph
                cxs.append(
                    Counterexample(
                        rule_name, "fading(2)", x, None, "reachable under full memory", to_json(g)
                    )
                )
    return _report(
        "hierarchy", max_n, FULL_RULES, (NO_MEMORY, fading, FULL_MEMORY), checked, cxs, notes, started
    )
