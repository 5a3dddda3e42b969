"""Two-player sequential construction machines.

One side streams a single instruction bit per vertex; the other side places
vertex t, labels it with the received bit x_t, and applies the action the
rule table assigns to that bit:

  NoEdge        add no edges
  DominateAll   connect t to every earlier vertex
  JoinLabel_c   connect t to earlier vertices labelled c (needs memory)

What "earlier vertices labelled c" means depends on the memory model:

  NO_MEMORY       labels are never stored; only NoEdge and DominateAll are
                  legal actions
  FULL_MEMORY     every label is retained, so a join reaches all earlier
                  vertices with the target label
  fading_memory(2) only the most recent label is still readable when vertex
                  t is placed, so a join can only add the edge {t-1, t}
  MODIFIABLE      full memory, plus a per-step option to rewrite: instead of
                  the standard step, connect every vertex labelled with the
                  current bit to every vertex with the action's target label,
                  retroactively saturating that label pair

Rules are written as mnemonics like "0>1,1>-": bit 0 joins label-1 vertices,
bit 1 adds nothing ("-" is NoEdge, "E" is DominateAll, "0"/"1" are joins).
Swapping the bit alphabet maps rules onto each other; the canonical ten rule
tables below are one representative per swap orbit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, empty_graph, induced_subgraph, is_isomorphic, to_json_obj


class InvalidActionForModel(ValueError):
    """A rule demands labels under a model that cannot read them."""


class ModifyUnsupported(ValueError):
    """A modify choice landed on a step whose action is not a label join."""


class Action(Enum):
    NO_EDGE = "-"
    DOMINATE_ALL = "E"
    JOIN_LABEL_0 = "0"
    JOIN_LABEL_1 = "1"

    @property
    def join_target(self) -> int | None:
        if self is Action.JOIN_LABEL_0:
            return 0
        if self is Action.JOIN_LABEL_1:
            return 1
        return None


@dataclass(frozen=True)
class RuleSet:
    """Action table indexed by the instruction bit."""

    action_for_0: Action
    action_for_1: Action

    def action_for(self, bit: int) -> Action:
        return self.action_for_0 if bit == 0 else self.action_for_1

    @property
    def mnemonic(self) -> str:
        return f"0>{self.action_for_0.value},1>{self.action_for_1.value}"

    def uses_labels(self) -> bool:
        return self.action_for_0.join_target is not None or self.action_for_1.join_target is not None


def parse_rule(text: str) -> RuleSet:
    """Parse a mnemonic such as "0>E,1>-" (whitespace tolerated)."""
    by_bit: dict[str, Action] = {}
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise ValueError(f"rule must have exactly two clauses, got {text!r}")
    for part in parts:
        if len(part) != 3 or part[1] != ">" or part[0] not in "01":
            raise ValueError(f"malformed rule clause {part!r}")
        try:
            by_bit[part[0]] = Action(part[2])
        except ValueError:
            raise ValueError(f"unknown action {part[2]!r} in {text!r}") from None
    if set(by_bit) != {"0", "1"}:
        raise ValueError(f"rule must cover both bits, got {text!r}")
    return RuleSet(by_bit["0"], by_bit["1"])


def _swap_action(a: Action) -> Action:
    if a is Action.JOIN_LABEL_0:
        return Action.JOIN_LABEL_1
    if a is Action.JOIN_LABEL_1:
        return Action.JOIN_LABEL_0
    return a


def swap_rule(rule: RuleSet) -> RuleSet:
    """Image of the rule under exchanging the bit alphabet 0 <-> 1."""
    return RuleSet(_swap_action(rule.action_for_1), _swap_action(rule.action_for_0))


# One representative per bit-swap orbit; sixteen raw tables collapse to ten.
FULL_RULES: tuple[RuleSet, ...] = tuple(
    parse_rule(s)
    for s in (
        "0>-,1>-",
        "0>1,1>-",
        "0>0,1>-",
        "0>E,1>-",
        "0>1,1>0",
        "0>0,1>0",
        "0>E,1>0",
        "0>0,1>1",
        "0>E,1>1",
        "0>E,1>E",
    )
)

NO_MEMORY_RULES: tuple[RuleSet, ...] = tuple(
    parse_rule(s) for s in ("0>-,1>-", "0>E,1>-", "0>E,1>E")
)

_FULL_RULE_SET = frozenset(FULL_RULES)


def canonical_rule(rule: RuleSet) -> RuleSet:
    """The representative of the rule's bit-swap orbit."""
    if rule in _FULL_RULE_SET:
        return rule
    swapped = swap_rule(rule)
    if swapped in _FULL_RULE_SET:
        return swapped
    raise ValueError(f"rule {rule.mnemonic} has no canonical representative")


@dataclass(frozen=True)
class MemoryModel:
    kind: str  # "none" | "full" | "fading" | "modifiable"
    window: int | None = None

    def __str__(self) -> str:
        return f"fading({self.window})" if self.kind == "fading" else self.kind


NO_MEMORY = MemoryModel("none")
FULL_MEMORY = MemoryModel("full")
MODIFIABLE = MemoryModel("modifiable")


def fading_memory(window: int) -> MemoryModel:
    # Only the two-step window has defined join semantics; larger windows
    # would need a reachability convention nothing here specifies.
    if window != 2:
        raise ValueError(f"fading memory is only supported with window 2, got {window}")
    return MemoryModel("fading", window)


def parse_model(text: str) -> MemoryModel:
    table = {
        "none": NO_MEMORY,
        "full": FULL_MEMORY,
        "fading": fading_memory(2),
        "fading(2)": fading_memory(2),
        "modifiable": MODIFIABLE,
    }
    try:
        return table[text.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown memory model {text!r}") from None


@dataclass(frozen=True)
class LabeledGraph:
    """A graph together with the per-vertex instruction bits that built it."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ValueError("labels must cover every vertex")
        if any(b not in (0, 1) for b in self.labels):
            raise ValueError("labels must be bits")


@dataclass(frozen=True)
class ResourceCost:
    instruction_bits: int
    memory_bits: int
    random_bits: int


@dataclass(frozen=True)
class StepRecord:
    step: int
    bit: int
    action: Action
    modified: bool
    edges_added: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ConstructionTrace:
    rule: RuleSet
    model: MemoryModel
    x: str
    choices: str | None
    steps: tuple[StepRecord, ...]
    final: LabeledGraph

    @property
    def cost(self) -> ResourceCost:
        # memory_bits counts label bits ever written; fading memory writes
        # each label too, it just stops being readable two steps later.
        n = len(self.x)
        return ResourceCost(
            instruction_bits=n,
            memory_bits=0 if self.model.kind == "none" else n,
            random_bits=0,
        )

    def graphs_per_step(self) -> list[Graph]:
        """[G_0, G_1, ..., G_n] with G_t the graph after step t."""
        out = [empty_graph(0)]
        edges: set[tuple[int, int]] = set()
        for rec in self.steps:
            edges.update(rec.edges_added)
            out.append(Graph(rec.step, frozenset(edges)))
        return out

    def to_json_obj(self) -> dict:
        return {
            "rule": self.rule.mnemonic,
            "model": str(self.model),
            "x": self.x,
            "choices": self.choices,
            "steps": [
                {
                    "step": rec.step,
                    "bit": rec.bit,
                    "action": rec.action.value,
                    "modified": rec.modified,
                    "added": [list(e) for e in rec.edges_added],
                }
                for rec in self.steps
            ],
            "graph": to_json_obj(self.final.graph),
            "labels": list(self.final.labels),
            "cost": {
                "instruction_bits": self.cost.instruction_bits,
                "memory_bits": self.cost.memory_bits,
                "random_bits": self.cost.random_bits,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))


def _check_instruction_string(x: str) -> tuple[int, ...]:
    if any(ch not in "01" for ch in x):
        raise ValueError(f"instruction string must be over 0/1, got {x!r}")
    return tuple(int(ch) for ch in x)


def interpret(rule: RuleSet, model: MemoryModel, x: str) -> ConstructionTrace:
    """Run the construction. The empty string yields the empty graph and a
    single-bit string yields K1 regardless of the rule."""
    labels = _check_instruction_string(x)
    if model.kind == "none" and rule.uses_labels():
        raise InvalidActionForModel(
            f"rule {rule.mnemonic} joins by label but the model stores no labels"
        )
    if model.kind == "modifiable":
        return interpret_modifiable(rule, x, "s" * len(x))

    steps: list[StepRecord] = []
    edges: set[tuple[int, int]] = set()
    for t in range(1, len(labels) + 1):
        bit = labels[t - 1]
        action = rule.action_for(bit)
        added: list[tuple[int, int]] = []
        if action is Action.DOMINATE_ALL:
            added = [(i, t) for i in range(1, t)]
        elif action.join_target is not None:
            c = action.join_target
            if model.kind == "full":
                added = [(i, t) for i in range(1, t) if labels[i - 1] == c]
            else:  # fading, window 2: only the previous label is readable
                if t > 1 and labels[t - 2] == c:
                    added = [(t - 1, t)]
        edges.update(added)
        steps.append(StepRecord(t, bit, action, False, tuple(sorted(added))))

    final = LabeledGraph(Graph(len(labels), frozenset(edges)), labels)
    return ConstructionTrace(rule, model, x, None, tuple(steps), final)


def _normalize_choices(choices, length: int) -> tuple[str, tuple[bool, ...]]:
    if isinstance(choices, str):
        if any(ch not in "sm" for ch in choices):
            raise ValueError(f"choices must be over s/m, got {choices!r}")
        flags = tuple(ch == "m" for ch in choices)
        text = choices
    else:
        flags = tuple(bool(c) for c in choices)
        text = "".join("m" if f else "s" for f in flags)
    if len(flags) != length:
        raise ValueError(f"need one choice per step: {len(flags)} choices for {length} steps")
    return text, flags


def interpret_modifiable(rule: RuleSet, x: str, choices) -> ConstructionTrace:
    """Full-memory run where each step may be replaced by a label-pair
    rewrite: with bit b and action JoinLabel_c, connect every b-labelled
    vertex to every c-labelled vertex placed so far (the new vertex counts),
    which can retroactively add edges between old vertices."""
    labels = _check_instruction_string(x)
    text, flags = _normalize_choices(choices, len(labels))

    steps: list[StepRecord] = []
    edges: set[tuple[int, int]] = set()
    for t in range(1, len(labels) + 1):
        bit = labels[t - 1]
        action = rule.action_for(bit)
        modify = flags[t - 1]
        added: list[tuple[int, int]] = []
        if modify:
            c = action.join_target
            if c is None:
                raise ModifyUnsupported(
                    f"step {t} fires {action.value!r}; only label joins can be modified"
                )
            want = {bit, c}
            for i in range(1, t + 1):
                for j in range(i + 1, t + 1):
                    pair_labels = {labels[i - 1], labels[j - 1]}
                    if bit == c:
                        match = pair_labels == {bit}
                    else:
                        match = labels[i - 1] in want and labels[j - 1] in want and pair_labels == want
                    if match and (i, j) not in edges:
                        added.append((i, j))
        else:
            if action is Action.DOMINATE_ALL:
                added = [(i, t) for i in range(1, t)]
            elif action.join_target is not None:
                c = action.join_target
                added = [(i, t) for i in range(1, t) if labels[i - 1] == c]
        edges.update(added)
        steps.append(StepRecord(t, bit, action, modify, tuple(sorted(added))))

    final = LabeledGraph(Graph(len(labels), frozenset(edges)), labels)
    return ConstructionTrace(rule, MODIFIABLE, x, text, tuple(steps), final)


def memory_modifiable_steps(trace: ConstructionTrace) -> list[int]:
    """Steps t where deleting vertex t from G_t does not recover G_{t-1}
    up to isomorphism, i.e. where the step rewrote the existing graph."""
    flagged = []
    per_step = trace.graphs_per_step()
    for t in range(1, len(per_step)):
        g_t = per_step[t]
        g_prev = per_step[t - 1]
        if not is_isomorphic(induced_subgraph(g_t, range(1, t)), g_prev):
            flagged.append(t)
    return flagged


def is_memory_modifiable_output(trace: ConstructionTrace) -> bool:
    """True when some step rewrote the graph built before it."""
    return bool(memory_modifiable_steps(trace))
