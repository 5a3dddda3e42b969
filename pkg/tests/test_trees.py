"""Tests for recursive-tree construction, sampling, and encodings."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphforge.graphs import (
    canonical_form,
    complete_bipartite,
    cycle_graph,
    is_isomorphic,
    path_graph,
)
from graphforge.trees import (
    ParentVector,
    build_tree_from_instructions,
    decode_parent_bits,
    encode_parent_bits,
    enumerate_labeled_trees,
    enumerate_tree_classes,
    index_bits,
    is_recursive_tree,
    leaves,
    prufer_decode,
    prufer_encode,
    root_path,
    sample_ua,
    sample_ua_parents,
    tree_cost,
    tree_positivity_check,
    ua_likelihood_exact,
)

# Isomorphism-class counts for trees on n = 1..7 vertices.
TREE_CLASS_COUNTS = [1, 1, 1, 2, 3, 6, 11]


def test_parent_vector_validation() -> None:
    pv = ParentVector(4, (1, 1, 3))
    assert pv.parent(2) == 1 and pv.parent(4) == 3
    with pytest.raises(ValueError):
        ParentVector(3, (1,))
    with pytest.raises(ValueError):
        ParentVector(3, (1, 3))  # parent must precede the child
    # array is 1-indexed with entry 0 padding, so the root contributes
    # a second None
    assert ParentVector(1, ()).to_json_array() == [None, None]
    assert ParentVector(3, (1, 2)).to_json_array() == [None, None, 1, 2]


def test_build_tree_from_instructions() -> None:
    g = build_tree_from_instructions(ParentVector(4, (1, 1, 1)))
    assert is_isomorphic(g, complete_bipartite(1, 3))
    g = build_tree_from_instructions(ParentVector(4, (1, 2, 3)))
    assert g == path_graph(4)


def test_sample_ua_determinism_and_recursiveness() -> None:
    a = sample_ua(15, seed=9)
    b = sample_ua(15, seed=9)
    assert a == b
    assert is_recursive_tree(a)
    assert sample_ua(1, seed=0).n == 1
    for seed in range(50):
        assert is_recursive_tree(sample_ua(10, seed=seed))


def test_is_recursive_tree_rejects_non_recursive_labelings() -> None:
    # a path labeled 2-1-3 makes vertex 1 a child of both later vertices
    g = build_tree_from_instructions(ParentVector(3, (1, 1)))
    assert is_recursive_tree(g)
    from graphforge.graphs import Graph

    star_at_root = Graph.from_pairs(3, [(1, 2), (1, 3)])
    assert is_recursive_tree(star_at_root)
    # vertex 2 would have to attach to the later vertex 3
    skewed = Graph.from_pairs(3, [(2, 3), (1, 3)])
    assert not is_recursive_tree(skewed)
    assert not is_recursive_tree(cycle_graph(3))
    assert not is_recursive_tree(Graph.from_pairs(4, [(2, 3), (3, 4)]))


def test_root_path_and_leaves() -> None:
    g = build_tree_from_instructions(ParentVector(5, (1, 2, 2, 4)))
    assert root_path(g, 5) == (1, 2, 4, 5)
    assert root_path(g, 1) == (1,)
    # leaves are degree-1 vertices, so a root with one child counts too
    assert leaves(g) == (1, 3, 5)


def test_prufer_round_trip_exhaustive() -> None:
    for n in range(2, 7):
        for tree in enumerate_labeled_trees(n):
            assert prufer_decode(prufer_encode(tree)) == tree


def test_prufer_known_codes() -> None:
    assert prufer_encode(path_graph(4)) == (2, 3)
    star = build_tree_from_instructions(ParentVector(4, (1, 1, 1)))
    assert prufer_encode(star) == (1, 1)
    assert prufer_decode(()) == path_graph(2)


def test_prufer_rejects_non_trees() -> None:
    with pytest.raises(ValueError):
        prufer_encode(cycle_graph(4))
    with pytest.raises(ValueError):
        prufer_decode((5, 1))  # label out of range for n = 4


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_prufer_round_trip_property(data) -> None:
    n = data.draw(st.integers(min_value=3, max_value=8))
    code = tuple(data.draw(st.integers(min_value=1, max_value=n)) for _ in range(n - 2))
    tree = prufer_decode(code)
    assert prufer_encode(tree) == code


def test_labeled_tree_counts() -> None:
    for n, want in [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)]:
        assert len(enumerate_labeled_trees(n)) == want


def test_tree_class_counts() -> None:
    for n, want in zip(range(1, 8), TREE_CLASS_COUNTS):
        classes = enumerate_tree_classes(n)
        assert len(classes) == want
        assert len({canonical_form(t) for t in classes}) == want


def test_ua_likelihood_known_values() -> None:
    # single class at n = 3, so it carries all the mass
    (only,) = enumerate_tree_classes(3)
    assert ua_likelihood_exact(only) == 1
    star = build_tree_from_instructions(ParentVector(4, (1, 1, 1)))
    assert ua_likelihood_exact(star) == Fraction(1, 3)
    assert ua_likelihood_exact(path_graph(4)) == Fraction(2, 3)


def test_ua_likelihood_total_mass_and_positivity() -> None:
    for n in range(2, 7):
        total = sum(ua_likelihood_exact(t) for t in enumerate_tree_classes(n))
        assert total == 1, n
    assert all(ua_likelihood_exact(t) > 0 for t in enumerate_tree_classes(7))


def test_tree_positivity_check_sees_hits() -> None:
    star = build_tree_from_instructions(ParentVector(4, (1, 1, 1)))
    hits, estimate = tree_positivity_check(star, samples=3000, seed=2)
    assert hits > 0
    assert abs(estimate - 1 / 3) < 0.1


def test_tree_cost_values() -> None:
    assert index_bits(1) == 1
    assert index_bits(4) == 3
    cost5 = tree_cost(5)
    assert cost5.instruction_bits == 8
    assert cost5.memory_bits == 8
    assert cost5.random_bits == 0
    # running-sum identity and the per-vertex upper bound
    running = 0
    for n in range(2, 2049):
        running += (n - 1).bit_length()
        assert running <= (n - 1) * (n - 1).bit_length()
    assert tree_cost(2048).instruction_bits == running


def test_parent_bit_codec_round_trip() -> None:
    for seed in range(20):
        pv = sample_ua_parents(11, seed=seed)
        assert decode_parent_bits(encode_parent_bits(pv), 11) == pv
    assert encode_parent_bits(ParentVector(2, (1,))) == "0"
    with pytest.raises(ValueError):
        decode_parent_bits("0", 3)  # too short for two parent fields
    with pytest.raises(ValueError):
        decode_parent_bits("011", 3)  # second field decodes to parent 2+1=3
