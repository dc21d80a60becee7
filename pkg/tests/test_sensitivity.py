from __future__ import annotations

import numpy as np
import pytest

from discrep.cluster import Linkage, agnes
from discrep.core import DistanceMatrix, Normalization
from discrep.errors import NormalizationMismatch
from discrep.normalize import min_max_normalize, rank_normalize
from discrep.sensitivity import (
    THEORETICAL_BOUNDS,
    annotate,
    color_value,
    diameter,
    index,
    palette_for,
    resolve_bounds,
)

from oracles import brute_index, random_distance_matrix


def normalized(values, mode=Normalization.MINMAX, space="S"):
    return DistanceMatrix(space, np.asarray(values, dtype=float), mode)


def three_case(upper, space="S"):
    a, b, c = upper
    return normalized([[0, a, b], [a, 0, c], [b, c, 0]], space=space)


# --- diameter ---


def test_singleton_diameter_is_zero():
    d = three_case([0.2, 0.4, 0.6])
    assert diameter([1], d, Linkage.COMPLETE) == 0.0
    assert diameter([1], d, Linkage.AVERAGE) == 0.0


def test_diameter_hand_example():
    d = three_case([0.2, 0.4, 0.6])
    assert diameter([0, 1, 2], d, Linkage.COMPLETE) == 0.6
    assert diameter([0, 1, 2], d, Linkage.AVERAGE) == pytest.approx(0.4, abs=1e-15)


def test_all_equal_matrix_has_zero_diameter():
    d = normalized(np.zeros((4, 4)))
    assert diameter([0, 1, 2, 3], d, Linkage.COMPLETE) == 0.0


# --- index ---


def test_identical_spaces_give_zero_index():
    d = three_case([0.2, 0.4, 0.6])
    for members in ([0], [0, 1], [0, 1, 2]):
        assert index(members, d, d, Linkage.COMPLETE) == 0.0


def test_index_hand_example():
    primary = three_case([0.2, 0.4, 0.6], "P")
    alt = three_case([0.1, 0.1, 0.2], "A")
    got = index([0, 1, 2], primary, alt, Linkage.COMPLETE)
    assert got == pytest.approx(-0.4, abs=1e-15)
    assert got == pytest.approx(brute_index([0, 1, 2], primary.values, alt.values, "complete"))


def test_mixed_normalization_rejected():
    with pytest.raises(NormalizationMismatch):
        index([0, 1], three_case([0.1, 0.2, 0.3]), rank_normalize(
            DistanceMatrix("A", three_case([0.1, 0.2, 0.3]).values)
        ), Linkage.COMPLETE)


# --- annotate ---


def test_identity_annotation_is_all_zero():
    rng = np.random.default_rng(0)
    d = min_max_normalize(DistanceMatrix("S", random_distance_matrix(rng, 6)))
    dend = agnes(d, Linkage.COMPLETE)
    ann = annotate(dend, d, d, Linkage.COMPLETE)
    assert set(ann.per_node.values()) == {0.0}
    assert ann.data_bounds == (0.0, 0.0)


def test_root_index_of_worked_example():
    primary = three_case([0.2, 0.4, 0.6], "P")
    alt = three_case([0.1, 0.1, 0.2], "A")
    dend = agnes(primary, Linkage.COMPLETE)
    ann = annotate(dend, primary, alt, Linkage.COMPLETE)
    assert ann.per_node[dend.root_id] == pytest.approx(-0.4, abs=1e-15)


def test_leaves_are_neutral():
    rng = np.random.default_rng(1)
    p = min_max_normalize(DistanceMatrix("P", random_distance_matrix(rng, 7)))
    a = min_max_normalize(DistanceMatrix("A", random_distance_matrix(rng, 7)))
    dend = agnes(p, Linkage.AVERAGE)
    ann = annotate(dend, p, a, Linkage.AVERAGE)
    for leaf in range(7):
        assert ann.per_node[leaf] == 0.0


def test_antisymmetry_under_role_swap():
    rng = np.random.default_rng(2)
    p = min_max_normalize(DistanceMatrix("P", random_distance_matrix(rng, 8)))
    a = min_max_normalize(DistanceMatrix("A", random_distance_matrix(rng, 8)))
    dend = agnes(p, Linkage.COMPLETE)
    forward = annotate(dend, p, a, Linkage.COMPLETE)
    for node in dend.nodes:
        swapped = index(node.members, a, p, Linkage.COMPLETE)
        assert forward.per_node[node.node_id] == -swapped


def test_index_bounded_and_root_identity_for_minmax():
    rng = np.random.default_rng(3)
    p = min_max_normalize(DistanceMatrix("P", random_distance_matrix(rng, 9)))
    a = min_max_normalize(DistanceMatrix("A", random_distance_matrix(rng, 9)))
    dend = agnes(p, Linkage.COMPLETE)
    ann = annotate(dend, p, a, Linkage.COMPLETE)
    for v in ann.per_node.values():
        assert -1.0 <= v <= 1.0
    # min-max puts the max cell at exactly 1, so the root diameter is 1 in both
    # spaces and the root index is 1 - diameter(root, primary) = 0
    root = dend.root_id
    assert diameter(dend.node(root).members, a, Linkage.COMPLETE) == 1.0
    assert ann.per_node[root] == 1.0 - diameter(dend.node(root).members, p, Linkage.COMPLETE)


@pytest.mark.parametrize("diam_kind", list(Linkage))
def test_annotation_matches_brute_force(diam_kind):
    rng = np.random.default_rng(4)
    for n in (3, 5, 8, 12):
        p = rank_normalize(DistanceMatrix("P", random_distance_matrix(rng, n)))
        a = rank_normalize(DistanceMatrix("A", random_distance_matrix(rng, n)))
        dend = agnes(p, Linkage.COMPLETE)
        ann = annotate(dend, p, a, diam_kind)
        for node in dend.nodes:
            expected = brute_index(node.members, p.values, a.values, diam_kind.value)
            assert abs(ann.per_node[node.node_id] - expected) <= 1e-12


def test_rank_annotation_stable_under_monotone_transform():
    rng = np.random.default_rng(5)
    raw_p = random_distance_matrix(rng, 8)
    raw_a = random_distance_matrix(rng, 8)

    def annotation(p_values, a_values):
        p = rank_normalize(DistanceMatrix("P", p_values))
        a = rank_normalize(DistanceMatrix("A", a_values))
        dend = agnes(p, Linkage.AVERAGE)
        return annotate(dend, p, a, Linkage.AVERAGE).per_node

    base = annotation(raw_p, raw_a)
    transformed = annotation(np.sqrt(raw_p), raw_a**2 + raw_a)
    assert base == transformed


# --- color mapping ---


def test_zero_maps_to_gray_center():
    assert color_value(0.0, THEORETICAL_BOUNDS) == 0.0
    assert color_value(0.0, (-0.1, 0.6)) == 0.0


def test_full_positive_maps_to_one():
    assert color_value(1.0, THEORETICAL_BOUNDS) == 1.0


def test_two_sided_data_bounds():
    assert color_value(0.3, (-0.1, 0.6)) == pytest.approx(0.5)
    assert color_value(-0.05, (-0.1, 0.6)) == pytest.approx(-0.5)


def test_clamped_beyond_bounds():
    assert color_value(0.9, (-0.1, 0.6)) == 1.0
    assert color_value(-0.4, (-0.1, 0.6)) == -1.0


def test_degenerate_data_bounds_fall_back():
    primary = three_case([0.2, 0.4, 0.6], "P")
    dend = agnes(primary, Linkage.COMPLETE)
    ann = annotate(dend, primary, primary, Linkage.COMPLETE)
    assert resolve_bounds(ann, "data") == THEORETICAL_BOUNDS
    assert resolve_bounds(ann, "theoretical") == THEORETICAL_BOUNDS


def test_palette_tracks_normalization():
    assert palette_for(Normalization.RANK) == "rankRedBlue"
    assert palette_for(Normalization.MINMAX) == "minmaxPurpleGreen"
