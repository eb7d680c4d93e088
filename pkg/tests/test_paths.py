from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monopath.budget import BudgetExceeded
from monopath.colorings import (
    EdgeColoring,
    color_3uniform_lower,
    color_graph_lower,
    color_kuniform_lower,
    random_coloring,
)
from monopath.paths import (
    Certificate,
    LabelEscape,
    MonotonePath,
    downset_labels,
    injectivity_certificate,
    label_vectors,
    longest_mono,
    validate_path,
)
from helpers import brute_longest, brute_witness


def test_path_type_validation():
    MonotonePath(k=3, color=1, vertices=(0, 2, 5, 7))
    with pytest.raises(ValueError):
        MonotonePath(k=3, color=1, vertices=(0, 2))
    with pytest.raises(ValueError):
        MonotonePath(k=3, color=1, vertices=(0, 2, 2, 5))
    assert MonotonePath(k=3, color=1, vertices=(0, 2, 5, 7)).length == 2


def test_validate_path():
    col = color_3uniform_lower(2, 2)
    scan = longest_mono(col)
    for c, w in scan.witnesses.items():
        assert w.color == c
        assert validate_path(col, w)
    bogus = MonotonePath(k=3, color=1, vertices=(0, 1, 2, 3, 4, 5))
    assert not validate_path(col, bogus)


# --- DP against the brute-force oracle -----------------------------------------


@pytest.mark.parametrize("k,q,N,seed", [
    (2, 2, 7, 0), (2, 3, 6, 1), (3, 2, 7, 2), (3, 2, 8, 3), (3, 3, 7, 4),
    (4, 2, 8, 5), (4, 2, 9, 6), (5, 2, 9, 7),
])
def test_longest_matches_brute(k, q, N, seed):
    col = random_coloring(k, q, N, seed=seed)
    scan = longest_mono(col)
    assert scan.per_color_max == brute_longest(col)
    for c, w in scan.witnesses.items():
        if w is not None:
            assert validate_path(col, w)
            assert w.length == scan.per_color_max[c]


@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=2, max_value=4))
@settings(max_examples=30, deadline=None)
def test_longest_matches_brute_random(seed, k):
    col = random_coloring(k, 2, k + 4, seed=seed)
    assert longest_mono(col, want_witnesses=False).per_color_max == brute_longest(col)


def test_witnesses_are_lex_min():
    for seed in range(12):
        col = random_coloring(3, 2, 7, seed=seed)
        scan = longest_mono(col)
        for c in (1, 2):
            w = scan.witnesses[c]
            if w is None:
                continue
            assert w.vertices == brute_witness(col, c, scan.per_color_max[c])


def test_witnesses_are_lex_min_graph_and_k4():
    col = color_graph_lower(2, 3)
    scan = longest_mono(col)
    for c in (1, 2):
        assert scan.witnesses[c].vertices == brute_witness(col, c, 2)
    col = random_coloring(4, 2, 9, seed=11)
    scan = longest_mono(col)
    for c in (1, 2):
        w = scan.witnesses[c]
        assert w.vertices == brute_witness(col, c, scan.per_color_max[c])


def test_empty_coloring_scans_to_zero():
    col = EdgeColoring(k=3, q=2, N=2, colors=[])
    scan = longest_mono(col)
    assert scan.per_color_max == {1: 0, 2: 0}
    assert scan.witnesses == {1: None, 2: None}


def test_longest_budget():
    with pytest.raises(BudgetExceeded):
        longest_mono(color_3uniform_lower(2, 3), budget=50)


# --- extremal colorings meet their bound exactly --------------------------------


@pytest.mark.parametrize("q,n", [(1, 4), (2, 3), (3, 2), (2, 4)])
def test_graph_lower_is_extremal(q, n):
    scan = longest_mono(color_graph_lower(q, n))
    assert all(scan.per_color_max[c] == n - 1 for c in range(1, q + 1))


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (2, 4), (3, 2)])
def test_3uniform_lower_is_extremal(q, n):
    scan = longest_mono(color_3uniform_lower(q, n))
    assert all(scan.per_color_max[c] == n - 1 for c in range(1, q + 1))


def test_3uniform_rectangular_bounds_per_color():
    col = color_3uniform_lower(2, bounds=(2, 4))
    scan = longest_mono(col)
    assert scan.per_color_max[1] <= 1
    assert scan.per_color_max[2] <= 3


@pytest.mark.parametrize("k,n", [(4, 2), (5, 2), (4, 3)])
def test_kuniform_lower_is_extremal(k, n):
    scan = longest_mono(color_kuniform_lower(k, n))
    assert all(scan.per_color_max[c] == n - 1 for c in (1, 2))


# --- window labels ---------------------------------------------------------------


@pytest.mark.parametrize("make", [
    lambda: color_graph_lower(2, 3),
    lambda: color_3uniform_lower(2, 3),
    lambda: color_kuniform_lower(4, 2),
    lambda: random_coloring(3, 2, 7, seed=1),
])
def test_label_vectors_satisfy_extension(make):
    col = make()
    labels = label_vectors(col)
    for edge, c in col.edges():
        front, back = edge[:-1], edge[1:]
        assert labels[back][c - 1] > labels[front][c - 1]


def test_label_vectors_bound_on_extremal():
    n = 3
    col = color_3uniform_lower(2, n)
    labels = label_vectors(col)
    assert all(1 <= x <= n for lab in labels.values() for x in lab)
    assert len(labels) == len(list(combinations(range(col.N), 2)))


def test_downset_labels_distinct_on_extremal():
    col = color_3uniform_lower(2, 3)
    labs = downset_labels(col, 3, 1)
    assert len(labs) == col.N
    assert len(set(labs.values())) == col.N


def test_downset_labels_are_ideals():
    # level-j labels are masks over the order-(k-j) universe
    from monopath.universes import build_universe

    col = color_kuniform_lower(4, 2)
    for level in (1, 2):
        pred = build_universe(col.k - level, 2, 2).pred_masks()
        labs = downset_labels(col, 2, level)
        assert labs
        for mask in labs.values():
            rest = mask
            while rest:
                i = (rest & -rest).bit_length() - 1
                assert pred[i] & ~mask == 0
                rest &= rest - 1


def test_downset_labels_escape():
    # a coloring with a long path pushes some window label past n
    col = random_coloring(3, 2, 12, seed=0)
    assert longest_mono(col, want_witnesses=False).overall_max > 2
    with pytest.raises(LabelEscape) as err:
        downset_labels(col, 2, 1)
    assert err.value.entry > 2


# --- pigeonhole certificates ------------------------------------------------------


def test_certificate_distinct_on_extremal():
    cert = injectivity_certificate(color_3uniform_lower(2, 3), 3)
    assert cert.status == "distinct"
    assert cert.path is None and cert.collision is None


def test_certificate_path_when_crowded():
    # one vertex above the extremal size forces a monotone path of length n
    col = random_coloring(3, 2, 7, seed=42)
    cert = injectivity_certificate(col, 2)
    assert cert.status == "path"
    assert cert.path.length >= 2
    assert validate_path(col, cert.path)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=60, deadline=None)
def test_certificate_never_collides_above_threshold(seed):
    col = random_coloring(3, 2, 7, seed=seed)
    cert = injectivity_certificate(col, 2)
    assert cert.status == "path"
    assert validate_path(col, cert.path)
    assert cert.path.length >= 2


def test_certificate_on_k4(tmp_path):
    col = random_coloring(4, 2, 10, seed=9)
    cert = injectivity_certificate(col, 2)
    if cert.status == "path":
        assert validate_path(col, cert.path)
    else:
        assert cert.status == "distinct"
        assert longest_mono(col, want_witnesses=False).overall_max < 2


def test_certificate_type_validation():
    with pytest.raises(ValueError):
        Certificate(status="unknown", path=None, collision=None)
