import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monopath.budget import BudgetExceeded
from monopath.colorings import (
    EdgeColoring,
    check_transitivity_witness,
    color_3uniform_lower,
    color_graph_lower,
    color_kuniform_lower,
    is_transitive,
    random_coloring,
)
from monopath.counting import p1_closed, macmahon, count_rho
from monopath.subsets import colex_rank, subsets_colex

# --- container behaviour ------------------------------------------------------


def test_coloring_validation():
    with pytest.raises(ValueError):
        EdgeColoring(k=3, q=2, N=4, colors=[1, 2, 3])  # wrong edge count
    with pytest.raises(ValueError):
        EdgeColoring(k=3, q=2, N=4, colors=[1, 2, 3, 5])  # color out of range
    with pytest.raises(ValueError):
        EdgeColoring(k=0, q=2, N=4, colors=[])
    # a hypergraph with fewer than k vertices has no edges but is well formed
    empty = EdgeColoring(k=3, q=2, N=2, colors=[])
    assert empty.num_edges == 0


def test_color_of_checks_edges():
    col = random_coloring(3, 2, 6, seed=0)
    with pytest.raises(ValueError):
        col.color_of((2, 1, 3))
    with pytest.raises(ValueError):
        col.color_of((0, 1))
    with pytest.raises(ValueError):
        col.color_of((0, 1, 6))
    assert col.color_of((0, 1, 2)) in (1, 2)


def test_edges_iterate_in_colex_order():
    col = random_coloring(3, 2, 7, seed=3)
    edges = [e for e, _ in col.edges()]
    assert edges == list(subsets_colex(7, 3))
    for e, c in col.edges():
        assert c == col.color_of(e)


def test_json_roundtrip(tmp_path):
    col = color_3uniform_lower(2, 2)
    path = tmp_path / "c.json"
    col.save(path)
    back = EdgeColoring.load(path)
    assert back.k == col.k and back.q == col.q and back.N == col.N
    assert back.colors == col.colors
    assert back.labels == col.labels
    raw = json.loads(path.read_text())
    assert raw["encoding"] == "colex-rank-array"


def test_load_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ValueError):
        EdgeColoring.load(path)
    path.write_text(json.dumps({"k": 3, "q": 2, "N": 6}))
    with pytest.raises(ValueError):
        EdgeColoring.load(path)
    good = color_graph_lower(2, 2).to_json_dict()
    good["encoding"] = "something-else"
    path.write_text(json.dumps(good))
    with pytest.raises(ValueError, match="encoding"):
        EdgeColoring.load(path)


# --- graph construction -------------------------------------------------------


def test_graph_lower_small_by_hand():
    # [2]^2 in lex order: (1,1) (1,2) (2,1) (2,2); first rising coordinate
    col = color_graph_lower(2, 2)
    v = [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert col.N == 4
    assert col.labels == [list(p) for p in v]
    assert col.color_of((0, 1)) == 2  # (1,1) -> (1,2): coordinate 2 rises
    assert col.color_of((0, 3)) == 1  # (1,1) -> (2,2): coordinate 1 rises
    assert col.color_of((1, 2)) == 1  # (1,2) -> (2,1): coordinate 1 rises
    assert col.color_of((2, 3)) == 2


@pytest.mark.parametrize("q,n", [(1, 3), (2, 2), (2, 4), (3, 2)])
def test_graph_lower_shape(q, n):
    col = color_graph_lower(q, n)
    assert col.k == 2 and col.q == q and col.N == n**q
    assert col.meta["params"] == {"q": q, "n": n}


# --- 3-uniform construction ---------------------------------------------------


@pytest.mark.parametrize("q,n,expect_N", [(2, 2, 6), (2, 3, 20), (3, 2, 20)])
def test_3uniform_vertex_counts(q, n, expect_N):
    col = color_3uniform_lower(q, n)
    assert col.N == expect_N
    assert col.k == 3 and col.q == q


def test_3uniform_vertices_sorted_lex():
    col = color_3uniform_lower(2, 3)
    assert col.N == p1_closed(3)
    assert col.labels == sorted(col.labels)
    # vertices are the weakly decreasing sequences in the 3-box
    for lab in col.labels:
        assert all(a >= b for a, b in zip(lab, lab[1:]))
        assert all(0 <= a <= 3 for a in lab)


def test_3uniform_q3_vertices_are_plane_partitions():
    col = color_3uniform_lower(3, 2)
    assert col.N == macmahon(2)
    for lab in col.labels:
        flat = [e for row in lab for e in row]
        assert all(0 <= e <= 2 for e in flat)


def test_3uniform_rectangular_bounds():
    col = color_3uniform_lower(2, bounds=(2, 4))
    assert col.N == 15  # C(2+4, 2) sequences of length 2 bounded by 4
    assert col.meta["params"]["bounds"] == [2, 4]
    with pytest.raises(ValueError):
        color_3uniform_lower(2, 3, bounds=(2, 4))
    with pytest.raises(ValueError):
        color_3uniform_lower(2)


def test_3uniform_budget():
    with pytest.raises(BudgetExceeded):
        color_3uniform_lower(3, 3, budget=10_000)


def test_3uniform_first_difference_rule_spot_check():
    col = color_3uniform_lower(2, 2)
    labs = [tuple(l) for l in col.labels]
    # (0,0) (1,0) (1,1) in colex positions 0,1,2
    a, b, c = labs.index((0, 0)), labs.index((1, 0)), labs.index((1, 1))
    a, b, c = sorted((a, b, c))
    # d((0,0),(1,0)) = 1 < d((1,0),(1,1)) = 2: rising difference, color 1
    assert col.color_of((a, b, c)) == 1
    # (0,0) (1,0) (2,0) all differ first at position 1: flat, color 2
    e = labs.index((2, 0))
    assert col.color_of(tuple(sorted((a, b, e)))) == 2


# --- k-uniform construction ----------------------------------------------------


@pytest.mark.parametrize("k,n", [(4, 2), (5, 2), (4, 3)])
def test_kuniform_vertex_counts(k, n):
    col = color_kuniform_lower(k, n)
    assert col.N == count_rho(k, 2, n)
    assert col.k == k and col.q == 2


@pytest.mark.parametrize("n", [2, 3])
def test_kuniform_k3_equals_3uniform(n):
    a = color_kuniform_lower(3, n)
    b = color_3uniform_lower(2, n)
    assert a.N == b.N
    assert a.colors == b.colors


def test_kuniform_d_colors():
    col = color_kuniform_lower(3, 2, d=3)
    assert col.q == 3
    assert col.N == count_rho(3, 3, 2)


def test_kuniform_fewer_vertices_than_k_is_empty():
    col = color_kuniform_lower(4, 1)
    assert col.N == 3
    assert col.num_edges == 0


# --- random colorings -----------------------------------------------------------


def test_random_coloring_deterministic():
    a = random_coloring(3, 2, 8, seed=99)
    b = random_coloring(3, 2, 8, seed=99)
    c = random_coloring(3, 2, 8, seed=100)
    assert a.colors == b.colors
    assert a.colors != c.colors
    assert a.meta["params"]["seed"] == 99


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=20, deadline=None)
def test_random_coloring_in_range(seed):
    col = random_coloring(4, 3, 6, seed=seed)
    assert all(1 <= c <= 3 for _, c in col.edges())


# --- transitivity ----------------------------------------------------------------


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (2, 4), (3, 2)])
def test_graph_lower_transitive(q, n):
    assert is_transitive(color_graph_lower(q, n)) is True


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2)])
def test_3uniform_transitive(q, n):
    assert is_transitive(color_3uniform_lower(q, n)) is True


def test_kuniform_42_transitive():
    assert is_transitive(color_kuniform_lower(4, 2)) is True


def test_transitivity_witness_checks():
    col = random_coloring(3, 2, 7, seed=5)
    res = is_transitive(col)
    assert res is not True
    assert check_transitivity_witness(col, res)
    assert len(res) == col.k + 1
    # the front and back windows share a color, some inner window differs
    front, back = res[:-1], res[1:]
    assert col.color_of(front) == col.color_of(back)


def test_transitivity_budget():
    with pytest.raises(BudgetExceeded):
        is_transitive(color_3uniform_lower(2, 4), budget=100)


def test_transitive_colorings_have_ordered_paths():
    # on a transitive coloring, any monochromatic (k+1)-clique window chain
    # collapses: spot-check that every consecutive pair of same-colored
    # edges sharing k-1 vertices extends to a same-colored (k+1)-tuple
    col = color_3uniform_lower(2, 2)
    for tup in combinations(range(col.N), 4):
        front = col.color_of(tup[:-1])
        back = col.color_of(tup[1:])
        if front == back:
            for i in range(1, 3):
                window = tup[:i] + tup[i + 1 :]
                assert col.color_of(window) == front
