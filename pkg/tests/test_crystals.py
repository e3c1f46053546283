"""Crystal operators and finite-crystal enumeration for the four families."""

import pytest
from hypothesis import given, settings, strategies as st

from crystal_kit.crystals import (
    FAMILIES,
    enumerate_binfty,
    enumerate_crystal,
    epsilon_closed,
    epsilon_complement,
    eta_epsilon,
    graph_dot,
    graph_json,
    phi_value,
    step_closed,
    weight_of,
)
from crystal_kit.rootcore import ReducedWord, all_reduced_words, weyl_dim

W121 = ReducedWord(3, (1, 2, 1))
W212 = ReducedWord(3, (2, 1, 2))

words3 = st.sampled_from(list(all_reduced_words(3)))
lams2 = st.tuples(st.integers(0, 2), st.integers(0, 2))
family_st = st.sampled_from(FAMILIES)


def test_epsilon_pinned_values():
    assert epsilon_closed("L", W121, (2, 1, 1), 2) == 1
    assert epsilon_complement("L", W121, (1, 1, 0), 1) == 2
    assert epsilon_closed("S", W121, (2, 1, 0), 1) == 1
    assert epsilon_closed("Sstar", W121, (2, 1, 0), 1) == 2
    assert epsilon_complement("Sstar", W121, (2, 1, 0), 1) == 1


def test_eta_matches_closed_epsilon_on_strings():
    # direct tropical formula and the crossing-path formula agree for S
    for x in [(0, 0, 0), (1, 0, 1), (2, 1, 0), (1, 2, 1), (0, 1, 2)]:
        for a in (1, 2):
            assert eta_epsilon(W121, x, a) == epsilon_closed("S", W121, x, a)


def test_eta_requires_letter():
    with pytest.raises(ValueError):
        eta_epsilon(ReducedWord(3, (1, 2, 1)), (0, 0, 0), 3)


def test_weight_pinned():
    assert weight_of("L", W121, (0, 0, 0), (1, 0)) == (1, 0)
    assert weight_of("L", W121, (0, 1, 0), (1, 0)) == (0, -1)
    assert weight_of("S", W121, (1, 1, 0), (1, 0)) == (0, -1)
    assert weight_of("S", W121, (0, 0, 0)) == (0, 0)


def test_points_at_fundamental_weight():
    expect = {
        "L": {(0, 0, 0), (0, 1, 0), (1, 0, 0)},
        "Lstar": {(0, 0, 0), (1, 0, 0), (1, 0, 1)},
        "S": {(0, 0, 0), (1, 0, 0), (1, 1, 0)},
        "Sstar": {(0, 0, 0), (0, 1, 1), (1, 0, 0)},
    }
    for family, pts in expect.items():
        g = enumerate_crystal(family, W121, (1, 0))
        assert set(g.points) == pts, family


def test_sstar_eleven_points():
    g = enumerate_crystal("Sstar", W121, (1, 1))
    assert g.points == (
        (0, 0, 0),
        (0, 1, 0),
        (0, 1, 1),
        (0, 2, 1),
        (1, 0, 0),
        (1, 1, 0),
        (1, 2, 1),
        (2, 1, 0),
    )


def test_graph_frozen_adjoint_rep():
    g = enumerate_crystal("L", W121, (1, 0))
    assert g.points == ((0, 0, 0), (0, 1, 0), (1, 0, 0))
    assert g.root == 0
    assert g.wt == ((1, 0), (0, -1), (-1, 1))
    assert g.eps == ((0, 0), (0, 1), (1, 0))
    assert g.phi == ((1, 0), (0, 0), (0, 1))
    assert g.edges == ((0, 1, 2), (2, 2, 1))


@given(family_st, words3, lams2)
@settings(max_examples=40)
def test_size_matches_weyl_dimension(family, word, lam):
    g = enumerate_crystal(family, word, lam)
    assert len(g.points) == weyl_dim(3, lam)


@given(family_st, words3, lams2)
@settings(max_examples=30)
def test_crystal_axioms(family, word, lam):
    g = enumerate_crystal(family, word, lam)
    idx = g.index
    n = word.n
    for i, x in enumerate(g.points):
        for a in range(1, n):
            eps = g.eps[i][a - 1]
            phi = g.phi[i][a - 1]
            assert eps == epsilon_closed(family, word, x, a)
            assert phi == eps + g.wt[i][a - 1]
            assert eps >= 0 and phi >= 0
            down = step_closed(family, word, lam, x, a, "lower")
            assert (down is None) == (phi == 0)
            if down is not None:
                j = idx[down]
                assert (i, a, j) in g.edges
                assert step_closed(family, word, lam, down, a, "raise") == x
                assert g.eps[j][a - 1] == eps + 1
                assert g.phi[j][a - 1] == phi - 1
            up = step_closed(family, word, lam, x, a, "raise")
            assert (up is None) == (eps == 0)
            if up is not None:
                assert step_closed(family, word, lam, up, a, "lower") == x
    # exactly one node kills every raising operator
    highest = [i for i in range(len(g.points)) if all(e == 0 for e in g.eps[i])]
    assert highest == [g.root]
    assert g.wt[g.root] == lam


@given(words3, lams2)
@settings(max_examples=30)
def test_string_step_moves_one_coordinate(word, lam):
    g = enumerate_crystal("S", word, lam)
    for i, a, j in g.edges:
        diff = [q - p for p, q in zip(g.points[i], g.points[j])]
        assert sorted(diff) == [0] * (len(diff) - 1) + [1]
        k = diff.index(1)
        assert word.letters[k] == a


def test_dual_string_step_is_mixed():
    # plain lowering on the dual-string family moves several coordinates
    g = enumerate_crystal("Sstar", W121, (1, 1))
    assert (g.index[(1, 0, 0)], 2, g.index[(0, 1, 1)]) in g.edges


def test_step_validates_direction():
    with pytest.raises(ValueError):
        step_closed("L", W121, (1, 0), (0, 0, 0), 1, "sideways")
    with pytest.raises(ValueError):
        epsilon_closed("M", W121, (0, 0, 0), 1)


def test_binfty_height_one():
    assert enumerate_binfty(W121, 1) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_binfty_counts_grow():
    a = len(enumerate_binfty(W121, 2))
    b = len(enumerate_binfty(W212, 2))
    assert a == b > 4


def test_graph_json_schema():
    g = enumerate_crystal("L", W121, (1, 0))
    data = graph_json(g)
    assert data["family"] == "L"
    assert data["word"] == [1, 2, 1]
    assert data["lambda"] == [1, 0]
    assert data["nodes"] == [
        {"x": [0, 0, 0], "wt": [1, 0]},
        {"x": [0, 1, 0], "wt": [0, -1]},
        {"x": [1, 0, 0], "wt": [-1, 1]},
    ]
    assert data["edges"] == [[0, 1, 2], [2, 2, 1]]


def test_graph_dot_output():
    g = enumerate_crystal("L", W121, (1, 0))
    dot = graph_dot(g)
    assert dot.startswith("digraph")
    assert 'label="1"' in dot
    assert dot.count("->") == 2
