"""Braid-move coordinate maps, transition maps, and the peeling oracle."""

import pytest
from hypothesis import given, strategies as st

from crystal_kit.plmaps import (
    NotAStringDatum,
    apply_braid_move,
    f_linear,
    f_transpose,
    g_affine,
    opp,
    oracle_epsilon,
    oracle_step,
    phi_transition,
    psi_transition,
    string_datum,
    string_inverse,
)
from crystal_kit.rootcore import BraidMove, ReducedWord, all_reduced_words, braid_neighbors

W121 = ReducedWord(3, (1, 2, 1))
W212 = ReducedWord(3, (2, 1, 2))

any_word = st.sampled_from(list(all_reduced_words(3)) + list(all_reduced_words(4)))
coords3 = st.tuples(*[st.integers(0, 6)] * 3)
coords6 = st.tuples(*[st.integers(0, 6)] * 6)


def coords_for(word):
    return st.tuples(*[st.integers(0, 6)] * word.num_roots)


def test_three_move_coordinates():
    _, y = apply_braid_move(W121, BraidMove(1, "three_move"), (2, 1, 1))
    # (A,B,C) -> (B+C-m, m, A+B-m) with m = min(A,C)
    assert y == (1, 1, 2)


def test_two_move_coordinates():
    w = ReducedWord(4, (1, 3, 2, 1, 3, 2))
    out, y = apply_braid_move(w, BraidMove(1, "two_move"), (5, 4, 3, 2, 1, 0))
    assert out.letters == (3, 1, 2, 1, 3, 2)
    assert y == (4, 5, 3, 2, 1, 0)


def test_phi_pinned_values():
    assert phi_transition(W121, W212, (2, 1, 1)) == (1, 1, 2)
    assert phi_transition(W121, W212, (1, 1, 0)) == (1, 0, 2)
    assert phi_transition(W121, W121, (3, 1, 4)) == (3, 1, 4)


@given(any_word, st.data())
def test_phi_roundtrip(word, data):
    x = data.draw(coords_for(word))
    for _, other in braid_neighbors(word):
        assert phi_transition(other, word, phi_transition(word, other, x)) == x


@given(any_word, st.data())
def test_phi_preserves_root_weight(word, data):
    """The weighted sum over roots is the same in any direction."""
    from crystal_kit.rootcore import root_order, root_weight

    x = data.draw(coords_for(word))
    n = word.n

    def wsum(w, y):
        roots = root_order(w).roots
        out = [0] * (n - 1)
        for k, v in enumerate(y):
            rw = root_weight(n, roots[k])
            out = [o + v * r for o, r in zip(out, rw)]
        return tuple(out)

    for _, other in braid_neighbors(word):
        assert wsum(other, phi_transition(word, other, x)) == wsum(word, x)


def test_oracle_epsilon_examples():
    assert oracle_epsilon(W121, (2, 1, 1), 2, starred=False) == 1
    assert oracle_epsilon(W121, (1, 0, 0), 1, starred=False) == 1
    assert oracle_epsilon(W121, (1, 1, 0), 1, starred=True) == 2


def test_oracle_step_examples():
    assert oracle_step(W121, (0, 0, 0), 2, starred=False, direction="lower") == (0, 0, 1)
    assert oracle_step(W121, (0, 0, 0), 1, starred=False, direction="raise") is None
    assert oracle_step(W121, (0, 0, 0), 1, starred=True, direction="lower") == (1, 0, 0)


@given(any_word, st.data(), st.booleans())
def test_oracle_step_inverse(word, data, starred):
    x = data.draw(coords_for(word))
    for a in range(1, word.n):
        down = oracle_step(word, x, a, starred=starred, direction="lower")
        assert down is not None
        assert oracle_step(word, down, a, starred=starred, direction="raise") == x
        up = oracle_step(word, x, a, starred=starred, direction="raise")
        eps = oracle_epsilon(word, x, a, starred=starred)
        assert (up is None) == (eps == 0)
        if up is not None:
            assert oracle_step(word, up, a, starred=starred, direction="lower") == x


def test_string_datum_pinned():
    assert string_datum(W121, (0, 0, 0)) == (0, 0, 0)
    assert string_datum(W121, (1, 0, 1)) == (0, 1, 1)


@given(any_word, st.data())
def test_string_roundtrip(word, data):
    x = data.draw(coords_for(word))
    s = string_datum(word, x)
    assert string_inverse(word, s) == x


def test_string_inverse_rejects_noise():
    with pytest.raises(NotAStringDatum):
        string_inverse(W121, (0, 0, 5))
    with pytest.raises(NotAStringDatum):
        string_inverse(W121, (-1, 0, 0))


def test_wrong_arity_rejected():
    from crystal_kit.rootcore import BadLength

    with pytest.raises(BadLength):
        phi_transition(W121, W212, (1, 2))
    with pytest.raises(BadLength):
        string_datum(W121, (1, 2, 3, 4))


def test_transition_path_endpoints():
    from crystal_kit.plmaps import transition_path

    from crystal_kit.rootcore import move_letters

    path = transition_path(W121, W212)
    assert path.frm.letters == (1, 2, 1)
    assert path.to.letters == (2, 1, 2)
    cur = path.frm.letters
    for mv in path.moves:
        cur = move_letters(cur, mv)
    assert cur == path.to.letters


@given(any_word, st.data())
def test_psi_matches_string_of_phi(word, data):
    x = data.draw(coords_for(word))
    for _, other in braid_neighbors(word):
        lhs = psi_transition(word, other, string_datum(word, x))
        rhs = string_datum(other, phi_transition(word, other, x))
        assert lhs == rhs


@given(any_word, st.data())
def test_transpose_is_adjoint(word, data):
    x = data.draw(coords_for(word))
    y = data.draw(coords_for(word))
    fx = f_linear(word, x)
    fty = f_transpose(word, y)
    assert sum(p * q for p, q in zip(fx, y)) == sum(p * q for p, q in zip(x, fty))


def test_linear_map_values():
    assert f_linear(W121, (1, 0, 1)) == (3, -1, 1)
    assert f_transpose(W121, (1, 0, 1)) == (1, -1, 3)
    assert g_affine(W121, (1, 1), (1, 0, 1)) == (-2, 2, 0)
    assert g_affine(W121, (1, 1), (0, 0, 0)) == (1, 1, 1)


def test_opp_reverses():
    assert opp((1, 2, 3)) == (3, 2, 1)
    assert opp(opp((4, 0, 2, 9))) == (4, 0, 2, 9)


# the involution intertwines starred and plain operators; stated on the
# letter-flipped reversal the letters match up directly, on the plain
# reversal they flip through a -> n-a
@given(any_word, st.data())
def test_star_operators_through_reversal(word, data):
    x = data.draw(coords_for(word))
    n = word.n
    rev = ReducedWord(n, tuple(reversed(word.letters)))
    flip_rev = ReducedWord(n, tuple(n - a for a in reversed(word.letters)))
    for a in range(1, n):
        es = oracle_epsilon(word, x, a, starred=True)
        assert es == oracle_epsilon(flip_rev, opp(x), a, starred=False)
        assert es == oracle_epsilon(rev, opp(x), n - a, starred=False)
        fs = oracle_step(word, x, a, starred=True, direction="lower")
        assert opp(fs) == oracle_step(flip_rev, opp(x), a, starred=False, direction="lower")
        assert opp(fs) == oracle_step(rev, opp(x), n - a, starred=False, direction="lower")
