"""Crossing paths and their r/s vectors, pinned against hand computations."""

from hypothesis import given, strategies as st

from crystal_kit.crossings import (
    KINDS,
    crossing_leq,
    crossing_vectors,
    crossings_for,
    extremal_maximizer,
    kashiwara_crossings,
)
from crystal_kit.plmaps import f_linear, f_transpose
from crystal_kit.rootcore import ReducedWord, all_reduced_words, root_order, star_word

W121 = ReducedWord(3, (1, 2, 1))
W212 = ReducedWord(3, (2, 1, 2))
GOLDEN = ReducedWord(5, (2, 1, 2, 3, 4, 3, 2, 1, 3, 2))


def by_vertices(crossings):
    return {c.vertices: crossing_vectors(c) for c in crossings}


# every (vertices -> (r, s)) table below was computed by hand on the
# three-letter diagrams before the implementation existed

def test_left_paths_121():
    got = by_vertices(crossings_for(W121, 1, "reineke"))
    assert set(got) == {(1,)}
    assert got[(1,)].r == (1, 0, 0)
    assert got[(1,)].s == (1, 0, 0)

    got = by_vertices(crossings_for(W121, 2, "reineke"))
    assert set(got) == {(1, 2), (1, 3, 2)}
    assert got[(1, 2)].r == (-1, 1, 0)
    assert got[(1, 2)].s == (0, 1, 0)
    assert got[(1, 3, 2)].r == (0, 0, 1)
    assert got[(1, 3, 2)].s == (-1, 1, 1)


def test_right_paths_121():
    got = by_vertices(crossings_for(W121, 1, "dual_reineke"))
    assert set(got) == {(2, 1, 3), (2, 3)}
    assert got[(2, 1, 3)].r == (1, 0, 0)
    assert got[(2, 1, 3)].s == (1, 1, -1)
    assert got[(2, 3)].r == (0, 1, -1)
    assert got[(2, 3)].s == (0, 1, 0)

    got = by_vertices(crossings_for(W121, 2, "dual_reineke"))
    assert set(got) == {(3,)}
    assert got[(3,)].r == (0, 0, 1)
    assert got[(3,)].s == (0, 0, 1)


def test_suffix_paths_121():
    got = by_vertices(crossings_for(W121, 1, "kashiwara"))
    assert set(got) == {(1, 2, 3), (3,)}
    assert got[(1, 2, 3)].r == (1, 0, 0)
    assert got[(1, 2, 3)].s == (1, -1, 2)
    assert got[(3,)].r == (0, 0, 1)
    assert got[(3,)].s == (0, 0, 1)

    got = by_vertices(crossings_for(W121, 2, "kashiwara"))
    assert set(got) == {(2, 3)}
    assert got[(2, 3)].s == (0, 1, -1)


def test_left_paths_212():
    got = by_vertices(crossings_for(W212, 1, "reineke"))
    assert set(got) == {(2, 1), (2, 3, 1)}
    assert got[(2, 1)].r == (-1, 1, 0)
    assert got[(2, 1)].s == (0, 1, 0)
    assert got[(2, 3, 1)].r == (0, 0, 1)
    assert got[(2, 3, 1)].s == (-1, 1, 1)

    got = by_vertices(crossings_for(W212, 2, "reineke"))
    assert set(got) == {(1,)}
    assert got[(1,)].r == (1, 0, 0)
    assert got[(1,)].s == (1, 0, 0)


def test_golden_crossing():
    hits = [c for c in crossings_for(GOLDEN, 3, "reineke") if c.vertices == (1, 2, 3, 7, 9, 6, 4)]
    assert len(hits) == 1
    c = hits[0]
    assert c.turning == (2, 3, 9)
    v = crossing_vectors(c)
    assert v.r == (0, -1, 1, 0, 0, 0, 0, 0, 1, 0)
    assert v.s == (-1, 0, 0, 1, 0, -1, 1, 0, 1, 0)


def test_kashiwara_start_positions():
    for c in kashiwara_crossings(root_order(GOLDEN), 3):
        assert GOLDEN.letters[c.start - 1] == 3
        assert c.vertices == tuple(range(c.start, GOLDEN.num_roots + 1))
        v = crossing_vectors(c)
        assert v.r[c.start - 1] == 1
        assert sum(abs(x) for x in v.r) == 1


words_upto_4 = st.sampled_from(list(all_reduced_words(3)) + list(all_reduced_words(4)))
letters = st.integers(1, 3)


@given(words_upto_4, letters)
def test_row_sums_left(word, a):
    """Bucketing s by the letter at each position gives an indicator of a."""
    if a >= word.n:
        a = word.n - 1
    for c in crossings_for(word, a, "reineke"):
        s = crossing_vectors(c).s
        for b in range(1, word.n):
            total = sum(s[k] for k in range(word.num_roots) if word.letters[k] == b)
            assert total == (1 if b == a else 0)


@given(words_upto_4, letters)
def test_row_sums_right(word, a):
    """Right-boundary paths bucket to the flipped letter n-a."""
    if a >= word.n:
        a = word.n - 1
    for c in crossings_for(word, a, "dual_reineke"):
        s = crossing_vectors(c).s
        for b in range(1, word.n):
            total = sum(s[k] for k in range(word.num_roots) if word.letters[k] == b)
            assert total == (1 if b == word.n - a else 0)


@given(words_upto_4, letters)
def test_transpose_turns_s_into_r(word, a):
    if a >= word.n:
        a = word.n - 1
    for c in crossings_for(word, a, "dual_reineke"):
        v = crossing_vectors(c)
        assert f_transpose(word, v.s) == v.r


@given(words_upto_4, letters)
def test_linear_turns_s_into_r(word, a):
    if a >= word.n:
        a = word.n - 1
    for c in crossings_for(word, a, "reineke"):
        v = crossing_vectors(c)
        assert f_linear(word, v.s) == v.r


@given(words_upto_4, letters)
def test_kashiwara_transpose_identity(word, a):
    if a >= word.n:
        a = word.n - 1
    for c in crossings_for(word, a, "kashiwara"):
        v = crossing_vectors(c)
        assert f_transpose(word, v.r) == v.s


@given(words_upto_4, letters)
def test_reversed_word_pairs_path_families(word, a):
    """s-vectors of left paths on the reversed word, read backwards, are the
    s-vectors of right paths at the flipped letter on the original word."""
    if a >= word.n:
        a = word.n - 1
    rev = star_word(word)
    left = {tuple(reversed(crossing_vectors(c).s)) for c in crossings_for(rev, a, "reineke")}
    right = {crossing_vectors(c).s for c in crossings_for(word, word.n - a, "dual_reineke")}
    assert left == right


@given(words_upto_4, letters)
def test_crossing_order_is_partial(word, a):
    if a >= word.n:
        a = word.n - 1
    for kind in KINDS:
        cs = crossings_for(word, a, kind)
        for c in cs:
            assert crossing_leq(c, c)
        for c1 in cs:
            for c2 in cs:
                if crossing_leq(c1, c2) and crossing_leq(c2, c1):
                    assert c1.vertices == c2.vertices


def test_extremal_maximizer_picks_unique_extreme():
    cs = crossings_for(W121, 2, "reineke")
    x = (1, 1, 1)
    # both paths give <s,x> = 1; the comparable pair has a unique min and max
    lo = extremal_maximizer(x, cs, "s", "min")
    hi = extremal_maximizer(x, cs, "s", "max")
    assert lo.vertices == (1, 2)
    assert hi.vertices == (1, 3, 2)
    assert crossing_leq(lo, hi)
    # with a strict maximizer both extremes collapse to it
    only = extremal_maximizer((0, 1, 1), cs, "s", "min")
    assert only.vertices == (1, 3, 2)
    assert extremal_maximizer((0, 1, 1), cs, "s", "max").vertices == (1, 3, 2)
