"""Piecewise-linear transition maps and the brute-force crystal oracle.

Everything here works on coordinate vectors attached to a reduced word.
The braid-move recipe on coordinates is the only computational primitive:

* commutation move at p: swap coordinates p, p+1;
* braid move at p: (A, B, C) -> (B+C-m, m, A+B-m) with m = min(A, C).

Both are involutions at a fixed position.  Transitions between arbitrary
words compose moves along a memoized BFS path; path independence is a
tested property, not an assumption.

The oracle reads crystal data off transformed coordinates: with the word
transformed to start with letter a, the first coordinate is ε_a and the
f_a/e_a steps add or subtract 1 there; the starred versions use a word
ending with letter n-a and the last coordinate.  String data are peeled
with the starred operators; `string_inverse` rebuilds and re-peels to
certify its input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootcore import (
    BadLength,
    BraidMove,
    ReducedWord,
    braid_neighbors,
    cartan_entry,
    check_weight,
    move_letters,
    path_to_first,
    path_to_last,
)


class PeelingIncomplete(RuntimeError):
    """String peeling left a nonzero vector; the input was not a Lusztig datum."""


class NotAStringDatum(ValueError):
    """Vector whose rebuild/re-peel round trip does not reproduce it."""


Coords = tuple[int, ...]


@dataclass(frozen=True)
class ParamPoint:
    """A family-tagged parametrization vector (L | Lstar | S | Sstar)."""

    family: str
    word: ReducedWord
    coords: Coords

    def __post_init__(self) -> None:
        if self.family not in ("L", "Lstar", "S", "Sstar"):
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "coords", _check_coords(self.word, self.coords))


@dataclass(frozen=True)
class TransitionPath:
    frm: ReducedWord
    to: ReducedWord
    moves: tuple[BraidMove, ...]


def _check_coords(word: ReducedWord, x: Sequence[int]) -> Coords:
    out = tuple(int(v) for v in x)
    if len(out) != word.num_roots:
        raise BadLength(f"need {word.num_roots} coordinates, got {len(out)}")
    return out


def apply_braid_move(word: ReducedWord, move: BraidMove, x: Sequence[int]):
    """One move on the word and the matching piecewise-linear coordinate change."""
    y = list(_check_coords(word, x))
    new_word = ReducedWord(word.n, move_letters(word.letters, move))
    p = move.position - 1
    if move.kind == "two_move":
        y[p], y[p + 1] = y[p + 1], y[p]
    else:
        A, B, C = y[p], y[p + 1], y[p + 2]
        m = min(A, C)
        y[p], y[p + 1], y[p + 2] = B + C - m, m, A + B - m
    return new_word, tuple(y)


_PATH_CACHE: dict[tuple[int, tuple[int, ...], tuple[int, ...]], tuple[BraidMove, ...]] = {}


def transition_path(frm: ReducedWord, to: ReducedWord) -> TransitionPath:
    """A fixed move sequence from one word to another, found once by BFS."""
    if frm.n != to.n:
        raise ValueError("transition between words of different rank")
    key = (frm.n, frm.letters, to.letters)
    moves = _PATH_CACHE.get(key)
    if moves is None:
        if frm.letters == to.letters:
            moves = ()
        else:
            seen = {frm.letters}
            frontier = [(frm, ())]
            moves = None
            while frontier and moves is None:
                nxt = []
                for w, path in frontier:
                    for mv, w2 in braid_neighbors(w):
                        if w2.letters in seen:
                            continue
                        seen.add(w2.letters)
                        p2 = path + (mv,)
                        if w2.letters == to.letters:
                            moves = p2
                            break
                        nxt.append((w2, p2))
                    if moves is not None:
                        break
                frontier = nxt
            if moves is None:
                raise ValueError(f"no braid path from {frm.letters} to {to.letters}")
        _PATH_CACHE[key] = moves
    return TransitionPath(frm, to, moves)


def phi_transition(frm: ReducedWord, to: ReducedWord, x: Sequence[int]) -> Coords:
    word = frm
    y = _check_coords(frm, x)
    for mv in transition_path(frm, to).moves:
        word, y = apply_braid_move(word, mv, y)
    return y


def _pivot_word(word: ReducedWord, a: int, starred: bool) -> tuple[ReducedWord, tuple[BraidMove, ...]]:
    if starred:
        moves = path_to_last(word, word.n - a)
    else:
        moves = path_to_first(word, a)
    w = word
    letters = word.letters
    for mv in moves:
        letters = move_letters(letters, mv)
    return ReducedWord(word.n, letters), moves


def oracle_epsilon(word: ReducedWord, x: Sequence[int], a: int, starred: bool = False) -> int:
    """ε_a (or ε*_a) read off a transformed Lusztig datum."""
    y = _check_coords(word, x)
    w = word
    _, moves = _pivot_word(word, a, starred)
    for mv in moves:
        w, y = apply_braid_move(w, mv, y)
    return y[-1] if starred else y[0]


def oracle_step(
    word: ReducedWord, x: Sequence[int], a: int, starred: bool = False, direction: str = "lower"
):
    """f_a/e_a (or starred) on B(∞) Lusztig data; raise returns None at ε = 0."""
    if direction not in ("lower", "raise"):
        raise ValueError(f"direction must be 'lower' or 'raise', got {direction!r}")
    y = _check_coords(word, x)
    w = word
    _, moves = _pivot_word(word, a, starred)
    for mv in moves:
        w, y = apply_braid_move(w, mv, y)
    pos = len(y) - 1 if starred else 0
    y = list(y)
    if direction == "lower":
        y[pos] += 1
    else:
        if y[pos] == 0:
            return None
        y[pos] -= 1
    out = tuple(y)
    for mv in reversed(moves):
        # each move kind is an involution at its position
        w, out = apply_braid_move(w, mv, out)
    return out


def _star_shift(word: ReducedWord, x: Coords, a: int, amount: int) -> Coords:
    """Apply (f*_a)^amount (amount > 0) or (e*_a)^{-amount} in one batch."""
    w = word
    y = x
    _, moves = _pivot_word(word, a, starred=True)
    for mv in moves:
        w, y = apply_braid_move(w, mv, y)
    y = list(y)
    y[-1] += amount
    if y[-1] < 0:
        raise PeelingIncomplete(f"over-raising by {-amount} past ε* = {y[-1] - amount}")
    out = tuple(y)
    for mv in reversed(moves):
        w, out = apply_braid_move(w, mv, out)
    return out


_STR_CACHE: dict[tuple[tuple[int, ...], Coords], Coords] = {}
_INV_CACHE: dict[tuple[tuple[int, ...], Coords], Coords] = {}


def string_datum(word: ReducedWord, x: Sequence[int]) -> Coords:
    """Peel ε*-amounts along the word; the Lusztig datum must empty out."""
    y = _check_coords(word, x)
    key = (word.letters, y)
    cached = _STR_CACHE.get(key)
    if cached is not None:
        return cached
    out = []
    cur = y
    for a in word.letters:
        m = oracle_epsilon(word, cur, a, starred=True)
        out.append(m)
        if m:
            cur = _star_shift(word, cur, a, -m)
    if any(cur):
        raise PeelingIncomplete(f"residue {cur} after peeling {y} along {word.letters}")
    result = tuple(out)
    _STR_CACHE[key] = result
    _INV_CACHE[(word.letters, result)] = y
    return result


def string_inverse(word: ReducedWord, x: Sequence[int]) -> Coords:
    """Rebuild the Lusztig datum whose string datum is x; certified by re-peeling."""
    s = _check_coords(word, x)
    key = (word.letters, s)
    cached = _INV_CACHE.get(key)
    if cached is not None:
        return cached
    if any(v < 0 for v in s):
        raise NotAStringDatum(f"negative entries in {s}")
    cur = tuple([0] * word.num_roots)
    for k in range(word.num_roots, 0, -1):
        if s[k - 1]:
            cur = _star_shift(word, cur, word.letters[k - 1], s[k - 1])
    try:
        back = string_datum(word, cur)
    except PeelingIncomplete as exc:
        raise NotAStringDatum(f"{s} failed to re-peel: {exc}") from exc
    if back != s:
        raise NotAStringDatum(f"{s} rebuilds to {cur} whose string datum is {back}")
    _INV_CACHE[key] = cur
    return cur


def psi_transition(frm: ReducedWord, to: ReducedWord, x: Sequence[int]) -> Coords:
    return string_datum(to, phi_transition(frm, to, string_inverse(frm, x)))


def f_linear(word: ReducedWord, x: Sequence[int]) -> Coords:
    """(F x)_k = x_k + Σ_{l>k} c_{i_k, i_l} x_l."""
    y = tuple(int(v) for v in x)
    if len(y) != word.num_roots:
        raise BadLength(f"need {word.num_roots} coordinates, got {len(y)}")
    letters = word.letters
    return tuple(
        y[k] + sum(cartan_entry(letters[k], letters[l]) * y[l] for l in range(k + 1, len(y)))
        for k in range(len(y))
    )


def f_transpose(word: ReducedWord, x: Sequence[int]) -> Coords:
    """(F^t x)_k = x_k + Σ_{l<k} c_{i_k, i_l} x_l."""
    y = tuple(int(v) for v in x)
    if len(y) != word.num_roots:
        raise BadLength(f"need {word.num_roots} coordinates, got {len(y)}")
    letters = word.letters
    return tuple(
        y[k] + sum(cartan_entry(letters[k], letters[l]) * y[l] for l in range(k))
        for k in range(len(y))
    )


def g_affine(word: ReducedWord, lam: Sequence[int], x: Sequence[int]) -> Coords:
    """G(λ)(x) = λ̲ − F(x) with λ̲ = (λ_{i_1}, …, λ_{i_N})."""
    lam = check_weight(word.n, lam)
    fx = f_linear(word, x)
    return tuple(lam[a - 1] - v for a, v in zip(word.letters, fx))


def opp(x: Sequence[int]) -> Coords:
    return tuple(reversed([int(v) for v in x]))
