"""Reduced words for the longest permutation of S_n and their root orders.

Conventions used across the whole package:

* Letters are 1-based.  A word for the longest permutation w0 of S_n is a
  tuple over {1, ..., n-1} of length N = n(n-1)/2.
* Positive roots are pairs (k, l) with 1 <= k < l <= n.  A reduced word
  induces a total order on them: position k of the word is matched with
  the pair of wires that cross at the k-th crossing of the wire sweep.
  Reducedness is equivalent to all N crossing pairs being distinct.
* Weights are integer tuples of length n - 1 in fundamental-weight
  coordinates.  The simple root alpha_a has coordinates equal to column a
  of the Cartan matrix.

Two words are braid neighbours when one is obtained from the other by a
single commutation move (swap adjacent letters a, b with |a - b| >= 2) or
a single braid move ((a, b, a) replaced by (b, a, b) for |a - b| = 1).
Both moves are involutions at a fixed position, which the transition maps
in :mod:`crystal_kit.plmaps` rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class BadLength(ValueError):
    """Word length differs from n(n-1)/2."""


class BadLetter(ValueError):
    """Word contains a letter outside {1, ..., n-1}."""


class NotReduced(ValueError):
    """Word of correct length that repeats a wire crossing."""


class InapplicableMove(ValueError):
    """Braid move requested at a position where its pattern does not match."""


Root = tuple[int, int]

_ROOTS_CACHE: dict[tuple[int, tuple[int, ...]], tuple[Root, ...]] = {}


def _sweep_roots(n: int, letters: tuple[int, ...]) -> tuple[Root, ...]:
    """Run the wire sweep and return the induced root order.

    Wires start at heights 1..n (wire w at height w); the letter a swaps the
    wires at heights a and a+1.  Raises if the data does not describe a
    reduced word for w0.
    """
    key = (n, letters)
    cached = _ROOTS_CACHE.get(key)
    if cached is not None:
        return cached
    if n < 2:
        raise ValueError(f"rank must satisfy n >= 2, got n={n}")
    expect = n * (n - 1) // 2
    if len(letters) != expect:
        raise BadLength(f"need {expect} letters for n={n}, got {len(letters)}")
    wires = list(range(1, n + 1))
    roots: list[Root] = []
    seen: set[Root] = set()
    for a in letters:
        if not isinstance(a, int) or not 1 <= a <= n - 1:
            raise BadLetter(f"letter {a!r} not in 1..{n - 1}")
        p, q = wires[a - 1], wires[a]
        pair = (p, q) if p < q else (q, p)
        if pair in seen:
            raise NotReduced(f"wires {pair} cross twice; word is not reduced")
        seen.add(pair)
        roots.append(pair)
        wires[a - 1], wires[a] = q, p
    result = tuple(roots)
    _ROOTS_CACHE[key] = result
    return result


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word for w0, validated on construction."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        _sweep_roots(self.n, self.letters)

    @property
    def num_roots(self) -> int:
        return self.n * (self.n - 1) // 2

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.letters)


@dataclass(frozen=True)
class RootOrder:
    """A reduced word together with its induced total order on positive roots."""

    word: ReducedWord
    roots: tuple[Root, ...]


def validate_reduced_word(n: int, letters: Iterable[int]) -> ReducedWord:
    return ReducedWord(n, tuple(letters))


def root_order(word: ReducedWord) -> RootOrder:
    return RootOrder(word, _sweep_roots(word.n, word.letters))


def longest_word(n: int) -> ReducedWord:
    """The staircase word (1, 2,1, 3,2,1, ...), a canonical seed for BFS."""
    letters: list[int] = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return ReducedWord(n, tuple(letters))


@dataclass(frozen=True)
class BraidMove:
    """A single move at a 1-based position: 'two_move' or 'three_move'."""

    position: int
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("two_move", "three_move"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.position < 1:
            raise ValueError("move position is 1-based")


def move_letters(letters: tuple[int, ...], move: BraidMove) -> tuple[int, ...]:
    """Apply a braid move to the letter sequence, checking applicability."""
    p = move.position - 1
    out = list(letters)
    if move.kind == "two_move":
        if p + 1 >= len(letters):
            raise InapplicableMove(f"two_move at {move.position} runs off the word")
        a, b = letters[p], letters[p + 1]
        if abs(a - b) < 2:
            raise InapplicableMove(f"letters {a},{b} at {move.position} do not commute")
        out[p], out[p + 1] = b, a
    else:
        if p + 2 >= len(letters):
            raise InapplicableMove(f"three_move at {move.position} runs off the word")
        a, b, c = letters[p], letters[p + 1], letters[p + 2]
        if a != c or abs(a - b) != 1:
            raise InapplicableMove(f"letters {a},{b},{c} at {move.position} are not a braid pattern")
        out[p], out[p + 1], out[p + 2] = b, a, b
    return tuple(out)


def braid_neighbors(word: ReducedWord) -> list[tuple[BraidMove, ReducedWord]]:
    """All words one move away, scanned left to right, two_move before three_move."""
    out: list[tuple[BraidMove, ReducedWord]] = []
    letters = word.letters
    for p in range(1, len(letters) + 1):
        if p < len(letters) and abs(letters[p - 1] - letters[p]) >= 2:
            mv = BraidMove(p, "two_move")
            out.append((mv, ReducedWord(word.n, move_letters(letters, mv))))
        if p + 1 < len(letters) and letters[p - 1] == letters[p + 1] and abs(letters[p - 1] - letters[p]) == 1:
            mv = BraidMove(p, "three_move")
            out.append((mv, ReducedWord(word.n, move_letters(letters, mv))))
    return out


_WORDS_CACHE: dict[int, tuple[ReducedWord, ...]] = {}


def all_reduced_words(n: int) -> tuple[ReducedWord, ...]:
    """Every reduced word for w0 in S_n, found by BFS over braid moves."""
    cached = _WORDS_CACHE.get(n)
    if cached is not None:
        return cached
    seed = longest_word(n)
    seen = {seed.letters}
    queue = [seed]
    while queue:
        w = queue.pop()
        for _, w2 in braid_neighbors(w):
            if w2.letters not in seen:
                seen.add(w2.letters)
                queue.append(w2)
    words = tuple(ReducedWord(n, ls) for ls in sorted(seen))
    _WORDS_CACHE[n] = words
    return words


_PATH_CACHE: dict[tuple[tuple[int, ...], int, bool], tuple[BraidMove, ...]] = {}


def _bfs_path(word: ReducedWord, done) -> tuple[BraidMove, ...]:
    if done(word):
        return ()
    seen = {word.letters}
    frontier: list[tuple[ReducedWord, tuple[BraidMove, ...]]] = [(word, ())]
    while frontier:
        nxt: list[tuple[ReducedWord, tuple[BraidMove, ...]]] = []
        for w, path in frontier:
            for mv, w2 in braid_neighbors(w):
                if w2.letters in seen:
                    continue
                seen.add(w2.letters)
                p2 = path + (mv,)
                if done(w2):
                    return p2
                nxt.append((w2, p2))
        frontier = nxt
    raise RuntimeError("braid graph search exhausted without reaching the target")


def path_to_first(word: ReducedWord, a: int) -> tuple[BraidMove, ...]:
    """A shortest move sequence to some word whose first letter is a."""
    if not 1 <= a <= word.n - 1:
        raise BadLetter(f"letter {a} not in 1..{word.n - 1}")
    key = (word.letters, a, True)
    path = _PATH_CACHE.get(key)
    if path is None:
        path = _bfs_path(word, lambda w: w.letters[0] == a)
        _PATH_CACHE[key] = path
    return path


def path_to_last(word: ReducedWord, a: int) -> tuple[BraidMove, ...]:
    """A shortest move sequence to some word whose last letter is a."""
    if not 1 <= a <= word.n - 1:
        raise BadLetter(f"letter {a} not in 1..{word.n - 1}")
    key = (word.letters, a, False)
    path = _PATH_CACHE.get(key)
    if path is None:
        path = _bfs_path(word, lambda w: w.letters[-1] == a)
        _PATH_CACHE[key] = path
    return path


def star_word(word: ReducedWord) -> ReducedWord:
    """Reverse the letters.  An involution on reduced words.

    Coordinate reversal carries the starred-family data on the reversed
    word onto the plain data on the original word, with weights read
    through lambda -> lambda* (see the verification suites).  Flipping
    every letter a to n - a instead pairs the same polytopes at equal
    weight; the two conventions agree through the letter-flip symmetry.
    """
    return ReducedWord(word.n, tuple(reversed(word.letters)))


def cartan_entry(a: int, b: int) -> int:
    """Type-A Cartan matrix entry for simple roots a and b."""
    if a == b:
        return 2
    if abs(a - b) == 1:
        return -1
    return 0


def simple_root(n: int, a: int) -> tuple[int, ...]:
    """alpha_a in fundamental-weight coordinates (column a of the Cartan matrix)."""
    return tuple(cartan_entry(b, a) for b in range(1, n))


def root_weight(n: int, root: Root) -> tuple[int, ...]:
    """The positive root (k, l) = alpha_k + ... + alpha_{l-1} as a weight."""
    k, l = root
    out = [0] * (n - 1)
    for a in range(k, l):
        for b in range(1, n):
            out[b - 1] += cartan_entry(b, a)
    return tuple(out)


def check_weight(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    """Validate a dominant integral weight given by fundamental coefficients."""
    lam = tuple(int(c) for c in lam)
    if len(lam) != n - 1:
        raise BadLength(f"weight needs {n - 1} coefficients for n={n}, got {len(lam)}")
    if any(c < 0 for c in lam):
        raise ValueError(f"weight coefficients must be nonnegative, got {lam}")
    return lam


def lambda_along_word(word: ReducedWord, lam: Sequence[int]) -> tuple[int, ...]:
    """The vector (lam_{i_1}, ..., lam_{i_N}) reading coefficients along the word."""
    lam = check_weight(word.n, lam)
    return tuple(lam[a - 1] for a in word.letters)


def star_weight(lam: Sequence[int]) -> tuple[int, ...]:
    """Coefficients read backwards; the highest weight of the dual representation."""
    return tuple(reversed(tuple(int(c) for c in lam)))


def weyl_dim(n: int, lam: Sequence[int]) -> int:
    """Dimension of the irreducible sl_n module with highest weight lam.

    Exact product over pairs k < l of (lam_k + ... + lam_{l-1} + l - k)/(l - k).
    """
    lam = check_weight(n, lam)
    total = Fraction(1)
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            total *= Fraction(sum(lam[k - 1:l - 1]) + l - k, l - k)
    assert total.denominator == 1
    return int(total)
