"""Crossing families on an oriented wiring diagram and their r/s vectors.

Three kinds of crossing are enumerated for a level a:

* "reineke" paths start at the left boundary of wire a and finish on
  reaching the left boundary of wire a+1 (orientation: wires <= a run left
  to right, the rest right to left).
* "dual_reineke" paths are the same with every wire orientation flipped,
  so both boundary events happen on the right.
* "kashiwara" crossings are the tails of the root order: one crossing per
  position k carrying letter a, with vertex columns k..N.

A path visits a crossing either by passing through (stays on its wire;
only allowed when the other wire q satisfies q < p <= a side rules below)
or by turning onto the other wire, continuing in that wire's orientation.
Vertices never repeat.  The visit list keeps path order; the pass rule is:
traveling on p meeting q, pass iff (q <= a and p > q) or (q >= a+1 and
p < q).  Turning is always available.

The order ``⪯`` on path crossings is region containment: γ1 ⪯ γ2 when
every vertex of γ1 lies weakly inside the closed curve formed by γ2's
path plus the wire-a and wire-(a+1) boundary segments.  Membership is
decided by an even-odd count of path strands passing strictly below a
vertex in its column.  On Kashiwara crossings the order is total:
υ(k1) ⪯ υ(k2) iff k2 <= k1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootcore import ReducedWord, RootOrder, cartan_entry, root_order
from .wiring import OrientedWiring, build_wiring, orient

KINDS = ("reineke", "dual_reineke", "kashiwara")


class IncomparableKinds(ValueError):
    """Crossings from different kinds, levels, or words cannot be compared."""


class NoUniqueExtremum(RuntimeError):
    """A maximizer set without a unique extreme element; signals a broken lattice property."""


@dataclass(frozen=True)
class Crossing:
    kind: str
    a: int
    word: ReducedWord
    # columns in visit order; for kashiwara the range start..N
    vertices: tuple[int, ...]
    # (incoming wire, outgoing wire) per visit; empty for kashiwara
    inout: tuple[tuple[int, int], ...]
    # columns where incoming != outgoing, ascending; empty for kashiwara
    turning: tuple[int, ...]
    # kashiwara only: the position k with i_k = a
    start: int | None = None


@dataclass(frozen=True)
class CrossingVectors:
    r: tuple[int, ...]
    s: tuple[int, ...]


_ENUM_CACHE: dict[tuple[tuple[int, ...], int, int, bool], tuple[Crossing, ...]] = {}
_KASH_CACHE: dict[tuple[tuple[int, ...], int, int], tuple[Crossing, ...]] = {}
_VEC_CACHE: dict[Crossing, CrossingVectors] = {}
_REGION_CACHE: dict[Crossing, frozenset[int]] = {}
_LEQ_CACHE: dict[tuple[Crossing, Crossing], bool] = {}


def enumerate_crossings(ow: OrientedWiring) -> list[Crossing]:
    """All admissible paths from wire a to wire a+1, sorted by visit list."""
    diagram = ow.diagram
    word = diagram.word
    a = ow.a
    key = (word.letters, word.n, a, ow.dual)
    cached = _ENUM_CACHE.get(key)
    if cached is not None:
        return list(cached)
    kind = "dual_reineke" if ow.dual else "reineke"
    roots = diagram.roots
    paths: list[tuple[tuple[int, int, int], ...]] = []
    visited: set[int] = set()
    trail: list[tuple[int, int, int]] = []

    def walk(wire: int, idx: int) -> None:
        t = ow.traversal[wire]
        if idx == len(t):
            if wire == a + 1:
                paths.append(tuple(trail))
            return
        col = t[idx]
        if col in visited:
            return
        p, q = roots[col - 1]
        other = q if wire == p else p
        visited.add(col)
        trail.append((col, wire, other))
        walk(other, ow.pos[other][col] + 1)
        trail.pop()
        if (other <= a and wire > other) or (other >= a + 1 and wire < other):
            trail.append((col, wire, wire))
            walk(wire, idx + 1)
            trail.pop()
        visited.remove(col)

    walk(a, 0)
    out = []
    for path in paths:
        verts = tuple(c for c, _, _ in path)
        inout = tuple((i, o) for _, i, o in path)
        turning = tuple(sorted(c for c, i, o in path if i != o))
        out.append(Crossing(kind, a, word, verts, inout, turning))
    out.sort(key=lambda c: c.vertices)
    _ENUM_CACHE[key] = tuple(out)
    return out


def crossings_for(word: ReducedWord, a: int, kind: str) -> list[Crossing]:
    """Kind-string dispatcher used by the CLI and the test harness."""
    if kind == "kashiwara":
        return kashiwara_crossings(root_order(word), a)
    if kind not in ("reineke", "dual_reineke"):
        raise ValueError(f"unknown crossing kind {kind!r}")
    ow = orient(build_wiring(root_order(word)), a, dual=(kind == "dual_reineke"))
    return enumerate_crossings(ow)


def kashiwara_crossings(order: RootOrder, a: int) -> list[Crossing]:
    word = order.word
    if not 1 <= a <= word.n - 1:
        raise ValueError(f"level must be in 1..{word.n - 1}, got {a}")
    key = (word.letters, word.n, a)
    cached = _KASH_CACHE.get(key)
    if cached is not None:
        return list(cached)
    N = word.num_roots
    out = [
        Crossing("kashiwara", a, word, tuple(range(k, N + 1)), (), (), start=k)
        for k in range(1, N + 1)
        if word.letters[k - 1] == a
    ]
    _KASH_CACHE[key] = tuple(out)
    return out


def crossing_vectors(c: Crossing) -> CrossingVectors:
    cached = _VEC_CACHE.get(c)
    if cached is not None:
        return cached
    N = c.word.num_roots
    r = [0] * N
    s = [0] * N
    if c.kind == "kashiwara":
        k = c.start
        r[k - 1] = 1
        s[k - 1] = 1
        for l in range(k + 1, N + 1):
            s[l - 1] = cartan_entry(c.a, c.word.letters[l - 1])
    else:
        roots = root_order(c.word).roots
        for col, (w_in, w_out) in zip(c.vertices, c.inout):
            p, q = roots[col - 1]
            if w_in != w_out:
                r[col - 1] = 1 if w_out > w_in else -1
            if p <= c.a < q:
                s[col - 1] = 1
            elif w_in == w_out:
                s[col - 1] = -1
    vecs = CrossingVectors(tuple(r), tuple(s))
    _VEC_CACHE[c] = vecs
    return vecs


def _region(c: Crossing) -> frozenset[int]:
    """Columns weakly enclosed by the path and its boundary wire segments."""
    cached = _REGION_CACHE.get(c)
    if cached is not None:
        return cached
    word = c.word
    N = word.num_roots
    diagram = build_wiring(root_order(word))
    dual = c.kind == "dual_reineke"
    a = c.a
    # strand = (wire, gap_lo, gap_hi): the path runs along wire over those gaps
    strands: list[tuple[int, int, int]] = []
    first_col = c.vertices[0]
    last_col = c.vertices[-1]
    if dual:
        strands.append((a, first_col, N))
        strands.append((a + 1, last_col, N))
    else:
        strands.append((a, 0, first_col - 1))
        strands.append((a + 1, 0, last_col - 1))
    for (c1, io1), (c2, _) in zip(zip(c.vertices, c.inout), zip(c.vertices[1:], c.inout[1:])):
        strands.append((io1[1], min(c1, c2), max(c1, c2) - 1))
    inside = set(c.vertices)
    for col in range(1, N + 1):
        if col in inside:
            continue
        h = word.letters[col - 1]
        below = 0
        for wire, lo, hi in strands:
            if lo <= col - 1 and col <= hi:
                if diagram.heights[col - 1].index(wire) + 1 <= h:
                    below += 1
        if below % 2 == 1:
            inside.add(col)
    region = frozenset(inside)
    _REGION_CACHE[c] = region
    return region


def crossing_leq(c1: Crossing, c2: Crossing) -> bool:
    if (c1.kind, c1.a, c1.word) != (c2.kind, c2.a, c2.word):
        raise IncomparableKinds(
            f"cannot compare ({c1.kind}, a={c1.a}) with ({c2.kind}, a={c2.a})"
        )
    if c1.kind == "kashiwara":
        return c2.start <= c1.start
    key = (c1, c2)
    cached = _LEQ_CACHE.get(key)
    if cached is None:
        cached = set(c1.vertices) <= _region(c2)
        _LEQ_CACHE[key] = cached
    return cached


def extremal_maximizer(
    x: Sequence[int], crossings: Iterable[Crossing], form: str, which: str
) -> Crossing:
    """The ⪯-least or ⪯-greatest crossing among maximizers of ⟨form, x⟩."""
    pool = list(crossings)
    if not pool:
        raise ValueError("empty crossing set")
    if form not in ("r", "s"):
        raise ValueError(f"form must be 'r' or 's', got {form!r}")
    if which not in ("min", "max"):
        raise ValueError(f"which must be 'min' or 'max', got {which!r}")
    coords = tuple(x)
    vals = []
    for c in pool:
        vec = crossing_vectors(c)
        v = vec.r if form == "r" else vec.s
        vals.append(sum(a * b for a, b in zip(v, coords)))
    best = max(vals)
    maxers = [c for c, v in zip(pool, vals) if v == best]
    if which == "max":
        cands = [m for m in maxers if all(crossing_leq(o, m) for o in maxers)]
    else:
        cands = [m for m in maxers if all(crossing_leq(m, o) for o in maxers)]
    if len(cands) != 1:
        raise NoUniqueExtremum(
            f"{len(cands)} ⪯-{which} elements among {len(maxers)} maximizers at x={coords}"
        )
    return cands[0]


def crossing_json(c: Crossing) -> dict:
    vecs = crossing_vectors(c)
    return {
        "kind": c.kind,
        "a": c.a,
        "vertices": list(c.vertices),
        "turning": list(c.turning),
        "r": list(vecs.r),
        "s": list(vecs.s),
    }
