"""Wiring diagrams for reduced words, plus per-letter wire orientations.

The diagram of a word with N letters has N + 1 column gaps numbered 0..N;
gap 0 is left of the first crossing.  `heights[g]` lists, bottom to top,
which wire sits at each height in gap g.  Wire w enters on the left at
height w and exits on the right at height n + 1 - w.  Column k hosts the
crossing of the wire pair `roots[k-1]`; columns are identified with
vertex indices, geometric x-coordinates are never materialized.

An orientation is the traversal data used by the crossing enumeration:
given a level a, each wire is walked either left to right or right to
left.  Plain orientation: wires 1..a run left to right, the rest right to
left.  Dual orientation flips every wire.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootcore import ReducedWord, Root, RootOrder, root_order


@dataclass(frozen=True)
class WiringDiagram:
    order: RootOrder
    # heights[g][h] = wire at height h+1 in gap g, for g in 0..N
    heights: tuple[tuple[int, ...], ...]
    # wire_cols[w] = columns along wire w, in left-to-right geometric order
    wire_cols: dict[int, tuple[int, ...]]

    @property
    def word(self) -> ReducedWord:
        return self.order.word

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.order.roots

    @property
    def n(self) -> int:
        return self.order.word.n


_WIRING_CACHE: dict[tuple[int, tuple[int, ...]], WiringDiagram] = {}


def build_wiring(order: RootOrder) -> WiringDiagram:
    word = order.word
    key = (word.n, word.letters)
    cached = _WIRING_CACHE.get(key)
    if cached is not None:
        return cached
    wires = list(range(1, word.n + 1))
    heights = [tuple(wires)]
    cols: dict[int, list[int]] = {w: [] for w in wires}
    for k, a in enumerate(word.letters, start=1):
        p, q = wires[a - 1], wires[a]
        cols[p].append(k)
        cols[q].append(k)
        wires[a - 1], wires[a] = q, p
        heights.append(tuple(wires))
    diagram = WiringDiagram(order, tuple(heights), {w: tuple(c) for w, c in cols.items()})
    _WIRING_CACHE[key] = diagram
    return diagram


def wiring_of(word: ReducedWord) -> WiringDiagram:
    return build_wiring(root_order(word))


@dataclass(frozen=True)
class OrientedWiring:
    diagram: WiringDiagram
    a: int
    dual: bool
    # ltr[w] = True when wire w is traversed left to right
    ltr: dict[int, bool]
    # traversal[w] = columns of wire w in traversal order
    traversal: dict[int, tuple[int, ...]]
    # pos[w][col] = index of col within traversal[w]
    pos: dict[int, dict[int, int]]

    @property
    def n(self) -> int:
        return self.diagram.n


def orient(diagram: WiringDiagram, a: int, dual: bool = False) -> OrientedWiring:
    n = diagram.n
    if not 1 <= a <= n - 1:
        raise ValueError(f"orientation level must be in 1..{n - 1}, got {a}")
    ltr = {w: (w <= a) != dual for w in range(1, n + 1)}
    traversal: dict[int, tuple[int, ...]] = {}
    pos: dict[int, dict[int, int]] = {}
    for w in range(1, n + 1):
        cols = diagram.wire_cols[w]
        t = cols if ltr[w] else tuple(reversed(cols))
        traversal[w] = t
        pos[w] = {c: k for k, c in enumerate(t)}
    return OrientedWiring(diagram, a, dual, ltr, traversal, pos)


def to_dot(diagram: WiringDiagram, a: int | None = None, dual: bool = False) -> str:
    """Graphviz rendering; edges follow the orientation when a level is given."""
    n = diagram.n
    ltr = {w: (w <= a) != dual for w in range(1, n + 1)} if a is not None else None
    lines = ["digraph wiring {", "  rankdir=LR;", "  node [shape=plaintext];"]
    for w in range(1, n + 1):
        lines.append(f'  L{w} [label="L{w}"];')
        lines.append(f'  R{w} [label="R{w}"];')
    for k, (p, q) in enumerate(diagram.roots, start=1):
        lines.append(f'  x{k} [shape=point, xlabel="({p},{q})@{k}"];')
    for w in range(1, n + 1):
        path = [f"L{w}"] + [f"x{c}" for c in diagram.wire_cols[w]] + [f"R{n + 1 - w}"]
        forward = ltr is None or ltr[w]
        hops = list(zip(path, path[1:])) if forward else [(b, c) for c, b in zip(path, path[1:])]
        attr = "" if ltr is None else f' [color="{"black" if ltr[w] else "gray50"}"]'
        for u, v in hops:
            lines.append(f"  {u} -> {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
