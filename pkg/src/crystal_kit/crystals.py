"""Closed-form crystal structures on the four parametrization families.

Family table (everything else in this module is driven by it):

  family  data            ε uses              ε-complement uses   step vector
  L       Lusztig         Γ_a with s          Γ*_a with s         r of the pivot
  Lstar   Lusztig         Γ*_a with s         Γ_a with s          r of the pivot
  S       string          Υ_a with s          Γ_a with r          r of the pivot
  Sstar   string          Γ_a with r          Υ_a with s          s of the pivot

The pivot of a lowering step is the ⪯-greatest crossing among maximizers
of the ε form (⪯-least for raising); family Sstar uses the opposite
order.  For starred families the ε here is the function of the *-twisted
crystal structure.  Membership of x in the λ-polytope is the condition
ε-complement ≤ λ_a for every letter a, and the lowering step is cut off
by φ_a = ε_a + ⟨wt, α_a^∨⟩ reaching 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootcore import (
    ReducedWord,
    cartan_entry,
    check_weight,
    root_order,
    root_weight,
    simple_root,
)
from .crossings import crossing_vectors, crossings_for, extremal_maximizer

FAMILIES = ("L", "Lstar", "S", "Sstar")

# family -> (crossing kind, form) for the crystal's own ε
_CLOSED = {
    "L": ("reineke", "s"),
    "Lstar": ("dual_reineke", "s"),
    "S": ("kashiwara", "s"),
    "Sstar": ("reineke", "r"),
}
# family -> (crossing kind, form) for the membership function cutting out B(λ)
_COMPLEMENT = {
    "L": ("dual_reineke", "s"),
    "Lstar": ("reineke", "s"),
    "S": ("reineke", "r"),
    "Sstar": ("kashiwara", "s"),
}
# family -> (step form, order reversed)
_STEP = {
    "L": ("r", False),
    "Lstar": ("r", False),
    "S": ("r", False),
    "Sstar": ("s", True),
}


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _max_form(word: ReducedWord, x: Sequence[int], a: int, kind: str, form: str) -> int:
    coords = tuple(x)
    best = None
    for c in crossings_for(word, a, kind):
        v = crossing_vectors(c)
        vec = v.r if form == "r" else v.s
        val = sum(p * q for p, q in zip(vec, coords))
        if best is None or val > best:
            best = val
    assert best is not None
    return best


def epsilon_closed(family: str, word: ReducedWord, x: Sequence[int], a: int) -> int:
    _check_family(family)
    kind, form = _CLOSED[family]
    return _max_form(word, x, a, kind, form)


def epsilon_complement(family: str, word: ReducedWord, x: Sequence[int], a: int) -> int:
    _check_family(family)
    kind, form = _COMPLEMENT[family]
    return _max_form(word, x, a, kind, form)


def eta_epsilon(word: ReducedWord, x: Sequence[int], a: int) -> int:
    """Direct tropical ε for string data: max over k with i_k = a of η_k."""
    coords = tuple(x)
    letters = word.letters
    vals = [
        coords[k]
        + sum(cartan_entry(letters[k], letters[l]) * coords[l] for l in range(k + 1, len(letters)))
        for k in range(len(letters))
        if letters[k] == a
    ]
    if not vals:
        raise ValueError(f"letter {a} does not occur in {letters}")
    return max(vals)


def weight_of(family: str, word: ReducedWord, x: Sequence[int], lam=None) -> tuple[int, ...]:
    _check_family(family)
    n = word.n
    coords = tuple(x)
    wt = list(check_weight(n, lam)) if lam is not None else [0] * (n - 1)
    if family in ("L", "Lstar"):
        for xk, beta in zip(coords, root_order(word).roots):
            rw = root_weight(n, beta)
            for b in range(n - 1):
                wt[b] -= xk * rw[b]
    else:
        for xk, a in zip(coords, word.letters):
            alpha = simple_root(n, a)
            for b in range(n - 1):
                wt[b] -= xk * alpha[b]
    return tuple(wt)


def phi_value(family: str, word: ReducedWord, lam, x: Sequence[int], a: int) -> int:
    wt = weight_of(family, word, x, lam)
    return epsilon_closed(family, word, x, a) + wt[a - 1]


def step_closed(family: str, word: ReducedWord, lam, x: Sequence[int], a: int, direction: str = "lower"):
    """One crystal operator; None encodes f_a b = 0 / e_a b = 0."""
    _check_family(family)
    if direction not in ("lower", "raise"):
        raise ValueError(f"direction must be 'lower' or 'raise', got {direction!r}")
    coords = tuple(x)
    if direction == "raise" and epsilon_closed(family, word, coords, a) <= 0:
        return None
    if direction == "lower" and lam is not None:
        if phi_value(family, word, lam, coords, a) <= 0:
            return None
    kind, form = _CLOSED[family]
    step_form, reversed_order = _STEP[family]
    lowering = direction == "lower"
    which = ("min" if lowering else "max") if reversed_order else ("max" if lowering else "min")
    pivot = extremal_maximizer(coords, crossings_for(word, a, kind), form, which)
    vec = crossing_vectors(pivot)
    rho = vec.r if step_form == "r" else vec.s
    sign = 1 if lowering else -1
    return tuple(c + sign * v for c, v in zip(coords, rho))


@dataclass(frozen=True)
class CrystalGraph:
    family: str
    word: ReducedWord
    lam: tuple[int, ...]
    # node coordinate vectors, sorted lexicographically
    points: tuple[tuple[int, ...], ...]
    wt: tuple[tuple[int, ...], ...]
    eps: tuple[tuple[int, ...], ...]
    phi: tuple[tuple[int, ...], ...]
    # (u, a, v) with f_a(points[u]) = points[v], sorted
    edges: tuple[tuple[int, int, int], ...]
    root: int

    @property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}


_CRYSTAL_CACHE: dict = {}


def enumerate_crystal(family: str, word: ReducedWord, lam) -> CrystalGraph:
    _check_family(family)
    lam = check_weight(word.n, lam)
    key = (family, word.n, word.letters, lam)
    cached = _CRYSTAL_CACHE.get(key)
    if cached is not None:
        return cached
    n = word.n
    origin = tuple([0] * word.num_roots)
    seen = {origin}
    queue = [origin]
    raw_edges = []
    while queue:
        cur = queue.pop()
        for a in range(1, n):
            nxt = step_closed(family, word, lam, cur, a, "lower")
            if nxt is None:
                continue
            raw_edges.append((cur, a, nxt))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    points = tuple(sorted(seen))
    index = {p: i for i, p in enumerate(points)}
    wt = tuple(weight_of(family, word, p, lam) for p in points)
    eps = tuple(
        tuple(epsilon_closed(family, word, p, a) for a in range(1, n)) for p in points
    )
    phi = tuple(
        tuple(e + w[a - 1] for a, e in zip(range(1, n), erow))
        for erow, w in zip(eps, wt)
    )
    edges = tuple(sorted((index[u], a, index[v]) for u, a, v in raw_edges))
    roots = [i for i, erow in enumerate(eps) if not any(erow)]
    if len(roots) != 1:
        raise RuntimeError(f"expected a unique source node, found {len(roots)}")
    graph = CrystalGraph(family, word, lam, points, wt, eps, phi, edges, roots[0])
    _CRYSTAL_CACHE[key] = graph
    return graph


_BINFTY_CACHE: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def enumerate_binfty(word: ReducedWord, height: int) -> list[tuple[int, ...]]:
    """All Lusztig data with coordinate sum ≤ height (each such vector is one)."""
    if height < 0:
        raise ValueError("height must be nonnegative")
    N = word.num_roots
    key = (N, height)
    cached = _BINFTY_CACHE.get(key)
    if cached is None:
        out = []

        def grow(prefix, budget):
            if len(prefix) == N:
                out.append(tuple(prefix))
                return
            for v in range(budget + 1):
                grow(prefix + [v], budget - v)

        grow([], height)
        cached = tuple(sorted(out))
        _BINFTY_CACHE[key] = cached
    return list(cached)


def graph_json(g: CrystalGraph) -> dict:
    return {
        "family": g.family,
        "word": list(g.word.letters),
        "lambda": list(g.lam),
        "nodes": [{"x": list(p), "wt": list(w)} for p, w in zip(g.points, g.wt)],
        "edges": [[u, a, v] for u, a, v in g.edges],
    }


def graph_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {", "  rankdir=TB;", "  node [shape=box];"]
    for i, (p, w) in enumerate(zip(g.points, g.wt)):
        px = ",".join(str(v) for v in p)
        pw = ",".join(str(v) for v in w)
        lines.append(f'  v{i} [label="({px})\\nwt=({pw})"];')
    for u, a, v in g.edges:
        lines.append(f'  v{u} -> v{v} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
