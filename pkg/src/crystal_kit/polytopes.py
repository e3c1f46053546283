"""Inequality systems cutting out the parametrization cones and polytopes.

Every system is a pair of row families over the coordinates x_1..x_N:

* cone rows c, meaning <c, x> >= 0, cutting out the lambda-independent cone;
* highest-weight rows (c, m), meaning <c, x> <= <m, lambda>, where m is a
  row of fundamental-weight coefficients.

Rows per family (gamma runs over path crossings, upsilon over diagonal ones):

  family  cone rows                     hw rows
  L       r(upsilon_k) = e_k            (s(gamma), e_a), gamma in Gamma*_a
  Lstar   e_k                           (s(gamma), e_a), gamma in Gamma_a
  S       r(gamma), gamma in Gamma*_a   (r(gamma), e_a), gamma in Gamma_a
  Sstar   r(gamma), gamma in Gamma*_a   (s(upsilon_k), e_{i_k})

Lattice points are enumerated exactly (integer arithmetic only) by interval
propagation plus depth-first branching inside a box whose size is certified
a posteriori: if any returned point touches the box boundary the box is
doubled and the run repeated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootcore import ReducedWord, check_weight
from .crossings import crossing_vectors, crossings_for


class DimensionMismatch(ValueError):
    """Vector length does not match the system's coordinate or weight count."""


class BoxUncertified(RuntimeError):
    """Enumeration box kept touching its own boundary after repeated doubling."""


@dataclass(frozen=True)
class InequalitySystem:
    family: str
    word: ReducedWord
    # each row c encodes <c, x> >= 0
    cone: tuple[tuple[int, ...], ...]
    # each row (c, m) encodes <c, x> <= <m, lambda>
    hw: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def _unit(length: int, k: int) -> tuple[int, ...]:
    return tuple(1 if j == k else 0 for j in range(length))


def cone_system(family: str, word: ReducedWord) -> tuple[tuple[int, ...], ...]:
    N = word.num_roots
    if family in ("L", "Lstar"):
        rows = {_unit(N, k) for k in range(N)}
    elif family in ("S", "Sstar"):
        rows = set()
        for a in range(1, word.n):
            for c in crossings_for(word, a, "dual_reineke"):
                rows.add(crossing_vectors(c).r)
    else:
        raise ValueError(f"unknown family {family!r}")
    return tuple(sorted(rows))


_HW_SOURCES = {
    "L": ("dual_reineke", "s"),
    "Lstar": ("reineke", "s"),
    "S": ("reineke", "r"),
    "Sstar": ("kashiwara", "s"),
}


def hw_system(family: str, word: ReducedWord) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    try:
        kind, form = _HW_SOURCES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    rows = set()
    for a in range(1, word.n):
        m = _unit(word.n - 1, a - 1)
        for c in crossings_for(word, a, kind):
            v = crossing_vectors(c)
            rows.add(((v.r if form == "r" else v.s), m))
    return tuple(sorted(rows))


_SYSTEM_CACHE: dict = {}


def inequality_system(family: str, word: ReducedWord) -> InequalitySystem:
    key = (family, word.n, word.letters)
    cached = _SYSTEM_CACHE.get(key)
    if cached is None:
        cached = InequalitySystem(family, word, cone_system(family, word), hw_system(family, word))
        _SYSTEM_CACHE[key] = cached
    return cached


def contains(system: InequalitySystem, lam, x: Sequence[int]) -> bool:
    """Whether x lies in the cone (lam None) or in the lambda polytope."""
    x = tuple(int(v) for v in x)
    N = system.word.num_roots
    if len(x) != N:
        raise DimensionMismatch(f"expected {N} coordinates, got {len(x)}")
    for c in system.cone:
        if sum(p * q for p, q in zip(c, x)) < 0:
            return False
    if lam is None:
        return True
    lam = tuple(int(v) for v in lam)
    if len(lam) != system.word.n - 1:
        raise DimensionMismatch(f"expected {system.word.n - 1} weight coefficients, got {len(lam)}")
    for c, m in system.hw:
        if sum(p * q for p, q in zip(c, x)) > sum(p * q for p, q in zip(m, lam)):
            return False
    return True


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _merge_rows(raw):
    """Combine rows sharing a coefficient vector; returns {coeffs: (lo, hi)}."""
    merged: dict = {}
    for coeffs, lo, hi in raw:
        plo, phi = merged.get(coeffs, (None, None))
        if lo is not None:
            plo = lo if plo is None else max(plo, lo)
        if hi is not None:
            phi = hi if phi is None else min(phi, hi)
        merged[coeffs] = (plo, phi)
    return merged


def _bound_from_single(c: int, lo, hi):
    """Variable bounds implied by lo <= c*x <= hi."""
    vlo = vhi = None
    if c > 0:
        if lo is not None:
            vlo = _ceil_div(lo, c)
        if hi is not None:
            vhi = hi // c
    else:
        if hi is not None:
            vlo = _ceil_div(hi, c)
        if lo is not None:
            vhi = lo // c
    return vlo, vhi


def _enumerate_box(raw_rows, N: int, box: int) -> list[tuple[int, ...]]:
    base_lo = [0] * N
    base_hi = [box] * N
    rows = []
    for coeffs, (rlo, rhi) in sorted(_merge_rows(raw_rows).items()):
        support = [k for k, c in enumerate(coeffs) if c]
        if not support:
            if (rlo is not None and rlo > 0) or (rhi is not None and rhi < 0):
                return []
            continue
        if len(support) == 1:
            k = support[0]
            vlo, vhi = _bound_from_single(coeffs[k], rlo, rhi)
            if vlo is not None:
                base_lo[k] = max(base_lo[k], vlo)
            if vhi is not None:
                base_hi[k] = min(base_hi[k], vhi)
            continue
        rows.append((coeffs, rlo, rhi, tuple(support)))
    if any(base_lo[k] > base_hi[k] for k in range(N)):
        return []

    def propagate(lo, hi, max_sweeps=4):
        for _ in range(max_sweeps):
            changed = False
            for coeffs, rlo, rhi, support in rows:
                minsum = 0
                maxsum = 0
                for k in support:
                    c = coeffs[k]
                    if c > 0:
                        minsum += c * lo[k]
                        maxsum += c * hi[k]
                    else:
                        minsum += c * hi[k]
                        maxsum += c * lo[k]
                if rhi is not None and minsum > rhi:
                    return False
                if rlo is not None and maxsum < rlo:
                    return False
                for k in support:
                    c = coeffs[k]
                    if c > 0:
                        own_min, own_max = c * lo[k], c * hi[k]
                    else:
                        own_min, own_max = c * hi[k], c * lo[k]
                    new_lo, new_hi = lo[k], hi[k]
                    if rhi is not None:
                        margin = rhi - (minsum - own_min)
                        if c > 0:
                            new_hi = min(new_hi, margin // c)
                        else:
                            new_lo = max(new_lo, _ceil_div(margin, c))
                    if rlo is not None:
                        margin = rlo - (maxsum - own_max)
                        if c > 0:
                            new_lo = max(new_lo, _ceil_div(margin, c))
                        else:
                            new_hi = min(new_hi, margin // c)
                    if new_lo > new_hi:
                        return False
                    if new_lo != lo[k] or new_hi != hi[k]:
                        if c > 0:
                            minsum += c * (new_lo - lo[k])
                            maxsum += c * (new_hi - hi[k])
                        else:
                            minsum += c * (new_hi - hi[k])
                            maxsum += c * (new_lo - lo[k])
                        lo[k], hi[k] = new_lo, new_hi
                        changed = True
            if not changed:
                break
        return True

    out: list[tuple[int, ...]] = []

    def search(lo, hi):
        if not propagate(lo, hi):
            return
        pick = -1
        width = None
        for k in range(N):
            w = hi[k] - lo[k]
            if w > 0 and (width is None or w < width):
                pick, width = k, w
        if pick < 0:
            for coeffs, rlo, rhi, support in rows:
                val = sum(coeffs[k] * lo[k] for k in support)
                if rlo is not None and val < rlo:
                    return
                if rhi is not None and val > rhi:
                    return
            out.append(tuple(lo))
            return
        for v in range(lo[pick], hi[pick] + 1):
            nlo, nhi = list(lo), list(hi)
            nlo[pick] = nhi[pick] = v
            search(nlo, nhi)

    search(base_lo, base_hi)
    return out


def points_of_rows(word: ReducedWord, cone_rows, hw_rows, lam) -> tuple[tuple[int, ...], ...]:
    """Sorted lattice points of an explicit row system, box-certified.

    cone_rows: coefficient vectors c with <c, x> >= 0.
    hw_rows: pairs (c, m) with <c, x> <= <m, lam>.
    """
    lam = check_weight(word.n, lam)
    N = word.num_roots
    raw = [(tuple(c), 0, None) for c in cone_rows]
    for c, m in hw_rows:
        raw.append((tuple(c), None, sum(p * q for p, q in zip(m, lam))))
    box = (word.n - 1) * sum(lam)
    for _ in range(9):
        pts = _enumerate_box(raw, N, box)
        if box > 0 and all(v < box for p in pts for v in p):
            return tuple(sorted(pts))
        box = box * 2 if box > 0 else 1
    raise BoxUncertified(f"points touch the box after repeated doubling (box={box})")


_POINTS_CACHE: dict = {}


def lattice_points(family: str, word: ReducedWord, lam) -> tuple[tuple[int, ...], ...]:
    """All integer points of the lambda polytope, sorted lexicographically."""
    lam = check_weight(word.n, lam)
    key = (family, word.n, word.letters, lam)
    cached = _POINTS_CACHE.get(key)
    if cached is None:
        system = inequality_system(family, word)
        cached = points_of_rows(word, system.cone, system.hw, lam)
        _POINTS_CACHE[key] = cached
    return cached


def system_json(system: InequalitySystem) -> dict:
    return {
        "n": system.word.n,
        "word": list(system.word.letters),
        "family": system.family,
        "cone": [{"coeffs": list(c)} for c in system.cone],
        "hw": [{"coeffs": list(c), "lambda_row": list(m)} for c, m in system.hw],
    }
