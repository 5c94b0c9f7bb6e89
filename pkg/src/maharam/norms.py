"""Norms derived from admissible families and the selection procedures built on them.

``Norm(fam)`` measures a finite set by the least number of members of
``fam`` needed to cover it.  ``Norm.card()`` is the cardinality norm, which
is the norm of ``Schreier(1)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .schreier import Family, FiniteSet, Schreier

__all__ = [
    "Norm",
    "NormError",
    "EXACT_LIMIT",
    "norm_exact",
    "norm_greedy",
    "cover_exact",
    "roberts_select",
    "find_gap",
    "select_blocks",
    "BlockSelection",
]

EXACT_LIMIT = 20


class NormError(ValueError):
    pass


class Norm:
    def __init__(self, family: Optional[Family] = None):
        self.family = family
        self._cache: dict[FiniteSet, int] = {}
        self._is_card = family is None or (
            isinstance(family, Schreier) and family.alpha == 1
        )

    @classmethod
    def card(cls) -> "Norm":
        return cls(None)

    @classmethod
    def schreier(cls, alpha) -> "Norm":
        return cls(Schreier(alpha))

    def describe(self) -> str:
        return "card" if self.family is None else f"||.||_{self.family.describe()}"

    def __call__(self, F: Iterable[int]) -> int:
        F = FiniteSet(F)
        if self._is_card:
            return len(F)
        hit = self._cache.get(F)
        if hit is None:
            hit = cover_exact(F, self)[0]
            self._cache[F] = hit
        return hit

    def member(self, F) -> bool:
        if self.family is None:
            return len(FiniteSet(F)) <= 1
        return self.family.member(F)


def _members_by_low_bit(F: FiniteSet, nm: Norm) -> list[list[int]]:
    """For each position i, the masks of member subsets of F whose lowest
    element is F[i].  Families are hereditary, so DFS from each start."""
    n = len(F)
    out: list[list[int]] = [[] for _ in range(n)]

    def grow(start: int, cur: list[int], mask: int, low: int):
        out[low].append(mask)
        for j in range(start, n):
            nxt = cur + [F[j]]
            if nm.member(nxt):
                grow(j + 1, nxt, mask | (1 << j), low)

    for i in range(n):
        grow(i + 1, [F[i]], 1 << i, i)
    return out


def cover_exact(F, nm: Norm) -> tuple[int, list[FiniteSet]]:
    """Minimum cover of F by members, returned with one optimal cover."""
    F = FiniteSet(F)
    if len(F) > EXACT_LIMIT:
        raise NormError(f"exact norm is limited to {EXACT_LIMIT} elements, got {len(F)}")
    if not F:
        return 0, []
    if nm.member(F):
        return 1, [F]
    by_low = _members_by_low_bit(F, nm)
    full = (1 << len(F)) - 1

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, int]:
        if not mask:
            return 0, 0
        low = (mask & -mask).bit_length() - 1
        top = None
        for piece in by_low[low]:
            # pieces may stick out of mask; hereditary families let us trim
            k = best(mask & ~piece)[0] + 1
            if top is None or k < top[0]:
                top = (k, piece)
        return top

    k = best(full)[0]
    cover = []
    mask = full
    while mask:
        piece = best(mask)[1]
        cover.append(FiniteSet(F[i] for i in range(len(F)) if piece >> i & 1 and mask >> i & 1))
        mask &= ~piece
    return k, cover


def norm_exact(F, nm: Norm) -> int:
    return nm(F)


def norm_greedy(F, nm: Norm) -> tuple[int, list[FiniteSet]]:
    """Left to right, take the longest member prefix of what is left."""
    F = FiniteSet(F)
    pieces = []
    i = 0
    while i < len(F):
        j = i + 1
        while j < len(F) and nm.member(F[i : j + 1]):
            j += 1
        pieces.append(FiniteSet(F[i:j]))
        i = j
    return len(pieces), pieces


def roberts_select(sets: Sequence, s: int, t: int, nm: Norm):
    """Pick ``J_i`` inside ``sets[perm[i]]`` with ``nm(J_i) == t`` and
    ``J_0 < J_1 < ... < J_{s-1}``.

    At step i the cut ``k_i`` is the least integer such that some unused
    set has ``nm(I & [k_{i-1}, k_i)) >= t``; the least such set index wins.
    """
    sets = [FiniteSet(x) for x in sets]
    if len(sets) != s:
        raise NormError(f"expected {s} sets, got {len(sets)}")
    for idx, I in enumerate(sets):
        have = nm(I)
        if have < s * t:
            raise NormError(f"set {idx} has norm {have} < s*t = {s * t}")
    perm: list[int] = []
    parts: list[FiniteSet] = []
    lo = 0
    for _ in range(s):
        unused = [l for l in range(s) if l not in perm]
        cuts = sorted({x + 1 for l in unused for x in sets[l] if x >= lo})
        chosen = None
        for k in cuts:
            for l in unused:
                piece = sets[l].window(lo, k)
                if nm(piece) >= t:
                    chosen = (k, l, piece)
                    break
            if chosen:
                break
        if chosen is None:  # unreachable for admissible norms
            raise NormError("selection ran out of elements")
        k, l, piece = chosen
        perm.append(l)
        parts.append(piece)
        lo = k
    return perm, parts


def find_gap(C, D, nm: Norm) -> tuple[int, int]:
    """Least consecutive ``c < d`` in C with ``[c, d)`` missing D."""
    C, D = FiniteSet(C), FiniteSet(D)
    if nm(C) < 3:
        raise NormError(f"need nm(C) >= 3, got {nm(C)}")
    if nm(D) != 1:
        raise NormError(f"need nm(D) == 1, got {nm(D)}")
    for c, d in zip(C, C[1:]):
        if not any(c <= x < d for x in D):
            return c, d
    raise NormError("no gap found; the norm is not admissible")


class BlockSelection:
    def __init__(self, cuts, light, layer, layers, bound):
        self.cuts = cuts
        self.light = light
        self.layer = layer
        self.layers = layers
        self.bound = bound

    @property
    def light_weight(self):
        return sum((w for _, w in self.light), Fraction(0))

    def __repr__(self):
        return f"BlockSelection(cuts={self.cuts}, layer={self.layer}, light={self.light})"


def select_blocks(J: Sequence, t: int, F: Sequence, nm: Norm) -> BlockSelection:
    """Choose cut points ``m_i < n_i`` in each block so that few weighted
    sets keep less than half their norm outside the union of the windows.

    Each block is split into ``c = (t - 1) // 3`` consecutive layers of norm
    exactly 3.  Layer ``l`` makes the sets with ``nm(I - W_l) < nm(I)/2``
    light; the layers have disjoint light sets so the cheapest one weighs
    at most ``3 w(F) / (t - 4)``.
    """
    J = [FiniteSet(x) for x in J]
    F = [(FiniteSet(I), w) for I, w in F]
    if t < 5:
        raise NormError("need t >= 5")
    for i, block in enumerate(J):
        if nm(block) < t:
            raise NormError(f"block {i} has norm {nm(block)} < {t}")
    for i in range(len(J) - 1):
        if J[i] and J[i + 1] and J[i][-1] >= J[i + 1][0]:
            raise NormError(f"blocks {i} and {i + 1} are not in increasing order")
    c = (t - 1) // 3
    marks = []
    for block in J:
        row = [block[0]]
        for _ in range(c):
            start = row[-1]
            nxt = None
            for x in block:
                if x > start and nm(block.window(start, x)) >= 3:
                    nxt = x
                    break
            if nxt is None:
                raise NormError("block too small for the requested layers")
            row.append(nxt)
        marks.append(row)

    def light_for(l: int):
        W = [(row[l], row[l + 1]) for row in marks]

        def outside(I):
            return FiniteSet(x for x in I if not any(a <= x < b for a, b in W))

        return [(I, w) for I, w in F if 2 * nm(outside(I)) < nm(I)]

    layers = [light_for(l) for l in range(c)]
    weights = [sum((w for _, w in D), 0) for D in layers]
    best = min(range(c), key=lambda l: (weights[l], l))
    total = sum((w for _, w in F), 0)
    bound = Fraction(3) * total / (t - 4) if isinstance(total, (int, Fraction)) else 3 * total / (t - 4)
    cuts = [(row[best], row[best + 1]) for row in marks]
    return BlockSelection(cuts, layers[best], best, layers, bound)

