"""Brute-force reference implementations used to cross-check the fast paths.

Nothing here is clever on purpose: each function follows a definition
directly, with no shared code beyond the basic types.
"""

from __future__ import annotations

import copy
from itertools import combinations, product
from typing import Callable, Iterable, Optional

from .ordinal import Ordinal, as_ordinal, decode
from .schreier import Family, FiniteSet

__all__ = [
    "max_pred_brute",
    "partition_norm",
    "exhaust_family_game",
    "exhaust_incompatibility_game",
    "default_windows",
    "threshold_windows",
    "submeasure_tables_brute",
    "thin_brute",
    "rank_reverse_inclusion",
]


def max_pred_brute(a, n: int) -> Optional[Ordinal]:
    a = as_ordinal(a)
    below = [decode(m) for m in range(n + 1) if decode(m) < a]
    return max(below) if below else None


def _set_partitions(items: list):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def partition_norm(F: Iterable[int], is_member: Callable) -> int:
    """Fewest blocks over all set partitions of F whose blocks are all members."""
    F = list(FiniteSet(F))
    if not F:
        return 0
    best = None
    for part in _set_partitions(F):
        if (best is None or len(part) < best) and all(is_member(sorted(b)) for b in part):
            best = len(part)
    return best


def default_windows(lo: int) -> list[int]:
    """Candidate moves for Player II after ``lo - 1``: a dense window plus
    sparse jumps, so thresholds of the form ``code(x) <= n`` are all crossed."""
    return list(range(lo, lo + 8)) + [lo + 15, lo + 63, lo + 255, lo + 4095]


def threshold_windows(t: int) -> Callable[[int], list[int]]:
    """Every value up to ``t`` plus one above it.  Exhaustive up to
    equivalence when the family and the strategy only see ``min(n, t + 1)``,
    which holds when every ordinal in play has code at most ``t``."""
    return lambda lo: list(range(lo, max(lo, t + 1) + 1))


def exhaust_family_game(
    alpha,
    fam: Family,
    strat_I,
    windows: Callable[[int], list[int]] = default_windows,
    max_depth: int = 64,
) -> dict:
    """Play ``strat_I`` against every Player II line drawn from ``windows``.

    Returns counts of finished lines and any lines where I did not win
    (II outlasted ``max_depth`` or I moved illegally).
    """
    alpha = as_ordinal(alpha)
    stats = {"lines": 0, "failures": [], "longest": 0}

    def dfs(strategy, chosen: list[int], prev: Optional[Ordinal], last):
        a = strategy.move(last)
        if a is None or (prev is None and a > alpha) or (prev is not None and not a < prev):
            stats["failures"].append((list(chosen), a))
            return
        if len(chosen) >= max_depth:
            stats["failures"].append((list(chosen), "depth"))
            return
        lo = chosen[-1] + 1 if chosen else 0
        moves = [n for n in windows(lo) if fam.member(chosen + [n])]
        if not moves:
            stats["lines"] += 1
            stats["longest"] = max(stats["longest"], len(chosen))
            return
        for n in moves:
            dfs(copy.deepcopy(strategy), chosen + [n], a, n)

    dfs(strat_I, [], None, None)
    return stats


def exhaust_incompatibility_game(
    alpha,
    fam: Family,
    strat_I,
    cap: int,
    max_depth: int = 10_000,
) -> dict:
    """Play ``strat_I`` against every Player II line in ``H`` whose moves use
    coordinates below ``cap``.  At each coordinate only the values already
    used plus the least unused value are tried; the strategies and the
    rules only see equality of values, so this loses no lines up to
    renaming."""
    from .games import PartialFn, compatible

    alpha = as_ordinal(alpha)
    doms = [FiniteSet(c) for k in range(cap + 1) for c in combinations(range(cap), k) if fam.member(c)]
    stats = {"lines": 0, "failures": [], "longest": 0}

    def candidates(played):
        used: dict[int, list[int]] = {}
        for u in played:
            for k, v in u.items:
                used.setdefault(k, [])
                if v not in used[k]:
                    used[k].append(v)
        for dom in doms:
            choices = []
            for k in dom:
                vals = sorted(used.get(k, []))
                fresh = next((v for v in range(1 << k) if v not in vals), None)
                choices.append(vals + ([fresh] if fresh is not None else []))
            for vals in product(*choices):
                u = PartialFn(zip(dom, vals))
                if all(not compatible(u, v) for v in played):
                    yield u

    def dfs(strategy, played, prev, last):
        a = strategy.move(last)
        if a is None or (prev is None and a > alpha) or (prev is not None and not a < prev):
            stats["failures"].append((list(played), a))
            return
        if len(played) >= max_depth:
            stats["failures"].append((list(played), "depth"))
            return
        moves = list(candidates(played))
        if not moves:
            stats["lines"] += 1
            stats["longest"] = max(stats["longest"], len(played))
            return
        for u in moves:
            dfs(copy.deepcopy(strategy), played + [u], a, u)

    dfs(strat_I, [], None, None)
    return stats


# -- submeasures from the definitions


def _points(n: int) -> list[tuple[int, ...]]:
    return list(product(*(range(1 << k) for k in range(n))))


def _cover_values(points, family: list[tuple[frozenset, object]], inf) -> dict:
    """Cheapest weight of each union of members, relaxed until stable, then
    pushed down to every subset."""
    best: dict[frozenset, object] = {frozenset(): 0}
    changed = True
    while changed:
        changed = False
        for S, cost in list(best.items()):
            for X, w in family:
                U = S | X
                c = cost + w
                if U not in best or c < best[U]:
                    best[U] = c
                    changed = True
    out = {}
    all_sets = [frozenset(c) for k in range(len(points) + 1) for c in combinations(points, k)]
    for Y in all_sets:
        vals = [c for S, c in best.items() if Y <= S]
        out[Y] = min(vals) if vals else inf
    out[frozenset()] = 0
    return out


def submeasure_tables_brute(n: int, p: int, M: list[int], norm: Callable, weight: Callable) -> list[dict]:
    """``nu_{k,p}`` for ``k = 0..p`` on all subsets of the resolution-``n``
    truncation, following the definitions literally.

    ``weight(k, norm_of_I)`` gives the floor.  Thinness enumerates every
    candidate hole ``H``, not just the largest.
    """
    inf = float("inf")
    pts = _points(n)
    all_sets = [frozenset(c) for k in range(len(pts) + 1) for c in combinations(pts, k)]

    def atoms(m: int):
        groups: dict[tuple, set] = {}
        for x in pts:
            groups.setdefault(x[:m], set()).add(x)
        return [(key, frozenset(g)) for key, g in sorted(groups.items())]

    def in_level(X: frozenset, r: int) -> bool:
        return all((x in X) == (y in X) for x in pts for y in pts if x[:r] == y[:r])

    def pi_pre(H: frozenset, prefix: tuple) -> frozenset:
        m = len(prefix)
        return frozenset(z for z in pts if prefix + z[m:] in H)

    tables: list[Optional[dict]] = [None] * (p + 1)
    tables[p] = {X: (0 if not X else inf) for X in all_sets}
    family: list[tuple[frozenset, object]] = []
    marks = list(range(n + 1))
    mark_sets = [c for k in range(1, len(marks) + 1) for c in combinations(marks, k)]
    for k in range(p - 1, -1, -1):
        nu = tables[k + 1]

        def thin(X: frozenset, m: int, r: int) -> bool:
            for prefix, A in atoms(m):
                room = sorted(A - X)
                ok = False
                for size in range(len(room), 0, -1):
                    for H in combinations(room, size):
                        H = frozenset(H)
                        if in_level(H, r) and nu[pi_pre(H, prefix)] > 1:
                            ok = True
                            break
                    if ok:
                        break
                if not ok:
                    return False
            return True

        pair_cache: dict = {}
        for X in all_sets:
            for I in mark_sets:
                nI = norm(I)
                if nI > M[k]:
                    continue
                good = True
                for m, r in combinations(I, 2):
                    key = (X, m, r)
                    if key not in pair_cache:
                        pair_cache[key] = thin(X, m, r)
                    if not pair_cache[key]:
                        good = False
                        break
                if good:
                    family.append((X, weight(k, nI)))
        tables[k] = _cover_values(pts, [(X, w) for X, w in family if X], inf)
    return tables


def thin_brute(X: frozenset, I, n: int, nu: dict) -> bool:
    """``(I, nu)``-thinness by enumerating every hole; ``nu`` maps frozensets
    of points to values."""
    pts = _points(n)
    for m, r in combinations(sorted(I), 2):
        for prefix in sorted({x[:m] for x in pts}):
            A = [x for x in pts if x[:m] == prefix]
            room = [x for x in A if x not in X]
            found = False
            for size in range(len(room), 0, -1):
                for H in combinations(room, size):
                    Hs = set(H)
                    closed = all((x in Hs) == (y in Hs) for x in pts for y in pts if x[:r] == y[:r])
                    if closed and nu[frozenset(z for z in pts if prefix + z[m:] in Hs)] > 1:
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True


# -- exhaustivity rank -----------------------------------------------------------------------


def rank_reverse_inclusion(mu: Callable, eps, atoms: int) -> int:
    """Well-founded rank of the root of the disjoint ``eps``-heavy families
    ordered by reverse inclusion, by memoized recursion over all of them:
    ``rk(F) = max(rk(G) + 1 for G strictly containing F)``."""
    heavy = [X for X in range(1, 1 << atoms) if mu(X) >= eps]
    families: list[frozenset] = []

    def collect(start: int, used: int, chosen: tuple):
        families.append(frozenset(chosen))
        for i in range(start, len(heavy)):
            if not heavy[i] & used:
                collect(i + 1, used | heavy[i], chosen + (heavy[i],))

    collect(0, 0, ())
    families.sort(key=len, reverse=True)
    rank: dict[frozenset, int] = {}
    for F in families:
        rank[F] = max((rank[G] + 1 for G in rank if len(G) > len(F) and F < G), default=0)
    return rank[frozenset()]
