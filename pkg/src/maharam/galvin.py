"""A concrete Galvin decomposition of the ordinals below epsilon_0.

``x <_n y`` holds iff ``x < y`` and ``code(x) <= n``.  Every level is a tree
of finite height (at most ``n + 1`` ordinals have code ``<= n``), the levels
increase with ``n``, and their union is the usual order.  ``0`` sits below
everything at every level because ``code(0) == 0``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .ordinal import IntoOrdinal, Ordinal, as_ordinal, code, decode

__all__ = ["less_n", "max_pred", "predecessors", "chain_height"]


def less_n(x: IntoOrdinal, y: IntoOrdinal, n: int) -> bool:
    x, y = as_ordinal(x), as_ordinal(y)
    return x < y and code(x) <= n


def _exponent_list(a: Ordinal) -> list[Ordinal]:
    out = []
    for e, c in a.terms:
        out.extend([e] * c)
    return out


def _multiset_code(codes: list[int]) -> int:
    return sum(1 << (x + i) for i, x in enumerate(sorted(codes)))


def _largest_extra(codes: list[int], n: int) -> int:
    """Largest ``b`` with ``code(codes + [b]) <= n``, or -1 if none.

    The multiset code is increasing in ``b``, and adding an element at least
    doubles part of the sum, so ``b`` never exceeds ``n.bit_length()``.
    """
    if _multiset_code(codes + [0]) > n:
        return -1
    lo, hi = 0, n.bit_length() + 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _multiset_code(codes + [mid]) <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


@lru_cache(maxsize=1 << 16)
def max_pred(a: IntoOrdinal, n: int) -> Optional[Ordinal]:
    """Largest ``x < a`` with ``code(x) <= n``; ``None`` when ``a == 0``.

    Works on the descending exponent list of ``a``.  A longer common prefix
    always gives a larger ordinal, and dropping trailing terms only lowers
    the code, so the answer keeps the longest affordable prefix of ``a`` and
    then greedily appends the largest affordable exponents below the next
    exponent of ``a``.  Each greedy step recurses on a smaller exponent.
    """
    a = as_ordinal(a)
    if n < 0:
        raise ValueError("level must be a natural number")
    if a.is_zero():
        return None
    ys = _exponent_list(a)
    ycodes = [code(y) for y in ys]
    j = len(ys) - 1
    while _multiset_code(ycodes[:j]) > n:
        j -= 1
    prefix = ys[:j]
    codes = ycodes[:j]
    tail: list[Ordinal] = []
    bound = ys[j]  # next exponent must be strictly below this
    strict = True
    while True:
        budget = _largest_extra(codes, n)
        if budget < 0:
            break
        if not strict and code(bound) <= budget:
            z = bound
        else:
            z = max_pred(bound, budget)
            if z is None:
                break
        tail.append(z)
        codes.append(code(z))
        bound, strict = z, False
    exps = prefix + tail
    terms: list[tuple[Ordinal, int]] = []
    for e in exps:
        if terms and terms[-1][0] == e:
            terms[-1] = (e, terms[-1][1] + 1)
        else:
            terms.append((e, 1))
    return Ordinal(terms)


@lru_cache(maxsize=256)
def _level(n: int) -> tuple[Ordinal, ...]:
    """The ordinals with code ``<= n``, in increasing order."""
    return tuple(sorted(decode(m) for m in range(n + 1)))


def predecessors(a: IntoOrdinal, n: int) -> list[Ordinal]:
    """All ``x <_n a`` in increasing order (a finite chain)."""
    a = as_ordinal(a)
    out = []
    for x in _level(n):
        if not x < a:
            break
        out.append(x)
    return out


def chain_height(pool, n: int) -> int:
    """Length of the longest ``<_n``-chain inside ``pool`` (brute force)."""
    items = sorted(set(as_ordinal(x) for x in pool))
    best = [1] * len(items)
    for i, y in enumerate(items):
        for k in range(i):
            if less_n(items[k], y, n):
                best[i] = max(best[i], best[k] + 1)
    return max(best, default=0)

