"""Seeded random ordinals for fuzzing and adversaries."""

from __future__ import annotations

import random
from typing import Optional

from .ordinal import ZERO, IntoOrdinal, Ordinal, as_ordinal

__all__ = ["random_ordinal", "random_below", "random_descent"]


def random_ordinal(rng: random.Random, depth: int = 2, coeff: int = 3, width: int = 3) -> Ordinal:
    """CNF ordinal with tower depth at most ``depth``."""
    if depth <= 0:
        return Ordinal.of(rng.randint(0, coeff))
    exps = {random_ordinal(rng, depth - 1, coeff, width) for _ in range(rng.randint(0, width))}
    return Ordinal(tuple((e, rng.randint(1, coeff)) for e in sorted(exps, reverse=True)))


def _tail_below_power(rng: random.Random, e: Ordinal, coeff: int, budget: int) -> Ordinal:
    """Random ordinal below ``w^e``."""
    if e.is_zero() or budget <= 0 or rng.random() < 0.3:
        return ZERO
    e2 = random_below(rng, e, coeff, budget - 1)
    head = Ordinal(((e2, rng.randint(1, coeff)),))
    return head + _tail_below_power(rng, e2, coeff, budget - 1)


def random_below(rng: random.Random, a: IntoOrdinal, coeff: int = 3, budget: int = 4) -> Ordinal:
    """Random ordinal strictly below ``a`` (which must be positive)."""
    a = as_ordinal(a)
    if a.is_zero():
        raise ValueError("nothing is below 0")
    terms = a.terms
    i = rng.randrange(len(terms))
    e, c = terms[i]
    keep = Ordinal(terms[:i])
    lowered = rng.randrange(c)
    head = keep + Ordinal(((e, lowered),)) if lowered else keep
    return head + _tail_below_power(rng, e, coeff, budget)


def random_descent(rng: random.Random, start: IntoOrdinal, length: Optional[int] = None) -> list[Ordinal]:
    """Strictly decreasing sequence from ``start`` down to 0 (or ``length`` items)."""
    out = [as_ordinal(start)]
    while not out[-1].is_zero() and (length is None or len(out) < length):
        out.append(random_below(rng, out[-1]))
    return out
