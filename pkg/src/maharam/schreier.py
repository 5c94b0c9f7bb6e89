"""Admissible families of finite sets of naturals.

A family is anything with a ``member(F)`` predicate.  The concrete kinds
are the Schreier families ``Schreier(alpha)``, the sum ``Oplus(s, t)`` of
two families, the norm balls ``Power(s, n)`` and ``NormBall(norm, r)``, and
``Predicate`` for ad hoc families in tests.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Optional

from .galvin import max_pred
from .ordinal import IntoOrdinal, Ordinal, as_ordinal, render

__all__ = [
    "FiniteSet",
    "FamilyError",
    "Family",
    "Schreier",
    "Oplus",
    "Power",
    "NormBall",
    "Predicate",
    "leq_s",
    "member",
    "witness",
    "oplus",
    "can_extend",
    "member_subsets",
    "all_subsets",
    "OPLUS_LIMIT",
]

OPLUS_LIMIT = 20


class FamilyError(ValueError):
    pass


class FiniteSet(tuple):
    """Strictly increasing tuple of naturals."""

    def __new__(cls, elements: Iterable[int] = ()):
        if isinstance(elements, FiniteSet):
            return elements
        items = list(elements)
        for x in items:
            if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                raise FamilyError(f"elements must be naturals, got {x!r}")
        ordered = sorted(items)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise FamilyError(f"duplicate element {a}")
        return super().__new__(cls, ordered)

    @classmethod
    def parse(cls, text: str) -> "FiniteSet":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            raise FamilyError(f"cannot read set {text!r}: {exc}") from None

    def __or__(self, other):
        return FiniteSet(set(self) | set(other))

    def __sub__(self, other):
        other = set(other)
        return FiniteSet(x for x in self if x not in other)

    def below(self, k: int) -> "FiniteSet":
        return FiniteSet(x for x in self if x < k)

    def window(self, lo: int, hi: Optional[int] = None) -> "FiniteSet":
        return FiniteSet(x for x in self if x >= lo and (hi is None or x < hi))

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"


def leq_s(a: Iterable[int], b: Iterable[int]) -> bool:
    a, b = FiniteSet(a), FiniteSet(b)
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


class Family:
    """Base class.  Subclasses implement ``member``."""

    def member(self, F: Iterable[int]) -> bool:
        raise NotImplementedError

    def __contains__(self, F) -> bool:
        return self.member(F)

    def describe(self) -> str:
        return type(self).__name__


class Schreier(Family):
    """``S_alpha``: sets ``{n_0 < ... < n_{k-1}}`` admitting a chain
    ``alpha = a_0 >_{n_0} a_1 >_{n_1} ... a_k``.  The greedy chain (largest
    predecessor at each step) is a witness whenever any chain is."""

    def __init__(self, alpha: IntoOrdinal):
        alpha = as_ordinal(alpha)
        if alpha.is_zero():
            raise FamilyError("Schreier families need alpha > 0")
        self.alpha = alpha

    def chain(self, F: Iterable[int]) -> Optional[list[Ordinal]]:
        F = FiniteSet(F)
        out = [self.alpha]
        for n in F:
            nxt = max_pred(out[-1], n)
            if nxt is None:
                return None
            out.append(nxt)
        return out

    def member(self, F) -> bool:
        F = FiniteSet(F)
        cur = self.alpha
        for i, n in enumerate(F):
            if cur.is_zero():
                return False
            if i < len(F) - 1:
                cur = max_pred(cur, n)
        return True

    def residual(self, F) -> Optional[Ordinal]:
        """Last ordinal of the greedy chain, or None if F is not a member."""
        ch = self.chain(F)
        return None if ch is None else ch[-1]

    def describe(self):
        return f"S_{render(self.alpha)}"

    def __eq__(self, other):
        return isinstance(other, Schreier) and other.alpha == self.alpha

    def __hash__(self):
        return hash(("S", self.alpha))


class Oplus(Family):
    """``{S u T : S in s, T in t}``, decided by trying every split."""

    def __init__(self, s: Family, t: Family):
        self.s, self.t = s, t

    def split(self, F) -> Optional[tuple[FiniteSet, FiniteSet]]:
        F = FiniteSet(F)
        if len(F) > OPLUS_LIMIT:
            raise FamilyError(f"oplus membership is limited to {OPLUS_LIMIT} elements")
        n = len(F)
        for mask in range(1 << n):
            S = FiniteSet(F[i] for i in range(n) if mask >> i & 1)
            T = FiniteSet(F[i] for i in range(n) if not mask >> i & 1)
            if self.s.member(S) and self.t.member(T):
                return S, T
        return None

    def member(self, F) -> bool:
        return self.split(F) is not None

    def describe(self):
        return f"({self.s.describe()} + {self.t.describe()})"


class NormBall(Family):
    """``{F : norm(F) <= threshold}``."""

    def __init__(self, norm, threshold: int):
        self.norm = norm
        self.threshold = threshold

    def member(self, F) -> bool:
        return self.norm(FiniteSet(F)) <= self.threshold

    def describe(self):
        return f"ball({self.norm.describe()}, {self.threshold})"


class Power(NormBall):
    """``S^n = {F : ||F||_S <= n}``."""

    def __init__(self, fam: Family, n: int):
        from .norms import Norm

        if n < 1:
            raise FamilyError("power must be at least 1")
        super().__init__(Norm(fam), n)
        self.base = fam
        self.n = n

    def describe(self):
        return f"{self.base.describe()}^{self.n}"


class Predicate(Family):
    def __init__(self, fn: Callable[[FiniteSet], bool], name: str = "predicate"):
        self.fn = fn
        self.name = name

    def member(self, F) -> bool:
        return bool(self.fn(FiniteSet(F)))

    def describe(self):
        return self.name


def member(F, fam: Family) -> bool:
    return fam.member(FiniteSet(F))


def witness(F, fam: Family):
    """Membership plus a certificate: the greedy chain for Schreier
    families, the split for sums, ``None`` otherwise."""
    F = FiniteSet(F)
    if isinstance(fam, Schreier):
        ch = fam.chain(F)
        return ch is not None, ch
    if isinstance(fam, Oplus):
        sp = fam.split(F)
        return sp is not None, sp
    return fam.member(F), None


def oplus(s: Family, t: Family) -> Oplus:
    return Oplus(s, t)


# Large enough that max_pred from any desk-scale ordinal is unconstrained.
_SENTINEL_GAP = 1 << 64


def can_extend(fam: Family, F) -> bool:
    """Is there ``n > max F`` with ``F + {n}`` in the family?  By spreading
    it suffices to try one very large ``n``."""
    F = FiniteSet(F)
    top = F[-1] if F else 0
    return fam.member(FiniteSet(F + (top + _SENTINEL_GAP,)))


def member_subsets(fam: Family, F) -> list[FiniteSet]:
    """Every member of ``fam`` contained in ``F`` (hereditary DFS)."""
    F = FiniteSet(F)
    out: list[FiniteSet] = []

    def grow(start: int, cur: tuple):
        out.append(FiniteSet(cur))
        for i in range(start, len(F)):
            nxt = cur + (F[i],)
            if fam.member(nxt):
                grow(i + 1, nxt)

    grow(0, ())
    return out


def all_subsets(F) -> Iterable[FiniteSet]:
    F = FiniteSet(F)
    for k in range(len(F) + 1):
        for c in combinations(F, k):
            yield FiniteSet(c)

