"""Referees and constructive strategies for the ordinal games on families.

Two games are refereed here:

* ``G`` (``play_family_game``): I plays a strictly decreasing sequence of
  ordinals (the first one at most the game bound), II plays an increasing
  sequence of naturals whose range stays in a family.
* ``H`` (``play_incompatibility_game``): I plays ordinals as above, II
  plays pairwise incompatible partial functions from ``P_alpha``.

A strategy is any object with ``move(last)``, where ``last`` is the
opponent's previous move (``None`` for Player I's opening call).  Returning
``None`` resigns.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Mapping, Optional

from .galvin import max_pred
from .ordinal import (
    ONE,
    ZERO,
    IntoOrdinal,
    Ordinal,
    add,
    as_ordinal,
    code,
    mul,
    nat_sum,
    nat_sum_all,
    omega_pow,
    render,
)
from .schreier import (
    Family,
    FiniteSet,
    Power,
    Schreier,
    can_extend,
    member_subsets,
)

__all__ = [
    "I_WINS",
    "II_WINS",
    "ONGOING",
    "ILLEGAL",
    "GameError",
    "PartialFn",
    "compatible",
    "in_P",
    "Transcript",
    "play_family_game",
    "play_incompatibility_game",
    "legal_incompatible_move",
    "SchreierI",
    "SchreierII",
    "OplusI",
    "PaII",
    "PaI",
    "strategy_I_schreier",
    "strategy_II_schreier",
    "strategy_I_oplus",
    "strategy_I_power",
    "strategy_II_Palpha",
    "strategy_I_Palpha",
    "oplus_bound",
    "rank_finite",
    "RANK_LIMIT",
]

I_WINS = "I_WINS"
II_WINS = "II_WINS"
ONGOING = "ONGOING"
ILLEGAL = "ILLEGAL"

RANK_LIMIT = 16


class GameError(ValueError):
    pass


class PartialFn:
    """Finite partial function ``k -> v`` with ``v < 2**k``."""

    __slots__ = ("items", "_hash")

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        seen: dict[int, int] = {}
        for k, v in pairs:
            if not isinstance(k, int) or not isinstance(v, int) or k < 0 or v < 0:
                raise GameError(f"bad entry ({k!r}, {v!r})")
            if v >= 1 << k:
                raise GameError(f"value {v} at coordinate {k} must be below 2^{k}")
            if k in seen and seen[k] != v:
                raise GameError(f"coordinate {k} assigned twice")
            seen[k] = v
        self.items = tuple(sorted(seen.items()))
        self._hash = hash(self.items)

    @property
    def dom(self) -> FiniteSet:
        return FiniteSet(k for k, _ in self.items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def restrict(self, lo: int = 0, hi: Optional[int] = None) -> "PartialFn":
        return PartialFn((k, v) for k, v in self.items if k >= lo and (hi is None or k < hi))

    def __or__(self, other: "PartialFn") -> "PartialFn":
        return PartialFn(self.items + other.items)

    def __eq__(self, other):
        return isinstance(other, PartialFn) and self.items == other.items

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.items)

    def __repr__(self):
        return "{" + ",".join(f"({k},{v})" for k, v in self.items) + "}"

    def to_json(self):
        return [[k, v] for k, v in self.items]


def compatible(u: PartialFn, v: PartialFn) -> bool:
    du, dv = u.as_dict(), v.as_dict()
    return all(dv[k] == x for k, x in du.items() if k in dv)


def in_P(u: PartialFn, fam: Family) -> bool:
    return fam.member(u.dom)


@dataclass
class Transcript:
    kind: str
    bound: Ordinal
    moves: list[tuple[str, Any]] = field(default_factory=list)
    outcome: str = ONGOING
    illegal: Optional[tuple[str, int]] = None
    note: str = ""
    checks: list = field(default_factory=list)

    def ordinals(self) -> list[Ordinal]:
        return [m for p, m in self.moves if p == "I"]

    def replies(self) -> list[Any]:
        return [m for p, m in self.moves if p == "II"]

    def to_json(self) -> dict:
        def enc(m):
            if isinstance(m, Ordinal):
                return render(m)
            if hasattr(m, "to_json"):
                return m.to_json()
            return m

        out = {
            "kind": self.kind,
            "bound": render(self.bound),
            "moves": [{"player": p, "move": enc(m)} for p, m in self.moves],
            "outcome": self.outcome,
        }
        if self.illegal:
            out["illegal"] = {"player": self.illegal[0], "index": self.illegal[1]}
        if self.note:
            out["note"] = self.note
        if self.checks:
            out["strict_required"] = list(self.checks)
        return out


def _check_I(move, prev: Optional[Ordinal], bound: Ordinal) -> Optional[str]:
    if not isinstance(move, Ordinal):
        return "not an ordinal"
    if prev is None:
        return None if move <= bound else f"{render(move)} exceeds the bound {render(bound)}"
    return None if move < prev else f"{render(move)} is not below {render(prev)}"


def play_family_game(alpha: IntoOrdinal, fam: Family, strat_I, strat_II, max_rounds: int = 1000) -> Transcript:
    """Referee ``G_alpha(fam)``."""
    alpha = as_ordinal(alpha)
    if max_rounds < 1:
        raise GameError("max_rounds must be at least 1")
    tr = Transcript("G", alpha)
    prev_a: Optional[Ordinal] = None
    chosen: list[int] = []
    last_II = None
    for rnd in range(max_rounds):
        a = strat_I.move(last_II)
        if a is None:
            tr.outcome = II_WINS
            tr.note = "I has no move" if prev_a is not None and prev_a.is_zero() else "I resigned"
            return tr
        problem = _check_I(a, prev_a, alpha)
        tr.moves.append(("I", a))
        if problem:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("I", rnd), problem
            return tr
        prev_a = a
        n = strat_II.move(a)
        if n is None:
            tr.outcome = I_WINS
            tr.note = "II resigned with a legal move available" if can_extend(fam, chosen) else "II has no move"
            return tr
        tr.moves.append(("II", n))
        if not isinstance(n, int) or isinstance(n, bool) or n < 0 or (chosen and n <= chosen[-1]):
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), f"{n!r} does not increase"
            return tr
        if not fam.member(chosen + [n]):
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), f"{chosen + [n]} leaves the family"
            return tr
        chosen.append(n)
        last_II = n
    return tr


def legal_incompatible_move(previous: list[PartialFn], fam: Family, cap: Optional[int] = None) -> Optional[PartialFn]:
    """Some ``u`` with ``dom(u)`` in ``fam`` incompatible with every move in
    ``previous``, or ``None``.  Only coordinates used by earlier moves matter,
    and at each coordinate only the values already used plus one fresh value,
    so the search is finite and exact."""
    if not previous:
        return PartialFn()
    coords = sorted({k for u in previous for k in u.dom if cap is None or k < cap})
    dicts = [u.as_dict() for u in previous]

    def search(i: int, chosen: list[tuple[int, int]], alive: frozenset) -> Optional[PartialFn]:
        if not alive:
            return PartialFn(chosen)
        if i == len(coords):
            return None
        k = coords[i]
        dom = [c for c, _ in chosen] + [k]
        if fam.member(dom):
            used = sorted({d[k] for d in dicts if k in d})
            fresh = next((v for v in range(1 << k) if v not in used), None)
            for v in used + ([fresh] if fresh is not None else []):
                killed = frozenset(j for j in alive if k in dicts[j] and dicts[j][k] != v)
                if killed:
                    got = search(i + 1, chosen + [(k, v)], alive - killed)
                    if got is not None:
                        return got
        return search(i + 1, chosen, alive)

    return search(0, [], frozenset(range(len(previous))))


def play_incompatibility_game(
    alpha: IntoOrdinal, fam: Family, strat_I, strat_II, max_rounds: int = 1000
) -> Transcript:
    """Referee ``H_alpha`` on ``{u in P : dom(u) in fam}``.  II can never win
    outright, so survival to ``max_rounds`` is reported as ``ONGOING``."""
    alpha = as_ordinal(alpha)
    if max_rounds < 1:
        raise GameError("max_rounds must be at least 1")
    tr = Transcript("H", alpha)
    prev_a: Optional[Ordinal] = None
    played: list[PartialFn] = []
    last_II = None
    for rnd in range(max_rounds):
        a = strat_I.move(last_II)
        if a is None:
            tr.outcome = II_WINS
            tr.note = "I has no move" if prev_a is not None and prev_a.is_zero() else "I resigned"
            return tr
        problem = _check_I(a, prev_a, alpha)
        tr.moves.append(("I", a))
        if problem:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("I", rnd), problem
            return tr
        prev_a = a
        u = strat_II.move(a)
        if u is None:
            tr.outcome = I_WINS
            spare = legal_incompatible_move(played, fam)
            tr.note = "II resigned with a legal move available" if spare is not None else "II has no move"
            return tr
        tr.moves.append(("II", u))
        if not isinstance(u, PartialFn) or not fam.member(u.dom):
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), f"{u!r} is not in the poset"
            return tr
        clash = next((j for j, v in enumerate(played) if compatible(u, v)), None)
        if clash is not None:
            tr.outcome, tr.illegal = ILLEGAL, ("II", rnd)
            tr.note = f"{u!r} is compatible with move {clash}"
            return tr
        played.append(u)
        last_II = u
    return tr


# -- strategies for G_alpha(S_alpha) --------------------------------------------


class SchreierI:
    """Open with alpha, then answer n with the largest <_n-predecessor."""

    def __init__(self, alpha: IntoOrdinal):
        alpha = as_ordinal(alpha)
        if alpha.is_zero():
            raise GameError("alpha must be positive")
        self.alpha = alpha
        self.current: Optional[Ordinal] = None

    def move(self, last):
        if self.current is None:
            self.current = self.alpha
        else:
            self.current = max_pred(self.current, last)
        return self.current


class SchreierII:
    """Answer I's ordinals with the least n keeping the chain valid."""

    def __init__(self, alpha_star: IntoOrdinal, alpha: IntoOrdinal):
        self.alpha = as_ordinal(alpha)
        self.alpha_star = as_ordinal(alpha_star)
        if self.alpha.is_zero():
            raise GameError("alpha must be positive")
        if not self.alpha_star < self.alpha:
            raise GameError("alpha* must be below alpha")
        self.last_n: Optional[int] = None

    def move(self, a: Ordinal):
        need = code(a)
        n = need if self.last_n is None else max(self.last_n + 1, need)
        self.last_n = n
        return n


def strategy_I_schreier(alpha: IntoOrdinal) -> SchreierI:
    return SchreierI(alpha)


def strategy_II_schreier(alpha_star: IntoOrdinal, alpha: IntoOrdinal) -> SchreierII:
    return SchreierII(alpha_star, alpha)


# -- sums and powers ---------------------------------------------------------------


def oplus_bound(alpha: IntoOrdinal, beta: IntoOrdinal) -> Ordinal:
    """``(alpha + 1)(beta + 1) - 1``, which is ``(alpha + 1) * beta + alpha``."""
    alpha, beta = as_ordinal(alpha), as_ordinal(beta)
    return add(mul(add(alpha, ONE), beta), alpha)


class OplusI:
    """Block-switching strategy for ``G_gamma(s + t)``.

    Pairs ``(b, a)`` in ``(beta+1) x (alpha+1)`` ordered lexicographically
    are played as the ordinal ``(alpha + 1) * b + a``.  A fresh sigma-run is
    used for each block of II's moves; when a block leaves ``s`` its last
    element is fed to tau.
    """

    def __init__(self, s: Family, alpha, beta, make_sigma: Callable, make_tau: Callable):
        self.s = s
        self.alpha, self.beta = as_ordinal(alpha), as_ordinal(beta)
        self.make_sigma = make_sigma
        self.tau = make_tau()
        self.sigma = None
        self.block: list[int] = []
        self.b: Optional[Ordinal] = None
        self.a: Optional[Ordinal] = None

    def encode(self, b: Ordinal, a: Ordinal) -> Ordinal:
        return add(mul(add(self.alpha, ONE), b), a)

    def move(self, last):
        if last is None:
            self.b = self.tau.move(None)
            self.sigma = self.make_sigma()
            self.a = self.sigma.move(None)
        else:
            self.block.append(last)
            if self.s.member(self.block):
                self.a = self.sigma.move(last)
            else:
                self.b = self.tau.move(last)
                self.block = []
                self.sigma = self.make_sigma()
                self.a = self.sigma.move(None)
        if self.a is None or self.b is None:
            return None
        return self.encode(self.b, self.a)


def _default_maker(fam: Family, bound) -> Callable:
    if isinstance(fam, Schreier):
        if as_ordinal(bound) != fam.alpha:
            raise GameError("default Schreier strategy plays with bound alpha")
        return lambda: SchreierI(fam.alpha)
    raise GameError(f"no default strategy for {fam.describe()}")


def strategy_I_oplus(s: Family, t: Family, alpha, beta, make_sigma=None, make_tau=None) -> OplusI:
    make_sigma = make_sigma or _default_maker(s, alpha)
    make_tau = make_tau or _default_maker(t, beta)
    return OplusI(s, alpha, beta, make_sigma, make_tau)


def strategy_I_power(fam: Schreier, n: int):
    """Strategy for ``G_{(alpha+1)^n - 1}(Power(fam, n))`` built by iterating
    the sum strategy, using ``S^n = S^(n-1) + S``.  Returns
    ``(strategy_factory, bound)``."""
    if n < 1:
        raise GameError("n must be at least 1")
    alpha = fam.alpha
    make = lambda: SchreierI(alpha)
    bound = alpha
    for j in range(2, n + 1):
        prev_family = Power(fam, j - 1) if j > 2 else fam
        make = _oplus_maker(prev_family, bound, alpha, make, lambda: SchreierI(alpha))
        bound = oplus_bound(bound, alpha)
    return make, bound


def _oplus_maker(s, a, b, ms, mt):
    return lambda: OplusI(s, a, b, ms, mt)


# -- P_alpha -------------------------------------------------------------------------


class PaII:
    """II in ``H_xi(P_alpha)`` for ``xi < w^alpha``: split the opening move
    as ``w^beta * n0 + eta``, fix a coordinate ``m`` with ``beta <_m alpha``
    and ``2^m > n0``, and answer ``{(m, n)} | u`` where ``u`` comes from a
    recursive run at level beta above ``m``."""

    def __init__(self, xi: IntoOrdinal, alpha: IntoOrdinal, floor: int = -1):
        self.xi = as_ordinal(xi)
        self.alpha = as_ordinal(alpha)
        if not self.xi < omega_pow(self.alpha):
            raise GameError(f"xi must be below w^{render(self.alpha)}")
        self.floor = floor
        self.beta: Optional[Ordinal] = None
        self.m: Optional[int] = None
        self.n: Optional[int] = None
        self.sub: Optional[PaII] = None

    def _split(self, x: Ordinal) -> tuple[int, Ordinal]:
        terms = x.terms
        if terms and terms[0][0] == self.beta:
            return terms[0][1], Ordinal(terms[1:])
        return 0, x

    def move(self, x: Ordinal):
        if self.beta is None:
            if x.is_zero():
                return PartialFn()
            self.beta = x.leading_exponent()
            n0 = x.leading_coefficient()
            m = max(self.floor + 1, code(self.beta))
            while (1 << m) <= n0:
                m += 1
            self.m = m
        n, eta = self._split(x)
        if n != self.n:
            self.n = n
            self.sub = PaII(eta, self.beta, self.m) if not self.beta.is_zero() else None
        tail = self.sub.move(eta) if self.sub is not None else PartialFn()
        return PartialFn({self.m: n}) | tail


class PaI:
    """I in ``H_{w^alpha}(P_alpha)``.  After II's first move ``u0`` with
    ``dom(u0) < m``, every later move restricted to ``[0, m)`` is one of the
    ``t`` nonempty members of ``P_alpha`` living below ``m``, and the part
    above ``m`` lies in ``P_beta`` for ``beta`` the largest ``<_m``
    predecessor of alpha.  I runs one copy of the level-beta strategy per
    restriction and plays the natural sum of their ordinals."""

    def __init__(self, alpha: IntoOrdinal):
        self.alpha = as_ordinal(alpha)
        self.stage = 0
        self.beta: Optional[Ordinal] = None
        self.m = 0
        self.t = 0
        self.runs: dict[PartialFn, Any] = {}
        self.values: dict[PartialFn, Ordinal] = {}

    def _value(self) -> Ordinal:
        rest = nat_sum_all(self.values.values())
        return nat_sum(mul(omega_pow(self.beta), self.t - len(self.values)), rest)

    def move(self, u):
        self.stage += 1
        if self.stage == 1:
            return omega_pow(self.alpha)
        if self.stage == 2:
            self.m = u.dom[-1] + 1 if len(u) else 0
            self.beta = max_pred(self.alpha, self.m)
            self.t = _count_small_members(self.alpha, self.m)
            return self._value()
        head = u.restrict(0, self.m)
        if head not in self.runs:
            run = _level_strategy(self.beta)
            run.move(None)
            self.runs[head] = run
        nxt = self.runs[head].move(u.restrict(self.m))
        if nxt is None:
            return None
        self.values[head] = nxt
        return self._value()


class _BaseI:
    """``H_1(P_0)``: play 1, then 0."""

    def __init__(self):
        self.stage = 0

    def move(self, u):
        self.stage += 1
        return ONE if self.stage == 1 else (ZERO if self.stage == 2 else None)


def _level_strategy(beta: Ordinal):
    return _BaseI() if beta.is_zero() else PaI(beta)


@lru_cache(maxsize=None)
def _count_small_members(alpha: Ordinal, m: int) -> int:
    """Number of nonempty ``s in P_alpha`` with ``dom(s)`` inside ``[0, m)``."""
    fam = Schreier(alpha)
    return sum(1 << sum(F) for F in member_subsets(fam, range(m)) if F)


def strategy_II_Palpha(xi: IntoOrdinal, alpha: IntoOrdinal) -> PaII:
    return PaII(xi, alpha)


def strategy_I_Palpha(alpha: IntoOrdinal) -> PaI:
    if as_ordinal(alpha).is_zero():
        raise GameError("alpha must be positive")
    return PaI(alpha)


# -- finite ranks ----------------------------------------------------------------------


def rank_finite(fam: Family, universe: int) -> int:
    """Well-founded rank of the tree of increasing sequences from
    ``range(universe)`` whose range is in ``fam``."""
    if universe > RANK_LIMIT:
        raise GameError(f"universe bound is limited to {RANK_LIMIT}")

    @lru_cache(maxsize=None)
    def rank(node: tuple) -> int:
        start = node[-1] + 1 if node else 0
        best = 0
        for n in range(start, universe):
            child = node + (n,)
            if fam.member(child):
                best = max(best, rank(child) + 1)
        return best

    return rank(()) if fam.member(()) else 0


def snapshot(strategy):
    return copy.deepcopy(strategy)

