"""Exhaustivity ranks on finite algebras and the machinery bounding them.

On a finite algebra the rank of the reverse-inclusion order on disjoint
``eps``-heavy families is the size of the largest such family, which is
what :func:`exhaustivity_rank` computes.

The rest executes the finite versions of the arguments that bound the rank
of the constructed submeasures:

* :func:`find_thin_bound` and :func:`exhaust_run` follow the exhaustivity
  proof on a finite disjoint stream, re-verifying every step;
* :class:`GStrategy`, :class:`HStrategy` and :class:`EStrategy` are the
  Player I strategies for the three games, each with a referee
  (:func:`play_G`, :func:`play_H`, :func:`play_E`) that enforces the rules
  independently of the strategy.

A ``mu`` here is anything with ``space``, ``arith``, ``mu(bits)`` and
``mu.relative(bits, atom)``: a :class:`~maharam.submeasure.SubmeasureTable`
or a :class:`~maharam.submeasure.FamilyMeasure`.
"""

from __future__ import annotations

import copy
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable, Optional, Sequence

import mpmath

from .algebra import Atom, Clopen, Space
from .games import I_WINS, ILLEGAL, Transcript
from .norms import Norm
from .ordinal import OMEGA, ONE, ZERO, Ordinal, add, as_ordinal, mul, nat_sum_all, omega_pow, power, render
from .schreier import Family, FiniteSet, Power, Schreier
from .submeasure import NotFound, SubmeasureError, covering_sequence, is_thin

__all__ = [
    "RankError",
    "PremiseFailure",
    "AdversaryImpossible",
    "PREMISE_FAILURE",
    "exhaustivity_rank",
    "heavy_disjoint_family",
    "find_thin_bound",
    "exhaust_run",
    "validate_thinness_property",
    "validate_covering_property",
    "CSeq",
    "GMove",
    "HMove",
    "GStrategy",
    "HStrategy",
    "EStrategy",
    "strategy_G_A_delta",
    "strategy_H_m_delta",
    "strategy_E",
    "card_family",
    "play_G",
    "play_H",
    "play_E",
    "RandomG",
    "RandomH",
    "RandomE",
    "rank_bounds",
]

PREMISE_FAILURE = "PREMISE_FAILURE"
ATOM_LIMIT = 8


class RankError(ValueError):
    pass


class PremiseFailure(RankError):
    """A hypothesis of the construction (covering or thinness property)
    does not hold on the instance."""


class AdversaryImpossible(RankError):
    """Player II's move could not have been legal under verified premises."""


# -- exhaustivity rank ------------------------------------------------------------------


def _atoms_of(space) -> int:
    count = space.atom_count if isinstance(space, Space) else int(space)
    if count > ATOM_LIMIT:
        raise RankError(f"algebras are limited to {ATOM_LIMIT} atoms (resolution 3), got {count}")
    if count < 0:
        raise RankError("atom count must be natural")
    return count


def _minimal_heavy(mu: Callable, eps, count: int) -> list[int]:
    heavy = [X for X in range(1, 1 << count) if mu(X) >= eps]
    hs = set(heavy)
    return [X for X in heavy if not any((Y & X) == Y and Y != X for Y in hs if bin(Y).count("1") < bin(X).count("1"))]


def heavy_disjoint_family(mu: Callable, eps, space) -> list[int]:
    """A largest pairwise disjoint family of sets with ``mu >= eps``."""
    count = _atoms_of(space)
    if not eps > 0:
        raise RankError("eps must be positive")
    minimal = _minimal_heavy(mu, eps, count)
    memo: dict[int, list[int]] = {0: []}

    def best(U: int) -> list[int]:
        got = memo.get(U)
        if got is not None:
            return got
        bit = U & -U
        out = best(U & ~bit)
        for X in minimal:
            if X & bit and X & ~U == 0:
                cand = [X] + best(U & ~X)
                if len(cand) > len(out):
                    out = cand
        memo[U] = out
        return out

    return sorted(best((1 << count) - 1))


def exhaustivity_rank(mu: Callable, eps, space) -> int:
    """Rank of the disjoint ``eps``-heavy families under reverse inclusion.

    ``space`` is a :class:`Space` (resolution at most 3) or an atom count;
    ``mu`` takes bitsets over the atoms.
    """
    return len(heavy_disjoint_family(mu, eps, space))


# -- thin bounds and the exhaustivity procedure ------------------------------------------


def _check_disjoint(E: Sequence[int]):
    seen = 0
    for i, X in enumerate(E):
        if X & seen:
            raise RankError(f"E_{i} meets an earlier set")
        seen |= X


@dataclass
class ThinBound:
    n: int
    B: int
    cases: list[dict]
    tail_start: int

    def __iter__(self):
        return iter((self.n, self.B))


def find_thin_bound(mu, E_list: Sequence[int], m: int, eta, tail_start: Optional[int] = None) -> ThinBound:
    """``n > m`` and ``B`` in ``B_n``, ``(m, n, mu)``-thin, with
    ``mu(E_i - B) <= eta`` for every ``i >= tail_start``.

    Each level-``m`` atom ``A`` gets a hole ``H(A)``: the part of an initial
    union when that is already heavy relative to ``A``, otherwise ``A``
    minus a uniform covering set.  The default tail starts after the
    longest initial union used.  Raises :class:`NotFound` naming the atom
    when no hole works and :class:`PremiseFailure` when the covering search
    fails.
    """
    sp, ar = mu.space, mu.arith
    E = [X.bits if isinstance(X, Clopen) else X for X in E_list]
    _check_disjoint(E)
    atoms = sp.atoms(m)
    eta = ar.num(Fraction(eta))
    B, top, cases, longest = 0, m + 1, [], 0
    for A in atoms:
        union, hole, case = 0, None, None
        for r in range(1, len(E) + 1):
            union |= E[r - 1]
            part = union & A.bits
            if ar.gt(mu.relative(part, A), 1, "case 1"):
                hole, case = part, {"atom": list(A.values), "case": 1, "r": r}
                longest = max(longest, r)
                break
        if hole is None:
            G = sp.pi_preimage(union & A.bits, A.level, A.index)
            n_cov = max(sp.level(G), m + 1)
            try:
                seq = covering_sequence(mu, G, m, n=n_cov, uniform=True)
            except NotFound as exc:
                raise PremiseFailure(f"covering property: atom {list(A.values)}: {exc}") from None
            C = 0
            for part in seq.values():
                C |= part
            if G & ~C:
                raise PremiseFailure(f"covering property: cover misses part of E at atom {list(A.values)}")
            hole = A.bits & ~C
            case = {"atom": list(A.values), "case": 2, "cover": sp.hex(C)}
            if not ar.gt(mu.relative(hole, A), 1, "case 2"):
                raise NotFound(f"atom {list(A.values)}: A minus the cover is not heavy (mu(T) is below what the bound needs)")
        B |= A.bits & ~hole
        top = max(top, sp.level(hole))
        cases.append(case)
    tail = longest if tail_start is None else tail_start
    if not is_thin(B, (m, top), mu):
        raise RankError("internal: B is not thin")
    for i in range(tail, len(E)):
        if ar.gt(mu(E[i] & ~B), eta, "tail"):
            raise RankError(f"tail bound fails at E_{i}; declare a later tail")
    return ThinBound(top, B, cases, tail)


def _mark_sets(limit: int, norm: Norm, target: int) -> list[FiniteSet]:
    marks = range(limit + 1)
    return [FiniteSet(c) for k in range(1, limit + 2) for c in combinations(marks, k) if norm(FiniteSet(c)) == target]


def validate_thinness_property(mu, s: int, norm: Norm, M_s: int) -> dict:
    """Check ``mu(X) <= 2^-s`` for every ``(I, mu)``-thin ``X`` with
    ``||I|| = M_s``, over all ``X`` and all ``I`` inside ``{0..n+M_s}``.

    Levels above the resolution behave like the resolution, so this covers
    every thinness pattern a set of ``M_s`` marks can have.
    """
    sp, ar = mu.space, mu.arith
    if sp.atom_count > ATOM_LIMIT:
        return {"validated": False, "reason": "resolution too large to enumerate", "counterexamples": []}
    limit = sp.n + M_s
    marks = _mark_sets(limit, norm, M_s)
    bound = ar.num(Fraction(1, 1 << s))
    bad, checked = [], 0
    for X in range(1 << sp.atom_count):
        for I in marks:
            if is_thin(X, I, mu):
                checked += 1
                if ar.gt(mu(X), bound, "thinness property"):
                    bad.append({"set": sp.hex(X), "marks": list(I)})
                    break
    return {"validated": not bad, "mark_sets": len(marks), "checked": checked, "counterexamples": bad[:5]}


def validate_covering_property(mu) -> dict:
    """Search an ``m``-covering sequence for every ``E`` with ``mu(E) < 2``
    not depending on coordinates below ``m``, for every ``m`` up to the
    resolution (plus a uniform one, which the thin-bound step uses)."""
    sp, ar = mu.space, mu.arith
    if sp.atom_count > ATOM_LIMIT:
        return {"validated": False, "reason": "resolution too large to enumerate", "failures": []}
    checked, failures = 0, []
    for m in range(sp.n + 1):
        for E in range(1 << sp.atom_count):
            if not sp.depends_only_ge(E, m) or not ar.gt(2, mu(E), "covering premise"):
                continue
            checked += 1
            try:
                covering_sequence(mu, E, m, n=max(sp.level(E), m + 1), uniform=True)
            except NotFound:
                failures.append({"m": m, "E": sp.hex(E)})
    return {"validated": not failures, "checked": checked, "failures": failures[:5]}


def exhaust_run(mu, E_stream: Iterable, s: int, eps, norm: Norm, M_s: int, validate: bool = True) -> dict:
    """Run the exhaustivity procedure on a finite disjoint stream.

    Builds ``n_0 = 0 < n_1 < ...`` by repeated :func:`find_thin_bound`
    with ``eta_l = eps / 2^(l+1)`` until ``||{n_0..n_l}|| = M_s``, then
    checks that the intersection ``B`` of the thin sets is thin, that
    ``mu(B) <= 2^-s`` and that the tail of the stream is within ``eps`` of
    being covered by ``B``.  Failures name the premise that broke.
    """
    sp, ar = mu.space, mu.arith
    E = [X.bits if isinstance(X, Clopen) else X for X in E_stream]
    _check_disjoint(E)
    report: dict[str, Any] = {"s": s, "eps": str(eps), "M_s": M_s, "steps": [], "status": "PASS"}
    if validate:
        report["thinness_property"] = validate_thinness_property(mu, s, norm, M_s)
        if report["thinness_property"]["counterexamples"]:
            report["status"] = PREMISE_FAILURE
            report["premise"] = "thinness property"
            return report
    marks = [0]
    Bs: list[int] = []
    tail = 0
    limit = sp.n + M_s
    l = 0
    while norm(FiniteSet(marks)) < M_s:
        if marks[-1] >= limit:
            report["status"] = PREMISE_FAILURE
            report["premise"] = f"norm target {M_s} unreachable with marks up to {limit}"
            return report
        eta_l = Fraction(eps) / (1 << (l + 1))
        try:
            got = find_thin_bound(mu, E, marks[-1], eta_l)
        except PremiseFailure as exc:
            report["status"] = PREMISE_FAILURE
            report["premise"] = str(exc)
            return report
        except NotFound as exc:
            report["status"] = PREMISE_FAILURE
            report["premise"] = f"no thin bound: {exc}"
            return report
        except SubmeasureError as exc:
            report["status"] = "UNDECIDED"
            report["reason"] = str(exc)
            return report
        report["steps"].append({"m": marks[-1], "n": got.n, "B": sp.hex(got.B), "eta": str(eta_l), "cases": got.cases})
        marks.append(got.n)
        Bs.append(got.B)
        tail = max(tail, got.tail_start)
        l += 1
    B = sp.full
    for X in Bs:
        B &= X
    report["marks"] = marks
    report["B"] = sp.hex(B)
    report["B_thin"] = is_thin(B, marks, mu)
    value = mu(B)
    report["mu_B"] = ar.to_json(value)
    report["bound_holds"] = not ar.gt(value, ar.num(Fraction(1, 1 << s)), "final bound")
    worst = max((mu(E[i] & ~B) for i in range(tail, len(E))), default=ar.zero)
    report["tail_start"] = tail
    report["tail_max"] = ar.to_json(worst)
    report["tail_ok"] = not ar.gt(worst, ar.num(Fraction(eps)), "tail")
    if not report["B_thin"]:
        report["status"] = "FAIL"
    elif not report["bound_holds"]:
        report["status"] = PREMISE_FAILURE
        report["premise"] = "thinness property"
    elif not report["tail_ok"]:
        report["status"] = "FAIL"
    return report


# -- C-sequences and the game G(alpha, A, delta) -------------------------------------------


@dataclass(frozen=True)
class CSeq:
    """``(C_{m+1}, ..., C_end)`` inside a level-``m`` atom."""

    m: int
    entries: tuple[int, ...] = ()

    @property
    def end(self) -> int:
        return self.m + len(self.entries)

    def union(self) -> int:
        out = 0
        for C in self.entries:
            out |= C
        return out

    def key(self, sp: Space) -> tuple:
        return tuple(sp.hex(C) for C in self.entries)


@dataclass(frozen=True)
class GMove:
    alpha: Ordinal
    C: int
    space: Space

    def to_json(self):
        return {"alpha": render(self.alpha), "C": self.space.hex(self.C)}


@dataclass(frozen=True)
class HMove:
    alpha: Ordinal
    B: int
    q: int
    space: Space

    def to_json(self):
        return {"alpha": render(self.alpha), "B": self.space.hex(self.B), "q": self.q}


def _sum_of_powers(counts: Counter) -> Ordinal:
    """Natural sum of ``counts[k]`` copies of ``w^k``."""
    return Ordinal(tuple((Ordinal.of(k), c) for k, c in sorted(counts.items(), reverse=True) if c))


def _ifloor(x) -> int:
    if isinstance(x, (int, Fraction)):
        return math.floor(x)
    return int(mpmath.floor(x))


def _ceil_div(a, b) -> int:
    q = Fraction(a) / Fraction(b)
    return math.ceil(q)


class GStrategy:
    """Player I in ``G(w^(k+1), A, delta)`` with ``k = ceil(4/delta)``.

    Keeps a finite family ``D`` of C-sequences such that every sequence
    covering the sets played so far, in the sense that ``int_j`` of their
    union lies in the entries up to ``j``, extends a member of ``D``; plays
    the natural sum of ``w^k(C)`` over ``D`` plus one, with the
    lexicographically least member as its cover.
    """

    def __init__(self, mu, A: Atom, delta):
        delta = Fraction(delta)
        if delta <= 0:
            raise RankError("delta must be positive")
        self.mu, self.A, self.delta = mu, A, delta
        self.delta_n = mu.arith.num(delta)
        self.sp = mu.space
        self.m = A.level
        self.k = _ceil_div(4, delta)
        self.bound = omega_pow(self.k + 1)
        self.D: dict[CSeq, int] = {CSeq(self.m): self.k_for(mu.arith.zero)}
        self.counts = Counter(self.D.values())
        self.p = self.m
        self.top = self.m  # least p with every E_i in B_p
        self.U = 0
        self.current: Optional[GMove] = None
        self.chosen = CSeq(self.m)
        self.zero = False

    def rel(self, X: int):
        return self.mu.relative(X, self.A)

    def weight(self, seq: CSeq):
        return sum((self.rel(C) for C in seq.entries), self.mu.arith.zero)

    def k_for(self, w) -> int:
        """Least ``l`` with ``(l+1) delta > 4 - w``."""
        return _ifloor((4 - w) / self.delta_n)

    def k_of(self, seq: CSeq) -> int:
        return self.k_for(self.weight(seq))

    def _covers(self, entries: Sequence[int], U: int) -> bool:
        covered = 0
        for i, C in enumerate(entries):
            covered |= C
            if self.sp.interior(U, self.m + 1 + i) & ~covered:
                return False
        return True

    def _extensions(self, base: CSeq, target: int, U: int) -> list[tuple[CSeq, object]]:
        """Delta-proper extensions of ``base`` up to ``target`` covering ``U``,
        with their weights."""
        sp, A = self.sp, self.A
        if not self._covers(base.entries, U):
            return []
        limit = self.mu.arith.num(4)
        need = self.weight(base) + self.delta_n
        out: list[tuple[CSeq, object]] = []

        def grow(entries: list[int], covered: int, w):
            r = self.m + 1 + len(entries)
            if r > target:
                if w >= need:
                    out.append((CSeq(self.m, tuple(entries)), w))
                return
            lo = sp.interior(U, r) & ~covered
            free = [
                sp.block_mask(r, j)
                for j in range(sp.atoms_at(r))
                if sp.block_mask(r, j) & A.bits == sp.block_mask(r, j) and not sp.block_mask(r, j) & lo
            ]
            for choice in range(1 << len(free)):
                C = lo
                for i, mask in enumerate(free):
                    if choice >> i & 1:
                        C |= mask
                w2 = w + self.rel(C)
                if w2 <= limit:
                    grow(entries + [C], covered | C, w2)

        grow(list(base.entries), base.union(), self.weight(base))
        return out

    def _play(self) -> GMove:
        if not self.D:
            raise PremiseFailure(f"covering property: no C-sequence covers the play in atom {list(self.A.values)}")
        alpha = add(_sum_of_powers(self.counts), ONE)
        # hex forms are zero padded, so comparing entries compares serialized forms
        self.chosen = min(self.D, key=lambda c: c.entries)
        self.current = GMove(alpha, self.chosen.union(), self.sp)
        return self.current

    def move(self, E: Optional[int]) -> GMove:
        if E is None:
            self.current = GMove(self.bound, 0, self.sp)
            return self.current
        E &= self.A.bits
        self.U |= E
        self.top = max(self.top, self.sp.level(E))
        if self.zero or self.rel(self.U) >= 2:
            self.zero = True
            self.current = GMove(ZERO, 0, self.sp)
            return self.current
        C = self.current.C
        if not self.rel(E & ~C) >= self.delta_n:
            return self.current
        old = self.chosen
        self.p = max(self.p, self.top)
        ext = self._extensions(old, self.p, self.U)
        self.counts[self.D.pop(old)] -= 1
        for seq, w in ext:
            if seq not in self.D:
                self.D[seq] = self.k_for(w)
                self.counts[self.D[seq]] += 1
        return self._play()


def strategy_G_A_delta(mu, A: Atom, delta) -> GStrategy:
    return GStrategy(mu, A, delta)


class HStrategy:
    """Player I in ``H(w^(k+2), m, delta)`` with ``k = ceil(4 |A_m| / delta)``,
    running one :class:`GStrategy` per level-``m`` atom with
    ``delta / |A_m|``."""

    def __init__(self, mu, m: int, delta):
        delta = Fraction(delta)
        if delta <= 0:
            raise RankError("delta must be positive")
        self.mu, self.m, self.delta = mu, m, delta
        self.sp = mu.space
        self.atoms = self.sp.atoms(m)
        self.k = _ceil_div(4 * len(self.atoms), delta)
        self.bound = omega_pow(self.k + 2)
        self.games = [GStrategy(mu, A, delta / len(self.atoms)) for A in self.atoms]
        self.U = 0
        self.current: Optional[HMove] = None

    def move(self, E: Optional[int]) -> HMove:
        moves = [g.move(None if E is None else E & g.A.bits) for g in self.games]
        if E is not None:
            self.U |= E
        sp = self.sp
        B, q = 0, self.m + 1
        for g, mv in zip(self.games, moves):
            A = g.A
            if g.rel(self.U & A.bits) >= 2:
                H = self.U & A.bits
            else:
                H = A.bits & ~mv.C
            B |= A.bits & ~H
            q = max(q, sp.level(H))
        self.current = HMove(nat_sum_all(mv.alpha for mv in moves), B, q, sp)
        return self.current


def strategy_H_m_delta(mu, m: int, delta) -> HStrategy:
    return HStrategy(mu, m, delta)


def card_family(M_N: int):
    """``{F : |F| < M_N}`` as ``S_1^(M_N - 1)``, with a certified bound and a
    Player I strategy for its family game.  Returns ``(family, beta, make_tau)``."""
    from .games import strategy_I_power

    if M_N < 2:
        raise RankError("M_N must be at least 2")
    fam = Schreier(1) if M_N == 2 else Power(Schreier(1), M_N - 1)
    make, beta = strategy_I_power(Schreier(1), M_N - 1)
    return fam, beta, make


class EStrategy:
    """Player I in ``E(w^(w (beta+1)))``, combining a family-game strategy
    ``tau`` for ``S = {F : ||F|| < M_N}`` with :class:`HStrategy` runs.

    State: ``l``, marks ``m_0 < ... < m_l``, ordinals ``gamma_0 > ... > gamma_l``
    from ``tau``, and one H-run per ``i < l`` whose last move is
    ``(alpha_i, B_i)``.
    """

    def __init__(self, mu, N: int, eps, S: Family, beta, make_tau: Callable):
        eps = Fraction(eps)
        if eps <= 0:
            raise RankError("eps must be positive")
        self.mu, self.N, self.eps, self.S = mu, N, eps, S
        self.beta = as_ordinal(beta)
        self.threshold = Fraction(1, 1 << N) + eps
        self.bound = omega_pow(mul(OMEGA, add(self.beta, ONE)))
        tau = make_tau()
        g0 = tau.move(None)
        if g0 is None or g0 > self.beta:
            raise RankError("tau must open with an ordinal at most beta")
        self.snaps = [copy.deepcopy(tau)]
        g1 = tau.move(0)
        if g1 is None:
            raise PremiseFailure("tau resigned after the first mark")
        self.snaps.append(copy.deepcopy(tau))
        self.gamma = [g0, g1]
        self.marks = [0]
        first = HStrategy(mu, 0, self.eps_i(0))
        self.runs = [first]
        self.last = [first.move(None)]
        self.marks.append(self.last[0].q)
        self.l = 1
        self.log: list[dict] = []

    def eps_i(self, i: int) -> Fraction:
        return self.eps / (1 << (i + 1))

    def _s(self) -> int:
        """``s`` with the first move of the next H-run below ``w^s``."""
        m = self.marks[self.l]
        atoms = self.mu.space.atoms_at(m)
        return _ceil_div(4 * atoms, self.eps_i(self.l)) + 2

    def xi(self) -> Ordinal:
        terms = [mul(omega_pow(mul(OMEGA, self.gamma[i])), self.last[i].alpha) for i in range(self.l)]
        terms.append(omega_pow(add(mul(OMEGA, self.gamma[self.l]), self._s())))
        return nat_sum_all(terms)

    def move(self, E: Optional[int]) -> Ordinal:
        if E is None:
            return self.xi()
        mu, ar = self.mu, self.mu.arith
        j = next(
            (i for i in range(self.l) if not ar.gt(ar.num(self.eps_i(i)), mu(E & ~self.last[i].B), "case split")),
            None,
        )
        if j is None:
            F = FiniteSet(self.marks[: self.l + 1])
            if not self.S.member(F):
                self._contradiction(E, F)
            tau = copy.deepcopy(self.snaps[self.l])
            g = tau.move(self.marks[self.l])
            if g is None:
                raise PremiseFailure("tau resigned on a legal mark")
            self.snaps.append(copy.deepcopy(tau))
            self.gamma.append(g)
            run = HStrategy(mu, self.marks[self.l], self.eps_i(self.l))
            self.runs.append(run)
            self.last.append(run.move(None))
            self.marks.append(self.last[-1].q)
            self.l += 1
            self.log.append({"case": 1, "l": self.l})
        else:
            self.last[j] = self.runs[j].move(E)
            self.runs = self.runs[: j + 1]
            self.last = self.last[: j + 1]
            self.gamma = self.gamma[: j + 2]
            self.snaps = self.snaps[: j + 2]
            self.marks = self.marks[: j + 1] + [self.last[j].q]
            self.l = j + 1
            self.log.append({"case": 2, "j": j})
        return self.xi()

    def _contradiction(self, E: int, F: FiniteSet):
        mu, ar = self.mu, self.mu.arith
        B = mu.space.full
        for mv in self.last[: self.l]:
            B &= mv.B
        thin = is_thin(B, F, mu)
        small = not ar.gt(mu(B), ar.num(Fraction(1, 1 << self.N)), "contradiction")
        light = ar.gt(ar.num(self.threshold), mu(E), "contradiction")
        if thin and small and light:
            raise AdversaryImpossible(f"F = {list(F)} left S; the move has mu below {self.threshold}")
        raise PremiseFailure(
            f"thinness property: F = {list(F)} left S but thin={thin}, mu(B) small={small}, move light={light}"
        )


def strategy_E(mu, N: int, eps, S: Family, beta=None, make_tau: Optional[Callable] = None) -> EStrategy:
    """``beta`` and ``make_tau`` default to the power-strategy bound when
    ``S`` is ``S_1`` or a power of it."""
    if make_tau is None or beta is None:
        if isinstance(S, Power) and isinstance(S.base, Schreier) and S.base.alpha == ONE:
            _, beta0, make0 = card_family(S.n + 1)
        elif isinstance(S, Schreier) and S.alpha == ONE:
            _, beta0, make0 = card_family(2)
        else:
            raise RankError("supply beta and make_tau for this family")
        beta = beta0 if beta is None else beta
        make_tau = make_tau or make0
    return EStrategy(mu, N, eps, S, beta, make_tau)


# -- referees ---------------------------------------------------------------------------------


def _premise(tr: Transcript, exc: Exception) -> Transcript:
    tr.outcome = PREMISE_FAILURE
    tr.note = str(exc)
    return tr


def play_G(mu, A: Atom, delta, strat_I, strat_II, alpha=None, max_rounds: int = 50) -> Transcript:
    """Referee ``G(alpha, A, delta)``.  Player I surviving ``max_rounds`` is
    reported as ``ONGOING``.  ``tr.checks[n]`` says whether the move after
    round ``n`` had to decrease strictly."""
    sp, ar = mu.space, mu.arith
    delta = ar.num(Fraction(delta))
    alpha = as_ordinal(alpha) if alpha is not None else strat_I.bound
    rel = lambda X: mu.relative(X, A)
    tr = Transcript("G(alpha,A,delta)", alpha)
    prev: Optional[GMove] = None
    U, strict, last = 0, False, None
    for rnd in range(max_rounds):
        try:
            mv = strat_I.move(last)
        except PremiseFailure as exc:
            return _premise(tr, exc)
        tr.moves.append(("I", mv))
        problem = None
        if not isinstance(mv, GMove):
            problem = "not a move"
        elif mv.alpha > alpha:
            problem = f"{render(mv.alpha)} exceeds {render(alpha)}"
        elif prev is not None and mv.alpha > prev.alpha:
            problem = "ordinal increased"
        elif prev is not None and strict and not mv.alpha < prev.alpha:
            problem = "strict decrease required"
        elif mv.C & ~A.bits:
            problem = "C leaves A"
        elif ar.gt(rel(mv.C), 4, "cover weight"):
            problem = "cover weight exceeds 4"
        if problem:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("I", rnd), problem
            return tr
        E = strat_II.move(mv)
        if E is None:
            tr.outcome, tr.note = I_WINS, "II resigned"
            return tr
        tr.moves.append(("II", Clopen(sp, E)))
        if E & ~A.bits:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), "E leaves A"
            return tr
        before = rel(U)
        U |= E
        strict = before < 2 and (rel(U) >= 2 or rel(E & ~mv.C) >= delta)
        tr.checks.append(strict)
        prev, last = mv, E
    return tr


def play_H(mu, m: int, delta, strat_I, strat_II, alpha=None, max_rounds: int = 50) -> Transcript:
    """Referee ``H(alpha, m, delta)``."""
    sp, ar = mu.space, mu.arith
    delta = ar.num(Fraction(delta))
    alpha = as_ordinal(alpha) if alpha is not None else strat_I.bound
    tr = Transcript("H(alpha,m,delta)", alpha)
    prev: Optional[HMove] = None
    used, last = 0, None
    for rnd in range(max_rounds):
        try:
            mv = strat_I.move(last)
        except PremiseFailure as exc:
            return _premise(tr, exc)
        tr.moves.append(("I", mv))
        problem = None
        if not isinstance(mv, HMove):
            problem = "not a move"
        elif not mv.alpha < alpha:
            problem = f"{render(mv.alpha)} is not below {render(alpha)}"
        elif prev is not None and not mv.alpha < prev.alpha:
            problem = "ordinal did not decrease"
        elif not mv.q > m:
            problem = "q must exceed m"
        elif not is_thin(mv.B, (m, mv.q), mu):
            problem = f"B is not ({m},{mv.q})-thin"
        if problem:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("I", rnd), problem
            return tr
        E = strat_II.move(mv)
        if E is None:
            spare = sp.full & ~used & ~mv.B
            tr.outcome = I_WINS
            tr.note = "II resigned with a legal move available" if mu(spare) >= delta else "II has no move"
            return tr
        tr.moves.append(("II", Clopen(sp, E)))
        if E & used:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), "E meets an earlier set"
            return tr
        if ar.gt(delta, mu(E & ~mv.B), "II threshold"):
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), "mu(E - B) is below delta"
            return tr
        tr.checks.append(True)
        used |= E
        prev, last = mv, E
    return tr


def play_E(mu, N: int, eps, strat_I, strat_II, xi=None, max_rounds: int = 50) -> Transcript:
    """Referee ``E(xi)`` with threshold ``2^-N + eps``."""
    sp, ar = mu.space, mu.arith
    threshold = ar.num(Fraction(1, 1 << N) + Fraction(eps))
    xi = as_ordinal(xi) if xi is not None else strat_I.bound
    tr = Transcript("E(xi)", xi)
    prev: Optional[Ordinal] = None
    used, last = 0, None
    for rnd in range(max_rounds):
        try:
            a = strat_I.move(last)
        except PremiseFailure as exc:
            return _premise(tr, exc)
        except AdversaryImpossible as exc:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd - 1), f"adversary-impossible: {exc}"
            return tr
        tr.moves.append(("I", a))
        problem = None
        if not isinstance(a, Ordinal):
            problem = "not an ordinal"
        elif prev is None and a > xi:
            problem = f"{render(a)} exceeds {render(xi)}"
        elif prev is not None and not a < prev:
            problem = "ordinal did not decrease"
        if problem:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("I", rnd), problem
            return tr
        E = strat_II.move(a)
        if E is None:
            spare = sp.full & ~used
            tr.outcome = I_WINS
            tr.note = "II resigned with a legal move available" if mu(spare) >= threshold else "II has no move"
            return tr
        tr.moves.append(("II", Clopen(sp, E)))
        if E & used:
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), "E meets an earlier set"
            return tr
        if ar.gt(threshold, mu(E), "II threshold"):
            tr.outcome, tr.illegal, tr.note = ILLEGAL, ("II", rnd), "mu(E) is below the threshold"
            return tr
        tr.checks.append(True)
        used |= E
        prev, last = a, E
    return tr


# -- seeded adversaries ---------------------------------------------------------------------


class RandomG:
    """Random subsets of ``A``, sometimes inside the current cover."""

    def __init__(self, rng: random.Random, sp: Space, A: Atom):
        self.rng, self.sp, self.A = rng, sp, A
        self.points = [i for i in range(sp.atom_count) if A.bits >> i & 1]

    def move(self, mv: GMove) -> int:
        rng = self.rng
        roll = rng.random()
        pool = self.points
        if roll < 0.25:
            pool = [i for i in self.points if mv.C >> i & 1] or self.points
        elif roll < 0.35:
            return 0
        density = rng.choice((0.1, 0.2, 0.4))
        E = 0
        for i in pool:
            if rng.random() < density:
                E |= 1 << i
        return E


class _Grow:
    """Grow a random disjoint set point by point until ``ok`` holds."""

    def __init__(self, rng: random.Random, mu):
        self.rng, self.mu, self.used = rng, mu, 0

    def pick(self, ok: Callable[[int], bool]) -> Optional[int]:
        sp = self.mu.space
        free = [i for i in range(sp.atom_count) if not self.used >> i & 1]
        self.rng.shuffle(free)
        E = 0
        for i in free:
            E |= 1 << i
            if ok(E) and self.rng.random() < 0.7:
                break
        if not E or not ok(E):
            return None
        self.used |= E
        return E


class RandomH(_Grow):
    def __init__(self, rng: random.Random, mu, delta):
        super().__init__(rng, mu)
        self.delta = Fraction(delta)

    def move(self, mv: HMove) -> Optional[int]:
        return self.pick(lambda E: self.mu(E & ~mv.B) >= self.delta)


class RandomE(_Grow):
    def __init__(self, rng: random.Random, mu, N: int, eps):
        super().__init__(rng, mu)
        self.threshold = Fraction(1, 1 << N) + Fraction(eps)

    def move(self, a: Ordinal) -> Optional[int]:
        return self.pick(lambda E: self.mu(E) >= self.threshold)


# -- bounds -------------------------------------------------------------------------------------


def rank_bounds(alpha) -> tuple[Ordinal, Ordinal]:
    """``(w^alpha, w^(w (alpha+1)^w))``."""
    alpha = as_ordinal(alpha)
    if alpha.is_zero():
        raise RankError("alpha must be positive")
    upper_exp = mul(OMEGA, power(add(alpha, ONE), OMEGA))
    return omega_pow(alpha), omega_pow(upper_exp)
