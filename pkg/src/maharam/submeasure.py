"""Marked weighted sets and the backwards-recursive submeasures on a finite
truncation.

For depth ``p`` the families ``C_{k,p}`` are built for ``k = p-1, ..., 0``:
level ``k`` adds every triple ``(E, I, w)`` where ``E`` is
``(I, nu_{k+1,p})``-thin, ``||I|| <= M_k`` and ``w`` is the floor
``2^-k (M_k / ||I||)^a_k``.  Only the least weight per set survives, since
heavier duplicates never change an infimum.  ``nu_{k,p}`` is the cover
functional of ``C_{k,p}``.

Marks live in ``{0, ..., n}`` where ``n`` is the resolution.  Thinness is
decided with the largest possible hole ``int_r(A - X)``; every ``phi`` here
is monotone, so a smaller hole never helps.

Weights are exact ``Fraction`` values when every ``a_k`` is zero, and
200-bit ``mpmath`` floats otherwise.  Float comparisons closer than
``2^-64`` are decided as computed and logged in ``Arith.incidents``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import mpmath

from .algebra import Atom, Clopen, Space
from .norms import Norm
from .schreier import FiniteSet, member_subsets

__all__ = [
    "INF",
    "SubmeasureError",
    "NotFound",
    "Arith",
    "Params",
    "MarkedWeightedSet",
    "SubmeasureTable",
    "FamilyMeasure",
    "phi",
    "phi_bits",
    "is_thin",
    "build",
    "paper_params",
    "c_sequence",
    "transport_triple",
    "covering_sequence",
    "check_covering_sequence",
    "thinness_property_check",
    "degenerate_levels",
    "cylinder_diagnostics",
    "EXHAUSTIVE_LIMIT",
]

INF = math.inf
EXHAUSTIVE_LIMIT = 3
PRECISION = 200
TOLERANCE_BITS = 64
SEARCH_LIMIT = 16


class SubmeasureError(ValueError):
    pass


class NotFound(SubmeasureError):
    pass


class Arith:
    """Weight arithmetic for one construction."""

    def __init__(self, exact: bool):
        self.exact = exact
        self.incidents: list[str] = []
        if exact:
            self.ctx = None
            self.zero, self.one, self.inf = Fraction(0), Fraction(1), INF
        else:
            self.ctx = mpmath.MPContext()
            self.ctx.prec = PRECISION
            self.zero, self.one, self.inf = self.ctx.mpf(0), self.ctx.mpf(1), self.ctx.inf
            self.tol = self.ctx.ldexp(1, -TOLERANCE_BITS)

    def num(self, x):
        if self.exact:
            return x if x == INF else Fraction(x)
        return self.ctx.mpf(x) if not isinstance(x, Fraction) else self.ctx.mpf(x.numerator) / x.denominator

    def floor(self, k: int, a, M: int, norm_I: int):
        """``2^-k (M / ||I||)^a``."""
        if self.exact:
            return Fraction(1, 1 << k)
        ctx = self.ctx
        return ctx.ldexp(1, -k) * ctx.power(ctx.mpf(M) / norm_I, self.num(a))

    def power(self, base: Fraction, a):
        if self.exact:
            return Fraction(1)
        return self.ctx.power(self.num(base), self.num(a))

    def _close(self, x, y) -> bool:
        if self.exact or x == self.inf or y == self.inf:
            return False
        return abs(x - y) <= self.tol * max(1, abs(y))

    def gt(self, x, y, what: str = "") -> bool:
        if self._close(x, y):
            self.incidents.append(f"{what}: {mpmath.nstr(x, 25)} vs {mpmath.nstr(y, 25)}")
        return x > y

    def le(self, x, y, what: str = "") -> bool:
        return not self.gt(x, y, what)

    def to_json(self, x):
        if x == INF or (not self.exact and x == self.inf):
            return "inf"
        if self.exact:
            return str(x)
        return mpmath.nstr(x, 30, strip_zeros=False)


@dataclass
class Params:
    resolution: int
    p: int
    a: list
    M: list
    norm: Norm
    mode: str = "exact"
    beam: int = 256
    norm_spec: str = "card"

    def __post_init__(self):
        if not isinstance(self.resolution, int) or not 1 <= self.resolution <= 6:
            raise SubmeasureError(f"resolution must be between 1 and 6, got {self.resolution}")
        if self.p < 0:
            raise SubmeasureError("p must be a natural number")
        if len(self.a) != self.p or len(self.M) != self.p:
            raise SubmeasureError(f"need exactly p = {self.p} values of a and of M")
        self.a = [Fraction(x) for x in self.a]
        for k, x in enumerate(self.a):
            if not 0 <= x < 1:
                raise SubmeasureError(f"a_{k} = {x} is outside [0, 1)")
        for k, x in enumerate(self.M):
            if not isinstance(x, int) or x < 1:
                raise SubmeasureError(f"M_{k} = {x!r} must be a positive integer")
        if self.mode not in ("exact", "bounded"):
            raise SubmeasureError(f"mode must be exact or bounded, got {self.mode!r}")
        if self.mode == "exact" and self.resolution > EXHAUSTIVE_LIMIT:
            raise SubmeasureError(f"exact mode needs resolution <= {EXHAUSTIVE_LIMIT}; use bounded mode")

    @property
    def exact_weights(self) -> bool:
        return all(x == 0 for x in self.a)


@dataclass(frozen=True)
class MarkedWeightedSet:
    bits: int
    marks: FiniteSet
    weight: object
    origin: int = -1  # the k with this triple in E_{k,p}; -1 if unknown

    def clopen(self, sp: Space) -> Clopen:
        return Clopen(sp, self.bits)


def _prune(family: Iterable[tuple[int, object]]) -> list[tuple[int, object]]:
    """Drop members covered by a cheaper-or-equal superset."""
    best: dict[int, object] = {}
    for bits, w in family:
        if bits and (bits not in best or w < best[bits]):
            best[bits] = w
    items = sorted(best.items(), key=lambda t: (t[1], -bin(t[0]).count("1")))
    kept: list[tuple[int, object]] = []
    for bits, w in items:
        if not any(bits & ~b == 0 for b, _ in kept):
            kept.append((bits, w))
    return kept


def phi_bits(family: Sequence[tuple[int, object]], X: int, inf=INF, zero=0):
    """Least total weight of members whose union covers ``X``."""
    if not X:
        return zero
    fam = _prune(family)
    reach = 0
    for b, _ in fam:
        reach |= b
    if X & ~reach:
        return inf
    memo: dict[int, object] = {0: zero}
    by_bit: dict[int, list] = {}

    def containing(bit: int):
        hit = by_bit.get(bit)
        if hit is None:
            hit = [(b, w) for b, w in fam if b >> bit & 1]
            by_bit[bit] = hit
        return hit

    def cost(U: int):
        got = memo.get(U)
        if got is not None:
            return got
        bit = (U & -U).bit_length() - 1
        best = inf
        for b, w in containing(bit):
            if w >= best:
                break
            c = w + cost(U & ~b)
            if c < best:
                best = c
        memo[U] = best
        return best

    return cost(X)


def phi(family: Sequence[MarkedWeightedSet], X: Clopen):
    """``phi_E(X)`` for a finite family of marked weighted sets."""
    return phi_bits([(t.bits, t.weight) for t in family], X.bits)


class SubmeasureTable:
    """``nu_{k,p}`` on a fixed truncation."""

    def __init__(self, params: Params, k: int, space: Space, arith: Arith):
        self.params = params
        self.k = k
        self.space = space
        self.arith = arith
        self.triples: dict[int, MarkedWeightedSet] = {}
        self.values: Optional[list] = None
        self.thin: dict[tuple[int, int], object] = {}
        self.candidates: list[int] = []
        self.chain: list["SubmeasureTable"] = []
        self._memo: dict[int, object] = {}
        self._reduce_level: Optional[int] = None

    @property
    def family(self) -> list[MarkedWeightedSet]:
        return [self.triples[b] for b in sorted(self.triples)]

    def __call__(self, X) -> object:
        X = X.bits if isinstance(X, Clopen) else X
        if not X:
            return self.arith.zero
        if self.values is not None:
            return self.values[X]
        if self._reduce_level is not None:
            X = self.space.closure(X, self._reduce_level)
        got = self._memo.get(X)
        if got is None:
            got = phi_bits(
                [(t.bits, t.weight) for t in self.triples.values()], X, self.arith.inf, self.arith.zero
            )
            self._memo[X] = got
        return got

    def relative(self, X: int, A: Atom):
        """``nu(X | A) = nu(pi_A^{-1}(X))``."""
        return self(self.space.pi_preimage(X, A.level, A.index))

    def tabulate(self):
        """Fill the full value table (resolutions up to 3)."""
        sp = self.space
        size = 1 << sp.atom_count
        fam = _prune((t.bits, t.weight) for t in self.triples.values())
        inf, zero = self.arith.inf, self.arith.zero
        vals = [inf] * size
        vals[0] = zero
        by_bit = [[(b, w) for b, w in fam if b >> i & 1] for i in range(sp.atom_count)]
        for X in range(1, size):
            bit = (X & -X).bit_length() - 1
            best = inf
            for b, w in by_bit[bit]:
                c = w + vals[X & ~b]
                if c < best:
                    best = c
            vals[X] = best
        self.values = vals
        return vals


class FamilyMeasure:
    """Exact ``phi`` of an explicit finite family of ``(bits, weight)`` pairs.

    A light stand-in for a constructed table, used to pose toy instances
    (additive measures, instances lacking a premise) to the rank module.
    """

    def __init__(self, space: Space, family: Iterable[tuple[int, object]]):
        self.space = space
        self.arith = Arith(True)
        self.family = _prune((b, Fraction(w)) for b, w in family)
        self._unit: Optional[Fraction] = None
        self._memo: dict[int, object] = {}

    @classmethod
    def additive(cls, space: Space, weight) -> "FamilyMeasure":
        """Every point weighs ``weight``."""
        out = cls(space, [])
        out._unit = Fraction(weight)
        return out

    def __call__(self, X) -> object:
        X = X.bits if isinstance(X, Clopen) else X
        if self._unit is not None:
            return self._unit * bin(X).count("1")
        got = self._memo.get(X)
        if got is None:
            got = phi_bits(self.family, X, INF, Fraction(0))
            self._memo[X] = got
        return got

    def relative(self, X: int, A: Atom):
        return self(self.space.pi_preimage(X, A.level, A.index))


def _norm_of(params: Params, I: Iterable[int]) -> int:
    return params.norm(FiniteSet(I))


def _thin_pair(sp: Space, X: int, m: int, r: int, nu, arith: Arith) -> bool:
    """``X`` is ``(m, r, nu)``-thin."""
    for j in range(sp.atoms_at(m)):
        A = sp.block_mask(m, j)
        hole = sp.interior(A & ~X, r)
        if not hole:
            return False
        if not arith.gt(nu(sp.pi_preimage(hole, m, j)), arith.one, f"thin({m},{r})"):
            return False
    return True


def is_thin(X, I: Iterable[int], mu: SubmeasureTable) -> bool:
    """``X`` is ``(I, mu)``-thin: every pair ``m < r`` of ``I`` leaves, in
    every level-``m`` atom ``A``, a level-``r`` hole ``H`` inside ``A - X``
    with ``mu(pi_A^{-1}(H)) > 1``."""
    X = X.bits if isinstance(X, Clopen) else X
    I = FiniteSet(I)
    for m, r in combinations(I, 2):
        if not _thin_pair(mu.space, X, m, r, mu, mu.arith):
            return False
    return True


def _mark_sets(params: Params) -> list[FiniteSet]:
    marks = range(params.resolution + 1)
    return [FiniteSet(c) for size in range(1, len(marks) + 1) for c in combinations(marks, size)]


def _candidates(params: Params, sp: Space) -> Iterable[int]:
    if params.mode == "exact":
        return range(1 << sp.atom_count)
    lvl = min(sp.n, EXHAUSTIVE_LIMIT)
    atoms = sp.atoms_at(lvl)
    masks = [sp.block_mask(lvl, j) for j in range(atoms)]
    out = []
    for choice in range(1 << atoms):
        out.append(sum(masks[j] for j in range(atoms) if choice >> j & 1))
    return out[: max(params.beam, 2)] if params.beam < len(out) else out


def build(params: Params) -> list[SubmeasureTable]:
    """Tables for ``nu_{k,p}``, indexed by ``k = 0..p``."""
    sp = Space(params.resolution)
    arith = Arith(params.exact_weights)
    tables: list[Optional[SubmeasureTable]] = [None] * (params.p + 1)
    top = SubmeasureTable(params, params.p, sp, arith)
    if params.mode == "exact":
        top.tabulate()
    else:
        top._reduce_level = min(sp.n, EXHAUSTIVE_LIMIT)
    tables[params.p] = top
    marks = _mark_sets(params)
    norms = {I: _norm_of(params, I) for I in marks}
    cands = list(_candidates(params, sp))
    for k in range(params.p - 1, -1, -1):
        nxt = tables[k + 1]
        cur = SubmeasureTable(params, k, sp, arith)
        cur.triples = dict(nxt.triples)
        cur.candidates = cands
        pairs = [(m, r) for r in range(sp.n + 1) for m in range(r)]
        for m, r in pairs:
            cur.thin[(m, r)] = {X: _thin_pair(sp, X, m, r, nxt, arith) for X in cands}
        usable = [I for I in marks if norms[I] <= params.M[k]]
        usable.sort(key=lambda I: -norms[I])
        for X in cands:
            if not X:
                continue
            for I in usable:
                if all(cur.thin[(m, r)][X] for m, r in combinations(I, 2)):
                    w = arith.floor(k, params.a[k], params.M[k], norms[I])
                    old = cur.triples.get(X)
                    if old is None or w < old.weight:
                        cur.triples[X] = MarkedWeightedSet(X, I, w, k)
                    break  # floors fall as ||I|| grows, so the first hit is the least
        if params.mode == "exact":
            cur.tabulate()
        else:
            cur._reduce_level = min(sp.n, EXHAUSTIVE_LIMIT)
        tables[k] = cur
    for t in tables:
        t.chain = tables
    return tables


# -- constants --------------------------------------------------------------------


def paper_params(k: int):
    """``(a_k, M_k, c_k)``: exact rational, exact integer, 200-bit float."""
    if k < 0:
        raise SubmeasureError("k must be a natural number")
    a = Fraction(1, (k + 5) ** 3)
    M = 1 << (2 * k + 12 + (k + 4) * (k + 5) ** 3)
    return a, M, c_sequence(k)[-1]


def c_sequence(k: int) -> list:
    """``c_0 = 8``, ``c_{j+1} = 4^{a_j} c_j`` for ``j < k``."""
    ctx = mpmath.MPContext()
    ctx.prec = PRECISION
    out = [ctx.mpf(8)]
    for j in range(k):
        out.append(out[-1] * ctx.power(4, ctx.mpf(1) / (j + 5) ** 3))
    return out


def degenerate_levels(params: Params) -> list[int]:
    """Levels where a singleton-mark triple costs less than 16, so vacuous
    thinness lets it dominate everything else."""
    ctx = mpmath.MPContext()
    ctx.prec = PRECISION
    out = []
    for k in range(params.p):
        v = ctx.ldexp(1, -k) * ctx.power(params.M[k], ctx.mpf(params.a[k].numerator) / params.a[k].denominator)
        if v < 16:
            out.append(k)
    return out


# -- transport and covering -------------------------------------------------------------


def transport_triple(
    t: MarkedWeightedSet, A: Atom, r: int, tables: Sequence[SubmeasureTable], k: int, inclusive: bool = False
) -> tuple[MarkedWeightedSet, dict]:
    """Move ``t`` from ``C_{k,p}`` into a set depending on ``[m, r)`` only.

    Returns the new triple and a certificate with the thinness and floor
    re-checks against the triple's origin level.
    """
    sp = tables[0].space
    params = tables[0].params
    arith = tables[0].arith
    m = A.level
    hi = r + 1 if inclusive else r
    I2 = FiniteSet(i for i in t.marks if m <= i < hi)
    if not I2:
        raise SubmeasureError(f"no marks of {t.marks} fall in [{m}, {r}{']' if inclusive else ')'}")
    X2 = sp.closure(sp.pi_preimage(t.bits, m, A.index), r)
    nI, nI2 = _norm_of(params, t.marks), _norm_of(params, I2)
    w2 = t.weight * arith.power(Fraction(nI, nI2), params.a[k])
    origin = t.origin
    out = MarkedWeightedSet(X2, I2, w2, origin)
    cert = {"thin": None, "floor": None, "norm": None}
    if 0 <= origin < params.p:
        cert["thin"] = is_thin(X2, I2, tables[origin + 1])
        floor = arith.floor(origin, params.a[origin], params.M[origin], nI2)
        cert["floor"] = not arith.gt(floor, w2, "transport floor")
        cert["norm"] = nI2 <= params.M[origin]
    return out, cert


def _depends_ge(sp: Space, E: int, m: int) -> bool:
    return sp.depends_only_ge(E, m)


def check_covering_sequence(
    mu: SubmeasureTable, E: int, m: int, seq: dict[int, int], n: Optional[int] = None
) -> list[str]:
    """Problems with ``seq`` (``r -> C_r``) as an ``m``-covering sequence; empty if none."""
    sp = mu.space
    n = max(sp.level(E), m) if n is None else n
    problems = []
    if sorted(seq) != list(range(m + 1, n + 1)):
        problems.append(f"indices {sorted(seq)} are not {m + 1}..{n}")
        return problems
    for r, C in seq.items():
        if sp.closure(C, r) != C:
            problems.append(f"C_{r} is not in B_{r}")
    covered = 0
    for j in range(m + 1, n + 1):
        covered |= seq[j]
        if sp.interior(E, j) & ~covered:
            problems.append(f"int_{j}(E) is not covered")
    total = sum((mu(C) for C in seq.values()), mu.arith.zero)
    if mu.arith.gt(total, 4, "covering total"):
        problems.append(f"total {mu.arith.to_json(total)} exceeds 4")
    return problems


def covering_sequence(
    mu: SubmeasureTable,
    E,
    m: int,
    variant: str = "search",
    n: Optional[int] = None,
    uniform: bool = False,
) -> dict[int, int]:
    """An ``m``-covering sequence for ``E`` as ``{r: C_r}``, for ``m < r <= n``
    (``n`` defaults to ``max(level(E), m)``).

    ``search`` finds one of least total by branch and bound over
    ``int_r(E) - covered <= C_r <= [E]_r``; with ``uniform`` every ``C_r``
    must also not depend on coordinates below ``m``.  ``constructive``
    replays the proof of the covering property from an optimal cover of ``E``.
    """
    E = E.bits if isinstance(E, Clopen) else E
    sp = mu.space
    if not _depends_ge(sp, E, m):
        raise SubmeasureError(f"E depends on coordinates below {m}")
    val = mu(E)
    if not mu.arith.gt(2, val, "covering premise"):
        raise SubmeasureError(f"mu(E) = {mu.arith.to_json(val)} is not below 2")
    n = max(sp.level(E), m) if n is None else n
    if variant == "constructive":
        return _constructive_cover(mu, E, m, n)
    if variant != "search":
        raise SubmeasureError(f"unknown variant {variant!r}")
    levels = list(range(m + 1, n + 1))
    if not levels:
        return {}
    best: dict = {"total": None, "seq": None}
    limit = mu.arith.num(4)

    def subsets_between(lo: int, hi: int, r: int, covered: int):
        # blocks already covered are never worth adding: mu is monotone
        span = sp.atoms_at(r) // sp.atoms_at(m) if uniform else sp.atoms_at(r)
        free = []
        for j in range(span):
            mask = sp.block_mask(r, j)
            whole = sp.replicate(mask, m) if uniform else mask
            if hi & mask and not lo & mask and whole & ~covered:
                free.append(j)
        if len(free) > SEARCH_LIMIT:
            raise SubmeasureError(f"covering search at level {r} has {len(free)} optional blocks")
        for choice in range(1 << len(free)):
            extra = 0
            for i, j in enumerate(free):
                if choice >> i & 1:
                    extra |= sp.block_mask(r, j)
            yield lo | (sp.replicate(extra, m) if uniform else extra)

    def dfs(i: int, covered: int, total, seq: dict):
        if best["total"] is not None and total >= best["total"]:
            return
        if total > limit:
            return
        if i == len(levels):
            best["total"], best["seq"] = total, dict(seq)
            return
        r = levels[i]
        lo = sp.interior(E, r) & ~covered
        hi = sp.closure(E, r)
        options = sorted(subsets_between(lo, hi, r, covered), key=lambda C: (mu(C), bin(C).count("1"), C))
        for C in options:
            seq[r] = C
            dfs(i + 1, covered | C, total + mu(C), seq)
            del seq[r]

    dfs(0, 0, mu.arith.zero, {})
    if best["seq"] is None:
        raise NotFound(f"no {m}-covering sequence with total <= 4")
    return best["seq"]


def _optimal_cover(mu: SubmeasureTable, X: int) -> list[MarkedWeightedSet]:
    fam = _prune((t.bits, t.weight) for t in mu.triples.values())
    target = mu(X)
    chosen: list[int] = []

    def dfs(U: int, spent) -> bool:
        if not U:
            return True
        bit = (U & -U).bit_length() - 1
        for b, w in fam:
            if b >> bit & 1 and spent + w + (mu(U & ~b) if U & ~b else 0) <= target:
                chosen.append(b)
                if dfs(U & ~b, spent + w):
                    return True
                chosen.pop()
        return False

    if not dfs(X, mu.arith.zero):
        raise NotFound("could not rebuild an optimal cover")
    return [mu.triples[b] for b in chosen]


def _constructive_cover(mu: SubmeasureTable, E: int, m: int, n: int) -> dict[int, int]:
    sp, params, arith = mu.space, mu.params, mu.arith
    if arith.gt(8, mu(sp.full), "constructive premise"):
        raise SubmeasureError(f"constructive variant needs mu(T) >= 8, got {arith.to_json(mu(sp.full))}")
    cover = _optimal_cover(mu, E) if E else []
    nm = params.norm

    def half_point(t: MarkedWeightedSet) -> Optional[int]:
        total = nm(t.marks)
        for r in range(m + 1, n + 1):
            if 2 * nm(t.marks.window(m, r)) < total <= 2 * nm(t.marks.window(m, r + 1)):
                return r
        return None

    heavy_low = [t for t in cover if 4 * nm(t.marks.below(m)) >= nm(t.marks)]
    XF = 0
    for t in heavy_low:
        XF |= t.bits
    atom = next((A for A in sp.atoms(m) if not A.bits & XF), None)
    if atom is None:
        raise NotFound("every level-m atom meets the low-mark triples")
    seq = {r: 0 for r in range(m + 1, n + 1)}
    for t in cover:
        r = half_point(t)
        if r is None:
            continue
        new, _ = transport_triple(t, atom, r, mu.chain, mu.k, inclusive=True)
        seq[r] |= new.bits
    return seq


# -- diagnostics ---------------------------------------------------------------------------


def thinness_property_check(tables: Sequence[SubmeasureTable], k: int, l: int) -> dict:
    """Check ``nu_{k,p}(X) <= 2^-l`` for every ``(I, nu_{l+1,p})``-thin ``X``
    with ``||I|| = M_l`` (marks inside ``{0..n}``)."""
    params = tables[0].params
    if not 0 <= k <= l < params.p:
        raise SubmeasureError(f"need k <= l < p, got k={k}, l={l}, p={params.p}")
    arith = tables[0].arith
    thin = tables[l].thin
    marks = [I for I in _mark_sets(params) if _norm_of(params, I) == params.M[l]]
    bound = Fraction(1, 1 << l)
    checked, bad = 0, []
    for I in marks:
        for X in tables[l].candidates:
            if all(thin[(a, b)][X] for a, b in combinations(I, 2)):
                checked += 1
                v = tables[k](X)
                if arith.gt(v, arith.num(bound), "thinness property"):
                    bad.append({"set": tables[0].space.hex(X), "marks": list(I), "value": arith.to_json(v)})
    return {
        "k": k,
        "l": l,
        "mark_sets": len(marks),
        "checked": checked,
        "vacuous": not marks,
        "counterexamples": bad,
        "pass": not bad,
    }


def cylinder_diagnostics(tables: Sequence[SubmeasureTable]) -> list[dict]:
    """``nu_{0,p}(N_u)`` for every ``u`` with ``||dom(u)|| <= 1`` inside the truncation."""
    mu = tables[0]
    sp, params = mu.space, mu.params
    nm = params.norm
    doms = [F for F in member_subsets(_FamilyOfNorm(nm), range(sp.n))]
    out = []
    for dom in doms:
        for vals in _assignments(dom):
            u = dict(zip(dom, vals))
            out.append({"u": [[k, v] for k, v in sorted(u.items())], "value": mu.arith.to_json(mu(sp.cylinder(u)))})
    return out


class _FamilyOfNorm:
    def __init__(self, nm: Norm):
        self.nm = nm

    def member(self, F) -> bool:
        return self.nm(FiniteSet(F)) <= 1


def _assignments(dom: FiniteSet):
    if not dom:
        yield ()
        return
    head, rest = dom[0], FiniteSet(dom[1:])
    for v in range(1 << head):
        for tail in _assignments(rest):
            yield (v,) + tail

