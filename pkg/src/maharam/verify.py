"""Invariant suites, one per module, run by ``maharam verify``.

Each check draws randomness from its own ``random.Random`` seeded with
``"<seed>:<suite>:<check>"``, so a suite's result depends only on the seed.
A check returns ``(passed, detail)``; ``run_suite`` times it and wraps it
in a :class:`Check`.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import oracles
from .algebra import Space
from .galvin import chain_height, less_n, max_pred, predecessors
from .games import (
    I_WINS,
    II_WINS,
    PaI,
    PaII,
    PartialFn,
    SchreierI,
    SchreierII,
    compatible,
    legal_incompatible_move,
    oplus_bound,
    play_family_game,
    play_incompatibility_game,
    rank_finite,
    strategy_I_oplus,
    strategy_I_power,
)
from .norms import Norm, cover_exact, find_gap, norm_greedy, roberts_select, select_blocks
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    add,
    code,
    compare,
    decode,
    mul,
    nat_sum,
    omega_pow,
    parse,
    power,
    render,
)
from .sample import random_below, random_descent, random_ordinal
from .schreier import FiniteSet, Oplus, Power, Schreier, leq_s

__all__ = ["Check", "SUITES", "run_suite", "run_suites", "summarize", "surjectivity_family", "SURJECTIVITY_BITS"]

SUITES: dict[str, list[tuple[str, Callable]]] = {}


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: dict
    seconds: float

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


def check(suite: str):
    def register(fn):
        SUITES.setdefault(suite, []).append((fn.__name__, fn))
        return fn

    return register


def run_suite(name: str, seed: int, only: tuple = ()) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    out = []
    for check_name, fn in SUITES[name]:
        if only and check_name not in only:
            continue
        rng = random.Random(f"{seed}:{name}:{check_name}")
        t = time.perf_counter()
        try:
            passed, detail = fn(rng)
        except Exception as exc:  # a crashing check is a failing check
            passed, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        out.append(Check(name, check_name, bool(passed), detail, time.perf_counter() - t))
    return out


def run_suites(names, seed: int) -> list[Check]:
    out = []
    for name in names:
        out.extend(run_suite(name, seed))
    return out


def summarize(checks: list[Check]) -> dict:
    return {
        "passed": all(c.passed for c in checks),
        "total": len(checks),
        "failures": [f"{c.suite}.{c.name}" for c in checks if not c.passed],
        "checks": [c.to_json() for c in checks],
    }


def _first(bad: list, limit: int = 3) -> list:
    return [str(x) for x in bad[:limit]]


# =============================================================================
# ordinal

W = OMEGA


@check("ordinal")
def nat_sum_algebra(rng, count: int = 10_000):
    bad = []
    for _ in range(count):
        a, b, c = (random_ordinal(rng, depth=3, coeff=5, width=3) for _ in range(3))
        ab = nat_sum(a, b)
        if ab != nat_sum(b, a):
            bad.append(("commutative", render(a), render(b)))
        if nat_sum(ab, c) != nat_sum(a, nat_sum(b, c)):
            bad.append(("associative", render(a), render(b), render(c)))
        if ab < add(a, b) or ab < add(b, a):
            bad.append(("above sum", render(a), render(b)))
    return not bad, {"triples": count, "failures": _first(bad)}


def _grid(limit: int) -> list[Ordinal]:
    """``w^2 c2 + w c1 + c0`` with every coefficient at most ``limit``, ascending."""
    out = []
    for c2 in range(limit + 1):
        for c1 in range(limit + 1):
            for c0 in range(limit + 1):
                terms = [(Ordinal.of(2), c2), (ONE, c1), (ZERO, c0)]
                out.append(Ordinal(tuple((e, c) for e, c in terms if c)))
    return out


def _prefix_max(values: list[Ordinal]) -> list[Ordinal]:
    out, best = [], None
    for v in values:
        best = v if best is None or v > best else best
        out.append(best)
    return out


@check("ordinal")
def nat_sum_inductive(rng, small: int = 5, big: int = 11):
    """Below ``w^3`` with coefficients at most 5: ``a # b`` is the least
    ordinal above every ``a # g`` (``g < b``) and ``g # b`` (``g < a``).

    ``g`` ranges over the grid with coefficients up to 11 and the "least"
    half is checked against the largest grid ordinal below ``a # b``; sums of
    two small ordinals have coefficients at most 10, so that grid point
    is the one that would expose a sum that is too large.
    """
    base = _grid(small)
    grid = _grid(big)
    assert grid == sorted(grid)
    index = {g: i for i, g in enumerate(grid)}
    # only grid points below max(base) are ever queried
    head = grid[: index[base[-1]]]
    right = {a: _prefix_max([nat_sum(a, g) for g in head]) for a in base}
    left = {b: _prefix_max([nat_sum(g, b) for g in head]) for b in base}
    bad = []
    for a in base:
        for b in base:
            x = nat_sum(a, b)
            below = []
            if index[b]:
                below.append(right[a][index[b] - 1])
            if index[a]:
                below.append(left[b][index[a] - 1])
            top = max(below) if below else None
            if top is not None and not top < x:
                bad.append(("not above", render(a), render(b)))
                continue
            i = index.get(x)
            if i is None:
                bad.append(("off grid", render(a), render(b)))
                continue
            if i and (top is None or grid[i - 1] > top):
                bad.append(("not least", render(a), render(b)))
    return not bad, {"pairs": len(base) ** 2, "grid": len(grid), "failures": _first(bad)}


@check("ordinal")
def order_and_text(rng, count: int = 2000):
    bad = []
    for _ in range(count):
        a = random_ordinal(rng, depth=3, coeff=4, width=3)
        b = random_ordinal(rng, depth=3, coeff=4, width=3)
        if compare(a, b) != -compare(b, a):
            bad.append(("antisymmetry", render(a), render(b)))
        if not b.is_zero() and not a < add(a, b):
            bad.append(("a < a+b", render(a), render(b)))
        if parse(render(a)) != a:
            bad.append(("round trip", render(a)))
        if render(parse(render(a), normalize=True)) != render(a):
            bad.append(("normalize idempotent", render(a)))
    return not bad, {"pairs": count, "failures": _first(bad)}


@check("ordinal")
def numbering(rng, limit: int = 10_000):
    bad = [m for m in range(limit + 1) if code(decode(m)) != m]
    distinct = len({decode(m) for m in range(21)})
    ok = not bad and code(ZERO) == 0 and decode(0) == ZERO and distinct >= 3
    return ok, {"limit": limit, "distinct_below_21": distinct, "failures": _first(bad)}


def surjectivity_family(depth: int = 2, coeff: int = 3) -> list[Ordinal]:
    """Ordinals of tower depth at most ``depth``: sums of at most two terms
    ``w^e * c`` with ``c <= coeff`` and ``e`` from the previous depth; depth
    0 is ``0..coeff``."""
    if depth == 0:
        return [Ordinal.of(i) for i in range(coeff + 1)]
    lower = surjectivity_family(depth - 1, coeff)
    out = set(lower)
    for e in lower:
        for c in range(1, coeff + 1):
            out.add(Ordinal(((e, c),)))
            for e2 in lower:
                if e2 < e:
                    for c2 in range(1, coeff + 1):
                        out.add(Ordinal(((e, c), (e2, c2))))
    return sorted(out)


#: Every member of ``surjectivity_family(2, 3)`` is ``decode(m)`` for some
#: ``m < 2**SURJECTIVITY_BITS``; the bound is exact (the largest code has
#: this many bits).
SURJECTIVITY_BITS = 7230


@check("ordinal")
def decode_surjective(rng):
    fam = surjectivity_family(2, 3)
    bad, widest = [], 0
    for x in fam:
        m = code(x)
        widest = max(widest, m.bit_length())
        if decode(m) != x:
            bad.append(render(x))
    ok = not bad and widest == SURJECTIVITY_BITS
    return ok, {"ordinals": len(fam), "code_bits": widest, "failures": _first(bad)}


@check("ordinal")
def ordinal_examples(rng):
    cases = [
        (compare(0, 0), 0),
        (compare(W, add(W, 1)), -1),
        (compare(mul(omega_pow(2), 2), add(mul(omega_pow(2), 2), W)), -1),
        (add(1, W), W),
        (mul(add(W, 1), add(W, 1)), parse("w^(2) + w + 1")),
        (omega_pow(0), ONE),
        (nat_sum(1, W), add(W, 1)),
        (nat_sum(parse("w^(2) + w"), parse("w*2 + 3")), parse("w^(2) + w*3 + 3")),
        (power(add(W, 1), W), omega_pow(W)),
        (power(2, W), W),
    ]
    bad = [i for i, (got, want) in enumerate(cases) if got != want]
    return not bad, {"cases": len(cases), "failures": bad}


# =============================================================================
# galvin


def _galvin_sample(rng) -> Ordinal:
    return random_ordinal(rng, depth=2, coeff=3, width=3) if rng.random() < 0.7 else decode(rng.randrange(64))


@check("galvin")
def galvin_monotone(rng, count: int = 10_000):
    bad = []
    for _ in range(count):
        x, y = _galvin_sample(rng), _galvin_sample(rng)
        cx = code(x)
        n = rng.choice([cx, max(cx - 1, 0), rng.randrange(cx + 3)])
        m = n + rng.randrange(5)
        if less_n(x, y, n) and not less_n(x, y, m):
            bad.append((render(x), render(y), n, m))
    return not bad, {"cases": count, "failures": _first(bad)}


@check("galvin")
def galvin_root_union_irreflexive(rng, count: int = 10_000):
    bad = []
    for _ in range(count):
        x, y = _galvin_sample(rng), _galvin_sample(rng)
        n = rng.randrange(200)
        if y > ZERO and not less_n(ZERO, y, n):
            bad.append(("root", render(y), n))
        if less_n(x, x, n):
            bad.append(("irreflexive", render(x), n))
        if x < y and not less_n(x, y, code(x)):
            bad.append(("union", render(x), render(y)))
    return not bad, {"cases": count, "failures": _first(bad)}


@check("galvin")
def galvin_finite_height(rng, top: int = 40):
    bad = []
    for n in range(top + 1):
        pool = [decode(m) for m in range(n + 1)] + [random_ordinal(rng, depth=2) for _ in range(10)]
        h = chain_height(pool, n)
        if h > n + 2:
            bad.append((n, h))
    return not bad, {"levels": top + 1, "failures": _first(bad)}


@check("galvin")
def galvin_tree(rng, count: int = 10_000):
    """The ``<_n``-predecessors of any ordinal form a chain."""
    bad = []
    for _ in range(count):
        a = _galvin_sample(rng)
        n = rng.randrange(80)
        preds = predecessors(a, n)
        for x, y in zip(preds, preds[1:]):
            if not less_n(x, y, n):
                bad.append((render(a), n))
                break
    return not bad, {"cases": count, "failures": _first(bad)}


@check("galvin")
def galvin_max_pred(rng, count: int = 2000):
    bad = []
    for _ in range(count):
        a = _galvin_sample(rng)
        n = rng.randrange(120)
        got = max_pred(a, n)
        if got != oracles.max_pred_brute(a, n):
            bad.append((render(a), n))
    return not bad, {"cases": count, "failures": _first(bad)}


# =============================================================================
# schreier

_ALPHAS = [ONE, Ordinal.of(2), Ordinal.of(3), W, add(W, 1), mul(W, 2), omega_pow(2)]


def _families():
    out = [Schreier(a) for a in _ALPHAS]
    out.append(Oplus(Schreier(1), Schreier(2)))
    out.append(Power(Schreier(W), 2))
    return out


def _grow_member(rng, fam, size: int, spread: int = 6) -> FiniteSet:
    F: list[int] = []
    x = rng.randrange(spread)
    while len(F) < size:
        if fam.member(F + [x]):
            F.append(x)
        elif rng.random() < 0.5:
            break
        x += 1 + rng.randrange(spread)
    return FiniteSet(F)


@check("schreier")
def hereditary(rng, count: int = 2000):
    fams = _families()
    bad, sizes = [], 0
    for _ in range(count):
        fam = rng.choice(fams)
        F = _grow_member(rng, fam, rng.randint(0, 8))
        sizes += len(F)
        for k in range(len(F) + 1):
            for sub in combinations(F, k):
                if not fam.member(sub):
                    bad.append((fam.describe(), list(F), list(sub)))
                    break
    return not bad, {"cases": count, "mean_size": round(sizes / count, 2), "failures": _first(bad)}


@check("schreier")
def spreading(rng, count: int = 2000):
    fams = _families()
    bad = []
    for _ in range(count):
        fam = rng.choice(fams)
        A = _grow_member(rng, fam, rng.randint(0, 6))
        B, lo = [], 0
        for a in A:
            lo = max(lo, a) + rng.randrange(4)
            B.append(lo)
            lo += 1
        if not leq_s(A, B):
            continue
        if not fam.member(B):
            bad.append((fam.describe(), list(A), B))
    return not bad, {"cases": count, "failures": _first(bad)}


@check("schreier")
def compactness(rng, walks: int = 300, cap: int = 5000):
    """Every increasing walk leaves ``S_alpha`` after finitely many steps."""
    bad, longest = [], 0
    for _ in range(walks):
        alpha = rng.choice(_ALPHAS)
        fam = Schreier(alpha)
        F, x = [], rng.randrange(4)
        while fam.member(F + [x]) and len(F) < cap:
            F.append(x)
            x += 1 + rng.randrange(3)
        longest = max(longest, len(F))
        if len(F) >= cap:
            bad.append(render(alpha))
    return not bad, {"walks": walks, "longest_member": longest, "failures": _first(bad)}


def _all_chains(alpha: Ordinal, F) -> list[list[Ordinal]]:
    chains = [[alpha]]
    for n in F:
        chains = [ch + [decode(m)] for ch in chains for m in range(n + 1) if decode(m) < ch[-1]]
    return chains


@check("schreier")
def greedy_witness(rng, count: int = 400):
    bad = []
    for _ in range(count):
        alpha = decode(rng.randrange(1, 40))
        fam = Schreier(alpha)
        F = sorted(rng.sample(range(10), rng.randint(0, 4)))
        chains = _all_chains(alpha, F)
        canon = fam.chain(F)
        if (canon is not None) != bool(chains):
            bad.append(("membership", render(alpha), F))
            continue
        for ch in chains:
            if any(c < b for c, b in zip(canon, ch)):
                bad.append(("dominance", render(alpha), F))
                break
    return not bad, {"cases": count, "failures": _first(bad)}


@check("schreier")
def schreier_examples(rng):
    s1 = Schreier(1)
    cases = [
        Schreier(W).member([]),
        all(Schreier(a).member([k]) for a in _ALPHAS for k in (0, 5, 1000)),
        not s1.member([3, 7]),
        Oplus(s1, s1).member([2, 5]),
        not Oplus(s1, s1).member([2, 5, 9]),
        not Oplus(s1, s1).member([2, 5, 9, 11]),
    ]
    # F + {n} in S_beta when alpha <_n beta, n < min F and F in S_alpha
    extra = []
    for _ in range(300):
        beta = decode(rng.randrange(2, 60))
        n = rng.randrange(12)
        alpha = max_pred(beta, n)
        if alpha is None or alpha.is_zero():
            continue
        F = [x for x in _grow_member(rng, Schreier(alpha), 3) if x > n]
        extra.append(Schreier(beta).member([n] + F))
    bad = [i for i, ok in enumerate(cases) if not ok]
    if not all(extra):
        bad.append("extension")
    return not bad, {"cases": len(cases) + len(extra), "failures": bad}


# =============================================================================
# norms

_NORM_ALPHAS = [ONE, Ordinal.of(2), Ordinal.of(3), W]


def _random_set(rng, size: int, spread: int = 30) -> FiniteSet:
    return FiniteSet(rng.sample(range(spread), size))


@check("norms")
def norm_axioms(rng, count: int = 5000):
    norms = {a: Norm.schreier(a) for a in _NORM_ALPHAS}
    bad = []
    for _ in range(count):
        a = rng.choice(_NORM_ALPHAS)
        nm = norms[a]
        F = _random_set(rng, rng.randint(0, 6))
        G = _random_set(rng, rng.randint(0, 6))
        nF = nm(F)
        if nm(FiniteSet()) != 0 or any(nm([x]) != 1 for x in F):
            bad.append(("base", render(a), list(F)))
        for k in range(len(F)):
            for sub in combinations(F, k):
                if nm(sub) > nF:
                    bad.append(("monotone", render(a), list(F), sub))
                    break
        if nm(F | G) > nF + nm(G):
            bad.append(("subadditive", render(a), list(F), list(G)))
        H, top = [], -1
        for x in F:
            top = max(top + 1, x + rng.randrange(3))
            H.append(top)
        if nm(H) > nF:
            bad.append(("spreading", render(a), list(F), list(H)))
    return not bad, {"pairs": count, "failures": _first(bad)}


@check("norms")
def norm_unbounded(rng, length: int = 13, target: int = 4):
    """Norms of growing arithmetic progressions never drop and pass ``target``."""
    bad = []
    for a in _NORM_ALPHAS:
        nm = Norm.schreier(a)
        for start, step in ((0, 1), (3, 2), (1, 5)):
            values = [nm(FiniteSet(start + step * i for i in range(n))) for n in range(1, length + 1)]
            if any(y < x for x, y in zip(values, values[1:])):
                bad.append(("decreased", render(a), start, step))
            if values[-1] < target:
                bad.append(("stalled", render(a), start, step, values[-1]))
    return not bad, {"length": length, "target": target, "failures": _first(bad)}


@check("norms")
def prefix_step(rng, count: int = 3000):
    bad = []
    norms = {a: Norm.schreier(a) for a in _NORM_ALPHAS}
    for _ in range(count):
        a = rng.choice(_NORM_ALPHAS)
        A = _random_set(rng, rng.randint(0, 8))
        x = rng.randrange(40)
        if x in A:
            continue
        if norms[a](A | FiniteSet([x])) > norms[a](A) + 1:
            bad.append((render(a), list(A), x))
    return not bad, {"cases": count, "failures": _first(bad)}


@check("norms")
def greedy_vs_exact(rng, count: int = 1000):
    bad, equal = [], 0
    for _ in range(count):
        a = rng.choice(_NORM_ALPHAS + [omega_pow(2)])
        nm = Norm.schreier(a)
        F = _random_set(rng, rng.randint(0, 8))
        g, _ = norm_greedy(F, nm)
        e = nm(F)
        equal += g == e
        if g < e:
            bad.append((render(a), list(F)))
    return not bad, {"cases": count, "greedy_optimal": equal, "failures": _first(bad)}


@check("norms")
def roberts(rng, count: int = 2000):
    bad, skipped, done = [], 0, 0
    while done < count:
        a = rng.choice(_NORM_ALPHAS)
        nm = Norm.schreier(a)
        s, t = rng.choice([(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3), (4, 1)])
        sets = []
        for _ in range(20 * s):
            I = _random_set(rng, rng.randint(s * t, 10), spread=24)
            if nm(I) >= s * t:
                sets.append(I)
                if len(sets) == s:
                    break
        if len(sets) < s:
            skipped += 1
            continue
        done += 1
        perm, parts = roberts_select(sets, s, t, nm)
        if sorted(perm) != list(range(s)):
            bad.append(("perm", perm))
        for i, J in enumerate(parts):
            if not set(J) <= set(sets[perm[i]]) or cover_exact(J, nm)[0] != t:
                bad.append(("part", render(a), i))
            if i and parts[i - 1] and J and parts[i - 1][-1] >= J[0]:
                bad.append(("order", render(a), i))
    return not bad, {"instances": done, "skipped": skipped, "failures": _first(bad)}


@check("norms")
def gap(rng, count: int = 2000):
    bad, checked, drawn = [], 0, 0
    while checked < count:
        drawn += 1
        a = rng.choice(_NORM_ALPHAS)
        nm = Norm.schreier(a)
        C = _random_set(rng, rng.randint(3, 10))
        if nm(C) < 3:
            continue
        D = _grow_member(rng, Schreier(a), rng.randint(1, 4), spread=5)
        if nm(D) != 1:
            continue
        checked += 1
        c, d = find_gap(C, D, nm)
        pairs = list(zip(C, C[1:]))
        ok_pairs = [(x, y) for x, y in pairs if not any(x <= z < y for z in D)]
        if (c, d) not in pairs or not ok_pairs or (c, d) != ok_pairs[0]:
            bad.append((render(a), list(C), list(D)))
    return not bad, {"drawn": drawn, "checked": checked, "failures": _first(bad)}


@check("norms")
def norm_oracle(rng, count: int = 500):
    bad = []
    alphas = _NORM_ALPHAS + [mul(W, 2), omega_pow(2)]
    for _ in range(count):
        a = rng.choice(alphas)
        fam = Schreier(a)
        F = _random_set(rng, rng.randint(0, 8), spread=24)
        if Norm(fam)(F) != oracles.partition_norm(F, fam.member):
            bad.append((render(a), list(F)))
    card = Norm(Schreier(1))
    for k in range(11):
        for F in combinations(range(10), k):
            if cover_exact(F, card)[0] != len(F):
                bad.append(("card", F))
    return not bad, {"random": count, "card_sets": 1024, "failures": _first(bad)}


@check("norms")
def blocks(rng, count: int = 300):
    bad = []
    nm = Norm.card()
    for _ in range(count):
        t = rng.randint(5, 9)
        s = rng.randint(1, 3)
        J, lo = [], 0
        for _ in range(s):
            size = t + rng.randrange(3)
            J.append(FiniteSet(range(lo, lo + size)))
            lo += size + rng.randrange(3)
        F = [(_random_set(rng, rng.randint(1, 6), spread=lo + 2), Fraction(rng.randint(1, 8), 4)) for _ in range(6)]
        sel = select_blocks(J, t, F, nm)
        inside = lambda x: any(a <= x < b for a, b in sel.cuts)
        light = [(I, w) for I, w in F if 2 * nm([x for x in I if not inside(x)]) < nm(I)]
        if sorted(map(str, light)) != sorted(map(str, sel.light)) or sel.light_weight > sel.bound:
            bad.append((t, s))
        for (a, b), block in zip(sel.cuts, J):
            if nm(block.window(a, b)) < 3:
                bad.append(("slice", t, s))
    return not bad, {"instances": count, "failures": _first(bad)}


# =============================================================================
# games


class RandomII:
    """Random legal extensions, mostly small steps with occasional jumps."""

    def __init__(self, fam, rng):
        self.fam, self.rng, self.chosen = fam, rng, []

    def move(self, a):
        lo = self.chosen[-1] + 1 if self.chosen else 0
        cands = list(range(lo, lo + 10)) + [lo + self.rng.randrange(1, 10**6)]
        cands = [n for n in cands if self.fam.member(self.chosen + [n])]
        if not cands:
            return None
        n = self.rng.choice(cands)
        self.chosen.append(n)
        return n


class LeastII(RandomII):
    def move(self, a):
        lo = self.chosen[-1] + 1 if self.chosen else 0
        for n in range(lo, lo + 64):
            if self.fam.member(self.chosen + [n]):
                self.chosen.append(n)
                return n
        return None


class JumpII(RandomII):
    """Jump far ahead every move, so every predecessor query is unconstrained."""

    def move(self, a):
        n = (self.chosen[-1] + 1 if self.chosen else 0) + (1 << 40)
        if not self.fam.member(self.chosen + [n]):
            return None
        self.chosen.append(n)
        return n


class CodeII(RandomII):
    """Play the code of I's ordinal: the least level at which it is a root."""

    def move(self, a):
        lo = self.chosen[-1] + 1 if self.chosen else 0
        n = max(lo, code(a))
        if not self.fam.member(self.chosen + [n]):
            return None
        self.chosen.append(n)
        return n


class Scripted:
    def __init__(self, seq):
        self.seq, self.i = list(seq), 0

    def move(self, last):
        if self.i >= len(self.seq):
            return None
        self.i += 1
        return self.seq[self.i - 1]


class RandomIncompatible:
    """Random pairwise incompatible members of ``P_alpha``."""

    def __init__(self, fam, rng, cap: int = 5):
        self.fam, self.rng, self.cap, self.played = fam, rng, cap, []

    def move(self, a):
        for _ in range(30):
            dom = sorted(self.rng.sample(range(self.cap), self.rng.randint(0, 4)))
            if not self.fam.member(dom):
                continue
            u = PartialFn({d: self.rng.randrange(1 << d) for d in dom})
            if all(not compatible(u, v) for v in self.played):
                self.played.append(u)
                return u
        u = legal_incompatible_move(self.played, self.fam)
        if u is not None:
            self.played.append(u)
        return u


def _referee_recheck_G(tr, fam) -> bool:
    ords, replies = tr.ordinals(), tr.replies()
    if any(not b < a for a, b in zip(ords, ords[1:])) or (ords and ords[0] > tr.bound):
        return False
    return all(fam.member(replies[: i + 1]) for i in range(len(replies)))


def _referee_recheck_H(tr, fam) -> bool:
    ords, replies = tr.ordinals(), tr.replies()
    if any(not b < a for a, b in zip(ords, ords[1:])):
        return False
    if any(not fam.member(u.dom) for u in replies):
        return False
    return all(not compatible(u, v) for u, v in combinations(replies, 2))


@check("games")
def schreier_player_I(rng, matches: int = 1000):
    bad, longest = [], {}
    for alpha in _ALPHAS:
        fam = Schreier(alpha)
        opponents = [RandomII(fam, random.Random(rng.random())) for _ in range(matches)]
        opponents += [LeastII(fam, rng), JumpII(fam, rng), CodeII(fam, rng)]
        for opp in opponents:
            tr = play_family_game(alpha, fam, SchreierI(alpha), opp, max_rounds=10_000)
            longest[render(alpha)] = max(longest.get(render(alpha), 0), len(tr.replies()))
            if tr.outcome != I_WINS or not _referee_recheck_G(tr, fam):
                bad.append((render(alpha), type(opp).__name__, tr.outcome, tr.note))
    return not bad, {"matches_per_alpha": matches + 3, "longest": longest, "failures": _first(bad)}


@check("games")
def schreier_player_II(rng, samples: int = 5, matches: int = 1000):
    bad = []
    for alpha in _ALPHAS:
        fam = Schreier(alpha)
        for _ in range(samples):
            star = random_below(rng, alpha)
            for _ in range(matches):
                seq = random_descent(rng, star)
                tr = play_family_game(star, fam, Scripted(seq), SchreierII(star, alpha))
                if tr.outcome != II_WINS or not _referee_recheck_G(tr, fam):
                    bad.append((render(alpha), render(star), tr.outcome, tr.note))
    return not bad, {"alphas": len(_ALPHAS), "samples": samples, "failures": _first(bad)}


_P_CASES = [(ONE, Ordinal.of(3)), (Ordinal.of(2), Ordinal.of(3)), (Ordinal.of(2), W), (Ordinal.of(2), add(mul(W, 2), 1))]
_P_CASES += [(W, Ordinal.of(3)), (W, W), (W, add(mul(W, 2), 1))]


@check("games")
def palpha_player_I(rng, matches: int = 1000):
    bad, longest = [], {}
    for alpha in (ONE, Ordinal.of(2), W):
        fam = Schreier(alpha)
        opponents = [RandomIncompatible(fam, random.Random(rng.random())) for _ in range(matches)]
        for opp in opponents:
            tr = play_incompatibility_game(omega_pow(alpha), fam, PaI(alpha), opp, max_rounds=5000)
            longest[render(alpha)] = max(longest.get(render(alpha), 0), len(tr.replies()))
            if tr.outcome != I_WINS or not _referee_recheck_H(tr, fam):
                bad.append((render(alpha), tr.outcome, tr.note))
                break
    return not bad, {"matches_per_alpha": matches, "longest": longest, "failures": _first(bad)}


@check("games")
def palpha_player_II(rng, matches: int = 1000):
    bad = []
    for alpha, xi in _P_CASES:
        fam = Schreier(alpha)
        for _ in range(matches):
            seq = random_descent(rng, xi)
            tr = play_incompatibility_game(xi, fam, Scripted(seq), PaII(xi, alpha))
            if tr.outcome != II_WINS or not _referee_recheck_H(tr, fam):
                bad.append((render(alpha), render(xi), tr.outcome, tr.note))
                break
    # xi = 0: I plays 0 and has nothing left
    tr = play_incompatibility_game(ZERO, Schreier(1), Scripted([ZERO]), PaII(ZERO, 1))
    if tr.outcome != II_WINS:
        bad.append(("xi=0", tr.outcome))
    return not bad, {"cases": len(_P_CASES), "matches": matches, "failures": _first(bad)}


@check("games")
def palpha_exhaustive(rng, cap: int = 6):
    st = oracles.exhaust_incompatibility_game(omega_pow(1), Schreier(1), PaI(1), cap=cap)
    return not st["failures"], {"lines": st["lines"], "longest": st["longest"], "failures": _first(st["failures"])}


@check("games")
def oplus_and_power(rng):
    windows = oracles.threshold_windows(4)
    bad, lines = [], 0
    for a in (1, 2):
        for b in (1, 2):
            s, t = Schreier(a), Schreier(b)
            bound = oplus_bound(a, b)
            strat = strategy_I_oplus(s, t, a, b)
            if strat.move(None) != strat.encode(Ordinal.of(b), Ordinal.of(a)):
                bad.append(("first move", a, b))
            st = oracles.exhaust_family_game(bound, Oplus(s, t), strategy_I_oplus(s, t, a, b), windows=windows)
            lines += st["lines"]
            if st["failures"]:
                bad.append(("oplus", a, b, st["failures"][:1]))
    for a in (1, 2):
        for n in (1, 2, 3):
            make, bound = strategy_I_power(Schreier(a), n)
            if bound != oracles_power_bound(a, n):
                bad.append(("bound", a, n))
            st = oracles.exhaust_family_game(bound, Power(Schreier(a), n), make(), windows=windows)
            lines += st["lines"]
            if st["failures"]:
                bad.append(("power", a, n, st["failures"][:1]))
    return not bad, {"lines": lines, "failures": _first(bad)}


def oracles_power_bound(a: int, n: int) -> Ordinal:
    """``(a+1)^n - 1`` for finite ``a``."""
    return Ordinal.of((a + 1) ** n - 1)


@check("games")
def games_examples(rng):
    s1 = Schreier(1)
    ok = []
    tr = play_family_game(1, s1, SchreierI(1), RandomII(s1, rng))
    ok.append(tr.outcome == I_WINS and [render(x) for x in tr.ordinals()] == ["1", "0"])
    tr = play_family_game(3, s1, Scripted([Ordinal.of(3), Ordinal.of(3)]), LeastII(s1, rng))
    ok.append(tr.outcome == "ILLEGAL" and tr.illegal == ("I", 1))
    ok.append(rank_finite(s1, 5) == 1)
    ok.append(all(rank_finite(Schreier(2), u) <= rank_finite(Schreier(2), u + 1) for u in range(8)))
    ok.append(not compatible(PartialFn({2: 1}), PartialFn({2: 3})) and compatible(PartialFn({2: 1}), PartialFn({3: 1})))
    bad = [i for i, v in enumerate(ok) if not v]
    return not bad, {"cases": len(ok), "failures": bad}


# =============================================================================
# algebra


@check("algebra")
def algebra_exhaustive(rng):
    bad, count = [], 0
    for n in (1, 2, 3):
        sp = Space(n)
        for X in range(1 << sp.atom_count):
            for m in range(n + 1):
                cl, it = sp.closure(X, m), sp.interior(X, m)
                if it != sp.full & ~sp.closure(sp.full & ~X, m) or it & ~X or X & ~cl:
                    bad.append(("closure", n, X, m))
                if sp.closure(cl, m) != cl:
                    bad.append(("closure level", n, X, m))
                for A in sp.atoms(m):
                    count += 1
                    P = sp.pi_preimage(X, m, A.index)
                    if P & A.bits != X & A.bits:
                        bad.append(("identity on A", n, X, A.values))
                    if sp.pi_preimage(P, m, A.index) != P:
                        bad.append(("idempotent", n, X, A.values))
                    if not sp.depends_only_ge(P, m):
                        bad.append(("depends", n, X, A.values))
            if sp.from_hex(sp.hex(X)) != X:
                bad.append(("hex", n, X))
    return not bad, {"cases": count, "failures": _first(bad)}


@check("algebra")
def algebra_examples(rng):
    sp = Space(3)
    A1 = sp.atoms(1)[0]
    one = sp.block_mask(3, 5)
    cases = [
        sp.cylinder({}) == sp.full,
        bin(sp.cylinder({2: 3})).count("1") == 2,
        sp.closure(sp.full, 2) == sp.full and sp.interior(sp.full, 2) == sp.full,
        sp.pi_preimage(A1.bits, 1, A1.index) == sp.full,
        sp.pi_preimage(0, 1, A1.index) == 0,
        bin(sp.closure(one, 2)).count("1") == 4,
        sp.atom_count == 8 and Space(6).atom_count == 32768,
    ]
    bad = [i for i, v in enumerate(cases) if not v]
    return not bad, {"cases": len(cases), "failures": bad}


# =============================================================================
# submeasure


def _toy_tables(p: int):
    from .submeasure import Params, build

    return build(Params(resolution=3, p=p, a=[0] * p, M=[3] * p, norm=Norm.card()))


def _axioms(tables) -> list:
    bad = []
    inf = tables[0].arith.inf
    for k, tb in enumerate(tables):
        vals = tb.values
        if vals[0] != 0:
            bad.append(("empty", k))
        for X in range(256):
            v = vals[X]
            sub = X
            while sub:
                sub = (sub - 1) & X
                if vals[sub] > v:
                    bad.append(("monotone", k, X))
                    break
            for Y in range(256):
                if vals[X | Y] > v + vals[Y]:
                    bad.append(("subadditive", k, X, Y))
                    break
        if k + 1 < len(tables) and any(vals[X] > tables[k + 1].values[X] for X in range(256)):
            bad.append(("level", k))
    top = tables[-1].values
    if any(top[X] != inf for X in range(1, 256)):
        bad.append(("top not infinite",))
    return bad


@check("submeasure")
def toy_axioms(rng):
    bad = []
    for p in (1, 2):
        bad += [("p", p) + b for b in _axioms(_toy_tables(p))]
    return not bad, {"sets": 256, "pairs": 256 * 256, "failures": _first(bad)}


def _as_points(X: int, sp: Space, pts) -> frozenset:
    return frozenset(pt for pt in pts if X >> sp.point_index(pt) & 1)


@check("submeasure")
def toy_tables_vs_definitions(rng):
    bad = []
    sp = Space(3)
    pts = oracles._points(3)
    for p in (1, 2):
        tables = _toy_tables(p)
        brute = oracles.submeasure_tables_brute(3, p, [3] * p, len, lambda k, nI: Fraction(1, 1 << k))
        for k in range(p + 1):
            for X in range(256):
                if brute[k][_as_points(X, sp, pts)] != tables[k](X):
                    bad.append((p, k, X))
    return not bad, {"entries": 256 * 5, "failures": _first(bad)}


@check("submeasure")
def covering_sequences(rng):
    from .submeasure import check_covering_sequence, covering_sequence

    sp = Space(3)
    found = problems = 0
    missing = []
    for p in (1, 2):
        mu = _toy_tables(p)[0]
        for m in range(4):
            for E in range(256):
                if not sp.depends_only_ge(E, m) or not mu(E) < 2:
                    continue
                try:
                    seq = covering_sequence(mu, E, m)
                except Exception as exc:
                    missing.append((p, m, E, str(exc)))
                    continue
                found += 1
                problems += bool(check_covering_sequence(mu, E, m, seq))
    ok = not missing and not problems
    return ok, {"sequences": found, "bad": problems, "missing": _first(missing)}


@check("submeasure")
def constructive_covering(rng):
    """The proof's transform on a toy whose full value reaches 8."""
    from .submeasure import Params, build, check_covering_sequence, covering_sequence

    mu = build(Params(resolution=3, p=1, a=[Fraction(1, 2)], M=[64], norm=Norm.card()))[0]
    sp = mu.space
    done, bad = 0, []
    for m in range(4):
        for E in range(256):
            if not sp.depends_only_ge(E, m) or not mu.arith.gt(2, mu(E)):
                continue
            seq = covering_sequence(mu, E, m, "constructive")
            done += 1
            if check_covering_sequence(mu, E, m, seq):
                bad.append((m, E))
    return not bad, {"sequences": done, "failures": _first(bad)}


@check("submeasure")
def thinness_property(rng):
    from .submeasure import thinness_property_check

    reports, bad = [], []
    for p in (1, 2):
        tables = _toy_tables(p)
        for l in range(p):
            for k in range(l + 1):
                r = thinness_property_check(tables, k, l)
                reports.append({"p": p, "k": k, "l": l, "checked": r["checked"]})
                if not r["pass"]:
                    bad.append((p, k, l))
    return not bad, {"reports": reports, "failures": _first(bad)}


@check("submeasure")
def transport(rng):
    from .submeasure import SubmeasureError, transport_triple

    total, bad = 0, []
    for p in (1, 2):
        tables = _toy_tables(p)
        sp = tables[0].space
        for k in range(p):
            for t in tables[k].family:
                if t.origin != k:
                    continue
                for m in range(4):
                    for A in sp.atoms(m):
                        for r in range(m + 1, 4):
                            try:
                                _, cert = transport_triple(t, A, r, tables, k)
                            except SubmeasureError:
                                continue
                            total += 1
                            if not all(cert.values()):
                                bad.append((p, k, t.bits, A.values, r))
    return total > 0 and not bad, {"certificates": total, "failures": _first(bad)}


@check("submeasure")
def phi_oracle(rng, count: int = 500):
    from .submeasure import phi_bits

    bad = []
    for _ in range(count):
        fam = [(rng.randrange(1, 256), Fraction(rng.randint(1, 12), 4)) for _ in range(rng.randint(0, 12))]
        unions = {}
        for mask in range(1 << len(fam)):
            U, w = 0, Fraction(0)
            for i, (b, wt) in enumerate(fam):
                if mask >> i & 1:
                    U |= b
                    w += wt
            unions[U] = min(w, unions.get(U, w))
        for X in [rng.randrange(256) for _ in range(4)] + [0]:
            want = min((w for U, w in unions.items() if X & ~U == 0), default=float("inf"))
            if phi_bits(fam, X, float("inf"), Fraction(0)) != want:
                bad.append((fam, X))
    return not bad, {"instances": count, "failures": _first(bad)}


@check("submeasure")
def thinness_closure(rng, count: int = 300):
    from .submeasure import is_thin

    sp = Space(3)
    pts = oracles._points(3)
    tables = _toy_tables(2)
    nus = [{_as_points(X, sp, pts): tb(X) for X in range(256)} for tb in tables]
    bad = []
    for _ in range(count):
        k = rng.randrange(len(tables))
        X = rng.randrange(256)
        sub = X & rng.randrange(256)
        I = sorted(rng.sample(range(4), rng.randint(0, 3)))
        thin_X = is_thin(X, I, tables[k])
        thin_sub = is_thin(sub, I, tables[k])
        if thin_X != oracles.thin_brute(_as_points(X, sp, pts), I, 3, nus[k]):
            bad.append(("oracle", k, X, I))
        if thin_X and not thin_sub:
            bad.append(("downward", k, X, sub, I))
    return not bad, {"cases": count, "failures": _first(bad)}


@check("submeasure")
def constants(rng):
    import mpmath

    from .submeasure import PRECISION, paper_params

    a0, M0, c0 = paper_params(0)
    _, _, c1 = paper_params(1)
    ctx = mpmath.MPContext()
    ctx.prec = 300
    want = ctx.exp(ctx.log(4) / 125)
    ratio_err = abs(ctx.mpf(c1) / ctx.mpf(c0) - want)
    consistent = []
    for k in range(9):
        a, M, _ = paper_params(k)
        ctx.prec = PRECISION
        v = ctx.ldexp(1, -k) * ctx.power(M, ctx.mpf(a.numerator) / a.denominator)
        consistent.append(bool(v >= 16))
    ok = a0 == Fraction(1, 125) and M0 == 2**512 and c0 == 8 and ratio_err < 1e-12 and all(consistent)
    return ok, {"a0": str(a0), "M0_bits": M0.bit_length(), "c1_over_c0_error": float(ratio_err), "consistent": consistent}


# =============================================================================
# rank


def _random_submeasure(rng, atoms: int):
    from .submeasure import phi_bits

    fam = [(1 << i, Fraction(rng.randint(1, 6), 4)) for i in range(atoms)]
    fam += [(rng.randrange(1, 1 << atoms), Fraction(rng.randint(1, 6), 4)) for _ in range(rng.randint(0, 4))]
    return lambda X, fam=fam: phi_bits(fam, X, float("inf"), Fraction(0)), fam


@check("rank")
def rank_oracle(rng, count: int = 200):
    from .rank import exhaustivity_rank

    bad, seen = [], set()
    for atoms in range(1, 6):
        for _ in range(count):
            mu, _ = _random_submeasure(rng, atoms)
            eps = Fraction(rng.randint(1, 8), 4)
            got = exhaustivity_rank(mu, eps, atoms)
            seen.add(got)
            if got != oracles.rank_reverse_inclusion(mu, eps, atoms):
                bad.append((atoms, str(eps)))
    return not bad, {"instances": 5 * count, "ranks_seen": sorted(seen), "failures": _first(bad)}


@check("rank")
def rank_scaling(rng, count: int = 200):
    from .rank import exhaustivity_rank

    bad = []
    for _ in range(count):
        atoms = rng.randint(1, 5)
        mu, fam = _random_submeasure(rng, atoms)
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        eps = Fraction(rng.randint(1, 8), 4)
        scaled = lambda X, mu=mu, c=c: c * mu(X)
        if exhaustivity_rank(scaled, c * eps, atoms) != exhaustivity_rank(mu, eps, atoms):
            bad.append((atoms, str(c), str(eps)))
    return not bad, {"instances": count, "failures": _first(bad)}


@check("rank")
def rank_closed_forms(rng):
    """Uniform weight ``w`` on ``k`` atoms: ``floor(k / ceil(eps / w))``."""
    from .rank import exhaustivity_rank

    bad = []
    for k in range(1, 9):
        for w in (Fraction(1, 8), Fraction(1, 4), Fraction(1, 3)):
            for eps in (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3)):
                mu = lambda X, w=w: w * bin(X).count("1")
                per = -(-eps // w)
                want = k // per
                if exhaustivity_rank(mu, eps, k) != want:
                    bad.append((k, str(w), str(eps)))
    mu8 = lambda X: Fraction(bin(X).count("1"), 8)
    mu4 = lambda X: Fraction(bin(X).count("1"), 4)
    named = [exhaustivity_rank(mu8, Fraction(1, 2), 8) == 2, exhaustivity_rank(mu4, Fraction(1, 4), 4) == 4]
    named.append(exhaustivity_rank(mu8, 2, 8) == 0)
    if not all(named):
        bad.append(("named", named))
    return not bad, {"failures": _first(bad)}


@check("rank")
def bounds(rng):
    from .rank import rank_bounds

    lo1, hi1 = rank_bounds(1)
    low, high = rank_bounds(W)
    bad = []
    if (render(lo1), render(hi1)) != ("w", "w^(w^(2))"):
        bad.append(("alpha=1", render(lo1), render(hi1)))
    if (render(low), render(high)) != ("w^(w)", "w^(w^(w))"):
        bad.append(("alpha=w", render(low), render(high)))
    for alpha in [ONE, Ordinal.of(2), Ordinal.of(5), W, add(W, 1), mul(W, 3), omega_pow(2), omega_pow(W)]:
        lo, hi = rank_bounds(alpha)
        if not lo < hi:
            bad.append(("order", render(alpha)))
    return not bad, {"alpha_1": [render(lo1), render(hi1)], "failures": _first(bad)}


def g_toy():
    from .submeasure import FamilyMeasure

    return FamilyMeasure.additive(Space(3), Fraction(1, 4))


def he_toy():
    from .submeasure import FamilyMeasure

    return FamilyMeasure.additive(Space(3), 1)


@check("rank")
def premises(rng):
    from .rank import validate_covering_property, validate_thinness_property

    cov_g = validate_covering_property(g_toy())
    cov_h = validate_covering_property(he_toy())
    thin = validate_thinness_property(he_toy(), 1, Norm.card(), 5)
    ok = cov_g["validated"] and cov_h["validated"] and thin["validated"]
    return ok, {"covering_G": cov_g["checked"], "covering_HE": cov_h["checked"], "thinness_checked": thin["checked"]}


def g_runs(rng, runs: int, level: int) -> tuple[list, dict]:
    from .rank import GStrategy, RandomG, play_G

    mu = g_toy()
    sp = mu.space
    delta = Fraction(1, 2)
    bad, stats = [], {"runs": runs, "forced": 0, "first": None}
    for _ in range(runs):
        A = rng.choice(sp.atoms(level))
        g = GStrategy(mu, A, delta)
        tr = play_G(mu, A, delta, g, RandomG(random.Random(rng.random()), sp, A), max_rounds=30)
        alphas = [mv.alpha for p, mv in tr.moves if p == "I"]
        stats["first"] = render(alphas[0])
        if tr.outcome != "ONGOING" or alphas[0] != omega_pow(g.k + 1):
            bad.append(("G", level, tr.outcome, tr.note))
            continue
        for i, forced in enumerate(tr.checks):
            if i + 1 < len(alphas):
                stats["forced"] += forced
                if (alphas[i + 1] < alphas[i]) != forced:
                    bad.append(("G strictness", level, i))
    return bad, stats


def h_runs(rng, runs: int) -> tuple[list, dict]:
    from .rank import HStrategy, RandomH, play_H

    mu = he_toy()
    bad, stats = [], {"runs": runs, "rounds": 0}
    for _ in range(runs):
        m = rng.randrange(4)
        h = HStrategy(mu, m, 1)
        tr = play_H(mu, m, 1, h, RandomH(random.Random(rng.random()), mu, 1), max_rounds=40)
        stats["rounds"] += len(tr.checks)
        first = tr.moves[0][1].alpha
        if tr.outcome != I_WINS or not first < omega_pow(h.k + 2):
            bad.append(("H", m, tr.outcome, tr.note))
    return bad, stats


def e_runs(rng, runs: int) -> tuple[list, dict]:
    from .rank import RandomE, card_family, play_E, strategy_E

    mu = he_toy()
    S, beta, _ = card_family(5)
    eps = Fraction(1, 4)
    bad, stats = [], {"runs": runs, "case_1": 0, "case_2": 0}
    for _ in range(runs):
        e = strategy_E(mu, 1, eps, S)
        tr = play_E(mu, 1, eps, e, RandomE(random.Random(rng.random()), mu, 1, eps), max_rounds=60)
        for c in e.log:
            stats[f"case_{c['case']}"] += 1
        first = tr.ordinals()[0]
        if tr.outcome != I_WINS or not first < omega_pow(mul(W, add(beta, ONE))):
            bad.append(("E", tr.outcome, tr.note))
    return bad, stats


@check("rank")
def strategy_engine(rng, g0: int = 1000, g2: int = 3000, h: int = 3000, e: int = 3000):
    bad = []
    details = {}
    for name, fn in (
        ("G_level0", lambda: g_runs(rng, g0, 0)),
        ("G_level2", lambda: g_runs(rng, g2, 2)),
        ("H", lambda: h_runs(rng, h)),
        ("E", lambda: e_runs(rng, e)),
    ):
        got, stats = fn()
        bad += got
        details[name] = stats
    details["total_runs"] = g0 + g2 + h + e
    details["failures"] = _first(bad)
    return not bad, details


@check("rank")
def exhaustion(rng):
    from .rank import AdversaryImpossible, exhaust_run, find_thin_bound, strategy_E
    from .submeasure import FamilyMeasure, is_thin

    mu = he_toy()
    card = Norm.card()
    out = {}
    run = exhaust_run(mu, [1, 2, 12, 0b110000], 0, Fraction(1, 2), card, 5)
    out["toy"] = run["status"]
    out["empty"] = exhaust_run(mu, [0, 0], 0, Fraction(1, 2), card, 5)["status"]
    tb = find_thin_bound(mu, [1, 2, 12], 0, Fraction(1, 4))
    out["thin_bound"] = is_thin(tb.B, (0, tb.n), mu) and all(mu(E & ~tb.B) <= Fraction(1, 4) for E in [1, 2, 12][tb.tail_start:])
    sp = Space(6)
    G = 0
    for lev in range(2, 7):
        vals = [0] * lev
        vals[lev - 1] = 1
        if lev == 2:
            vals[1] = 1
        G |= sp.block_mask(lev, sp.atom_index(vals))
    broken = FamilyMeasure(sp, [(G, 1), (sp.full, 100)])
    bad_run = exhaust_run(broken, [G], 0, Fraction(1, 2), card, 2)
    out["no_covering"] = bad_run["status"]
    out["no_covering_premise"] = bad_run.get("premise", "")
    # S_1 forces Case 1 at once; the empty move is too light to be legal
    e = strategy_E(FamilyMeasure.additive(Space(3), Fraction(1, 4)), 1, Fraction(1, 4), Schreier(1))
    try:
        e.move(0)
        out["contradiction"] = "missed"
    except AdversaryImpossible:
        out["contradiction"] = "adversary-impossible"
    ok = (
        out["toy"] == "PASS"
        and out["empty"] == "PASS"
        and out["thin_bound"]
        and out["no_covering"] == "PREMISE_FAILURE"
        and out["no_covering_premise"].startswith("covering property")
        and out["contradiction"] == "adversary-impossible"
    )
    return ok, out


SUITE_NAMES = ["ordinal", "galvin", "schreier", "norms", "games", "algebra", "submeasure", "rank"]
