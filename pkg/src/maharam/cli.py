"""``maharam`` command line.

Exit codes: 0 success, 1 a check or game verdict failed, 2 usage or
configuration error.  Every JSON document is written with sorted keys and
no timestamps, so a fixed command, config and seed give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .config import ConfigError, RunConfig, load_config, parse_norm
from .games import (
    I_WINS,
    II_WINS,
    ILLEGAL,
    GameError,
    PaI,
    PaII,
    PartialFn,
    SchreierI,
    SchreierII,
    compatible,
    oplus_bound,
    play_family_game,
    play_incompatibility_game,
    strategy_I_oplus,
)
from .norms import Norm, NormError, cover_exact, norm_greedy
from .ordinal import Ordinal, OrdinalError, evaluate, render
from .sample import random_descent
from .schreier import FamilyError, FiniteSet, Oplus, Schreier, witness

SCHEMA_VERSION = 1
QUIT = "QUIT"


class UsageError(Exception):
    pass


def _dump(obj, out=None):
    out = out or sys.stdout
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _ordinal(text: str) -> Ordinal:
    try:
        return evaluate(text)
    except OrdinalError as exc:
        raise UsageError(f"ordinal {text!r}: {exc}") from None


def _set(text: str) -> FiniteSet:
    try:
        return FiniteSet.parse(text)
    except FamilyError as exc:
        raise UsageError(str(exc)) from None


def _positive(text: str) -> Ordinal:
    a = _ordinal(text)
    if a.is_zero():
        raise UsageError("alpha must be positive")
    return a


# -- ordinal, family, norm ---------------------------------------------------------


def cmd_ordinal(args) -> int:
    print(render(_ordinal(args.expr)))
    return 0


def cmd_family(args) -> int:
    fam = Schreier(_positive(args.alpha))
    ok, chain = witness(_set(args.set), fam)
    _dump({"member": ok, "witness": [render(x) for x in chain] if ok else None})
    return 0


def cmd_norm(args) -> int:
    nm = Norm.schreier(_positive(args.alpha))
    F = _set(args.set)
    try:
        k, cover = norm_greedy(F, nm) if args.greedy else cover_exact(F, nm)
    except NormError as exc:
        raise UsageError(str(exc)) from None
    _dump({"norm": k, "cover": [list(c) for c in cover], "method": "greedy" if args.greedy else "exact"})
    return 0


# -- games -------------------------------------------------------------------------------


class HumanII:
    """Player II at the terminal.  Illegal entries are explained and asked
    again; ``q`` or end of input stops the game."""

    def __init__(self, kind: str, fam, inp, out):
        self.kind, self.fam, self.inp, self.out = kind, fam, inp, out
        self.chosen: list = []
        self.quit = False

    def _read(self, prompt: str) -> Optional[str]:
        self.out.write(prompt)
        self.out.flush()
        line = self.inp.readline()
        if not line:
            return None
        return line.strip()

    def _analyse(self, text: str):
        """The move encoded by ``text`` and why it is illegal, if it is."""
        if self.kind == "incomp":
            try:
                entries = {}
                for part in filter(None, (p.strip() for p in text.split(","))):
                    k, _, v = part.partition(":")
                    entries[int(k)] = int(v)
                u = PartialFn(entries)
            except (ValueError, GameError) as exc:
                return None, f"cannot read {text!r} as k:v,k:v ({exc})"
            if not self.fam.member(u.dom):
                return u, f"domain {list(u.dom)} is not in {self.fam.describe()}"
            clash = next((j for j, v in enumerate(self.chosen) if compatible(u, v)), None)
            if clash is not None:
                return u, f"compatible with your move {clash}"
            return u, None
        try:
            n = int(text)
        except ValueError:
            return None, f"cannot read {text!r} as a natural number"
        if n < 0 or (self.chosen and n <= self.chosen[-1]):
            return n, "moves must increase"
        if not self.fam.member(self.chosen + [n]):
            return n, f"{self.chosen + [n]} leaves {self.fam.describe()}"
        return n, None

    def move(self, a):
        self.out.write(f"I plays {render(a)}\n")
        while True:
            text = self._read("II> ")
            if text is None or text == "q":
                self.quit = True
                return None
            if text == "resign":
                return None
            mv, problem = self._analyse(text)
            if problem:
                self.out.write(f"illegal: {problem}\n")
                continue
            self.out.write("legal\n")
            self.chosen.append(mv)
            return mv


class ScriptedI:
    def __init__(self, seq):
        self.seq, self.i = list(seq), 0

    def move(self, last):
        if self.i >= len(self.seq):
            return None
        self.i += 1
        return self.seq[self.i - 1]


def cmd_game(args) -> int:
    from .verify import RandomII, RandomIncompatible

    rng = random.Random(f"{args.seed}:game")
    alpha = _positive(args.alpha)
    xi = _ordinal(args.xi) if args.xi is not None else None
    if args.max_rounds < 1:
        raise UsageError("--max-rounds must be positive")
    if args.kind == "oplus":
        beta = _positive(args.beta) if args.beta else alpha
        fam = Oplus(Schreier(alpha), Schreier(beta))
        bound = oplus_bound(alpha, beta)
    else:
        fam = Schreier(alpha)
    human = HumanII(args.kind, fam, sys.stdin, sys.stderr) if args.interactive else None
    if args.kind == "incomp":
        if xi is None:
            bound = Ordinal(((alpha, 1),))
            strat_II = human or RandomIncompatible(fam, rng)
            tr = play_incompatibility_game(bound, fam, PaI(alpha), strat_II, args.max_rounds)
            expect = I_WINS
        else:
            if human:
                raise UsageError("--interactive plays Player II; drop --xi")
            tr = play_incompatibility_game(xi, fam, ScriptedI(random_descent(rng, xi)), PaII(xi, alpha), args.max_rounds)
            expect = II_WINS
    elif args.kind == "schreier" and xi is not None:
        if human:
            raise UsageError("--interactive plays Player II; drop --xi")
        if not xi < alpha:
            raise UsageError("Player II's strategy needs xi < alpha")
        tr = play_family_game(xi, fam, ScriptedI(random_descent(rng, xi)), SchreierII(xi, alpha), args.max_rounds)
        expect = II_WINS
    else:
        if args.kind == "schreier":
            bound, strat_I = alpha, SchreierI(alpha)
        else:
            strat_I = strategy_I_oplus(Schreier(alpha), Schreier(beta), alpha, beta)
        tr = play_family_game(bound, fam, strat_I, human or RandomII(fam, rng), args.max_rounds)
        expect = I_WINS
    if human and human.quit:
        tr.outcome, tr.note = QUIT, "stopped at the terminal"
    report = tr.to_json()
    report["family"] = fam.describe()
    report["strategy_player"] = "I" if expect == I_WINS else "II"
    _dump(report)
    if tr.outcome == QUIT:
        return 0
    return 0 if tr.outcome == expect else 1


# -- construct ---------------------------------------------------------------------------


def _table_invariants(tables, sets: list[int]) -> dict:
    """Axioms over ``sets`` (every set in exact mode, the candidates in
    bounded mode, which are closed under union)."""
    ar = tables[0].arith
    out = {}
    vals = [[tb(X) for X in sets] for tb in tables]
    idx = {X: i for i, X in enumerate(sets)}
    out["empty_is_zero"] = all(tb(0) == 0 for tb in tables)
    mono = sub = True
    for row, tb in zip(vals, tables):
        for i, X in enumerate(sets):
            for j, Y in enumerate(sets):
                if X & ~Y == 0 and ar.gt(row[i], row[j], "monotone"):
                    mono = False
                U = idx.get(X | Y)
                if U is not None and ar.gt(row[U], row[i] + row[j], "subadditive"):
                    sub = False
    out["monotone"] = mono
    out["subadditive"] = sub
    out["level_monotone"] = all(
        not ar.gt(a, b, "level") for k in range(len(tables) - 1) for a, b in zip(vals[k], vals[k + 1])
    )
    out["top_is_infinite"] = all(v == ar.inf for X, v in zip(sets, vals[-1]) if X)
    return {k: "PASS" if v else "FAIL" for k, v in out.items()}


def cmd_construct(args) -> int:
    from .submeasure import build, cylinder_diagnostics, degenerate_levels, thinness_property_check

    cfg = _load(args)
    if cfg.measure != "table":
        raise UsageError("construct builds the table measure; drop the measure key")
    params = cfg.params()
    tables = build(params)
    sp = tables[0].space
    ar = tables[0].arith
    sets = list(range(1 << sp.atom_count)) if params.mode == "exact" else sorted(tables[0].candidates or [0])
    invariants = _table_invariants(tables, sets)
    for l in range(params.p):
        for k in range(l + 1):
            r = thinness_property_check(tables, k, l)
            invariants[f"thinness_property_k{k}_l{l}"] = "PASS" if r["pass"] else "FAIL"
    levels = []
    for tb in tables:
        levels.append(
            {
                "k": tb.k,
                "family_size": len(tb.triples),
                "values": {sp.hex(X): ar.to_json(tb(X)) for X in sets},
            }
        )
    report = {
        "schema_version": SCHEMA_VERSION,
        "config": cfg.to_json(),
        "flags": ["UPPER-BOUND"] if params.mode == "bounded" else [],
        "levels": levels,
        "invariants": invariants,
        "diagnostics": {
            "cylinder_values": cylinder_diagnostics(tables),
            "degenerate_levels": degenerate_levels(params),
            "tolerance_incidents": ar.incidents[:50],
            "arithmetic": "exact" if ar.exact else "mpmath-200bit",
        },
    }
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if all(v == "PASS" for v in invariants.values()) else 1


# -- rank --------------------------------------------------------------------------------


def _load(args, **overrides) -> RunConfig:
    extra = {k: v for k, v in overrides.items() if v is not None}
    if getattr(args, "seed", None) is not None:
        extra["seed"] = args.seed
    return load_config(args.config, extra)


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational, got {text!r}") from None
    if value <= 0:
        raise UsageError("epsilon must be positive")
    return value


def cmd_rank(args) -> int:
    from .rank import RankError, exhaustivity_rank, heavy_disjoint_family

    if args.config is None or args.epsilon is None:
        raise UsageError("rank needs --config and --epsilon (or a subcommand: bounds, game)")
    cfg = _load(args)
    eps = _fraction(args.epsilon)
    mu = cfg.measure_fn()
    sp = mu.space
    try:
        fam = heavy_disjoint_family(mu, eps, sp)
        rk = exhaustivity_rank(mu, eps, sp)
    except RankError as exc:
        raise UsageError(str(exc)) from None
    _dump(
        {
            "schema_version": SCHEMA_VERSION,
            "epsilon": str(eps),
            "rank": rk,
            "witness": [sp.hex(X) for X in fam],
            "witness_values": [mu.arith.to_json(mu(X)) for X in fam],
            "mu_T": mu.arith.to_json(mu(sp.full)),
        }
    )
    return 0


def cmd_rank_bounds(args) -> int:
    from .rank import rank_bounds

    lo, hi = rank_bounds(_positive(args.alpha))
    _dump({"alpha": render(_positive(args.alpha)), "lower": render(lo), "upper": render(hi)})
    return 0


def cmd_rank_game(args) -> int:
    from .rank import (
        PREMISE_FAILURE,
        GStrategy,
        HStrategy,
        RandomE,
        RandomG,
        RandomH,
        card_family,
        play_E,
        play_G,
        play_H,
        strategy_E,
        validate_covering_property,
        validate_thinness_property,
    )

    cfg = _load(args)
    mu = cfg.measure_fn()
    sp = mu.space
    premises = {"covering": validate_covering_property(mu)}
    if args.which == "E":
        premises["thinness"] = validate_thinness_property(mu, cfg.N, Norm.card(), cfg.M_N)
    runs, bad = [], 0
    for i in range(cfg.runs):
        rng = random.Random(f"{cfg.seed}:rank-game:{args.which}:{i}")
        if args.which == "G":
            A = rng.choice(sp.atoms(cfg.m))
            strat = GStrategy(mu, A, cfg.delta)
            tr = play_G(mu, A, cfg.delta, strat, RandomG(rng, sp, A), max_rounds=cfg.max_rounds)
            first_ok = tr.ordinals()[0].alpha == strat.bound if tr.ordinals() else False
        elif args.which == "H":
            strat = HStrategy(mu, cfg.m, cfg.delta)
            tr = play_H(mu, cfg.m, cfg.delta, strat, RandomH(rng, mu, cfg.delta), max_rounds=cfg.max_rounds)
            first_ok = bool(tr.ordinals()) and tr.ordinals()[0].alpha < strat.bound
        else:
            S, beta, make = card_family(cfg.M_N)
            strat = strategy_E(mu, cfg.N, cfg.game_epsilon, S, beta, make)
            tr = play_E(mu, cfg.N, cfg.game_epsilon, strat, RandomE(rng, mu, cfg.N, cfg.game_epsilon), max_rounds=cfg.max_rounds)
            first_ok = bool(tr.ordinals()) and not tr.ordinals()[0] > strat.bound
        legal = tr.outcome not in (ILLEGAL, PREMISE_FAILURE) or (tr.illegal is not None and tr.illegal[0] == "II")
        verdict = "PASS" if legal and first_ok else "FAIL"
        bad += verdict == "FAIL"
        runs.append({"run": i, "verdict": verdict, "rounds": len(tr.checks), "transcript": tr.to_json()})
    premise_ok = all(p.get("validated") for p in premises.values())
    _dump(
        {
            "schema_version": SCHEMA_VERSION,
            "game": args.which,
            "config": cfg.to_json(),
            "premises": premises,
            "premises_validated": premise_ok,
            "runs": runs,
            "verdict": "PASS" if not bad else "FAIL",
        }
    )
    return 0 if not bad else 1


# -- verify ------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    from .verify import SUITE_NAMES, run_suites, summarize

    names = SUITE_NAMES if args.suite == "all" else [args.suite]
    checks = run_suites(names, args.seed)
    for c in checks:
        sys.stderr.write(f"{'PASS' if c.passed else 'FAIL'}  {c.suite}.{c.name}  {c.seconds:.2f}s\n")
    summary = summarize(checks)
    summary["seed"] = args.seed
    summary["suite"] = args.suite
    _dump(summary)
    return 0 if summary["passed"] else 1


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITE_NAMES

    p = argparse.ArgumentParser(prog="maharam", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("ordinal", help="evaluate an ordinal expression (+, #, *, w^x)")
    o.add_argument("expr")
    o.set_defaults(fn=cmd_ordinal)

    f = sub.add_parser("family", help="Schreier family queries")
    fsub = f.add_subparsers(dest="action", required=True)
    fm = fsub.add_parser("member", help="membership with its witness chain")
    fm.add_argument("--alpha", required=True)
    fm.add_argument("--set", required=True, help="comma separated, e.g. 3,7,12")
    fm.set_defaults(fn=cmd_family)

    n = sub.add_parser("norm", help="admissible norm ||F||_alpha")
    n.add_argument("--alpha", required=True)
    n.add_argument("--set", required=True)
    how = n.add_mutually_exclusive_group()
    how.add_argument("--exact", action="store_true", help="minimum cover (default)")
    how.add_argument("--greedy", action="store_true", help="left-to-right greedy cover, an upper bound")
    n.set_defaults(fn=cmd_norm)

    g = sub.add_parser("game", help="play a rank game")
    gsub = g.add_subparsers(dest="action", required=True)
    gp = gsub.add_parser("play")
    gp.add_argument("--kind", choices=["schreier", "oplus", "incomp"], required=True)
    gp.add_argument("--alpha", required=True)
    gp.add_argument("--beta", help="second summand for --kind oplus (default alpha)")
    gp.add_argument("--xi", help="play Player II's strategy from this ordinal")
    gp.add_argument("--interactive", action="store_true", help="type Player II's moves")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--max-rounds", type=int, default=1000)
    gp.set_defaults(fn=cmd_game)

    c = sub.add_parser("construct", help="build the submeasure tables and write a JSON report")
    c.add_argument("--config", required=True)
    c.add_argument("--out")
    c.add_argument("--seed", type=int)
    c.set_defaults(fn=cmd_construct)

    r = sub.add_parser("rank", help="exhaustivity rank, bounds and the strategy games")
    r.add_argument("--config")
    r.add_argument("--epsilon")
    r.add_argument("--seed", type=int)
    r.set_defaults(fn=cmd_rank)
    rsub = r.add_subparsers(dest="action")
    rb = rsub.add_parser("bounds")
    rb.add_argument("--alpha", required=True)
    rb.set_defaults(fn=cmd_rank_bounds)
    rg = rsub.add_parser("game")
    rg.add_argument("--which", choices=["G", "H", "E"], required=True)
    rg.add_argument("--config", required=True)
    rg.add_argument("--seed", type=int)
    rg.set_defaults(fn=cmd_rank_game)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("--suite", choices=SUITE_NAMES + ["all"], required=True)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ConfigError) as exc:
        sys.stderr.write(f"maharam: error: {exc}\n")
        return 2
    except (OrdinalError, FamilyError, NormError, GameError) as exc:
        sys.stderr.write(f"maharam: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
