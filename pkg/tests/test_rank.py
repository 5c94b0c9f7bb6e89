import random
from fractions import Fraction

import pytest

from maharam import oracles
from maharam.algebra import Space
from maharam.games import I_WINS, ILLEGAL
from maharam.norms import Norm
from maharam.ordinal import OMEGA, ZERO, add, mul, omega_pow, render
from maharam.rank import (
    PREMISE_FAILURE,
    AdversaryImpossible,
    GStrategy,
    HStrategy,
    RandomE,
    RandomG,
    RankError,
    card_family,
    exhaust_run,
    exhaustivity_rank,
    find_thin_bound,
    heavy_disjoint_family,
    play_E,
    play_G,
    play_H,
    rank_bounds,
    strategy_E,
)
from maharam.schreier import Schreier
from maharam.submeasure import FamilyMeasure, is_thin, phi_bits
from maharam.verify import Scripted, g_toy, he_toy

W = OMEGA


def random_measure(rng, atoms):
    fam = [(1 << i, Fraction(rng.randint(1, 6), 4)) for i in range(atoms)]
    fam += [(rng.randrange(1, 1 << atoms), Fraction(rng.randint(1, 6), 4)) for _ in range(3)]
    return lambda X: phi_bits(fam, X, float("inf"), Fraction(0))


def test_rank_matches_reverse_inclusion_oracle():
    rng = random.Random(3)
    for atoms in range(1, 6):
        for _ in range(40):
            mu = random_measure(rng, atoms)
            eps = Fraction(rng.randint(1, 8), 4)
            assert exhaustivity_rank(mu, eps, atoms) == oracles.rank_reverse_inclusion(mu, eps, atoms)


@pytest.mark.parametrize("k, w, eps, want", [(8, Fraction(1, 8), Fraction(1, 2), 2), (4, Fraction(1, 4), Fraction(1, 4), 4), (8, Fraction(1, 8), 2, 0), (7, Fraction(1, 3), 1, 2)])
def test_rank_uniform_weights(k, w, eps, want):
    assert exhaustivity_rank(lambda X: w * bin(X).count("1"), eps, k) == want


def test_heavy_family_is_disjoint_and_heavy():
    mu = he_toy()
    fam = heavy_disjoint_family(mu, Fraction(1, 2), mu.space)
    assert len(fam) == 8
    assert all(mu(X) >= Fraction(1, 2) for X in fam)
    assert sum(bin(X).count("1") for X in fam) == bin(sum(fam)).count("1")
    with pytest.raises(RankError):
        exhaustivity_rank(mu, 0, mu.space)


def test_rank_bounds():
    assert tuple(map(render, rank_bounds(1))) == ("w", "w^(w^(2))")
    assert tuple(map(render, rank_bounds(W))) == ("w^(w)", "w^(w^(w))")
    lo, hi = rank_bounds(mul(W, 3))
    assert lo < hi
    with pytest.raises(RankError):
        rank_bounds(0)


def test_G_first_move_and_saturation():
    mu = g_toy()
    A = mu.space.atoms(0)[0]
    g = GStrategy(mu, A, Fraction(1, 2))
    assert g.k == 8
    # once mu(union of E | A) reaches 2, every later move is 0
    tr = play_G(mu, A, Fraction(1, 2), g, Scripted([A.bits, 1, 2]), max_rounds=4)
    alphas = [mv.alpha for who, mv in tr.moves if who == "I"]
    assert alphas[0] == omega_pow(9)
    assert alphas[1:] == [ZERO, ZERO, ZERO]
    assert tr.outcome == I_WINS


def test_G_random_runs_stay_legal():
    mu = g_toy()
    sp = mu.space
    for seed in range(50):
        A = sp.atoms(2)[seed % 2]
        g = GStrategy(mu, A, Fraction(1, 2))
        tr = play_G(mu, A, Fraction(1, 2), g, RandomG(random.Random(seed), sp, A), max_rounds=20)
        assert tr.outcome == "ONGOING", tr.note


def test_H_with_one_atom():
    mu = he_toy()
    h = HStrategy(mu, 1, 1)
    assert len(h.atoms) == 1 and h.k == 4
    tr = play_H(mu, 1, 1, h, Scripted([1, 2, 4, 8, 16, 32, 64, 128]), max_rounds=20)
    alphas = [mv.alpha for who, mv in tr.moves if who == "I"]
    assert alphas[0] < omega_pow(6)
    assert all(b < a for a, b in zip(alphas, alphas[1:])) and alphas[-1] == ZERO
    # two points weigh 2 = mu(A), so B swallows the rest and the third point is too light
    assert tr.outcome == ILLEGAL and tr.illegal == ("II", 2)


def test_H_rejects_repeated_set():
    mu = he_toy()
    tr = play_H(mu, 0, 1, HStrategy(mu, 0, 1), Scripted([0x80, 0x80]))
    assert tr.outcome == ILLEGAL
    assert tr.illegal[0] == "II" and tr.note == "E meets an earlier set"


def test_E_wins_against_random():
    mu = he_toy()
    S, beta, _ = card_family(5)
    for seed in range(20):
        e = strategy_E(mu, 1, Fraction(1, 4), S)
        tr = play_E(mu, 1, Fraction(1, 4), e, RandomE(random.Random(seed), mu, 1, Fraction(1, 4)), max_rounds=60)
        assert tr.outcome == I_WINS
        assert tr.ordinals()[0] < omega_pow(mul(W, add(beta, 1)))


def test_E_detects_impossible_adversary():
    e = strategy_E(g_toy(), 1, Fraction(1, 4), Schreier(1))
    with pytest.raises(AdversaryImpossible):
        e.move(0)


def test_exhaustion_runs():
    mu = he_toy()
    assert exhaust_run(mu, [1, 2, 12, 0b110000], 0, Fraction(1, 2), Norm.card(), 5)["status"] == "PASS"
    tb = find_thin_bound(mu, [1, 2, 12], 0, Fraction(1, 4))
    assert is_thin(tb.B, (0, tb.n), mu)
    assert all(mu(E & ~tb.B) <= Fraction(1, 4) for E in [1, 2, 12][tb.tail_start :])


def test_missing_covering_property_is_reported():
    sp = Space(6)
    G = 0
    for lev in range(2, 7):
        vals = [0] * lev
        vals[lev - 1] = 1
        if lev == 2:
            vals[1] = 1
        G |= sp.block_mask(lev, sp.atom_index(vals))
    broken = FamilyMeasure(sp, [(G, 1), (sp.full, 100)])
    run = exhaust_run(broken, [G], 0, Fraction(1, 2), Norm.card(), 2)
    assert run["status"] == PREMISE_FAILURE
    assert run["premise"].startswith("covering property")
