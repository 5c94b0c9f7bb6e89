import random
from fractions import Fraction
from itertools import combinations

import pytest

from maharam.games import (
    I_WINS,
    II_WINS,
    ILLEGAL,
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
from maharam.norms import Norm, NormError, cover_exact, find_gap, norm_greedy, roberts_select, select_blocks
from maharam.oracles import exhaust_family_game, partition_norm, threshold_windows
from maharam.ordinal import OMEGA, Ordinal, add, mul, omega_pow, render
from maharam.sample import random_descent
from maharam.schreier import FiniteSet, Oplus, Power, Schreier
from maharam.verify import LeastII, RandomII, RandomIncompatible, Scripted

W = OMEGA


# -- norms


def test_card_norm_is_cardinality():
    nm = Norm.card()
    for k in range(8):
        for F in combinations(range(8), k):
            assert nm(F) == len(F) == cover_exact(F, Norm(Schreier(1)))[0]


@pytest.mark.parametrize("alpha", [2, 3, W, omega_pow(2)])
def test_exact_norm_matches_partitions(alpha):
    rng = random.Random(str(alpha))
    fam = Schreier(alpha)
    for _ in range(40):
        F = FiniteSet(rng.sample(range(20), rng.randint(0, 7)))
        assert Norm(fam)(F) == partition_norm(F, fam.member)
        assert norm_greedy(F, Norm(fam))[0] >= Norm(fam)(F)


def test_norm_examples():
    nm = Norm.schreier(2)
    k, cover = cover_exact([0, 3, 7], nm)
    assert k == 2 and sorted(map(list, cover)) == [[0], [3, 7]]
    assert nm([]) == 0
    with pytest.raises(NormError):
        cover_exact(range(30), nm)


def test_roberts_select():
    nm = Norm.schreier(2)
    sets = [FiniteSet(range(0, 40, 3)), FiniteSet(range(1, 40, 2))]
    perm, parts = roberts_select(sets, 2, 2, nm)
    assert sorted(perm) == [0, 1]
    assert all(nm(J) == 2 for J in parts)
    assert parts[0][-1] < parts[1][0]
    with pytest.raises(NormError):
        roberts_select([FiniteSet([1])], 1, 2, nm)


def test_find_gap():
    nm = Norm.card()
    assert find_gap([0, 4, 9, 12], [5], nm) == (0, 4)
    assert find_gap([0, 4, 9, 12], [2], nm) == (4, 9)
    with pytest.raises(NormError):
        find_gap([1, 2], [5], nm)


def test_select_blocks_bound():
    nm = Norm.card()
    J = [FiniteSet(range(0, 10)), FiniteSet(range(12, 22))]
    F = [(FiniteSet([1, 2, 3]), Fraction(1)), (FiniteSet([13, 14]), Fraction(2)), (FiniteSet([5, 18]), Fraction(1))]
    sel = select_blocks(J, 10, F, nm)
    assert sel.light_weight <= sel.bound
    assert len(sel.cuts) == 2
    with pytest.raises(NormError):
        select_blocks(J, 4, F, nm)


# -- games


@pytest.mark.parametrize("alpha", [1, 2, 3, W, add(W, 1), mul(W, 2)])
def test_schreier_player_I_wins(alpha):
    fam = Schreier(alpha)
    for seed in range(30):
        tr = play_family_game(alpha, fam, SchreierI(alpha), RandomII(fam, random.Random(seed)))
        assert tr.outcome == I_WINS, tr.to_json()
    tr = play_family_game(alpha, fam, SchreierI(alpha), LeastII(fam, random.Random(0)))
    assert tr.outcome == I_WINS


def test_schreier_player_II_wins():
    rng = random.Random(5)
    for star in [Ordinal.of(2), W, add(W, 3)]:
        for _ in range(30):
            tr = play_family_game(star, Schreier(mul(W, 2)), Scripted(random_descent(rng, star)), SchreierII(star, mul(W, 2)))
            assert tr.outcome == II_WINS


def test_referee_rejects_illegal_moves():
    s1 = Schreier(1)
    tr = play_family_game(3, s1, Scripted([Ordinal.of(3), Ordinal.of(3)]), LeastII(s1, random.Random(0)))
    assert tr.outcome == ILLEGAL and tr.illegal == ("I", 1)
    tr = play_family_game(3, s1, Scripted([Ordinal.of(4)]), LeastII(s1, random.Random(0)))
    assert tr.outcome == ILLEGAL and tr.illegal == ("I", 0)
    tr = play_family_game(3, s1, Scripted([Ordinal.of(3), Ordinal.of(2)]), Scripted([4, 2]))
    assert tr.outcome == ILLEGAL and tr.illegal == ("II", 1)


def test_oplus_and_power_exhaustive():
    s, t = Schreier(1), Schreier(2)
    bound = oplus_bound(1, 2)
    assert render(bound) == "5"
    st = exhaust_family_game(bound, Oplus(s, t), strategy_I_oplus(s, t, 1, 2), windows=threshold_windows(4))
    assert st["lines"] > 0 and not st["failures"]
    make, bound = strategy_I_power(Schreier(1), 3)
    assert render(bound) == "7"
    st = exhaust_family_game(bound, Power(Schreier(1), 3), make(), windows=threshold_windows(4))
    assert not st["failures"]


def test_palpha_games():
    fam = Schreier(2)
    for seed in range(20):
        opp = RandomIncompatible(fam, random.Random(seed))
        tr = play_incompatibility_game(omega_pow(2), fam, PaI(2), opp, max_rounds=2000)
        assert tr.outcome == I_WINS
    rng = random.Random(1)
    for xi in [Ordinal.of(3), W, add(mul(W, 2), 1)]:
        tr = play_incompatibility_game(xi, fam, Scripted(random_descent(rng, xi)), PaII(xi, 2))
        assert tr.outcome == II_WINS


def test_partial_functions():
    u, v = PartialFn({2: 1}), PartialFn({2: 3})
    assert not compatible(u, v)
    assert compatible(u, PartialFn({3: 1}))
    assert legal_incompatible_move([], Schreier(1)) == PartialFn()
    move = legal_incompatible_move([u], Schreier(1))
    assert move is not None and not compatible(move, u)


def test_rank_finite():
    assert rank_finite(Schreier(1), 5) == 1
    assert rank_finite(Schreier(2), 6) >= rank_finite(Schreier(2), 5)
