import pytest
from hypothesis import given
from hypothesis import strategies as st

from maharam.galvin import chain_height, less_n, max_pred, predecessors
from maharam.oracles import max_pred_brute
from maharam.ordinal import OMEGA, ZERO, Ordinal, add, code, decode, mul, omega_pow, render
from maharam.schreier import (
    FamilyError,
    FiniteSet,
    Oplus,
    Power,
    Schreier,
    can_extend,
    leq_s,
    member_subsets,
    witness,
)

W = OMEGA
codes = st.integers(0, 300)


@given(codes, codes, st.integers(0, 400), st.integers(0, 10))
def test_less_n_is_monotone_in_n(i, j, n, k):
    x, y = decode(i), decode(j)
    if less_n(x, y, n):
        assert less_n(x, y, n + k)
        assert x < y


@given(codes, codes)
def test_union_is_the_order(i, j):
    x, y = decode(i), decode(j)
    assert (x < y) == any(less_n(x, y, n) for n in range(max(i, j) + 1))


@given(codes, st.integers(0, 200))
def test_root_and_max_pred(i, n):
    a = decode(i)
    if a > ZERO:
        assert less_n(ZERO, a, n)
    assert max_pred(a, n) == max_pred_brute(a, n)
    preds = predecessors(a, n)
    assert all(less_n(x, y, n) for x, y in zip(preds, preds[1:]))


def test_chain_height_bounded():
    for n in range(30):
        assert chain_height([decode(m) for m in range(n + 1)], n) <= n + 2


def test_schreier_examples():
    assert Schreier(W).member([])
    assert Schreier(1).member([1000])
    assert not Schreier(1).member([3, 7])
    assert Schreier(2).member([3, 7])
    assert Schreier(W).member([3, 7, 12])
    ok, chain = witness([3, 7, 12], Schreier(W))
    assert ok and [render(x) for x in chain] == ["w", "2", "1", "0"]
    assert witness([3, 7, 12], Schreier(2)) == (False, None)


def test_extension_property():
    # F + {n} is in S_beta when max_pred(beta, n) = alpha, n < min F and F is in S_alpha
    beta = add(W, 1)
    alpha = max_pred(beta, 5)
    assert alpha is not None
    F = [x for x in range(6, 30) if Schreier(alpha).member(list(range(6, x + 1)))]
    assert Schreier(beta).member([5] + F)


@pytest.mark.parametrize("alpha", [1, 2, 3, W, add(W, 1), mul(W, 2), omega_pow(2)])
def test_hereditary_and_spreading(alpha):
    fam = Schreier(alpha)
    for F in member_subsets(fam, range(8)):
        for k in range(len(F)):
            assert fam.member(F[:k] + F[k + 1 :])
        shifted = [x + 3 + i for i, x in enumerate(F)]
        assert leq_s(F, shifted) and fam.member(shifted)


def test_oplus_and_power():
    s1 = Schreier(1)
    both = Oplus(s1, s1)
    assert both.member([2, 5])
    assert not both.member([2, 5, 9])
    assert Power(s1, 3).member([1, 2, 3]) and not Power(s1, 3).member([1, 2, 3, 4])
    assert can_extend(Schreier(2), [3])


def test_finite_sets():
    assert FiniteSet.parse("7, 3,12") == (3, 7, 12)
    assert FiniteSet.parse("") == ()
    with pytest.raises(FamilyError):
        FiniteSet([1, 1])
    with pytest.raises(FamilyError):
        FiniteSet.parse("1,x")
    assert FiniteSet([1, 5, 9]).window(2, 9) == (5,)
