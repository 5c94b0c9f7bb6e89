import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maharam.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    OrdinalError,
    OrdinalSyntaxError,
    add,
    code,
    compare,
    decode,
    evaluate,
    mul,
    nat_sum,
    nat_sum_all,
    omega_pow,
    parse,
    power,
    pred,
    render,
)

W = OMEGA


def ordinals(depth=2, leaf=6, coeff=4):
    """CNF ordinals of bounded tower depth."""
    if depth == 0:
        return st.integers(0, leaf).map(Ordinal.of)
    exps = ordinals(depth - 1, leaf, coeff)
    term = st.tuples(exps, st.integers(1, coeff))

    def build(terms):
        merged = {}
        for e, c in terms:
            merged[e] = merged.get(e, 0) + c
        return Ordinal(tuple(sorted(merged.items(), key=lambda t: t[0], reverse=True)))

    return st.lists(term, max_size=3).map(build)


@pytest.mark.parametrize(
    "text, want",
    [
        ("1 # w", "w + 1"),
        ("(w+1)*(w+1)", "w^(2) + w + 1"),
        ("0 + 0", "0"),
        ("1 + w", "w"),
        ("w # 1", "w + 1"),
        ("w*2 # w^(2)", "w^(2) + w*2"),
        ("2*w", "w"),
        ("w*2", "w*2"),
        ("w^w", "w^(w)"),
        ("w^(w+1) + w^(w)", "w^(w + 1) + w^(w)"),
        ("w^(w) + w^(w+1)", "w^(w + 1)"),
    ],
)
def test_evaluate(text, want):
    assert render(evaluate(text)) == want


@pytest.mark.parametrize("bad", ["w^(w", "", "w +", "3 $ 4", "w^()", "(1"])
def test_evaluate_rejects(bad):
    with pytest.raises(OrdinalError):
        evaluate(bad)


def test_syntax_error_position():
    with pytest.raises(OrdinalSyntaxError) as info:
        evaluate("w + $")
    assert info.value.position == 4


def test_parse_normal_forms():
    assert parse("w^(2)*3 + w + 4") == add(mul(omega_pow(2), 3), add(W, 4))
    assert parse("0") == ZERO
    with pytest.raises(OrdinalError):
        parse("w + w^(2)")
    assert render(parse("w + w^(2)", normalize=True)) == "w^(2)"


def test_compare_examples():
    assert compare(0, 0) == 0
    assert compare(W, add(W, 1)) == -1
    assert compare(mul(omega_pow(2), 2), add(mul(omega_pow(2), 2), W)) == -1
    assert compare(omega_pow(W), omega_pow(100)) == 1


def test_arithmetic_examples():
    assert add(1, W) == W
    assert mul(2, W) == W
    assert mul(W, 2) != W
    assert omega_pow(0) == ONE
    assert power(2, W) == W
    assert power(add(W, 1), W) == omega_pow(W)
    assert power(W, 0) == ONE
    assert pred(add(W, 3)) == add(W, 2)
    assert nat_sum_all([1, W, 1]) == add(W, 2)


def test_numbering_table():
    want = ["0", "1", "w", "2", "w^(w)", "w + 1", "w*2", "3", "w^(2)", "w^(w) + 1", "w^(w) + w"]
    assert [render(decode(m)) for m in range(11)] == want
    assert code(ZERO) == 0
    with pytest.raises(OrdinalError):
        decode(-1)


@given(ordinals(), ordinals())
def test_nat_sum_commutes_and_dominates(a, b):
    s = nat_sum(a, b)
    assert s == nat_sum(b, a)
    assert s >= add(a, b) and s >= add(b, a)


@given(ordinals(), ordinals(), ordinals())
def test_nat_sum_associative(a, b, c):
    assert nat_sum(nat_sum(a, b), c) == nat_sum(a, nat_sum(b, c))


@given(ordinals(), ordinals(), ordinals())
def test_sum_and_product_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


# codes are towers of exponentials in the leaves, so keep them small
@given(ordinals(2, leaf=3, coeff=3))
@settings(max_examples=200)
def test_code_round_trip(a):
    assert decode(code(a)) == a
    assert parse(render(a)) == a


@given(st.integers(0, 50_000))
def test_decode_round_trip(m):
    assert code(decode(m)) == m
