from fractions import Fraction

import pytest

from maharam.algebra import AlgebraError, Atom, Clopen, Space, closure_m, cylinder, interior_m, pi_preimage
from maharam import oracles
from maharam.norms import Norm
from maharam.submeasure import (
    FamilyMeasure,
    Params,
    SubmeasureError,
    build,
    c_sequence,
    check_covering_sequence,
    covering_sequence,
    is_thin,
    paper_params,
    phi_bits,
    thinness_property_check,
    transport_triple,
)


def test_space_layout():
    sp = Space(3)
    assert sp.atom_count == 8 and sp.full == 0xFF
    assert Space(3) is sp
    assert sp.point_index((0, 1, 3)) == 7
    assert [len(sp.atoms(m)) for m in range(5)] == [1, 1, 2, 8, 8]
    with pytest.raises(AlgebraError):
        Space(7)
    with pytest.raises(AlgebraError):
        sp.cylinder({1: 2})


def test_clopen_hex_round_trip():
    sp = Space(3)
    X = Clopen(sp, 0xF0)
    assert X.hex() == "3:f0"
    assert Clopen.from_hex("3:f0") == X
    assert len(~X) == 4 and (X | ~X) == Clopen.full(sp)
    with pytest.raises(AlgebraError):
        sp.from_hex("4:0")


def test_closure_interior_cylinder():
    sp = Space(3)
    point = Clopen(sp, 1 << 5)
    assert len(closure_m(point, 2)) == 4
    assert interior_m(point, 2).bits == 0
    assert len(cylinder({2: 3}, sp)) == 2
    assert cylinder({}, sp) == Clopen.full(sp)
    A = Atom(sp, (0, 1))
    assert pi_preimage(A.clopen(), A) == Clopen.full(sp)


def toy(p):
    return build(Params(resolution=3, p=p, a=[0] * p, M=[3] * p, norm=Norm.card()))


def test_toy_tables():
    tables = toy(2)
    top = tables[-1]
    assert top(0) == 0 and all(top(X) == float("inf") for X in range(1, 256))
    for X in range(256):
        assert tables[0](X) <= tables[1](X) <= tables[2](X)


def test_toy_tables_match_brute_force():
    sp = Space(3)
    pts = oracles._points(3)
    tables = toy(1)
    brute = oracles.submeasure_tables_brute(3, 1, [3], len, lambda k, nI: Fraction(1, 1 << k))
    for k in range(2):
        for X in range(256):
            here = frozenset(pt for pt in pts if X >> sp.point_index(pt) & 1)
            assert brute[k][here] == tables[k](X)


def test_phi_bits():
    fam = [(0b0011, Fraction(1)), (0b0110, Fraction(1)), (0b1111, Fraction(3))]
    assert phi_bits(fam, 0) == 0
    assert phi_bits(fam, 0b0111) == 2
    assert phi_bits(fam, 0b1000) == 3
    assert phi_bits(fam, 0b10000) == float("inf")


def test_covering_sequences_reverify():
    mu = toy(1)[0]
    sp = mu.space
    count = 0
    for m in range(4):
        for E in range(256):
            if sp.depends_only_ge(E, m) and mu(E) < 2:
                assert not check_covering_sequence(mu, E, m, covering_sequence(mu, E, m))
                count += 1
    assert count > 0
    low = next(E for E in range(256) if not sp.depends_only_ge(E, 2))
    with pytest.raises(SubmeasureError):
        covering_sequence(mu, low, 2)


def test_thinness_and_transport():
    tables = toy(2)
    assert thinness_property_check(tables, 0, 1)["pass"]
    with pytest.raises(SubmeasureError):
        thinness_property_check(tables, 1, 0)
    tables = toy(1)
    sp = tables[0].space
    certs = 0
    for t in tables[0].family:
        if t.origin != 0:
            continue
        for m in range(4):
            for A in sp.atoms(m):
                for r in range(m + 1, 4):
                    try:
                        new, cert = transport_triple(t, A, r, tables, 0)
                    except SubmeasureError:
                        continue
                    assert all(cert.values())
                    assert sp.depends_only_ge(new.bits, m)
                    certs += 1
    assert certs > 0
    assert is_thin(0, [0, 3], tables[1])


def test_constants():
    a0, M0, c0 = paper_params(0)
    assert a0 == Fraction(1, 125) and M0 == 2**512 and c0 == 8
    c = c_sequence(1)
    assert abs(c[1] / c[0] - 4 ** (1 / 125)) < 1e-12


def test_family_measure():
    sp = Space(3)
    mu = FamilyMeasure.additive(sp, Fraction(1, 4))
    assert mu(0xFF) == 2 and mu(0) == 0
    fm = FamilyMeasure(sp, [(0x0F, 1), (0xFF, 3)])
    assert fm(0x01) == 1 and fm(0x10) == 3
    # the covering premise needs mu(E) < 2
    with pytest.raises(SubmeasureError):
        covering_sequence(FamilyMeasure(Space(6), [(Space(6).full, 100)]), 1, 0, n=6)
