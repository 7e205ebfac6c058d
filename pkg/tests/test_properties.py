from fractions import Fraction

from hypothesis import given, settings, strategies as st

from compactify import (DOMINANCE, adjoint_little_brothers, RATIONAL, all_sublattices, apply_word, build_root_system,
                        compare, dominant_conjugate, lambda_dominance, lambda_rational,
                        little_brothers, pi_g_plus, pi_plus, regularize)
from compactify.cartan import parse_weight
from compactify.jsonio import weight_from_json, weight_json
from oracles import lambda_le, rational_le

TYPES = ["A2", "B2", "C2", "G2", "A3", "B3", "C3", "A1xA1", "A1xB2"]
SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def root_system_and_weights(draw, count=2, low=-3, high=3):
    rs = build_root_system(draw(st.sampled_from(TYPES)))
    ws = [tuple(draw(st.integers(low, high)) for _ in range(rs.rank)) for _ in range(count)]
    return rs, ws


@st.composite
def lattice_and_lambda(draw, high=2):
    rs = build_root_system(draw(st.sampled_from(TYPES)))
    L = draw(st.sampled_from(all_sublattices(rs)))
    lam = tuple(draw(st.integers(0, high)) for _ in range(rs.rank))
    # move lam into the lattice by doubling up to det(C) times
    k = 1
    while not L.contains(tuple(k * x for x in lam)):
        k += 1
    return L, tuple(k * x for x in lam)


@SETTINGS
@given(root_system_and_weights(count=1))
def test_dominant_conjugate_round_trip(data):
    rs, (mu,) = data
    dom, word = dominant_conjugate(rs, mu)
    assert all(x >= 0 for x in dom)
    assert apply_word(rs, word, dom) == mu
    assert rs.inner(dom, dom) == rs.inner(mu, mu)


@SETTINGS
@given(root_system_and_weights(count=3, low=0))
def test_orders_chain(data):
    rs, (lam, nu, mu) = data
    if not any(lam):
        return
    d = compare(rs, nu, mu, DOMINANCE)
    assert compare(rs, nu, mu, RATIONAL) == rational_le(rs, nu, mu)
    ld = compare(rs, nu, mu, lambda_dominance(lam))
    assert ld == lambda_le(rs, lam, nu, mu)
    assert not ld or (d and compare(rs, nu, mu, lambda_rational(lam)))


@SETTINGS
@given(lattice_and_lambda())
def test_enumeration_nesting(data):
    L, lam = data
    a, b = pi_plus(L, lam), pi_g_plus(L, lam)
    assert set(a) <= set(b) and tuple(lam) in a


@SETTINGS
@given(lattice_and_lambda())
def test_little_brothers_below_lambda(data):
    L, lam = data
    if not any(lam):
        return
    rs = L.root_system
    for mu in little_brothers(L, lam):
        assert compare(rs, mu, lam, lambda_rational(lam)) and mu != lam
        # brothers below lam in dominance can only come from the adjoint construction
        assert not compare(rs, mu, lam, DOMINANCE) or mu in adjoint_little_brothers(rs, lam)


@SETTINGS
@given(lattice_and_lambda())
def test_regularize_idempotent(data):
    L, lam = data
    if not any(lam):
        return
    prime, lam2 = regularize(L, [lam])
    assert regularize(L, prime) == (prime, lam2)


@SETTINGS
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=5))
def test_weight_json_round_trip(values):
    w = tuple(values)
    back = weight_from_json(weight_json(w))
    assert back == w
    text = ",".join(str(Fraction(x)) for x in w)
    assert parse_weight(text, len(w)) == w
