import random
from fractions import Fraction
from itertools import product

import pytest

from compactify import (adjoint, all_sublattices, apply_word, build_root_system,
                        cone_lambda_contains, dominant_conjugate, parse_group, pi_g_plus, pi_plus,
                        weyl_orbit)
from compactify.errors import NotDominantError, NotInLatticeError, ResourceCapError
from compactify.limits import Limits, using_limits
from compactify.oracle import orbit_size, weight_multiplicities
from compactify.weights import in_weight_polytope, pi_lambda
from oracles import pi_g_plus_box, pi_plus_box, rational_le


def test_dominant_conjugate_examples():
    a1, a2 = build_root_system("A1"), build_root_system("A2")
    assert dominant_conjugate(a2, (2, 1)) == ((2, 1), [])
    assert dominant_conjugate(a1, (-3,)) == ((3,), [0])
    assert dominant_conjugate(a2, (-1, 1)) == ((1, 0), [0])


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3", "C3", "D4"])
def test_dominant_conjugate_is_orbit_invariant(name):
    rs = build_root_system(name)
    rng = random.Random(1)
    for _ in range(10):
        lam = tuple(rng.randint(0, 2) for _ in range(rs.rank))
        for w in weyl_orbit(rs, lam):
            dom, word = dominant_conjugate(rs, w)
            assert dom == lam
            assert apply_word(rs, word, dom) == w


def test_pi_plus_examples():
    assert pi_plus(parse_group("SL(2)"), (3,)) == [(1,), (3,)]
    assert pi_plus(parse_group("SL(3)"), (1, 1)) == [(0, 0), (1, 1)]
    assert pi_plus(parse_group("Sp(4)"), (0, 1)) == [(0, 0), (0, 1)]


def test_pi_g_plus_examples():
    assert pi_g_plus(parse_group("SL(3)"), (1, 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert pi_g_plus(parse_group("PGL(2)"), (2,)) == [(0,), (2,)]
    assert pi_g_plus(parse_group("Sp(4)"), (0, 1)) == [(0, 0), (0, 1), (1, 0)]


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"])
def test_enumerations_match_box_scan(name):
    rs = build_root_system(name)
    top = 2 if rs.rank <= 2 else 1
    for L in all_sublattices(rs):
        for lam in product(range(top + 1), repeat=rs.rank):
            if not L.contains(lam):
                continue
            assert pi_g_plus(L, lam) == pi_g_plus_box(L, lam)
            assert pi_plus(L, lam) == pi_plus_box(L, lam)


@pytest.mark.parametrize("name", ["A4", "B4", "C5", "D5", "A5"])
def test_pi_plus_inside_pi_g_plus(name):
    rs = build_root_system(name)
    rng = random.Random(2)
    for L in all_sublattices(rs):
        for _ in range(4):
            lam = tuple(rng.randint(0, 2) for _ in range(rs.rank))
            if not L.contains(lam):
                continue
            a, b = pi_plus(L, lam), pi_g_plus(L, lam)
            assert set(a) <= set(b)
            assert all(rational_le(rs, m, lam) for m in b)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"])
def test_adjoint_lattice_collapse(name):
    rs = build_root_system(name)
    L = adjoint(rs)
    top = 3 if rs.rank <= 2 else (2 if rs.rank == 3 else 1)
    for lam in product(range(top + 1), repeat=rs.rank):
        if L.contains(lam):
            assert pi_g_plus(L, lam) == pi_plus(L, lam)


def test_orbit_sizes():
    a2, c2 = build_root_system("A2"), build_root_system("C2")
    assert weyl_orbit(a2, (0, 0)) == [(0, 0)]
    assert len(weyl_orbit(a2, (1, 0))) == 3
    assert len(weyl_orbit(c2, (0, 1))) == 4


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4", "F4"])
def test_orbit_size_matches_stabilizer_formula(name):
    rs = build_root_system(name)
    for lam in product(range(2), repeat=rs.rank):
        assert len(weyl_orbit(rs, lam)) == orbit_size(rs, lam)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3"])
def test_orbits_of_pi_plus_equal_character_support(name):
    rs = build_root_system(name)
    L = parse_group(f"{name}:sc")
    for lam in product(range(3 if rs.rank <= 2 else 2), repeat=rs.rank):
        table = weight_multiplicities(rs, lam)
        assert set(pi_lambda(L, lam)) == set(table.all_weights(rs))


def test_cone_examples():
    c2, a2 = build_root_system("C2"), build_root_system("A2")
    assert cone_lambda_contains(a2, (1, 0), (0, 0))
    # -1/2 alpha_2 in fundamental-weight coordinates
    v = tuple(Fraction(-1, 2) * x for x in c2.simple_root(1))
    assert cone_lambda_contains(c2, (0, 1), v)
    assert not cone_lambda_contains(a2, (1, 0), tuple(-x for x in a2.simple_root(1)))


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_cone_two_routes_agree(name):
    rs = build_root_system(name)
    rng = random.Random(4)
    for _ in range(60):
        lam = tuple(rng.randint(0, 2) for _ in range(rs.rank))
        if not any(lam):
            continue
        v = tuple(Fraction(rng.randint(-4, 2), rng.choice([1, 2, 3])) for _ in range(rs.rank))
        assert cone_lambda_contains(rs, lam, v, "roots") == cone_lambda_contains(rs, lam, v, "polytope")


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "G2"])
def test_cone_is_union_of_translated_polytopes(name):
    rs = build_root_system(name)
    rng = random.Random(9)
    found = 0
    while found < 12:
        lam = tuple(rng.randint(0, 2) for _ in range(rs.rank))
        if not any(lam):
            continue
        v = tuple(Fraction(rng.randint(-3, 1), rng.choice([1, 2])) for _ in range(rs.rank))
        if not cone_lambda_contains(rs, lam, v):
            continue
        found += 1
        assert any(in_weight_polytope(rs, tuple(n * x for x in lam), tuple(n * a + b for a, b in zip(lam, v)))
                   for n in range(1, 13))


def test_input_errors():
    L = parse_group("PGL(2)")
    with pytest.raises(NotInLatticeError):
        pi_g_plus(L, (1,))
    with pytest.raises(NotDominantError):
        pi_plus(parse_group("SL(3)"), (-1, 1))


def test_candidate_cap():
    with using_limits(Limits(max_candidates=5)):
        with pytest.raises(ResourceCapError):
            pi_g_plus(parse_group("SL(4)"), (4, 4, 4))
