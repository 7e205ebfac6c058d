"""Representation-theoretic brute force for small ranks.

Weight multiplicities come from Freudenthal's recursion and are checked
against the Weyl dimension formula on every call. Tensor products are
decomposed with the Brauer-Klimyk rule; a slower character-product peel-off
is available as an independent check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .brothers import q_maximum, regularize
from .cartan import (CharacterLattice, RootSystem, RootSystemSpec, Weight, build_root_system,
                     connected_components, normalize, subdiagram_type, vadd, vsub)
from .errors import NotSimpleError, ResourceCapError
from .limits import current_limits
from .orders import compare, lambda_rational
from .weights import dominant_conjugate, weyl_orbit


# ---------------------------------------------------------------------------
# dimensions and multiplicities


def weyl_dimension(rs: RootSystem, lam) -> int:
    lr = vadd(lam, rs.rho)
    num = Fraction(1)
    for beta in rs.positive_roots_fw:
        num *= rs.inner(lr, beta) / rs.inner(rs.rho, beta)
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def _stabilizer_order(rs: RootSystem, zero_set: frozenset) -> int:
    total = 1
    for comp in connected_components(rs, zero_set):
        t, r = subdiagram_type(rs, comp)
        total *= build_root_system(RootSystemSpec(((t, r),))).weyl_order
    return total


def orbit_size(rs: RootSystem, mu) -> int:
    """Size of the Weyl orbit of a dominant weight."""
    zeros = frozenset(i for i, x in enumerate(mu) if x == 0)
    return rs.weyl_order // _stabilizer_order(rs, zeros)


@dataclass(frozen=True)
class CharacterTable:
    highest_weight: Weight
    dominant_multiplicities: dict = field(hash=False)
    dimension: int = 0

    def all_weights(self, rs: RootSystem) -> dict:
        """Every weight of the module with its multiplicity."""
        out = {}
        for mu, m in self.dominant_multiplicities.items():
            for w in weyl_orbit(rs, mu):
                out[w] = m
        return out


def _dominant_below(rs: RootSystem, lam) -> list:
    seen = {lam}
    stack = [lam]
    while stack:
        m = stack.pop()
        for b in rs.positive_roots_fw:
            n = vsub(m, b)
            if all(x >= 0 for x in n) and n not in seen:
                seen.add(n)
                stack.append(n)
    return sorted(seen, key=lambda m: (-rs.height(m), m))


_TABLES: dict = {}


def weight_multiplicities(rs: RootSystem, lam, limits=None) -> CharacterTable:
    lam = normalize(lam)
    limits = limits or current_limits()
    if any(x < 0 for x in lam) or any(Fraction(x).denominator != 1 for x in lam):
        raise ValueError(f"{lam} is not a dominant integral weight")
    if rs.rank > limits.max_oracle_rank:
        raise ResourceCapError(f"oracle limited to rank {limits.max_oracle_rank}")
    # caps apply to cached tables too, so results do not depend on call history
    key = (rs, lam)
    hit = _TABLES.get(key)
    if hit is not None:
        if hit.dimension > limits.max_dim:
            raise ResourceCapError(f"dim V{lam} = {hit.dimension} exceeds the cap {limits.max_dim}")
        return hit
    dim = weyl_dimension(rs, lam)
    if dim > limits.max_dim:
        raise ResourceCapError(f"dim V{lam} = {dim} exceeds the cap {limits.max_dim}")
    rho = rs.rho
    lr = vadd(lam, rho)
    top = rs.inner(lr, lr)
    mult = {lam: 1}
    conj_cache = {}

    def mult_of(m):
        d = conj_cache.get(m)
        if d is None:
            d = conj_cache[m] = dominant_conjugate(rs, m)[0]
        return mult.get(d, 0)

    for mu in _dominant_below(rs, lam)[1:]:
        acc = Fraction(0)
        for beta in rs.positive_roots_fw:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, beta))
                m = mult_of(nu)
                if m == 0:
                    break
                acc += m * rs.inner(nu, beta)
                k += 1
        mr = vadd(mu, rho)
        value = 2 * acc / (top - rs.inner(mr, mr))
        assert value.denominator == 1
        if value:
            mult[mu] = int(value)
    total = sum(m * orbit_size(rs, mu) for mu, m in mult.items())
    if total != dim:
        raise AssertionError(f"multiplicities of V{lam} sum to {total}, expected {dim}")
    table = CharacterTable(lam, mult, dim)
    _TABLES[key] = table
    return table


# ---------------------------------------------------------------------------
# tensor products


@dataclass(frozen=True)
class TensorDecomposition:
    factors: tuple
    components: dict = field(hash=False)

    def multiplicity(self, nu) -> int:
        return self.components.get(normalize(nu), 0)


def _klimyk(rs: RootSystem, components: dict, mu, limits) -> dict:
    """Tensor every module in ``components`` (weight -> multiplicity) with V(mu)."""
    table = weight_multiplicities(rs, mu, limits)
    weights = table.all_weights(rs)
    work = len(weights) * len(components)
    if work > limits.max_dim:
        raise ResourceCapError(f"tensor step needs {work} Klimyk terms, cap is {limits.max_dim}")
    rho = rs.rho
    out: Counter = Counter()
    for lam, c in components.items():
        base = vadd(lam, rho)
        for nu, m in weights.items():
            dom, word = dominant_conjugate(rs, vadd(base, nu))
            if any(x == 0 for x in dom):
                continue
            sign = -1 if len(word) % 2 else 1
            out[vsub(dom, rho)] += sign * m * c
    return {k: v for k, v in out.items() if v}


def tensor_decompose(rs: RootSystem, lam, mu, limits=None) -> TensorDecomposition:
    limits = limits or current_limits()
    lam, mu = normalize(lam), normalize(mu)
    small, big = (mu, lam) if weyl_dimension(rs, mu) <= weyl_dimension(rs, lam) else (lam, mu)
    weight_multiplicities(rs, big, limits)
    comps = _klimyk(rs, {big: 1}, small, limits)
    if any(v < 0 for v in comps.values()):
        raise AssertionError("negative multiplicity in tensor decomposition")
    lhs = sum(v * weyl_dimension(rs, k) for k, v in comps.items())
    if lhs != weyl_dimension(rs, lam) * weyl_dimension(rs, mu):
        raise AssertionError("dimension identity fails for tensor decomposition")
    return TensorDecomposition((lam, mu), dict(sorted(comps.items())))


def character_product_decompose(rs: RootSystem, lam, mu, limits=None) -> dict:
    """Decompose V(lam) x V(mu) by multiplying full characters and peeling off highest weights."""
    limits = limits or current_limits()
    a = weight_multiplicities(rs, normalize(lam), limits).all_weights(rs)
    b = weight_multiplicities(rs, normalize(mu), limits).all_weights(rs)
    prod: Counter = Counter()
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            prod[vadd(w1, w2)] += m1 * m2
    out = {}
    while True:
        live = [w for w, m in prod.items() if m and all(x >= 0 for x in w)]
        if not live:
            break
        top = max(live, key=lambda w: (rs.height(w), w))
        c = prod[top]
        if c < 0:
            raise AssertionError("character product is not a genuine character")
        out[top] = c
        for w, m in weight_multiplicities(rs, top, limits).all_weights(rs).items():
            prod[w] -= c * m
    if any(prod.values()):
        raise AssertionError("character product left a remainder")
    return dict(sorted(out.items()))


def contains_in_tensor(rs: RootSystem, nu, factors, limits=None) -> bool:
    """Does V(nu) occur in V(f_1) x ... x V(f_k)?"""
    limits = limits or current_limits()
    nu = normalize(nu)
    factors = sorted((normalize(f) for f in factors), key=lambda f: -weyl_dimension(rs, f))
    if not factors:
        return not any(nu)
    comps = {factors[0]: 1}
    rest = list(factors[1:])
    while True:
        remaining = tuple(sum(col) for col in zip(*rest)) if rest else rs.zero()
        comps = {k: v for k, v in comps.items()
                 if _dominance_le(rs, nu, vadd(k, remaining))}
        if not rest or not comps:
            break
        comps = _klimyk(rs, comps, rest.pop(0), limits)
    return comps.get(nu, 0) > 0


def _dominance_le(rs, a, b) -> bool:
    c = rs.to_root(vsub(b, a))
    return all(Fraction(x).denominator == 1 and x >= 0 for x in c)


# ---------------------------------------------------------------------------
# the semigroup of a weight set


@dataclass
class OmegaResult:
    status: str  # witnessed | refuted | unresolved | cap
    n: int | None = None
    factors: list | None = None
    reason: str | None = None

    def to_dict(self):
        from .jsonio import weights_json
        return {"status": self.status, "n": self.n,
                "factors": None if self.factors is None else weights_json(self.factors),
                "reason": self.reason}


def omega_membership(L: CharacterLattice, weights, target, max_n: int, limits=None) -> OmegaResult:
    """Search ``n <= max_n`` and factors in ``weights`` with V(target + n lam) in their product."""
    rs = L.root_system
    limits = limits or current_limits()
    items = sorted(set(normalize(w) for w in weights))
    lam = q_maximum(rs, items)
    if lam is None:
        raise NotSimpleError("the weight set has no unique rational-dominance maximum")
    target = normalize(target)
    base = vadd(target, lam)
    # factors allowed by the necessary lambda-rational bound
    usable = [m for m in items if compare(rs, base, m, lambda_rational(lam))]
    if not usable:
        return OmegaResult("refuted", reason="no weight of the set dominates target + lambda")
    sub = CharacterLattice(rs, [vsub(m, lam) for m in usable])
    if not any(sub.class_of(target) == c for c in sub.classes) or not all(
            Fraction(x).denominator == 1 for x in target):
        return OmegaResult("refuted", reason="target is outside the group generated by usable differences")
    try:
        for n in range(1, max_n + 1):
            nu = tuple(t + n * l for t, l in zip(target, lam))
            if any(x < 0 for x in nu):
                continue
            cls = L.class_of(nu)
            for combo in combinations_with_replacement(usable, n):
                total = tuple(sum(col) for col in zip(*combo))
                if L.class_of(total) != cls or not _dominance_le(rs, nu, total):
                    continue
                if contains_in_tensor(rs, nu, combo, limits):
                    return OmegaResult("witnessed", n=n, factors=list(combo))
    except ResourceCapError as exc:
        return OmegaResult("cap", reason=str(exc))
    return OmegaResult("unresolved", reason=f"no witness with n <= {max_n}")


def verify_normality_bruteforce(L: CharacterLattice, weights, max_n: int, limits=None) -> dict:
    """Test every nu in Pi_G^+(lam) for nu - lam in the semigroup, after regularizing."""
    from .classify import classify_pi, normality
    from .jsonio import weight_json
    from .weights import pi_g_plus
    prime, lam = regularize(L, weights)
    info = classify_pi(L, prime)
    verdict = normality(L, weights)
    per = []
    for nu in pi_g_plus(L, lam):
        res = omega_membership(L, prime, vsub(nu, lam), max_n, limits)
        per.append({"nu": weight_json(nu), **res.to_dict()})
    statuses = {p["status"] for p in per}
    concluded = statuses <= {"witnessed", "refuted"}
    brute = None if not concluded else statuses == {"witnessed"}
    if not concluded and "refuted" in statuses:
        brute = False  # one refutation already settles non-normality
        concluded = True
    agrees = None if not concluded else brute == verdict.answer
    return {
        "regularized_lambda": weight_json(lam),
        "faithful": info.is_faithful,
        "verdict": verdict.answer,
        "bruteforce": brute,
        "concluded": concluded,
        "agrees": agrees,
        "per_weight": per,
    }
