"""Little brothers of a dominant weight and the regularizing translation."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cartan import CharacterLattice, RootSystem, Weight, extremal_roots, interior, normalize, vadd, vsub
from .errors import NotDominantError, NotSimpleError
from .orders import RATIONAL, lambda_dominance, lambda_rational, maximal_elements
from .weights import _require, pi_g_plus, pi_plus


def long_to_short_order(rs: RootSystem, k: int) -> tuple | None:
    """Simple roots of a non-simply-laced component, walked from its extremal long root.

    Returns ``None`` for simply-laced components.
    """
    comp = rs.components[k]
    d = [rs.half_norms[i] for i in comp]
    if min(d) == max(d):
        return None
    longest = max(d)
    ends = [i for i in extremal_roots(rs, comp) if rs.half_norms[i] == longest]
    start = min(ends)
    order = [start]
    prev = None
    while True:
        nxt = [j for j in rs.neighbours(order[-1], comp) if j != prev]
        if not nxt:
            return tuple(order)
        prev = order[-1]
        order.append(nxt[0])


def adjoint_little_brother_of_component(rs: RootSystem, lam, k: int):
    """The adjoint little brother attached to component ``k``, or ``None``."""
    order = long_to_short_order(rs, k)
    if order is None:
        return None
    longest = max(rs.half_norms[i] for i in order)
    pos_q = next(t for t, i in enumerate(order) if rs.half_norms[i] < longest)
    if lam[order[pos_q]] != 0:
        return None
    long_in_support = [t for t in range(pos_q) if lam[order[t]] != 0]
    if not long_in_support:
        return None
    pos_p = long_in_support[-1]
    mu = tuple(lam)
    for t in range(pos_p, pos_q + 1):
        mu = vsub(mu, rs.simple_root(order[t]))
    return normalize(mu)


def adjoint_little_brothers(rs: RootSystem, lam) -> list:
    lam = normalize(lam)
    if any(x < 0 for x in lam):
        raise NotDominantError(f"{lam} is not dominant")
    out = []
    for k in range(len(rs.components)):
        mu = adjoint_little_brother_of_component(rs, lam, k)
        if mu is not None:
            out.append(mu)
    return sorted(set(out))


def q_maximal_set(L: CharacterLattice, lam) -> list:
    rs = L.root_system
    lam = _require(L, lam)
    top = maximal_elements(rs, pi_g_plus(L, lam), lambda_dominance(lam))
    return sorted(set(top) | set(adjoint_little_brothers(rs, lam)))


def little_brothers(L: CharacterLattice, lam) -> list:
    rs = L.root_system
    lam = _require(L, lam)
    candidates = (set(pi_g_plus(L, lam)) - set(pi_plus(L, lam))) | set(adjoint_little_brothers(rs, lam))
    return maximal_elements(rs, candidates, lambda_rational(lam))


def h_sets(L: CharacterLattice, lam) -> tuple:
    """Difference sets ``{mu - lam}`` over the q-maximal set and over the little brothers."""
    lam = normalize(lam)
    hm = sorted(vsub(m, lam) for m in q_maximal_set(L, lam))
    h = sorted(vsub(m, lam) for m in little_brothers(L, lam))
    return hm, h


def border_of_support(rs: RootSystem, lam) -> frozenset:
    """Simple roots of Supp(lam) adjacent to the complement of the support."""
    S = rs.support(lam)
    return S - interior(rs, S)


def lambda_bar(rs: RootSystem, lam) -> Weight:
    """Weight with coefficient 1 on the interior of the support and r_alpha on its border."""
    S = rs.support(lam)
    inner = interior(rs, S)
    out = [0] * rs.rank
    for a in S:
        out[a] = 1 if a in inner else rs.r_alpha(a)
    return tuple(out)


def is_regularized(rs: RootSystem, lam) -> bool:
    return all(lam[a] >= rs.r_alpha(a) for a in border_of_support(rs, lam))


def regularizing_shift(L: CharacterLattice, lam) -> Weight:
    """Smallest dominant shift supported on the support border that lands in X(T).

    Each border coefficient is raised to at least r_alpha. When the plain shift
    is not a character, coefficients are increased further; the candidate with
    the smallest total (then lexicographically smallest) is chosen.
    """
    rs = L.root_system
    lam = normalize(lam)
    edge = sorted(border_of_support(rs, lam))
    base = [max(0, rs.r_alpha(a) - lam[a]) for a in edge]
    best = None
    for extra in product(range(rs.cartan_det), repeat=len(edge)):
        shift = [0] * rs.rank
        for a, b, e in zip(edge, base, extra):
            shift[a] = b + e
        shift = tuple(shift)
        if L.contains(shift):
            key = (sum(shift), shift)
            if best is None or key < best[0]:
                best = (key, shift)
    return best[1]


def q_maximum(rs: RootSystem, weights) -> Weight | None:
    """The unique maximal element for rational dominance, or ``None``."""
    top = maximal_elements(rs, weights, RATIONAL)
    return top[0] if len(top) == 1 else None


def regularize(L: CharacterLattice, weights) -> tuple:
    """Translate a simple set of weights so that its maximum is regularized.

    Returns ``(translated_weights, new_maximum)``.
    """
    rs = L.root_system
    items = sorted(set(normalize(w) for w in weights))
    lam = q_maximum(rs, items)
    if lam is None:
        raise NotSimpleError("the weight set has no unique rational-dominance maximum")
    shift = regularizing_shift(L, lam)
    return sorted(vadd(w, shift) for w in items), vadd(lam, shift)


@dataclass(frozen=True)
class LittleBrotherReport:
    lam: Weight
    lb_adjoint: list
    q_maximal: list
    lb_q: list
    h_m: list
    h: list
    regularized_lambda: Weight

    def to_dict(self, rs: RootSystem) -> dict:
        from .jsonio import weight_json, weights_json
        return {
            "lambda": weight_json(self.lam),
            "lb_adjoint": weights_json(self.lb_adjoint),
            "q_maximal": weights_json(self.q_maximal),
            "lb_q": weights_json(self.lb_q),
            "h_m": weights_json(self.h_m),
            "h": weights_json(self.h),
            "h_m_root": weights_json(rs.to_root(v) for v in self.h_m),
            "h_root": weights_json(rs.to_root(v) for v in self.h),
            "regularized_lambda": weight_json(self.regularized_lambda),
        }


def little_brother_report(L: CharacterLattice, lam) -> LittleBrotherReport:
    rs = L.root_system
    lam = _require(L, lam)
    hm, h = h_sets(L, lam)
    return LittleBrotherReport(
        lam=lam,
        lb_adjoint=adjoint_little_brothers(rs, lam),
        q_maximal=q_maximal_set(L, lam),
        lb_q=little_brothers(L, lam),
        h_m=hm,
        h=h,
        regularized_lambda=vadd(lam, regularizing_shift(L, lam)),
    )
