"""Weyl-group actions and enumeration of dominant weights below a given weight."""
from __future__ import annotations

from collections import deque
from fractions import Fraction

from . import _linalg as la
from .cartan import CharacterLattice, RootSystem, Weight, normalize, vadd, vsub
from .errors import NotDominantError, NotInLatticeError, ResourceCapError
from .limits import current_limits
from .orders import _phi_plus_support


def dominant_conjugate(rs: RootSystem, mu) -> tuple:
    """Return ``(dominant, word)`` with ``apply_word(rs, word, dominant) == mu``.

    The word lists simple reflections in the order they were applied to ``mu``.
    """
    m = normalize(mu)
    word = []
    while True:
        i = next((k for k, x in enumerate(m) if x < 0), None)
        if i is None:
            return m, word
        m = rs.reflect(m, i)
        word.append(i)


def apply_word(rs: RootSystem, word, mu) -> Weight:
    """Apply ``s_{w[0]} s_{w[1]} ... s_{w[-1]}`` to ``mu``."""
    m = normalize(mu)
    for i in reversed(word):
        m = rs.reflect(m, i)
    return m


def weyl_orbit(rs: RootSystem, lam) -> list:
    start = normalize(lam)
    seen = {start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for i in range(rs.rank):
            if m[i] != 0:
                n = rs.reflect(m, i)
                if n not in seen:
                    seen.add(n)
                    queue.append(n)
    return sorted(seen)


def _require(L: CharacterLattice, lam):
    lam = normalize(lam)
    if any(x < 0 for x in lam):
        raise NotDominantError(f"{lam} is not dominant")
    if not L.contains(lam):
        raise NotInLatticeError(f"{lam} is not in the character lattice")
    return lam


def pi_g_plus(rs_or_L, lam, L: CharacterLattice | None = None, limits=None) -> list:
    """Dominant weights of X(T) below ``lam`` in the rational dominance order.

    Scans fundamental-weight coordinates one at a time. The inverse Cartan
    matrix has nonnegative entries, so partial root coordinates only grow and
    any prefix exceeding the root coordinates of ``lam`` can be cut.
    """
    L = rs_or_L if isinstance(rs_or_L, CharacterLattice) else L
    rs = L.root_system
    lam = _require(L, lam)
    limits = limits or current_limits()
    det = rs.cartan_det
    n = rs.rank
    # columns of det * C^{-T}: contribution of omega_i to the scaled root coordinates
    cols = [[int(rs.cartan_inv[i][j] * det) for j in range(n)] for i in range(n)]
    bound = [int(Fraction(x) * det) for x in rs.to_root(lam)]
    found = []
    budget = [limits.max_candidates]

    def go(i, partial, prefix):
        if i == n:
            budget[0] -= 1
            if budget[0] < 0:
                raise ResourceCapError(
                    f"weight enumeration exceeded {limits.max_candidates} candidates")
            m = tuple(prefix)
            if L.contains(m):
                found.append(m)
            return
        col = cols[i]
        k = 0
        cur = list(partial)
        while all(c <= b for c, b in zip(cur, bound)):
            prefix.append(k)
            go(i + 1, cur, prefix)
            prefix.pop()
            k += 1
            cur = [c + d for c, d in zip(cur, col)]
            if not any(col):
                break

    go(0, [0] * n, [])
    return sorted(found)


def pi_plus(rs_or_L, lam, L: CharacterLattice | None = None, limits=None) -> list:
    """Dominant weights ``mu`` with ``lam - mu`` a nonnegative integer root combination.

    Walks down from ``lam`` by positive roots while staying dominant; every
    dominant weight below ``lam`` is reachable this way.
    """
    L = rs_or_L if isinstance(rs_or_L, CharacterLattice) else L
    rs = L.root_system
    lam = _require(L, lam)
    limits = limits or current_limits()
    roots = rs.positive_roots_fw
    seen = {lam}
    queue = deque([lam])
    while queue:
        m = queue.popleft()
        for b in roots:
            nxt = vsub(m, b)
            if all(x >= 0 for x in nxt) and nxt not in seen:
                seen.add(nxt)
                if len(seen) > limits.max_candidates:
                    raise ResourceCapError(
                        f"weight enumeration exceeded {limits.max_candidates} candidates")
                queue.append(nxt)
    return sorted(seen)


def pi_lambda(L: CharacterLattice, lam) -> list:
    """All weights of X(T) in the Weyl orbits of Pi+(lam)."""
    rs = L.root_system
    out = set()
    for m in pi_plus(L, lam):
        out.update(weyl_orbit(rs, m))
    return sorted(out)


def in_weight_polytope(rs: RootSystem, lam, mu) -> bool:
    """Is ``mu`` in the convex hull of the Weyl orbit of the dominant weight ``lam``?"""
    dom, _ = dominant_conjugate(rs, mu)
    return all(x >= 0 for x in rs.to_root(vsub(lam, dom)))


def cone_lambda_contains(rs: RootSystem, lam, v, method: str = "roots") -> bool:
    """Is the difference ``v`` (fundamental-weight coordinates) in the cone C(lam)?

    ``method="roots"`` tests ``-v`` against the rational span of Phi+(lam);
    ``method="polytope"`` tests ``v`` against the cone spanned by ``W lam - lam``.
    """
    lam = normalize(lam)
    if any(x < 0 for x in lam):
        raise NotDominantError(f"{lam} is not dominant")
    if not any(v):
        return True
    if method == "roots":
        c = [-x for x in rs.to_root(v)]
        if any(x < 0 for x in c):
            return False
        roots = _phi_plus_support(rs, rs.support(lam))
        return la.in_cone([list(b) for b in roots], c)
    if method == "polytope":
        gens = [list(rs.to_root(vsub(w, lam))) for w in weyl_orbit(rs, lam) if w != lam]
        return la.in_cone(gens, list(rs.to_root(v)))
    raise ValueError(f"unknown method {method!r}")


def translate(weights, shift) -> list:
    return sorted(vadd(w, shift) for w in weights)
