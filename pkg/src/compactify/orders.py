"""Dominance orders on weights and maximal-element extraction.

Four orders are supported, all comparing ``nu <= mu`` through the difference
``mu - nu`` written in simple-root coordinates:

* ``DOMINANCE``: nonnegative integer combination of simple roots.
* ``RATIONAL``: nonnegative rational combination of simple roots.
* ``lambda_dominance(lam)``: nonnegative integer combination of the positive
  roots whose support meets ``Supp(lam)``.
* ``lambda_rational(lam)``: nonnegative rational combination of those roots.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import _linalg as la
from .cartan import RootSystem, Weight, is_integral, normalize, vsub
from .errors import NotDominantError, SpecError


@dataclass(frozen=True)
class Order:
    kind: str  # "dominance" | "rational" | "lambda" | "lambda_rational"
    lam: Weight | None = None

    def __post_init__(self):
        if self.kind not in ("dominance", "rational", "lambda", "lambda_rational"):
            raise SpecError(f"unknown order kind {self.kind!r}")
        if self.kind.startswith("lambda"):
            if self.lam is None:
                raise SpecError("lambda orders need a dominant weight")
            object.__setattr__(self, "lam", normalize(self.lam))

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self.lam) if x != 0)


DOMINANCE = Order("dominance")
RATIONAL = Order("rational")


def lambda_dominance(lam) -> Order:
    return Order("lambda", lam)


def lambda_rational(lam) -> Order:
    return Order("lambda_rational", lam)


def _check_dominant(lam):
    if any(x < 0 for x in lam):
        raise NotDominantError(f"{tuple(lam)} is not dominant")


def phi_plus_lambda(rs: RootSystem, lam) -> list:
    """Positive roots (simple-root coordinates) whose support meets Supp(lam)."""
    _check_dominant(lam)
    return list(_phi_plus_support(rs, rs.support(lam)))


@lru_cache(maxsize=None)
def _phi_plus_support(rs: RootSystem, support: frozenset) -> tuple:
    return tuple(b for b in rs.positive_roots if any(b[i] for i in support))


# ---------------------------------------------------------------------------
# cone(Phi+(lam)) as an intersection of half-spaces


@dataclass(frozen=True)
class _LambdaCone:
    span: tuple  # coordinates of the components meeting the support
    outside: tuple  # remaining coordinates, which must vanish
    facets: tuple  # integer normals y, restricted to ``span``

    def contains(self, c) -> bool:
        if any(c[i] != 0 for i in self.outside):
            return False
        return all(sum(y * c[i] for y, i in zip(f, self.span)) >= 0 for f in self.facets)


@lru_cache(maxsize=None)
def lambda_cone(rs: RootSystem, support: frozenset) -> _LambdaCone:
    roots = _phi_plus_support(rs, support)
    span = tuple(i for comp in rs.components if any(j in support for j in comp) for i in comp)
    outside = tuple(i for i in range(rs.rank) if i not in span)
    if not span:
        return _LambdaCone(span, outside, ())
    rows = [[b[i] for i in span] for b in roots]
    facets = la.extreme_rays(rows, len(span))
    return _LambdaCone(span, outside, tuple(facets))


# ---------------------------------------------------------------------------
# integer span search


def _nat_span_search(roots: tuple, residual: tuple) -> bool:
    """Is ``residual`` a nonnegative integer combination of ``roots``?

    Roots are expected in decreasing height. Depth-first over coefficients,
    largest first, memoized on (position, residual).
    """
    n = len(residual)
    suffix_support = [frozenset()] * (len(roots) + 1)
    for k in range(len(roots) - 1, -1, -1):
        suffix_support[k] = suffix_support[k + 1] | {i for i in range(n) if roots[k][i]}
    memo: dict = {}

    def go(k, res):
        if not any(res):
            return True
        if k == len(roots):
            return False
        key = (k, res)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if any(x and i not in suffix_support[k] for i, x in enumerate(res)):
            memo[key] = False
            return False
        beta = roots[k]
        top = min(res[i] // beta[i] for i in range(n) if beta[i])
        ok = False
        for c in range(top, -1, -1):
            if go(k + 1, tuple(r - c * b for r, b in zip(res, beta))):
                ok = True
                break
        memo[key] = ok
        return ok

    return go(0, residual)


@lru_cache(maxsize=None)
def _roots_by_height(rs: RootSystem, support: frozenset) -> tuple:
    roots = _phi_plus_support(rs, support)
    return tuple(sorted(roots, key=lambda b: (-sum(b), b)))


def in_nat_span(rs: RootSystem, support: frozenset, c) -> bool:
    """Membership of root-coordinate vector ``c`` in N[Phi+(lam)] for Supp(lam) = support."""
    if not is_integral(c) or any(x < 0 for x in c):
        return False
    c = tuple(int(x) for x in c)
    if not any(c):
        return True
    if not lambda_cone(rs, support).contains(c):
        return False
    return _cached_nat_span(rs, support, c)


@lru_cache(maxsize=200_000)
def _cached_nat_span(rs, support, c):
    return _nat_span_search(_roots_by_height(rs, support), c)


# ---------------------------------------------------------------------------
# comparison


def compare(rs: RootSystem, nu, mu, order: Order) -> bool:
    """Return whether ``nu <= mu`` in the given order."""
    c = rs.to_root(vsub(mu, nu))
    kind = order.kind
    if kind == "dominance":
        return is_integral(c) and all(x >= 0 for x in c)
    if kind == "rational":
        return all(x >= 0 for x in c)
    _check_dominant(order.lam)
    support = order.support
    if kind == "lambda":
        return in_nat_span(rs, support, c)
    # exact simplex; independent of the cached facet description
    if any(x < 0 for x in c):
        return False
    roots = _phi_plus_support(rs, support)
    return la.in_cone([list(b) for b in roots], c)


def lambda_rational_by_facets(rs: RootSystem, lam, c) -> bool:
    """Membership of root-coordinate vector ``c`` in Q+[Phi+(lam)] via cached facets."""
    return lambda_cone(rs, rs.support(lam)).contains(tuple(Fraction(x) for x in c))


def _scaled_root_matrix(rs: RootSystem, weights: list) -> np.ndarray:
    det = rs.cartan_det
    rows = []
    for w in weights:
        c = rs.to_root(w)
        rows.append([int(Fraction(x) * det) for x in c])
    return np.array(rows, dtype=np.int64).reshape(len(weights), rs.rank)


def maximal_elements(rs: RootSystem, weights: Iterable, order: Order) -> list:
    """Elements of ``weights`` not strictly below another element, sorted."""
    items = sorted(set(normalize(w) for w in weights))
    if len(items) <= 1:
        return items
    if any(not is_integral(w) for w in items):
        # rational inputs: fall back to exact pairwise comparison
        return [m for m in items
                if not any(n != m and compare(rs, m, n, order) for n in items)]
    det = rs.cartan_det
    M = _scaled_root_matrix(rs, items)
    kind = order.kind
    if kind.startswith("lambda"):
        _check_dominant(order.lam)
        cone = lambda_cone(rs, order.support)
        F = np.zeros((len(cone.facets), rs.rank), dtype=np.int64)
        for k, f in enumerate(cone.facets):
            for y, i in zip(f, cone.span):
                F[k, i] = y
        outside = list(cone.outside)
    result = []
    for a in range(len(items)):
        D = M - M[a]  # rows: nu - mu for candidates nu above mu
        D[a] = -1  # exclude self
        if kind in ("dominance", "rational"):
            ok = (D >= 0).all(axis=1)
            if kind == "dominance":
                ok &= (D % det == 0).all(axis=1)
        else:
            ok = (D @ F.T >= 0).all(axis=1) if len(F) else np.ones(len(items), dtype=bool)
            if outside:
                ok &= (D[:, outside] == 0).all(axis=1)
            ok &= (D >= 0).all(axis=1)
            if kind == "lambda":
                ok &= (D % det == 0).all(axis=1)
        ok[a] = False
        dominated = False
        for b in np.nonzero(ok)[0]:
            if kind != "lambda":
                dominated = True
                break
            c = tuple(int(x) // det for x in D[b])
            if _cached_nat_span(rs, order.support, c):
                dominated = True
                break
        if not dominated:
            result.append(items[a])
    return result
