"""Verdicts on weight sets: simplicity, normality, factoriality and smoothness."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .brothers import little_brothers, q_maximum, regularize, regularizing_shift
from .cartan import (CharacterLattice, RootSystem, Weight, all_sublattices, build_root_system,
                     connected_components, extremal_roots, interior, is_connected, normalize,
                     subdiagram_type, vsub)
from .errors import NotInLatticeError, NotSimpleError
from .jsonio import scalar_json, weight_json, weights_json


# ---------------------------------------------------------------------------
# properties of the weight set


@dataclass(frozen=True)
class PiClassification:
    is_simple: bool
    is_adjoint: bool
    is_faithful: bool
    is_almost_faithful: bool
    max_element: Weight | None

    def to_dict(self):
        return {
            "is_simple": self.is_simple,
            "is_adjoint": self.is_adjoint,
            "is_faithful": self.is_faithful,
            "is_almost_faithful": self.is_almost_faithful,
            "max_element": None if self.max_element is None else weight_json(self.max_element),
        }


def _check_members(L: CharacterLattice, weights) -> list:
    items = sorted(set(normalize(w) for w in weights))
    if not items:
        raise ValueError("the weight set is empty")
    for w in items:
        if len(w) != L.root_system.rank:
            raise ValueError(f"weight {w} has the wrong number of coordinates")
        if not L.contains(w) or any(x < 0 for x in w):
            raise NotInLatticeError(f"{w} is not a dominant character of the group")
    return items


def classify_pi(L: CharacterLattice, weights) -> PiClassification:
    rs = L.root_system
    items = _check_members(L, weights)
    lam = q_maximum(rs, items)
    base = items[0]
    diffs = [vsub(w, base) for w in items[1:]]
    adjoint = all(L.class_of(d) == L.class_of(rs.zero()) for d in diffs)
    generated = CharacterLattice(rs, diffs)
    faithful = generated.classes == L.classes
    support = rs.support(lam) if lam is not None else frozenset().union(*(rs.support(w) for w in items))
    almost = all(any(i in support for i in comp) for comp in rs.components)
    return PiClassification(lam is not None, adjoint, faithful, almost, lam)


def is_almost_faithful(rs: RootSystem, lam) -> bool:
    S = rs.support(lam)
    return all(any(i in S for i in comp) for comp in rs.components)


# ---------------------------------------------------------------------------
# colored cone


@dataclass(frozen=True)
class ColoredCone:
    support: frozenset
    generators: tuple  # coroot coordinates
    facets: tuple  # inner facet normals, fundamental-weight coordinates
    is_pointed: bool
    extremal_rays: tuple  # primitive elements of X(T)^vee
    extremal_generators: tuple  # indices into ``generators``
    is_simplicial: bool
    is_unimodular_basis: bool
    determinant: Fraction | None
    covolume: Fraction

    def to_dict(self):
        return {
            "support": sorted(i + 1 for i in self.support),
            "generators": weights_json(self.generators),
            "extremal_rays": weights_json(self.extremal_rays),
            "is_pointed": self.is_pointed,
            "is_simplicial": self.is_simplicial,
            "is_unimodular_basis": self.is_unimodular_basis,
            "determinant": None if self.determinant is None else scalar_json(self.determinant),
            "covolume": scalar_json(self.covolume),
        }


def cone_generators(rs: RootSystem, S) -> list:
    S = frozenset(S)
    gens = [rs.coroot(i) for i in range(rs.rank) if i not in S]
    gens += [normalize(-x for x in rs.coweight(i)) for i in range(rs.rank)]
    return gens


_CONES: dict = {}


def colored_cone(L: CharacterLattice, S) -> ColoredCone:
    key = (L, frozenset(S))
    hit = _CONES.get(key)
    if hit is None:
        hit = _CONES[key] = _colored_cone(L, frozenset(S))
    return hit


def _colored_cone(L: CharacterLattice, S: frozenset) -> ColoredCone:
    rs = L.root_system
    n = rs.rank
    gens = cone_generators(rs, S)
    facets = la.extreme_rays(gens, n)
    pointed = la.rank(facets) == n if facets else n == 0
    ext_idx, rays = [], []
    if pointed:
        for k, g in enumerate(gens):
            tight = [f for f in facets if la.dot(f, g) == 0]
            if tight and la.rank(tight) == n - 1 or (n == 1 and not tight):
                ext_idx.append(k)
                rays.append(L.primitive_in_dual(g))
    simplicial = pointed and len(rays) == n
    det = abs(la.det(rays)) if simplicial else None
    cov = L.dual_covolume
    unimodular = simplicial and det == cov
    return ColoredCone(S, tuple(gens), tuple(tuple(f) for f in facets), pointed, tuple(rays),
                       tuple(ext_idx), simplicial, unimodular, det, cov)


def verify_cone(cone: ColoredCone) -> bool:
    """Independent LP check that rays and generators span the same cone."""
    if not cone.is_pointed:
        return not cone.extremal_rays
    rays = [list(r) for r in cone.extremal_rays]
    gens = [list(g) for g in cone.generators]
    return (all(la.in_cone(rays, g) for g in gens)
            and all(la.in_cone(gens, r) for r in rays))


def dual_basis(rays) -> list:
    """Weights ``pi_j`` with ``<pi_j, ray_k> = delta_jk``."""
    P = la.inverse(la.transpose([list(r) for r in rays]))
    return [normalize(row) for row in P]


# ---------------------------------------------------------------------------
# combinatorial conditions


def branch_nodes(rs: RootSystem) -> list:
    return [a for a in range(rs.rank) if len(rs.neighbours(a)) >= 3]


def branch_condition(rs: RootSystem, S, reading: str = "contains") -> bool:
    """Condition on nodes adjacent to three others.

    ``reading="contains"``: S must contain each such node together with at
    least two of its neighbours.  ``reading="implies"``: whenever S contains
    two neighbours of such a node, it must contain the node as well.
    """
    S = frozenset(S)
    for b in branch_nodes(rs):
        hits = sum(1 for a in rs.neighbours(b) if a in S)
        if reading == "contains":
            if not (b in S and hits >= 2):
                return False
        elif hits >= 2 and b not in S:
            return False
    return True


def qfactorial_conditions(rs: RootSystem, S, reading: str = "contains") -> dict:
    """Diagram conditions predicting that the colored cone is simplicial."""
    S = frozenset(S)
    first = True
    witness = None
    for k, comp in enumerate(rs.components):
        part = S & set(comp)
        ext = extremal_roots(rs, comp)
        ok = bool(part) and is_connected(rs, part) and (len(part) != 1 or next(iter(part)) in ext)
        if not ok:
            first = False
            witness = witness or {"component": k + 1, "support": sorted(i + 1 for i in part)}
    second = branch_condition(rs, S, reading)
    return {"i": first, "ii": second, "holds": first and second, "witness": witness}


def predicted_rays(rs: RootSystem, S) -> list:
    """Ray generators expected when the diagram conditions hold."""
    S = frozenset(S)
    ext = extremal_roots(rs, range(rs.rank))
    out = [rs.coroot(i) for i in range(rs.rank) if i not in S]
    keep = interior(rs, S) | (ext - S)
    out += [normalize(-x for x in rs.coweight(i)) for i in sorted(keep)]
    return out


def same_rays(a, b) -> bool:
    return sorted(la.primitive(v) for v in a) == sorted(la.primitive(v) for v in b)


def adjoint_theorem(rs: RootSystem, S, reading: str = "contains") -> dict:
    """Smoothness conditions for a simple adjoint group."""
    S = frozenset(S)
    cond = {}
    # i: a long root in S forces the short simple root next to the long ones
    from .brothers import long_to_short_order
    order = long_to_short_order(rs, 0)
    if order is None:
        cond["i"] = True
    else:
        longest = max(rs.half_norms[i] for i in order)
        q = next(i for i in order if rs.half_norms[i] < longest)
        has_long = any(rs.half_norms[i] == longest for i in S)
        cond["i"] = (not has_long) or q in S
    ext = extremal_roots(rs, range(rs.rank))
    cond["ii"] = bool(S) and is_connected(rs, S) and (len(S) != 1 or next(iter(S)) in ext)
    cond["iii"] = branch_condition(rs, S, reading)
    comps = connected_components(rs, set(range(rs.rank)) - S)
    cond["iv"] = all(subdiagram_type(rs, c)[0] == "A" for c in comps)
    cond["holds"] = all(cond[k] for k in ("i", "ii", "iii", "iv"))
    return cond


def is_symplectic(L: CharacterLattice) -> int | None:
    """If the group is simply connected of symplectic type, the index of the long end root.

    Covers C_r in its own numbering together with A1 and B2 (isomorphic to Sp(2), Sp(4)).
    """
    rs = L.root_system
    if len(rs.spec.components) != 1 or not L.is_simply_connected:
        return None
    t, r = rs.spec.components[0]
    if t == "C" and r >= 2:
        return r - 1
    if (t, r) in (("A", 1), ("C", 1)):
        return 0
    if (t, r) == ("B", 2):
        return 0
    return None


def sp_theorem(L: CharacterLattice, S) -> dict:
    end = is_symplectic(L)
    S = frozenset(S)
    return {"connected": is_connected(rs := L.root_system, S) and bool(S),
            "contains_long_end": end in S,
            "holds": bool(S) and is_connected(rs, S) and end in S}


# ---------------------------------------------------------------------------
# Timashev-type criterion


@dataclass
class Verdict:
    question: str
    answer: bool | None
    route: str
    certificate: dict = field(default_factory=dict)

    def to_dict(self):
        return {"question": self.question, "answer": self.answer, "route": self.route,
                "certificate": self.certificate}


def _restriction_ok(rs, pi_j, pi_last, j, n_k, comp):
    v = tuple(Fraction(a) - Fraction(j, n_k + 1) * b for a, b in zip(pi_j, pi_last))
    c = rs.to_root(v)
    return all(c[i] == 0 for i in range(rs.rank) if i not in comp)


def timashev_check(L: CharacterLattice, S) -> Verdict:
    rs = L.root_system
    S = frozenset(S)
    report = {"support": sorted(i + 1 for i in S)}
    comps = connected_components(rs, set(range(rs.rank)) - S)
    types = [subdiagram_type(rs, c) for c in comps]
    cond_i = all(t[0] == "A" for t in types) and len(comps) <= len(S)
    report["i"] = {"holds": cond_i, "components": [[i + 1 for i in c] for c in comps],
                   "types": [f"{t}{r}" for t, r in types]}
    if not cond_i:
        return Verdict("smooth", False, "timashev", dict(report, failed="i"))
    cone = colored_cone(L, S)
    report["ii"] = {"holds": cone.is_unimodular_basis, "cone": cone.to_dict()}
    if not cone.is_unimodular_basis:
        return Verdict("smooth", False, "timashev", dict(report, failed="ii"))
    rays = list(cone.extremal_rays)
    dual = dual_basis(rays)
    outside = sorted(set(range(rs.rank)) - S)
    # index of the dual element that is 1 on alpha_i^vee, per simple root outside S
    owner = {}
    for i in outside:
        hits = [j for j, p in enumerate(dual) if p[i] != 0]
        if len(hits) != 1 or dual[hits[0]][i] != 1:
            report["iii"] = {"holds": False, "reason": f"no dual element pairs to 1 with alpha_{i + 1}"}
            return Verdict("smooth", False, "timashev", dict(report, failed="iii"))
        owner[i] = hits[0]
    spare = [j for j, p in enumerate(dual) if all(p[i] == 0 for i in outside)]
    ordered = sorted(range(len(comps)), key=lambda k: -len(comps[k]))

    def directions(comp):
        if len(comp) == 1:
            return [comp]
        ends = sorted(extremal_roots(rs, comp))
        from .cartan import diagram_path
        path = diagram_path(rs, ends[0], ends[1])
        return [path, tuple(reversed(path))]

    def search(pos, used, chosen):
        if pos == len(ordered):
            return chosen
        k = ordered[pos]
        for path in directions(comps[k]):
            for last in spare:
                if last in used:
                    continue
                n_k = len(path)
                if all(_restriction_ok(rs, dual[owner[a]], dual[last], j + 1, n_k, set(path))
                       for j, a in enumerate(path)):
                    res = search(pos + 1, used | {last}, chosen + [(k, path, last)])
                    if res is not None:
                        return res
        return None

    found = search(0, frozenset(), [])
    if found is None:
        report["iii"] = {"holds": False, "reason": "no admissible enumeration and partition"}
        return Verdict("smooth", False, "timashev", dict(report, failed="iii"))
    blocks = []
    for k, path, last in sorted(found):
        blocks.append({"component": [a + 1 for a in path],
                       "block": weights_json([dual[owner[a]] for a in path] + [dual[last]])})
    report["iii"] = {"holds": True, "blocks": blocks}
    report["basis"] = weights_json(rays)
    report["dual_basis"] = weights_json(dual)
    return Verdict("smooth", True, "timashev", report)


def theorem_prediction(L: CharacterLattice, S, reading: str = "contains") -> tuple:
    """Smoothness of the normalized orbit closure for a simple group, by the closed-form theorems."""
    if L.is_adjoint:
        cond = adjoint_theorem(L.root_system, S, reading)
        return cond["holds"], "adjoint-theorem", cond
    if is_symplectic(L) is not None:
        cond = sp_theorem(L, S)
        return cond["holds"], "sp-theorem", cond
    return False, "non-adjoint-theorem", {"holds": False, "reason": "simple, non-adjoint and not symplectic"}


# ---------------------------------------------------------------------------
# verdicts


def _simple_max(L, items):
    lam = q_maximum(L.root_system, items)
    if lam is None:
        raise NotSimpleError("the weight set has no unique rational-dominance maximum")
    return lam


def normality(L: CharacterLattice, weights) -> Verdict:
    items = _check_members(L, weights)
    lam = _simple_max(L, items)
    shift = regularizing_shift(L, lam)
    prime, lam2 = regularize(L, items)
    lbq = little_brothers(L, lam2)
    missing = sorted(set(lbq) - set(prime))
    cert = {
        "lambda": weight_json(lam),
        "shift": weight_json(shift),
        "regularized_lambda": weight_json(lam2),
        "little_brothers": weights_json(lbq),
        "missing": weights_json(missing),
        "missing_unshifted": weights_json(vsub(w, shift) for w in missing),
    }
    return Verdict("normal", not missing, "little-brothers", cert)


def factoriality(L: CharacterLattice, weights) -> list:
    items = _check_members(L, weights)
    lam = _simple_max(L, items)
    rs = L.root_system
    S = rs.support(lam)
    cone = colored_cone(L, S)
    cond = qfactorial_conditions(rs, S)
    cert = {"support": sorted(i + 1 for i in S), "cone": cone.to_dict(), "diagram_conditions": cond}
    return [Verdict("q_factorial", cone.is_simplicial, "colored-cone", cert),
            Verdict("locally_factorial", cone.is_unimodular_basis, "colored-cone", cert)]


def smoothness(L: CharacterLattice, weights) -> Verdict:
    items = _check_members(L, weights)
    _simple_max(L, items)
    rs = L.root_system
    prime, lam = regularize(L, items)
    shift = vsub(lam, q_maximum(rs, items))
    cert = {"regularized_lambda": weight_json(lam), "shift": weight_json(shift)}
    if not is_almost_faithful(rs, lam):
        cert["reason"] = "the support misses a simple factor"
        return Verdict("smooth", None, "not-applicable", cert)
    if not L.is_split():
        cert["reason"] = "the group is not a direct product of its simple factors"
        return Verdict("smooth", False, "product-reduction", cert)
    S = rs.support(lam)
    factors = []
    all_ok = True
    for k, comp in enumerate(rs.components):
        Lk = L.factor(k)
        Sk = frozenset(comp.index(i) for i in S if i in comp)
        pred, route, cond = theorem_prediction(Lk, Sk)
        check = timashev_check(Lk, Sk)
        factors.append({
            "factor": f"{Lk.root_system.spec}",
            "lattice_order": Lk.order,
            "support": sorted(i + 1 for i in Sk),
            "route": route,
            "conditions": cond,
            "answer": pred,
            "timashev": check.answer,
            "timashev_failed": check.certificate.get("failed"),
            "cross_check_agrees": pred == check.answer,
        })
        all_ok = all_ok and pred
    lbq = little_brothers(L, lam)
    missing = sorted(set(lbq) - set(prime))
    cert.update({"factors": factors, "little_brothers": weights_json(lbq),
                 "missing": weights_json(missing),
                 "missing_unshifted": weights_json(vsub(w, shift) for w in missing)})
    routes = sorted({f["route"] for f in factors})
    return Verdict("smooth", all_ok and not missing, "+".join(routes), cert)


def replay(verdict: Verdict, L: CharacterLattice, weights) -> bool:
    """Re-derive a verdict from its certificate and the inputs."""
    rs = L.root_system
    items = _check_members(L, weights)
    c = verdict.certificate
    if verdict.question == "normal":
        lam = _simple_max(L, items)
        from .jsonio import weight_from_json
        shift = weight_from_json(c["shift"])
        lam2 = tuple(a + b for a, b in zip(lam, shift))
        if weight_from_json(c["regularized_lambda"]) != lam2:
            return False
        prime = {tuple(a + b for a, b in zip(w, shift)) for w in items}
        lbq = [weight_from_json(w) for w in c["little_brothers"]]
        if any(not _is_brother(L, lam2, w) for w in lbq):
            return False
        missing = sorted(set(lbq) - prime)
        return weights_json(missing) == c["missing"] and verdict.answer == (not missing)
    if verdict.question in ("q_factorial", "locally_factorial"):
        cone = colored_cone(L, frozenset(i - 1 for i in c["support"]))
        if not verify_cone(cone):
            return False
        flag = cone.is_simplicial if verdict.question == "q_factorial" else cone.is_unimodular_basis
        return flag == verdict.answer
    if verdict.question == "smooth":
        if verdict.answer is None:
            from .jsonio import weight_from_json
            return not is_almost_faithful(rs, weight_from_json(c["regularized_lambda"]))
        if verdict.route == "product-reduction":
            return not L.is_split() and verdict.answer is False
        ok = all(f["answer"] and f["cross_check_agrees"] for f in c["factors"])
        return verdict.answer == (ok and not c["missing"]) and all(
            f["cross_check_agrees"] for f in c["factors"])
    return False


def _is_brother(L, lam, w) -> bool:
    return w in little_brothers(L, lam)


# ---------------------------------------------------------------------------
# sweeps


SWEEP_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C1", "C2", "C3", "C4", "C5",
               "D3", "D4", "D5", "F4", "G2", "A6", "A7", "C6"]


def sweep_types(max_rank: int) -> list:
    """Simple types up to ``max_rank`` plus the fixed extras A6, A7, C6."""
    out = []
    for t in SWEEP_TYPES:
        rank = int(t[1:])
        if rank <= max_rank or t in ("A6", "A7", "C6"):
            out.append(t)
    if max_rank >= 6:
        for t in ("B6", "D6", "E6"):
            out.append(t)
    return list(dict.fromkeys(out))


def theorem_sweep(types, reading: str = "contains") -> dict:
    """Compare the Timashev-type check with the closed-form theorems for every support."""
    from .cartan import subsets
    rows = []
    total = agree = 0
    for name in types:
        rs = build_root_system(name)
        for L in all_sublattices(rs):
            for S in subsets(rs.rank):
                got = timashev_check(L, S).answer
                pred, route, _ = theorem_prediction(L, S, reading)
                total += 1
                agree += got == pred
                if got != pred:
                    rows.append({"type": name, "lattice_order": L.order,
                                 "lattice": weights_json(g for g in L.class_weights() if any(g)),
                                 "support": sorted(i + 1 for i in S), "timashev": got,
                                 "theorem": pred, "route": route})
    return {"cases": total, "agree": agree, "disagreements": rows}
