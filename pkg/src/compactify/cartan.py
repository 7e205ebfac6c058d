"""Root systems, character lattices and Dynkin-diagram combinatorics.

Conventions
-----------
Simple roots are numbered as in Bourbaki. The Cartan matrix is stored with
``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` is the simple root
``alpha_i`` written in fundamental-weight coordinates.

Weights are tuples of exact rationals (``int`` or ``Fraction``) giving
``<mu, alpha_i^vee>``.  Cocharacters are tuples in *coroot* coordinates, so the
pairing of a weight ``m`` with a cocharacter ``d`` is simply ``sum(m_i d_i)``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import floor
from typing import Iterable, Sequence

from . import _linalg as la
from .errors import ParseError, SpecError

Weight = tuple

TYPE_LETTERS = "ABCDEFG"


def normalize(v: Iterable) -> Weight:
    """Canonical tuple form: integral entries become ``int``, others ``Fraction``."""
    out = []
    for x in v:
        x = Fraction(x)
        out.append(x.numerator if x.denominator == 1 else x)
    return tuple(out)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def is_integral(v) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


# ---------------------------------------------------------------------------
# Root system data


@dataclass(frozen=True)
class RootSystemSpec:
    """Ordered list of simple components, e.g. ``(("C", 3), ("A", 1))``."""

    components: tuple

    def __post_init__(self):
        comps = tuple((str(t).upper(), int(r)) for t, r in self.components)
        if not comps:
            raise SpecError("a root system needs at least one component")
        for t, r in comps:
            _check_rank(t, r)
        object.__setattr__(self, "components", comps)

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def __str__(self) -> str:
        return "x".join(f"{t}{r}" for t, r in self.components)


def _check_rank(t: str, r: int) -> None:
    minimum = {"A": 1, "B": 2, "C": 1, "D": 3}
    fixed = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
    if t in minimum:
        if r < minimum[t]:
            raise SpecError(f"type {t} needs rank >= {minimum[t]}, got {r}")
    elif t in fixed:
        if r not in fixed[t]:
            raise SpecError(f"type {t}{r} does not exist")
    else:
        raise SpecError(f"unknown Dynkin type {t!r}")


def _cartan_block(t: str, n: int):
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        # C[i][j] = <alpha_i, alpha_j^vee>
        C[i][j], C[j][i] = a, b

    if t in "ABC" or (t == "D" and n >= 3):
        chain = n if t in "ABC" else n - 1
        for i in range(chain - 1):
            link(i, i + 1)
    if t == "B":
        link(n - 2, n - 1, -2, -1)  # alpha_n short
    elif t == "C" and n >= 2:
        link(n - 2, n - 1, -1, -2)  # alpha_n long
    elif t == "D":
        link(n - 3, n - 1)
    elif t == "E":
        for a, b in [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]:
            link(a, b)
    elif t == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif t == "G":
        link(0, 1, -1, -3)  # alpha_1 short
    return C


class RootSystem:
    """Cartan data for a (possibly reducible) root system.

    Instances are immutable and hash by their spec, so they can key caches.
    """

    def __init__(self, spec: RootSystemSpec):
        self.spec = spec
        n = spec.rank
        C = [[0] * n for _ in range(n)]
        comps = []
        offset = 0
        for t, r in spec.components:
            block = _cartan_block(t, r)
            for i in range(r):
                for j in range(r):
                    C[offset + i][offset + j] = block[i][j]
            comps.append(tuple(range(offset, offset + r)))
            offset += r
        self.rank = n
        self.cartan = tuple(tuple(row) for row in C)
        self.components = tuple(comps)
        self.component_of = tuple(k for k, c in enumerate(comps) for _ in c)
        inv = la.inverse(C)
        self.cartan_inv = tuple(tuple(row) for row in inv)
        self.cartan_det = int(la.det(C))
        self._to_root = tuple(tuple(inv[i][j] for i in range(n)) for j in range(n))
        self.half_norms = self._symmetrizer()
        self.positive_roots = self._positive_roots()
        self.positive_roots_fw = tuple(self.from_root(b) for b in self.positive_roots)
        self.root_is_long = tuple(self._is_long(b) for b in self.positive_roots)

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"RootSystem({self.spec})"

    # -- construction helpers ----------------------------------------------
    def _symmetrizer(self):
        """d_i = (alpha_i, alpha_i)/2, scaled so the shortest root of each component has d = 1."""
        d = [None] * self.rank
        for comp in self.components:
            d[comp[0]] = Fraction(1)
            queue = deque([comp[0]])
            while queue:
                i = queue.popleft()
                for j in comp:
                    if d[j] is None and self.cartan[i][j] != 0:
                        # d_j C[i][j] = d_i C[j][i]
                        d[j] = d[i] * self.cartan[j][i] / self.cartan[i][j]
                        queue.append(j)
            m = min(d[i] for i in comp)
            for i in comp:
                d[i] = d[i] / m
        return tuple(int(x) for x in d)

    def _positive_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    p = 0
                    cur = list(beta)
                    while True:
                        cur[i] -= 1
                        if tuple(cur) in roots:
                            p += 1
                        else:
                            break
                    q = p - self.coroot_pairing_root(beta, i)
                    if q > 0:
                        new = list(beta)
                        new[i] += 1
                        new = tuple(new)
                        if new not in roots:
                            roots.add(new)
                            nxt.append(new)
            layer = nxt
        return tuple(sorted(roots, key=lambda b: (sum(b), tuple(-x for x in b))))

    def _is_long(self, beta) -> bool:
        comp = self.components[self.component_of[next(i for i, x in enumerate(beta) if x)]]
        norm = self.root_norm(beta)
        longest = max(self.root_norm(tuple(int(i == j) for j in range(self.rank))) for i in comp)
        return norm == longest

    # -- coordinates --------------------------------------------------------
    def to_root(self, m) -> Weight:
        """Root-basis coordinates of a weight given in fundamental-weight coordinates."""
        return normalize(la.dot(row, m) for row in self._to_root)

    def from_root(self, c) -> Weight:
        n = self.rank
        return normalize(sum(c[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def coroot_pairing_root(self, beta, i):
        """<beta, alpha_i^vee> for beta in root coordinates."""
        return sum(beta[j] * self.cartan[j][i] for j in range(self.rank))

    def simple_root(self, i) -> Weight:
        return self.cartan[i]

    def fundamental_weight(self, i) -> Weight:
        return tuple(int(i == j) for j in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def coweight(self, i) -> Weight:
        """Fundamental coweight in coroot coordinates."""
        return normalize(self.cartan_inv[j][i] for j in range(self.rank))

    def coroot(self, i) -> Weight:
        return tuple(int(i == j) for j in range(self.rank))

    def height(self, m):
        return sum(self.to_root(m))

    def inner(self, m1, m2):
        """Invariant form (mu, nu) with short roots of norm 2."""
        c2 = self.to_root(m2)
        return sum(Fraction(a) * d * b for a, d, b in zip(m1, self.half_norms, c2))

    def root_norm(self, beta):
        """(beta, beta) for beta in root coordinates."""
        n = self.rank
        return sum(beta[i] * beta[j] * self.half_norms[j] * self.cartan[i][j]
                   for i in range(n) for j in range(n))

    def coroot_pairing(self, m, beta):
        """<mu, beta^vee> for mu in fw coordinates and beta a root in root coordinates."""
        return 2 * self.inner(m, self.from_root(beta)) / self.root_norm(beta)

    # -- predicates and support ----------------------------------------------
    def is_dominant(self, m) -> bool:
        return all(x >= 0 for x in m)

    def support(self, m) -> frozenset:
        return frozenset(i for i, x in enumerate(m) if x != 0)

    @staticmethod
    def root_support(c) -> frozenset:
        return frozenset(i for i, x in enumerate(c) if x != 0)

    def reflect(self, m, i) -> Weight:
        k = m[i]
        if k == 0:
            return tuple(m)
        return tuple(a - k * b for a, b in zip(m, self.cartan[i]))

    def adjacent(self, i, j) -> bool:
        return i != j and self.cartan[i][j] != 0

    def neighbours(self, i, within=None):
        nodes = range(self.rank) if within is None else within
        return [j for j in nodes if self.adjacent(i, j)]

    def r_alpha(self, i) -> int:
        """Rank of the simple component containing alpha_i."""
        return len(self.components[self.component_of[i]])

    def component_type(self, k):
        return self.spec.components[k]

    def is_simply_laced(self) -> bool:
        return all(self.cartan[i][j] * self.cartan[j][i] <= 1
                   for i in range(self.rank) for j in range(self.rank) if i != j)

    @cached_property
    def weyl_order(self) -> int:
        from math import factorial
        total = 1
        for t, r in self.spec.components:
            if t == "A":
                total *= factorial(r + 1)
            elif t in "BC":
                total *= 2 ** r * factorial(r)
            elif t == "D":
                total *= 2 ** (r - 1) * factorial(r)
            else:
                total *= {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                          ("F", 4): 1152, ("G", 2): 12}[(t, r)]
        return total


def build_root_system(spec) -> RootSystem:
    """Build Cartan data from a spec, a string like ``"C3"``/``"A2xA1"``, or component pairs."""
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, str):
        spec = parse_type(spec)
    elif not isinstance(spec, RootSystemSpec):
        spec = RootSystemSpec(tuple(spec))
    return _build_cached(spec)


_ROOT_SYSTEMS: dict = {}


def _build_cached(spec: RootSystemSpec) -> RootSystem:
    rs = _ROOT_SYSTEMS.get(spec)
    if rs is None:
        rs = _ROOT_SYSTEMS[spec] = RootSystem(spec)
    return rs


def highest_short_root(rs: RootSystem, component: int) -> Weight:
    """Dominant short root of one simple component, in simple-root coordinates.

    For simply-laced components every root is short and this is the highest root.
    """
    comp = set(rs.components[component])
    best = None
    for beta, long_ in zip(rs.positive_roots, rs.root_is_long):
        if not RootSystem.root_support(beta) <= comp:
            continue
        is_short = not long_ or _component_simply_laced(rs, component)
        if is_short and (best is None or sum(beta) > sum(best)):
            best = beta
    return best


def _component_simply_laced(rs: RootSystem, k: int) -> bool:
    return rs.spec.components[k][0] in "ADE" or rs.spec.components[k] == ("C", 1)


# ---------------------------------------------------------------------------
# Character lattices


def _class_key(rs: RootSystem, m) -> tuple:
    """Canonical representative of m modulo the root lattice (fractional root coordinates)."""
    return tuple(x - floor(x) for x in map(Fraction, rs.to_root(m)))


class CharacterLattice:
    """A lattice X(T) with root lattice <= X(T) <= weight lattice.

    ``quotient_gens`` are integral weights whose classes generate X(T) modulo
    the root lattice.
    """

    def __init__(self, root_system: RootSystem, quotient_gens: Sequence = (), name: str | None = None):
        self.root_system = rs = root_system
        gens = []
        for g in quotient_gens:
            g = normalize(g)
            if len(g) != rs.rank:
                raise SpecError(f"generator {g} has wrong length for rank {rs.rank}")
            if not is_integral(g):
                raise SpecError(f"generator {g} is not in the weight lattice")
            gens.append(g)
        self.quotient_gens = tuple(gens)
        self.name = name
        self.classes = self._close([_class_key(rs, g) for g in gens])

    def _close(self, keys):
        zero = tuple(Fraction(0) for _ in range(self.root_system.rank))
        seen = {zero}
        frontier = [zero]
        keys = [k for k in keys if k != zero]
        while frontier:
            nxt = []
            for a in frontier:
                for k in keys:
                    s = tuple((x + y) - floor(x + y) for x, y in zip(a, k))
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return frozenset(seen)

    def __eq__(self, other):
        return (isinstance(other, CharacterLattice) and other.root_system == self.root_system
                and other.classes == self.classes)

    def __hash__(self):
        return hash((self.root_system, self.classes))

    def __repr__(self):
        label = self.name or f"gens={list(self.quotient_gens)}"
        return f"CharacterLattice({self.root_system.spec}, {label})"

    @property
    def order(self) -> int:
        """|X(T) / root lattice|."""
        return len(self.classes)

    @property
    def is_adjoint(self) -> bool:
        return self.order == 1

    @property
    def is_simply_connected(self) -> bool:
        return self.order == self.root_system.cartan_det

    def class_of(self, m) -> tuple:
        return _class_key(self.root_system, m)

    def contains(self, m) -> bool:
        return is_integral(m) and self.class_of(m) in self.classes

    def class_weights(self):
        """One integral weight per class of X(T)/root lattice."""
        rs = self.root_system
        return sorted(rs.from_root(k) for k in self.classes)

    def dual_contains(self, d) -> bool:
        """Is the cocharacter ``d`` (coroot coordinates) in X(T)^vee?"""
        rs = self.root_system
        if not is_integral(la.dot(row, d) for row in rs.cartan):
            return False
        return all(Fraction(la.dot(g, d)).denominator == 1 for g in self.quotient_gens)

    @property
    def dual_covolume(self) -> Fraction:
        """Covolume of X(T)^vee in coroot coordinates."""
        return Fraction(self.order, self.root_system.cartan_det)

    def primitive_in_dual(self, v) -> Weight:
        """Shortest positive multiple of ``v`` lying in X(T)^vee."""
        base = la.primitive(v)  # in the coroot lattice
        rs = self.root_system
        g = 0
        from math import gcd
        for row in rs.cartan:
            g = gcd(g, int(la.dot(row, base)))
        for k in sorted((k for k in range(1, abs(g) + 1) if g % k == 0), reverse=True):
            cand = normalize(Fraction(x, k) for x in base)
            if self.dual_contains(cand):
                return cand
        return normalize(base)

    # -- product structure --------------------------------------------------
    def project(self, key, k):
        comp = set(self.root_system.components[k])
        return tuple(x if i in comp else Fraction(0) for i, x in enumerate(key))

    def is_split(self) -> bool:
        """True when X(T) is the direct sum of its intersections with the simple factors."""
        rs = self.root_system
        return all(self.project(c, k) in self.classes
                   for c in self.classes for k in range(len(rs.components)))

    def factor(self, k) -> "CharacterLattice":
        """The lattice X(T) intersected with the k-th factor, as a lattice of that factor."""
        rs = self.root_system
        comp = rs.components[k]
        sub = build_root_system(RootSystemSpec((rs.spec.components[k],)))
        gens = []
        for c in self.classes:
            p = self.project(c, k)
            if p in self.classes and any(p):
                w = rs.from_root(p)
                gens.append(tuple(w[i] for i in comp))
        return CharacterLattice(sub, gens)


def all_sublattices(rs: RootSystem):
    """Every lattice between the root and weight lattices, sorted by order."""
    full = simply_connected(rs)
    elements = [rs.from_root(k) for k in sorted(full.classes)]
    found = {CharacterLattice(rs, ())}
    frontier = list(found)
    while frontier:
        nxt = []
        for L in frontier:
            for g in elements:
                if L.contains(g):
                    continue
                M = CharacterLattice(rs, L.quotient_gens + (g,))
                if M not in found:
                    found.add(M)
                    nxt.append(M)
        frontier = nxt
    return sorted(found, key=lambda L: (L.order, sorted(L.classes)))


# -- presets ----------------------------------------------------------------


def simply_connected(rs: RootSystem) -> CharacterLattice:
    return CharacterLattice(rs, [rs.fundamental_weight(i) for i in range(rs.rank)], name="sc")


def adjoint(rs: RootSystem) -> CharacterLattice:
    return CharacterLattice(rs, (), name="ad")


_PRESETS = {
    # name -> (allowed types, generator builder or keyword)
    "sl": ("A", "sc"), "pgl": ("A", "ad"),
    "sp": ("C", "sc"), "psp": ("C", "ad"),
    "spin": ("BD", "sc"), "so": ("BD", "so"), "pso": ("D", "ad"),
    "halfspin": ("D", "halfspin"),
}


def preset_lattice(rs: RootSystem, name: str) -> CharacterLattice:
    key = name.lower()
    if key == "sc":
        return simply_connected(rs)
    if key == "ad":
        return adjoint(rs)
    if key not in _PRESETS:
        raise SpecError(f"unknown lattice preset {name!r}")
    if len(rs.spec.components) != 1:
        raise SpecError(f"preset {name!r} needs a simple root system")
    t, r = rs.spec.components[0]
    allowed, kind = _PRESETS[key]
    if t not in allowed:
        raise SpecError(f"preset {name!r} does not apply to type {t}{r}")
    if kind == "sc":
        L = simply_connected(rs)
    elif kind == "ad":
        L = adjoint(rs)
    elif kind == "so":
        L = adjoint(rs) if t == "B" else CharacterLattice(rs, [rs.fundamental_weight(0)])
    else:
        if r % 2:
            raise SpecError("half-spin groups exist only for D_r with r even")
        L = CharacterLattice(rs, [rs.fundamental_weight(r - 1)])
    L.name = key
    return L


# ---------------------------------------------------------------------------
# Parsing

_TYPE_RE = re.compile(r"([A-Ga-g])(\d+)")
_GROUP_RE = re.compile(r"^(SL|PGL|Sp|PSp|Spin|SO|PSO|HalfSpin)\(?(\d+)\)?$", re.IGNORECASE)


def parse_type(text: str) -> RootSystemSpec:
    comps = []
    pos = 0
    for part in text.split("x"):
        m = _TYPE_RE.fullmatch(part.strip())
        if not m:
            raise ParseError(f"bad Dynkin component {part!r}", text, pos)
        try:
            _check_rank(m.group(1).upper(), int(m.group(2)))
        except SpecError as exc:
            raise ParseError(str(exc), text, pos) from None
        comps.append((m.group(1).upper(), int(m.group(2))))
        pos += len(part) + 1
    return RootSystemSpec(tuple(comps))


def parse_rational(token: str, text: str = "", position: int = 0) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {token!r}", text or token, position) from None


def parse_weight(text: str, rank: int | None = None, offset: int = 0, source: str | None = None) -> Weight:
    """Parse ``"1,0,-1/2"`` into a weight tuple."""
    source = source if source is not None else text
    if not text.strip():
        raise ParseError("empty weight", source, offset)
    coords = []
    pos = offset
    for tok in text.split(","):
        coords.append(parse_rational(tok, source, pos))
        pos += len(tok) + 1
    if rank is not None and len(coords) != rank:
        raise ParseError(f"weight has {len(coords)} coordinates, expected {rank}", source, offset)
    return normalize(coords)


def parse_weights(text: str, rank: int | None = None) -> list:
    """Parse ``"1,0;0,1"`` into a list of weights."""
    out = []
    pos = 0
    for part in text.split(";"):
        out.append(parse_weight(part, rank, pos, text))
        pos += len(part) + 1
    return out


def parse_group(text: str) -> CharacterLattice:
    """Parse a group spec such as ``C3:sc``, ``A2xA1:gens(1,0,0;0,0,1)`` or ``Sp(6)``."""
    s = text.strip()
    m = _GROUP_RE.match(s)
    if m:
        return _named_group(m.group(1).lower(), int(m.group(2)), s)
    if ":" not in s:
        raise ParseError("expected <TYPE><rank>[x...]:<lattice>", text, len(s))
    head, lattice = s.split(":", 1)
    rs = build_root_system(parse_type(head))
    lpos = len(head) + 1
    lattice = lattice.strip()
    if lattice.startswith("gens(") and lattice.endswith(")"):
        body = lattice[5:-1]
        gens = parse_weights(body, rs.rank) if body.strip() else []
        try:
            return CharacterLattice(rs, gens, name=None)
        except SpecError as exc:
            raise ParseError(str(exc), text, lpos) from None
    try:
        return preset_lattice(rs, lattice)
    except SpecError as exc:
        raise ParseError(str(exc), text, lpos) from None


def _named_group(name: str, n: int, text: str) -> CharacterLattice:
    def build(t, r, preset):
        try:
            return preset_lattice(build_root_system(RootSystemSpec(((t, r),))), preset)
        except SpecError as exc:
            raise ParseError(str(exc), text, 0) from None

    if name in ("sl", "pgl"):
        if n < 2:
            raise ParseError("SL(n)/PGL(n) need n >= 2", text, 0)
        return build("A", n - 1, name)
    if name in ("sp", "psp"):
        if n < 2 or n % 2:
            raise ParseError("Sp(n) needs even n >= 2", text, 0)
        return build("C", n // 2, name)
    if name in ("spin", "so"):
        if n < 5:
            raise ParseError(f"{name}(n) needs n >= 5", text, 0)
        return build("B", n // 2, name) if n % 2 else build("D", n // 2, name)
    if name == "pso":
        if n < 6 or n % 2:
            raise ParseError("PSO(n) needs even n >= 6", text, 0)
        return build("D", n // 2, "ad")
    if n < 8 or n % 4:
        raise ParseError("HalfSpin(n) needs n divisible by 4 and n >= 8", text, 0)
    return build("D", n // 2, "halfspin")


def format_group(L: CharacterLattice) -> str:
    rs = L.root_system
    if L.is_simply_connected:
        return f"{rs.spec}:sc"
    if L.is_adjoint:
        return f"{rs.spec}:ad"
    gens = ";".join(",".join(str(x) for x in g) for g in L.class_weights() if any(g))
    return f"{rs.spec}:gens({gens})"


# ---------------------------------------------------------------------------
# Dynkin diagram combinatorics


def border(rs: RootSystem, I) -> frozenset:
    I = frozenset(I)
    return frozenset(a for a in range(rs.rank) if a not in I and any(rs.adjacent(b, a) for b in I))


def interior(rs: RootSystem, I) -> frozenset:
    I = frozenset(I)
    return I - border(rs, frozenset(range(rs.rank)) - I)


def connected_components(rs: RootSystem, I) -> list:
    """Connected components of the subdiagram on I, each a sorted tuple."""
    I = set(I)
    out = []
    while I:
        start = min(I)
        comp = {start}
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in rs.neighbours(a, I):
                if b not in comp:
                    comp.add(b)
                    queue.append(b)
        I -= comp
        out.append(tuple(sorted(comp)))
    return sorted(out)


def is_connected(rs: RootSystem, I) -> bool:
    return len(connected_components(rs, I)) <= 1


def extremal_roots(rs: RootSystem, I) -> frozenset:
    """Elements of I connected to at most one other element of I."""
    I = frozenset(I)
    return frozenset(a for a in I if len(rs.neighbours(a, I)) <= 1)


def subdiagram_type(rs: RootSystem, nodes) -> tuple:
    """Dynkin type of a connected subdiagram, as ``(letter, rank)``."""
    nodes = tuple(sorted(nodes))
    n = len(nodes)
    if n == 1:
        return ("A", 1)
    bonds = {(a, b): rs.cartan[a][b] * rs.cartan[b][a] for a in nodes for b in nodes if a < b}
    if any(v == 3 for v in bonds.values()):
        return ("G", 2)
    degrees = {a: len(rs.neighbours(a, nodes)) for a in nodes}
    if max(degrees.values()) >= 3:
        centre = next(a for a in nodes if degrees[a] >= 3)
        arms = []
        for start in rs.neighbours(centre, nodes):
            length, prev, cur = 1, centre, start
            while True:
                nxt = [b for b in rs.neighbours(cur, nodes) if b != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return ("D", n)
        return ("E", n)
    if any(v == 2 for v in bonds.values()):
        if n == 2:
            return ("B", 2)
        d = [rs.half_norms[a] for a in nodes]
        n_long = sum(1 for x in d if x == max(d))
        if n_long == n - 1:
            return ("B", n)
        if n_long == 1:
            return ("C", n)
        return ("F", 4)
    return ("A", n)


def is_type_a(rs: RootSystem, nodes) -> bool:
    return subdiagram_type(rs, nodes)[0] == "A"


def _bfs_parents(rs, start, nodes):
    parents = {start: None}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in rs.neighbours(a, nodes):
            if b not in parents:
                parents[b] = a
                queue.append(b)
    return parents


def diagram_path(rs: RootSystem, a: int, b: int) -> tuple:
    """The minimal connected subset containing a and b, ordered from a to b."""
    if rs.component_of[a] != rs.component_of[b]:
        raise SpecError(f"alpha_{a + 1} and alpha_{b + 1} lie in different components")
    parents = _bfs_parents(rs, a, rs.components[rs.component_of[a]])
    path = [b]
    while path[-1] != a:
        path.append(parents[path[-1]])
    return tuple(reversed(path))


def distance(rs: RootSystem, a: int, b: int) -> int:
    return len(diagram_path(rs, a, b)) - 1


@dataclass(frozen=True)
class ComponentInfo:
    nodes: tuple
    type: str
    rank: int
    extremal: tuple  # nodes extremal in the component itself
    extremal_in_diagram: tuple  # nodes that are extremal roots of the whole diagram


@dataclass(frozen=True)
class DiagramAnalysis:
    members: frozenset
    interior: frozenset
    border: frozenset
    components: tuple
    distances: dict = field(default_factory=dict, compare=False)


def diagram_analyze(rs: RootSystem, I) -> DiagramAnalysis:
    I = frozenset(I)
    if not I <= set(range(rs.rank)):
        raise SpecError("subset contains indices outside the diagram")
    ext_all = extremal_roots(rs, range(rs.rank))
    comps = []
    dists = {}
    for comp in connected_components(rs, I):
        t, r = subdiagram_type(rs, comp)
        ext = tuple(sorted(extremal_roots(rs, comp)))
        comps.append(ComponentInfo(comp, t, r, ext, tuple(a for a in comp if a in ext_all)))
        for a in comp:
            parents = _bfs_parents(rs, a, comp)
            for b in comp:
                k, cur = 0, b
                while cur != a:
                    cur = parents[cur]
                    k += 1
                dists[(a, b)] = k
    return DiagramAnalysis(I, interior(rs, I), border(rs, I), tuple(comps), dists)


def subsets(n: int, nonempty: bool = True):
    for bits in product((0, 1), repeat=n):
        s = frozenset(i for i, b in enumerate(bits) if b)
        if s or not nonempty:
            yield s
