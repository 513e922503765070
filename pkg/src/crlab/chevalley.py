"""Group words in Steinberg generators of simply-laced Chevalley groups in
characteristic 2, extended by graph automorphisms.

Atoms are root elements e_zeta(c) with polynomial coefficients, Weyl
representatives n_xi, torus values chi(u) with a formal unit parameter u, and
diagram automorphisms.  In characteristic 2 every structure constant is 1 and
n_xi is its own inverse, so a word normalizes to a frame (torus part plus a
root map realized in the extended Weyl group) followed by a unipotent tail;
the tail is normal-ordered by commutator collection over a closed nilpotent
root set, using [e_zeta(x), e_xi(y)] = e_{zeta+xi}(xy) when zeta+xi is a root.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .coeffring import Polynomial, VariableRegistry
from .rootsys import Cocharacter, Root, RootMap, RootSystem, pairing


# ---------------------------------------------------------------------------
# Atoms


class RootElement:
    __slots__ = ("root", "coeff")

    def __init__(self, root: Root, coeff: Polynomial):
        self.root = root
        self.coeff = coeff

    def inverse(self):
        return self  # characteristic 2

    def __eq__(self, other):
        return isinstance(other, RootElement) and self.root == other.root and self.coeff == other.coeff

    def __hash__(self):
        return hash(("e", self.root, self.coeff))

    def __repr__(self):
        return f"e{self.root.label}({self.coeff})"


class WeylRep:
    """n_xi = e_xi(1) e_{-xi}(1) e_xi(1); self-inverse in characteristic 2."""

    __slots__ = ("root", "_map")

    def __init__(self, root: Root):
        self.root = root
        self._map = None

    @property
    def map(self) -> RootMap:
        if self._map is None:
            self._map = self.root.system.reflection(self.root)
        return self._map

    def inverse(self):
        return self

    def __eq__(self, other):
        return isinstance(other, WeylRep) and self.root == other.root

    def __hash__(self):
        return hash(("n", self.root))

    def __repr__(self):
        return f"n[{self.root}]"


class GraphAut:
    __slots__ = ("system", "name", "map")

    def __init__(self, system: RootSystem, name: str):
        self.system = system
        self.name = name
        self.map = system.diagram_symmetries()[name]

    def inverse(self):
        inv = self.map.inverse()
        for name, m in self.system.diagram_symmetries().items():
            if m == inv:
                return GraphAut(self.system, name)
        raise AssertionError("diagram symmetries are closed under inversion")

    def __eq__(self, other):
        return isinstance(other, GraphAut) and self.map == other.map

    def __hash__(self):
        return hash(("g", self.map))

    def __repr__(self):
        return self.name


class TorusValue:
    """chi(u) for a cocharacter chi and a formal unit variable u."""

    __slots__ = ("cochar", "unit")

    def __init__(self, cochar: Cocharacter, unit: str):
        self.cochar = cochar
        self.unit = unit

    def inverse(self):
        return TorusValue(-self.cochar, self.unit)

    def __eq__(self, other):
        return isinstance(other, TorusValue) and self.cochar == other.cochar and self.unit == other.unit

    def __hash__(self):
        return hash(("t", self.cochar, self.unit))

    def __repr__(self):
        return f"t[{self.cochar}]({self.unit})"


FRAME_KINDS = (WeylRep, GraphAut, TorusValue)
Atom = object


class GroupWord:
    __slots__ = ("system", "registry", "atoms", "tail_collected")

    def __init__(self, system: RootSystem, registry: VariableRegistry, atoms: Iterable[Atom],
                 tail_collected: bool = True):
        self.system = system
        self.registry = registry
        self.atoms = tuple(atoms)
        self.tail_collected = tail_collected

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if self.system is not other.system or self.registry is not other.registry:
            raise ValueError("words from different systems or registries")
        return GroupWord(self.system, self.registry, self.atoms + other.atoms)

    def inverse(self) -> "GroupWord":
        return GroupWord(self.system, self.registry, [a.inverse() for a in reversed(self.atoms)])

    def __repr__(self):
        return "*".join(repr(a) for a in self.atoms) if self.atoms else "1"


def word(system: RootSystem, registry: VariableRegistry, *atoms) -> GroupWord:
    return GroupWord(system, registry, atoms)


# ---------------------------------------------------------------------------
# Closed nilpotent sets, grading, collection


def closure(system: RootSystem, roots: Iterable[Root]) -> Optional[set]:
    """Closure under root addition; None when a +-pair appears (not nilpotent)."""
    S = set(roots)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(S), 2):
            c = a + b
            if c is not None and c not in S:
                S.add(c)
                changed = True
    if any(-r in S for r in S):
        return None
    return S


def validate_closed_nilpotent(system: RootSystem, roots: Sequence[Root]):
    S = set(roots)
    if any(-r in S for r in S):
        raise ValueError("root set contains a root and its negative")
    for a, b in itertools.combinations(roots, 2):
        c = a + b
        if c is not None and c not in S:
            raise ValueError(f"root set not closed: {a} + {b} = {c} missing")


def grading(system: RootSystem, roots: Sequence[Root]) -> Dict[Root, int]:
    """f with f(a+b) > max(f(a), f(b)) for sums inside the set."""
    f = {r: 1 for r in roots}
    S = set(roots)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(roots, 2):
            c = a + b
            if c in S:
                v = max(f[a], f[b]) + 1
                if f[c] < v:
                    f[c] = v
                    changed = True
    return f


def default_order(system: RootSystem, roots: Iterable[Root]) -> tuple:
    """Collection order: ascending grading, then height, then label order."""
    rs = list(roots)
    f = grading(system, rs)
    return tuple(sorted(rs, key=lambda r: (f[r], r.height, r.index)))


_COLLECT_FUEL = 2_000_000


def collect(x, order: Sequence[Root], registry: Optional[VariableRegistry] = None) -> "RadicalElement":
    """Normal-order a product of root elements over a closed nilpotent set.

    `x` is a GroupWord of RootElements or an iterable of RootElements; `order`
    fixes the target sequence of roots and must list a closed nilpotent set.
    """
    if isinstance(x, GroupWord):
        registry = x.registry
        atoms = list(x.atoms)
    else:
        atoms = list(x)
    if registry is None:
        if not atoms:
            raise ValueError("cannot infer a registry from an empty word")
        registry = atoms[0].coeff.registry
    order = tuple(order)
    system = order[0].system if order else None
    validate_closed_nilpotent(system, order)
    pos = {r: i for i, r in enumerate(order)}
    seq: List[List] = []
    for a in atoms:
        if not isinstance(a, RootElement):
            raise ValueError(f"collect expects root elements, got {a!r}")
        if a.root not in pos:
            raise ValueError(f"root {a.root} outside the collection set")
        if not a.coeff.is_zero:
            seq.append([a.root, a.coeff])

    fuel = _COLLECT_FUEL
    i = 0
    while i < len(seq) - 1:
        if fuel <= 0:
            raise RuntimeError("collection did not terminate within fuel budget")
        fuel -= 1
        (ra, ca), (rb, cb) = seq[i], seq[i + 1]
        if ra == rb:
            merged = ca + cb
            if merged.is_zero:
                del seq[i:i + 2]
            else:
                seq[i:i + 2] = [[ra, merged]]
            i = max(i - 1, 0)
        elif pos[ra] > pos[rb]:
            c = ra + rb
            repl = [[rb, cb], [ra, ca]]
            if c is not None:
                prod = ca * cb
                if not prod.is_zero:
                    repl.append([c, prod])
            seq[i:i + 2] = repl
            i = max(i - 1, 0)
        else:
            i += 1

    coeffs = {r: c for r, c in seq}
    return RadicalElement(system, registry, order, coeffs)


class RadicalElement:
    """Normal-ordered product of root elements over a closed nilpotent set."""

    __slots__ = ("system", "registry", "order", "coeffs")

    def __init__(self, system, registry, order: Sequence[Root], coeffs: Mapping[Root, Polynomial]):
        self.system = system
        self.registry = registry
        self.order = tuple(order)
        self.coeffs = {r: c for r, c in coeffs.items() if not c.is_zero}

    @classmethod
    def zero(cls, system, registry, order):
        return cls(system, registry, order, {})

    def coefficient(self, root) -> Polynomial:
        if isinstance(root, int):
            root = self.system.root_by_label(root)
        return self.coeffs.get(root, self.registry.zero())

    def atoms(self) -> tuple:
        return tuple(RootElement(r, self.coeffs[r]) for r in self.order if r in self.coeffs)

    def as_word(self) -> GroupWord:
        return GroupWord(self.system, self.registry, self.atoms())

    @property
    def support(self) -> tuple:
        return tuple(r for r in self.order if r in self.coeffs)

    @property
    def is_trivial(self) -> bool:
        return not self.coeffs

    def reordered(self, new_order: Sequence[Root]) -> "RadicalElement":
        return collect(self.atoms(), new_order, self.registry)

    def __eq__(self, other):
        if not isinstance(other, RadicalElement):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        S = closure(self.system, set(self.order) | set(other.order))
        if S is None:
            # ambient sets are incompatible; a common unipotent group must
            # still hold both supports for the elements to be comparable
            S = closure(self.system, set(self.support) | set(other.support))
            if S is None:
                return False
        common = default_order(self.system, S)
        return self.reordered(common).coeffs == other.reordered(common).coeffs

    def __hash__(self):
        raise TypeError("RadicalElement is unhashable; compare with ==")

    def __repr__(self):
        if self.is_trivial:
            return "1"
        return "*".join(f"e{r.label}({self.coeffs[r]})" for r in self.order if r in self.coeffs)


def generic_radical_element(system, registry, order: Sequence[Root], prefix: str = "x") -> RadicalElement:
    """Product of e_zeta(x_zeta) with fresh symbolic coordinates, in order."""
    coeffs = {}
    for r in order:
        name = f"{prefix}{r.label}" if r.label > 0 else f"{prefix}m{-r.label}"
        coeffs[r] = registry.add(name)
    return RadicalElement(system, registry, order, coeffs)


# ---------------------------------------------------------------------------
# Frame handling and word normal form


def _atom_conjugate_inverse(atom, e: RootElement) -> RootElement:
    """f^-1 e f for a frame atom f and root element e."""
    if isinstance(atom, WeylRep):
        return RootElement(atom.map.inverse()(e.root), e.coeff)
    if isinstance(atom, GraphAut):
        return RootElement(atom.map.inverse()(e.root), e.coeff)
    if isinstance(atom, TorusValue):
        p = pairing(e.root, atom.cochar)
        u = e.coeff.registry.var(atom.unit)
        return RootElement(e.root, (u ** (-p)) * e.coeff)
    raise ValueError(f"not a frame atom: {atom!r}")


class Normalized:
    __slots__ = ("frame_atoms", "frame_map", "torus", "tail_atoms", "tail", "collected")

    def __init__(self, frame_atoms, frame_map, torus, tail_atoms, tail, collected):
        self.frame_atoms = frame_atoms
        self.frame_map = frame_map
        self.torus = torus
        self.tail_atoms = tail_atoms
        self.tail = tail
        self.collected = collected


def normalize(w: GroupWord) -> Normalized:
    """Push every root element right of every frame atom; collect the tail
    when its support closure is nilpotent."""
    system, registry = w.system, w.registry
    frames: List = []
    tail: List[RootElement] = []
    for atom in w.atoms:
        if isinstance(atom, RootElement):
            if not atom.coeff.is_zero:
                tail.append(atom)
        elif isinstance(atom, FRAME_KINDS):
            frames.append(atom)
            tail = [_atom_conjugate_inverse(atom, e) for e in tail]
        else:
            raise ValueError(f"unknown atom {atom!r}")

    frame_map = system.identity_map()
    torus: Dict[str, list] = {}
    for atom in frames:
        if isinstance(atom, TorusValue):
            moved = frame_map.act_cochar(atom.cochar)
            acc = torus.setdefault(atom.unit, [0] * system.rank)
            for i, c in enumerate(moved.coeffs):
                acc[i] += c
        else:
            frame_map = frame_map.compose(atom.map)
    torus = {u: tuple(v) for u, v in torus.items() if any(v)}

    S = closure(system, [e.root for e in tail])
    if S is None:
        return Normalized(tuple(frames), frame_map, torus, tuple(tail), None, False)
    order = default_order(system, S)
    collected = collect(tail, order, registry)
    return Normalized(tuple(frames), frame_map, torus, tuple(tail), collected, True)


def _canonical_key(n: Normalized):
    torus_key = tuple(sorted(n.torus.items()))
    if n.collected:
        tail_key = tuple(sorted((r.index, n.tail.coeffs[r].terms) for r in n.tail.coeffs))
        return (torus_key, n.frame_map.images, True, tail_key)
    tail_key = tuple((e.root.index, e.coeff.terms) for e in n.tail_atoms)
    return (torus_key, n.frame_map.images, False, tail_key)


def word_equal(w1: GroupWord, w2: GroupWord) -> bool:
    """Equality after frame canonicalization and tail collection.

    Valid because in characteristic 2 the Weyl representatives form a copy of
    the Weyl group (n_xi^2 = xi^v(-1) = 1) and the diagram symmetries act on
    them by relabeling, so a frame is determined by its torus part and its
    root map.
    """
    if w1.system is not w2.system or w1.registry is not w2.registry:
        raise ValueError("words from different systems or registries")
    return _canonical_key(normalize(w1)) == _canonical_key(normalize(w2))


def normalized_word(w: GroupWord) -> GroupWord:
    n = normalize(w)
    tail_atoms = n.tail.atoms() if n.collected else n.tail_atoms
    frame_atoms = n.frame_atoms
    if frame_atoms and n.frame_map.is_identity() and not n.torus:
        frame_atoms = ()
    return GroupWord(w.system, w.registry, tuple(frame_atoms) + tuple(tail_atoms),
                     tail_collected=n.collected)


# ---------------------------------------------------------------------------
# Conjugation


def conjugate(g: GroupWord, h: GroupWord) -> GroupWord:
    """g h g^-1, normalized to frame-then-tail form.

    When the tail support is not nilpotent the word is returned pushed but
    uncollected, with tail_collected False.
    """
    return normalized_word(g * h * g.inverse())


def conjugate_generic(u: RadicalElement, g: GroupWord,
                      order: Optional[Sequence[Root]] = None) -> Tuple[GroupWord, RadicalElement]:
    """u^-1 g u as a frame word times a normal-ordered tail.

    `order` fixes the tail normal order (defaults to the graded order on the
    support closure).
    """
    uw = u.as_word()
    n = normalize(uw.inverse() * g * uw)
    if not n.collected:
        raise ValueError("conjugation tail is not collectible over a nilpotent set")
    frame = GroupWord(g.system, g.registry, n.frame_atoms)
    tail = n.tail
    if order is not None:
        tail = tail.reordered(order)
    elif set(u.order) >= set(tail.coeffs):
        tail = tail.reordered(u.order)
    return frame, tail


def act_weyl_rep(n_xi: WeylRep, e: RootElement) -> RootElement:
    """n_xi e n_xi^-1 = e at the reflected root (sign-free in char 2)."""
    return RootElement(n_xi.map(e.root), e.coeff)


def act_torus(cochar: Cocharacter, unit: str, e: RootElement) -> RootElement:
    """chi(u) e_zeta(x) chi(u)^-1 = e_zeta(u^<zeta,chi> x)."""
    p = pairing(e.root, cochar)
    u = e.coeff.registry.var(unit)
    return RootElement(e.root, (u ** p) * e.coeff)


# ---------------------------------------------------------------------------
# Adjoint action on the Chevalley basis


def _odd(k: int) -> bool:
    return k % 2 == 1


class LieVector:
    """Vector over the Chevalley basis {e_zeta} union {h_i (simple coroots)}."""

    __slots__ = ("system", "registry", "e", "h")

    def __init__(self, system, registry, e: Mapping[Root, Polynomial] = (), h: Mapping[int, Polynomial] = ()):
        self.system = system
        self.registry = registry
        self.e = {r: c for r, c in dict(e).items() if not c.is_zero}
        self.h = {i: c for i, c in dict(h).items() if not c.is_zero}

    @classmethod
    def basis_e(cls, system, registry, root) -> "LieVector":
        if isinstance(root, int):
            root = system.root_by_label(root)
        return cls(system, registry, {root: registry.one()}, {})

    @classmethod
    def basis_h(cls, system, registry, i: int) -> "LieVector":
        return cls(system, registry, {}, {i: registry.one()})

    def __add__(self, other: "LieVector") -> "LieVector":
        e = dict(self.e)
        for r, c in other.e.items():
            e[r] = e.get(r, self.registry.zero()) + c
        h = dict(self.h)
        for i, c in other.h.items():
            h[i] = h.get(i, self.registry.zero()) + c
        return LieVector(self.system, self.registry, e, h)

    def scale(self, c: Polynomial) -> "LieVector":
        return LieVector(self.system, self.registry,
                         {r: c * v for r, v in self.e.items()},
                         {i: c * v for i, v in self.h.items()})

    def __eq__(self, other):
        return (
            isinstance(other, LieVector)
            and self.e == other.e
            and self.h == other.h
        )

    def __hash__(self):
        raise TypeError("LieVector is unhashable; compare with ==")

    def __repr__(self):
        parts = [
            (f"e{r.label}" if c.is_one else f"({c})e{r.label}")
            for r, c in sorted(self.e.items(), key=lambda rc: rc[0].index)
        ]
        parts += [
            (f"h{i+1}" if c.is_one else f"({c})h{i+1}")
            for i, c in sorted(self.h.items())
        ]
        return "+".join(parts) if parts else "0"


def _adjoint_atom(atom, v: LieVector) -> LieVector:
    system, registry = v.system, v.registry
    zero = registry.zero()
    if isinstance(atom, RootElement):
        xi, x = atom.root, atom.coeff
        e: Dict[Root, Polynomial] = {}
        h: Dict[int, Polynomial] = {}

        def add_e(r, c):
            if not c.is_zero:
                e[r] = e.get(r, zero) + c

        def add_h(i, c):
            if not c.is_zero:
                h[i] = h.get(i, zero) + c

        for zeta, c in v.e.items():
            add_e(zeta, c)
            if zeta == -xi:
                for i, k in enumerate(xi.coeffs):
                    if _odd(k):
                        add_h(i, x * c)
                add_e(xi, x * x * c)
            else:
                s = zeta + xi
                if s is not None:
                    add_e(s, x * c)
        for i, q in v.h.items():
            add_h(i, q)
            p = sum(xi.coeffs[j] * system.cartan[j][i] for j in range(system.rank))
            if _odd(p):
                add_e(xi, x * q)
        return LieVector(system, registry, e, h)

    if isinstance(atom, (WeylRep, GraphAut)):
        m = atom.map
        e = {m(r): c for r, c in v.e.items()}
        mat = m.matrix
        h: Dict[int, Polynomial] = {}
        for j, q in v.h.items():
            for i in range(system.rank):
                if _odd(mat[i][j]):
                    h[i] = h.get(i, zero) + q
        return LieVector(system, registry, e, h)

    if isinstance(atom, TorusValue):
        u = registry.var(atom.unit)
        e = {r: (u ** pairing(r, atom.cochar)) * c for r, c in v.e.items()}
        return LieVector(system, registry, e, dict(v.h))

    raise ValueError(f"cannot take adjoint of {atom!r}")


def adjoint(g, v: LieVector) -> LieVector:
    """Ad(g) v for an atom or a word (word atoms act right-to-left)."""
    if isinstance(g, GroupWord):
        out = v
        for atom in reversed(g.atoms):
            out = _adjoint_atom(atom, out)
        return out
    return _adjoint_atom(g, v)


# ---------------------------------------------------------------------------
# Centralizer constraint systems


class SolvedSystem:
    """Union-find result of a triangular constraint system over F2."""

    def __init__(self, unknowns: Sequence[str]):
        self.unknowns = tuple(unknowns)
        self._parent = {v: v for v in unknowns}
        self._zeroed: set = set()
        self.forced: List[Polynomial] = []
        self.residuals: List[Polynomial] = []

    def rep(self, v: str) -> str:
        while self._parent[v] != v:
            self._parent[v] = self._parent[self._parent[v]]
            v = self._parent[v]
        return v

    def merge(self, a: str, b: str):
        ra, rb = self.rep(a), self.rep(b)
        if ra != rb:
            lo, hi = sorted((ra, rb), key=_var_sort_key)
            self._parent[hi] = lo  # earliest name represents the class

    def set_zero(self, v: str):
        self._zeroed.add(self.rep(v))

    def is_zero(self, v: str) -> bool:
        return any(self.rep(z) == self.rep(v) for z in self._zeroed)

    @property
    def zeros(self) -> set:
        return {v for v in self.unknowns if self.is_zero(v)}

    def classes(self) -> List[set]:
        groups: Dict[str, set] = {}
        for v in self.unknowns:
            groups.setdefault(self.rep(v), set()).add(v)
        return [g for g in groups.values() if len(g) > 1]

    @property
    def triangular(self) -> bool:
        return not self.residuals

    def free_unknowns(self) -> List[str]:
        reps = {self.rep(v) for v in self.unknowns if not self.is_zero(v)}
        return sorted(reps, key=_var_sort_key)

    def binding(self, registry: VariableRegistry) -> Dict[str, Polynomial]:
        out = {}
        for v in self.unknowns:
            if self.is_zero(v):
                out[v] = registry.zero()
            else:
                r = self.rep(v)
                if r != v:
                    out[v] = registry.var(r)
        return out


def _var_sort_key(name: str):
    digits = "".join(ch for ch in name if ch.isdigit())
    return (name.rstrip("0123456789"), int(digits) if digits else -1)


class ConstraintSystem:
    """Polynomial equations p = 0 over radical coordinates."""

    def __init__(self, registry: VariableRegistry, equations: Iterable[Polynomial], unknowns: Sequence[str]):
        self.registry = registry
        seen = []
        for p in equations:
            if not p.is_zero and p not in seen:
                seen.append(p)
        self.equations = tuple(seen)
        self.unknowns = tuple(unknowns)

    def solve(self) -> SolvedSystem:
        solved = SolvedSystem(self.unknowns)
        unknown_set = set(self.unknowns)
        pending = list(self.equations)
        for _ in range(len(self.equations) * 4 + 8):
            binding = solved.binding(self.registry)
            nxt = []
            progress = False
            for p in pending:
                q = p.substitute(binding) if binding else p
                if q.is_zero:
                    progress = True
                    continue
                if _apply_rule(q, unknown_set, solved):
                    progress = True
                else:
                    nxt.append(p)
            pending = nxt
            if not progress:
                break
        binding = solved.binding(self.registry)
        for p in pending:
            q = p.substitute(binding) if binding else p
            if not q.is_zero:
                solved.residuals.append(q)
        return solved


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _apply_rule(q: Polynomial, unknowns: set, solved: SolvedSystem) -> bool:
    terms = sorted(q.terms)
    reg = q.registry
    if len(terms) == 1:
        m = terms[0]
        mvars = [(reg.names[i], e) for i, e in m]
        unames = [n for n, _ in mvars if n in unknowns]
        constants_ok = all(
            n in unknowns or reg.kind(n) in ("unit", "sqrt") for n, _ in mvars
        )
        if len(unames) == 1 and constants_ok:
            # x^k * (nonzero constants) = 0 forces x = 0 over a field
            if any(n == unames[0] and e >= 2 for n, e in mvars):
                solved.forced.append(q)
            solved.set_zero(unames[0])
            return True
        return False
    if len(terms) == 2:
        pows = []
        for m in terms:
            if len(m) != 1:
                return False
            i, e = m[0]
            name = reg.names[i]
            if name not in unknowns:
                return False
            pows.append((name, e))
        (n1, e1), (n2, e2) = pows
        if e1 == e2 and _is_power_of_two(e1):
            # x^(2^k) + y^(2^k) = (x+y)^(2^k): Frobenius is injective
            if e1 >= 2:
                solved.forced.append(q)
            solved.merge(n1, n2)
            return True
    return False


class CentralizerReport:
    def __init__(self, system, registry, radical, varmap, constraints, solved):
        self.system = system
        self.registry = registry
        self.radical = tuple(radical)
        self.varmap = varmap            # Root -> variable name
        self.constraints = constraints  # ConstraintSystem
        self.solved = solved            # SolvedSystem or None

    def free_roots(self) -> tuple:
        if self.solved is None:
            return ()
        return tuple(r for r in self.radical if not self.solved.is_zero(self.varmap[r]))

    def linear_classes(self) -> List[List[str]]:
        """Equality classes read off the degree-one binomial equations only
        (the raw coordinate equalities, before quadratic propagation)."""
        parent = {v: v for v in self.constraints.unknowns}

        def rep(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for p in self.constraints.equations:
            if len(p.terms) != 2:
                continue
            names = []
            for m in p.terms:
                if len(m) == 1 and m[0][1] == 1:
                    names.append(p.registry.names[m[0][0]])
            if len(names) == 2 and all(n in parent for n in names):
                ra, rb = rep(names[0]), rep(names[1])
                if ra != rb:
                    lo, hi = sorted((ra, rb), key=_var_sort_key)
                    parent[hi] = lo
        groups: Dict[str, List[str]] = {}
        for v in self.constraints.unknowns:
            groups.setdefault(rep(v), []).append(v)
        out = [sorted(g, key=_var_sort_key) for g in groups.values() if len(g) > 1]
        return sorted(out, key=lambda g: _var_sort_key(g[0]))

    def nonlinear_equations(self) -> List[Polynomial]:
        out = []
        for p in self.constraints.equations:
            linear_binomial = len(p.terms) == 2 and all(
                len(m) == 1 and m[0][1] == 1 for m in p.terms
            )
            if not linear_binomial:
                out.append(p)
        return out

    def subgroup_description(self) -> str:
        if self.solved is None or not self.solved.triangular:
            return "unsolved"
        free = self.free_roots()
        if not free:
            return "1"
        labels = sorted({self.solved.rep(self.varmap[r]) for r in free}, key=_var_sort_key)
        if len(free) == len(labels):
            return " x ".join(f"U_{r.label}" for r in free)
        return "coordinates " + ", ".join(labels)


def centralizer_system(generators: Sequence[GroupWord], radical: Sequence[Root],
                       registry: VariableRegistry, prefix: str = "x") -> CentralizerReport:
    """Equations saying a generic radical element commutes with each generator.

    Torus values carry formal unit parameters, so commuting with the full
    torus image is encoded by splitting each equation into its unit-exponent
    layers, every one of which must vanish.
    """
    radical = tuple(radical)
    system = radical[0].system
    u = generic_radical_element(system, registry, radical, prefix)
    varmap = {r: f"{prefix}{r.label}" if r.label > 0 else f"{prefix}m{-r.label}" for r in radical}
    equations: List[Polynomial] = []
    for g in generators:
        gmap = normalize(g).frame_map
        if {gmap(r) for r in radical} != set(radical):
            raise ValueError("radical is not stable under a generator's frame")
        n = normalize(g * u.as_word() * g.inverse())
        if not n.collected or not n.frame_map.is_identity() or n.torus:
            raise ValueError("conjugate of the radical element did not return to the radical")
        conj = n.tail.reordered(radical)
        for r in radical:
            eq = conj.coefficient(r) + u.coefficient(r)
            for layer in eq.split_by_units().values():
                if not layer.is_zero:
                    equations.append(layer)
    cs = ConstraintSystem(registry, equations, [varmap[r] for r in radical])
    return CentralizerReport(system, registry, radical, varmap, cs, cs.solve())
