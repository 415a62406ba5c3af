"""Typed monoids (M, G, E): a monoid, a Boolean algebra of types, and a unit set.

Finite type algebras are stored by their atoms (a partition of the base);
members are unions of atoms and are only materialized on request. The two
infinite typed monoids used as quantifier algebras, (Z, Z+, {+1,-1}) and
(N, S, {0,1}), are symbolic: they support bounded recognition checks only.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    AlgebraTooLarge,
    CarrierTooLarge,
    FormatError,
    SearchBudgetExceeded,
    SymbolicUnsupported,
    WidthMismatch,
)
from .monoids import (
    FiniteMonoid,
    builtin_monoids,
    extend_morphism,
    generating_set,
    is_homomorphism,
    symmetric,
)
from .regular import Dfa, syntactic_monoid
from .words import WordStructure, words_up_to

DEFAULT_ALGEBRA_CAP = 2**16
DEFAULT_CARRIER_CAP = 10**5
DEFAULT_SEARCH_BUDGET = 2_000_000


# ------------------------------------------------------------ type algebras


@dataclass(frozen=True)
class TypeAlgebra:
    """Boolean algebra over `base`, represented by its atoms."""

    base: tuple
    atoms: tuple  # of frozensets partitioning base

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "atoms", tuple(frozenset(a) for a in self.atoms))
        seen: set = set()
        for a in self.atoms:
            if not a or a & seen:
                raise FormatError("atoms must be nonempty and pairwise disjoint")
            seen |= a
        if seen != set(self.base):
            raise FormatError("atoms must cover the base")

    @property
    def member_count(self) -> int:
        return 2 ** len(self.atoms)

    def atom_index(self) -> dict:
        return {x: i for i, a in enumerate(self.atoms) for x in a}

    def __contains__(self, subset) -> bool:
        subset = frozenset(subset)
        if not subset <= set(self.base):
            return False
        return all(a <= subset or not (a & subset) for a in self.atoms)

    def members(self, cap: int = DEFAULT_ALGEBRA_CAP) -> list:
        if self.member_count > cap:
            raise AlgebraTooLarge(f"algebra has {self.member_count} members (cap {cap})")
        out = []
        for mask in range(self.member_count):
            out.append(frozenset().union(*(a for i, a in enumerate(self.atoms) if mask >> i & 1)))
        return out

    def generated_by(self, subset) -> frozenset:
        """Smallest member containing `subset` (union of the atoms it meets)."""
        subset = frozenset(subset)
        return frozenset().union(*(a for a in self.atoms if a & subset))


def generated_algebra(
    base: Iterable[Hashable], gens: Iterable[Iterable], cap: int | None = DEFAULT_ALGEBRA_CAP
) -> TypeAlgebra:
    """Smallest Boolean algebra over `base` containing every generator.

    Atoms are the classes of "same membership in every generator". With
    `cap=None` the member count is not checked (members stay virtual).
    """
    base = tuple(base)
    gens = [frozenset(g) for g in gens]
    universe = set(base)
    for g in gens:
        if not g <= universe:
            raise FormatError(f"generator {sorted(map(str, g))} is not a subset of the base")
    classes: dict = {}
    for x in base:
        classes.setdefault(tuple(x in g for g in gens), []).append(x)
    algebra = TypeAlgebra(base, tuple(frozenset(c) for c in classes.values()))
    if cap is not None and algebra.member_count > cap:
        raise AlgebraTooLarge(f"generated algebra would have {algebra.member_count} members (cap {cap})")
    return algebra


def powerset_algebra(base: Iterable[Hashable]) -> TypeAlgebra:
    """The full powerset algebra (all singletons are atoms); never materialized eagerly."""
    base = tuple(base)
    return TypeAlgebra(base, tuple(frozenset((x,)) for x in base))


# ----------------------------------------------------------- typed monoids


@dataclass(frozen=True)
class TypedMonoid:
    name: str
    monoid: FiniteMonoid
    types: TypeAlgebra
    units: frozenset  # element indices

    def __post_init__(self):
        object.__setattr__(self, "units", frozenset(self.units))
        if self.types.base != tuple(range(len(self.monoid))):
            raise FormatError("type algebra must be over the element indices of the base monoid")
        if any(not 0 <= u < len(self.monoid) for u in self.units):
            raise FormatError("units must be elements of the base monoid")

    def __len__(self):
        return len(self.monoid)

    def __repr__(self):
        return (
            f"TypedMonoid({self.name!r}, |M|={len(self.monoid)}, "
            f"{len(self.types.atoms)} type atoms, {len(self.units)} units)"
        )

    def unit_names(self) -> list[str]:
        return [self.monoid.elements[u] for u in sorted(self.units)]


@dataclass(frozen=True)
class SymbolicTypedMonoid:
    """(Z, Z+, {+1,-1}) or (N, S, {0,1}); S is the set of positive squares."""

    name: str
    kind: str  # "Z" | "N"

    @property
    def units(self) -> tuple:
        return (1, -1) if self.kind == "Z" else (0, 1)

    def in_type(self, value: int) -> bool:
        if self.kind == "Z":
            return value > 0
        return value > 0 and math.isqrt(value) ** 2 == value

    def type_names(self) -> tuple:
        return ("Z+",) if self.kind == "Z" else ("S",)


def integers_typed() -> SymbolicTypedMonoid:
    return SymbolicTypedMonoid("(Z,Z+,{+1,-1})", "Z")


def naturals_typed() -> SymbolicTypedMonoid:
    return SymbolicTypedMonoid("(N,S,{0,1})", "N")


def s5_powerset_typed() -> TypedMonoid:
    """(S5, powerset of S5, S5)."""
    m = symmetric(5)
    return TypedMonoid("(S5,P(S5),S5)", m, powerset_algebra(range(len(m))), frozenset(range(len(m))))


def typed(m: FiniteMonoid, types: Iterable[Iterable[str]] = (), units: Iterable[str] | None = None, name=None):
    """Convenience constructor using element names; units default to all elements."""
    gens = [frozenset(m.index(x) for x in t) for t in types]
    algebra = generated_algebra(range(len(m)), gens, cap=None)
    unit_set = range(len(m)) if units is None else [m.index(u) for u in units]
    return TypedMonoid(name or m.name, m, algebra, frozenset(unit_set))


def _require_finite(*ts):
    for t in ts:
        if isinstance(t, SymbolicTypedMonoid):
            raise SymbolicUnsupported(f"{t.name} has an infinite base; use symbolic_recognizes_upto")


# ------------------------------------------------------------ homomorphisms


@dataclass(frozen=True)
class TypedHom:
    """h1: element map; h2: image (set of dst elements) of each src type atom; h3: unit map."""

    h1: tuple
    h2: tuple
    h3: dict = field(hash=False, compare=False)


def hom_valid(h: TypedHom, src: TypedMonoid, dst: TypedMonoid) -> bool:
    _require_finite(src, dst)
    h1 = list(h.h1)
    if len(h1) != len(src.monoid) or not is_homomorphism(src.monoid, dst.monoid, h1):
        return False
    # h2 is a Boolean algebra homomorphism iff atom images are disjoint members covering dst
    images = [frozenset(x) for x in h.h2]
    if len(images) != len(src.types.atoms):
        return False
    if any(img not in dst.types for img in images):
        return False
    covered: set = set()
    for img in images:
        if img & covered:
            return False
        covered |= img
    if covered != set(range(len(dst.monoid))):
        return False
    h1_s = set(h1)
    for atom, img in zip(src.types.atoms, images):
        if {h1[x] for x in atom} != img & h1_s:
            return False
    for e in src.units:
        if e not in h.h3 or h.h3[e] not in dst.units or h.h3[e] != h1[e]:
            return False
    return True


def identity_hom(t: TypedMonoid) -> TypedHom:
    return TypedHom(tuple(range(len(t.monoid))), tuple(t.types.atoms), {e: e for e in t.units})


def _surjective_morphisms(src: FiniteMonoid, domain: frozenset, dst: FiniteMonoid, budget: list):
    """Yield every surjective morphism from the submonoid `domain` of src onto dst."""
    gens = generating_set(src, sorted(domain - {src.identity}))
    for images in itertools.product(range(len(dst)), repeat=len(gens)):
        budget[0] -= len(domain)
        if budget[0] < 0:
            raise SearchBudgetExceeded("morphism search budget exhausted")
        phi = extend_morphism(src, gens, images, dst)
        if phi is not None and len(set(phi.values())) == len(dst):
            yield phi


def _types_compatible(phi: dict, dom_atoms: Iterable[frozenset], target: TypedMonoid) -> bool:
    """Each domain atom maps into a single target atom."""
    where = target.types.atom_index()
    for atom in dom_atoms:
        if len({where[phi[x]] for x in atom}) > 1:
            return False
    return True


def _submonoids(m: FiniteMonoid, min_size: int, budget: list):
    """All submonoids of m with at least `min_size` elements: m itself first, then by decreasing size."""
    whole = frozenset(range(len(m)))
    yield whole
    bottom = m.closure(())
    found = {bottom: []}
    frontier = deque([bottom])
    while frontier:
        n = frontier.popleft()
        gens = found[n]
        for x in range(len(m)):
            if x in n:
                continue
            budget[0] -= len(n)
            if budget[0] < 0:
                raise SearchBudgetExceeded("submonoid enumeration budget exhausted")
            bigger = m.closure(gens + [x])
            if bigger not in found:
                found[bigger] = gens + [x]
                frontier.append(bigger)
    for n in sorted(found, key=len, reverse=True):
        if n != whole and len(n) >= min_size:
            yield n


def divides(t1: TypedMonoid, t2: TypedMonoid, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Is there a surjective typed homomorphism from a typed submonoid of t2 onto t1?

    A submonoid N of t2 may carry any Boolean subalgebra of the traces
    {A & N : A type of t2}, and any units of t2 lying in N. So phi : N -> t1
    works iff it is a surjective morphism, each trace atom lands in a single
    type atom of t1, and the t2-units mapped into t1's units cover them.
    """
    _require_finite(t1, t2)
    if len(t1.monoid) > len(t2.monoid):
        return False
    b = [budget]
    for n in _submonoids(t2.monoid, len(t1.monoid), b):
        traces = [a & n for a in t2.types.atoms if a & n]
        for phi in _surjective_morphisms(t2.monoid, n, t1.monoid, b):
            if not _types_compatible(phi, traces, t1):
                continue
            covered = {phi[e] for e in t2.units & n if phi[e] in t1.units}
            if covered >= t1.units:
                return True
    return False


def trivial_extension(t1: TypedMonoid, t2: TypedMonoid, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Is there a surjective typed homomorphism t1 -> t2?"""
    _require_finite(t1, t2)
    if len(t1.monoid) < len(t2.monoid):
        return False
    b = [budget]
    target_atoms = set(t2.types.atoms)
    for phi in _surjective_morphisms(t1.monoid, frozenset(range(len(t1.monoid))), t2.monoid, b):
        if not _saturated(phi, t1):
            continue
        if {frozenset(phi[x] for x in a) for a in t1.types.atoms} != target_atoms:
            continue
        if {phi[e] for e in t1.units} == set(t2.units):
            return True
    return False


def _saturated(phi: dict, t: TypedMonoid) -> bool:
    where = t.types.atom_index()
    owner: dict = {}
    for x, y in phi.items():
        if owner.setdefault(y, where[x]) != where[x]:
            return False
    return True


def direct_product(t1: TypedMonoid, t2: TypedMonoid, name: str | None = None) -> TypedMonoid:
    from .monoids import direct_product as monoid_product

    m = monoid_product(t1.monoid, t2.monoid)
    n2 = len(t2.monoid)
    atoms = [frozenset(a * n2 + b for a in a1 for b in a2) for a1 in t1.types.atoms for a2 in t2.types.atoms]
    units = frozenset(a * n2 + b for a in t1.units for b in t2.units)
    return TypedMonoid(name or f"{t1.name}x{t2.name}", m, TypeAlgebra(range(len(m)), atoms), units)


# -------------------------------------------------- syntactic typed monoids


def syntactic_typed_monoid(d: Dfa, name: str | None = None) -> TypedMonoid:
    res = syntactic_monoid(d, name)
    m = res.monoid
    algebra = generated_algebra(range(len(m)), [res.accept_set])
    units = frozenset(res.letter_images.images)
    return TypedMonoid(name or f"syn({d.name})", m, algebra, units)


def _signatures(t: TypedMonoid) -> list[tuple]:
    table = t.monoid.table
    where = t.types.atom_index()
    n = len(t.monoid)
    sigs = []
    for s in range(n):
        sig = []
        for x in range(n):
            xs = table[x][s]
            row = table[xs]
            sig.extend(where[row[y]] for y in range(n))
        sigs.append(tuple(sig))
    return sigs


def minimal_reduced(t: TypedMonoid) -> TypedMonoid:
    """Quotient by s1 ~ s2 iff x s1 y and x s2 y lie in the same types for all x, y."""
    _require_finite(t)
    sigs = _signatures(t)
    cls: dict = {}
    of = [cls.setdefault(s, len(cls)) for s in sigs]
    if len(cls) == len(t.monoid):
        return t
    reps = [None] * len(cls)
    for x, c in enumerate(of):
        if reps[c] is None:
            reps[c] = x
    table = tuple(tuple(of[t.monoid.table[a][b]] for b in reps) for a in reps)
    names = tuple(t.monoid.elements[r] for r in reps)
    m = FiniteMonoid(t.monoid.name + "/~", names, of[t.monoid.identity], table)
    # every type is a union of classes, since x = y = 1 separates types
    atoms = {frozenset(of[x] for x in a) for a in t.types.atoms}
    algebra = TypeAlgebra(range(len(m)), sorted(atoms, key=min))
    return TypedMonoid(t.name + "/~", m, algebra, frozenset(of[u] for u in t.units))


def is_reduced(t: TypedMonoid) -> bool:
    return len(set(_signatures(t))) == len(t.monoid)


def is_syntactic_shape(t: TypedMonoid) -> bool:
    """Reduced, generated by its units, and with two or four types."""
    _require_finite(t)
    if len(t.types.atoms) not in (1, 2):
        return False
    if t.monoid.closure(t.units) != frozenset(range(len(t.monoid))):
        return False
    return is_reduced(t)


# --------------------------------------------------------------- recognition


@dataclass(frozen=True)
class Recognition:
    """A witness: letter code -> unit, and the accepting type (set of element indices)."""

    assignment: tuple
    accept_type: frozenset


def _type_check(t: TypedMonoid, pos: set, neg: set):
    """Smallest type containing pos and avoiding neg, or None."""
    if pos & neg:
        return None
    where = t.types.atom_index()
    pos_atoms = {where[x] for x in pos}
    if any(where[x] in pos_atoms for x in neg):
        return None
    return frozenset().union(*(t.types.atoms[i] for i in pos_atoms)) if pos_atoms else frozenset()


def _reached(t: TypedMonoid, d: Dfa, assigned: dict):
    """Accepting/rejecting monoid elements over words using only assigned letters."""
    table = t.monoid.table
    start = (d.start, t.monoid.identity)
    seen = {start}
    queue = deque([start])
    verdict: dict = {}
    while queue:
        q, m = queue.popleft()
        acc = q in d.accepting
        if verdict.setdefault(m, acc) != acc:
            return None
        for code, img in assigned.items():
            nxt = (d.transitions[q][code], table[m][img])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    pos = {m for m, a in verdict.items() if a}
    neg = {m for m, a in verdict.items() if not a}
    return pos, neg


def find_recognition(t: TypedMonoid, d: Dfa, budget: int = DEFAULT_SEARCH_BUDGET) -> Recognition | None:
    """Search for letter -> unit images h and a type A with h^-1(A) = L(d)."""
    _require_finite(t)
    if not t.units:
        return None
    codes = list(range(d.alphabet_size))
    moves = [any(d.transitions[q][c] != q for q in range(d.states)) for c in codes]
    codes.sort(key=lambda c: not moves[c])
    ident = t.monoid.identity
    units = sorted(t.units)
    steps = [budget]

    def candidates(code):
        if not moves[code] and ident in t.units:
            return [ident] + [u for u in units if u != ident]
        return units

    def search(i, assigned):
        steps[0] -= 1
        if steps[0] < 0:
            raise SearchBudgetExceeded("recognition search budget exhausted")
        got = _reached(t, d, assigned)
        if got is None:
            return None
        pos, neg = got
        accept = _type_check(t, pos, neg)
        if accept is None:
            return None
        if i == len(codes):
            return Recognition(tuple(assigned[c] for c in range(d.alphabet_size)), accept)
        code = codes[i]
        for u in candidates(code):
            assigned[code] = u
            found = search(i + 1, assigned)
            if found is not None:
                return found
            del assigned[code]
        return None

    return search(0, {})


def recognizes(t, d: Dfa, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    return find_recognition(t, d, budget) is not None


def _language_test(language, width: int) -> Callable[[WordStructure], bool]:
    if isinstance(language, Dfa):
        if language.width != width:
            raise WidthMismatch(f"DFA width {language.width} != {width}")
        return language.accepts
    from .logic import Formula

    if isinstance(language, Formula):
        from .evaluate import evaluate

        return lambda w: evaluate(language, w)
    return language


def find_symbolic_recognition(t: SymbolicTypedMonoid, language, n: int, width: int = 1):
    """Letter -> unit assignment and type (A or its complement) agreeing with `language` up to length n.

    `language` is a Dfa, a closed formula, or a predicate on words. Returns
    (assignment by letter code, complemented?) or None.
    """
    if not isinstance(t, SymbolicTypedMonoid):
        raise SymbolicUnsupported("expected one of the symbolic typed monoids (Z, ...) or (N, ...)")
    member = _language_test(language, width)
    words = list(words_up_to(width, n))
    truth = [member(w) for w in words]
    code_lists = [w.codes() for w in words]
    for assignment in itertools.product(t.units, repeat=2**width):
        values = [sum(assignment[c] for c in codes) for codes in code_lists]
        typed_truth = [t.in_type(v) for v in values]
        if typed_truth == truth:
            return assignment, False
        if all(a != b for a, b in zip(typed_truth, truth)):
            return assignment, True
    return None


def symbolic_recognizes_upto(t: SymbolicTypedMonoid, language, n: int, width: int = 1) -> bool:
    """Bounded check: some unit assignment and type match `language` on all words of length <= n.

    The four types are the sign (or square) set, its complement, the empty
    set and everything; the last two only match constant languages.
    """
    if find_symbolic_recognition(t, language, n, width) is not None:
        return True
    member = _language_test(language, width)
    truth = {member(w) for w in words_up_to(width, n)}
    return len(truth) <= 1  # empty or full type


# ----------------------------------------------------------- block products


def _pair_classes(t2: TypedMonoid, C: Sequence[int], ordered: bool) -> list[int]:
    """Class index of each pair (b1, b2), flattened as b1 * n + b2."""
    n = len(t2.monoid)
    table = t2.monoid.table
    where = t2.types.atom_index()
    cls: dict = {}
    out = []
    for b1 in range(n):
        for b2 in range(n):
            sig = tuple(where[table[table[b1][c]][b2]] for c in C)
            if ordered:
                sig += tuple(where[table[b1][c]] for c in C) + tuple(where[table[c][b2]] for c in C)
            out.append(cls.setdefault(sig, len(cls)))
    return out


def block_generators(t1: TypedMonoid, t2: TypedMonoid, C: Iterable[int] = (), ordered: bool = False,
                     cap: int = DEFAULT_CARRIER_CAP) -> list[tuple]:
    """Generators (f, s') of the (ordered) typed block product, f flattened over S' x S'."""
    _require_finite(t1, t2)
    C = sorted(set(C))
    if any(not 0 <= c < len(t2.monoid) for c in C):
        raise FormatError("C must be a subset of the second base monoid")
    classes = _pair_classes(t2, C, ordered)
    k = max(classes) + 1
    seconds = sorted(set(t2.units) | set(C))
    units1 = sorted(t1.units)
    count = len(units1) ** k * len(seconds)
    if count > cap:
        raise CarrierTooLarge(f"{count} generators exceed the cap {cap}")
    gens = []
    for values in itertools.product(units1, repeat=k):
        f = tuple(values[c] for c in classes)
        for s in seconds:
            gens.append((f, s))
    return gens


def _block_mul(m1: FiniteMonoid, m2: FiniteMonoid, a, b):
    """(f1, s1)(f2, s2) = (g, s1 s2) with g(n1, n2) = f1(n1, s2 n2) f2(n1 s1, n2)."""
    (f1, s1), (f2, s2) = a, b
    n = len(m2)
    t1, t2 = m1.table, m2.table
    g = tuple(
        t1[f1[n1 * n + t2[s2][n2]]][f2[t2[n1][s1] * n + n2]] for n1 in range(n) for n2 in range(n)
    )
    return g, t2[s1][s2]


def _close(m1: FiniteMonoid, m2: FiniteMonoid, gens, cap: int) -> list:
    ident = (tuple([m1.identity] * len(m2) ** 2), m2.identity)
    order = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _block_mul(m1, m2, x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
                if len(order) > cap:
                    raise CarrierTooLarge(f"block product carrier exceeds {cap} elements")
                queue.append(y)
    return order


def _element_name(m1, m2, el) -> str:
    f, s = el
    return "<" + ",".join(m1.elements[v] for v in f) + "|" + m2.elements[s] + ">"


def _tabulate(name, m1, m2, elements) -> FiniteMonoid:
    index = {e: i for i, e in enumerate(elements)}
    table = tuple(tuple(index[_block_mul(m1, m2, a, b)] for b in elements) for a in elements)
    names = tuple(_element_name(m1, m2, e) for e in elements)
    return FiniteMonoid(name, names, 0, table)


@dataclass(frozen=True)
class BlockProduct:
    typed: TypedMonoid
    carrier: tuple  # (f, s) pairs in element-index order
    generators: tuple


def block_product_detail(t1: TypedMonoid, t2: TypedMonoid, C: Iterable[int] = (), ordered: bool = False,
                         cap: int = DEFAULT_CARRIER_CAP) -> BlockProduct:
    m1, m2 = t1.monoid, t2.monoid
    gens = block_generators(t1, t2, C, ordered, cap)
    carrier = _close(m1, m2, gens, cap)
    op = "[x]" if ordered else "[.]"
    m = _tabulate(f"{m1.name}{op}{m2.name}", m1, m2, carrier)
    index = {e: i for i, e in enumerate(carrier)}
    # types: preimages of t1's atoms under (f, s) -> f(1, 1)
    corner = m2.identity * len(m2) + m2.identity
    where = t1.types.atom_index()
    buckets: dict = {}
    for i, (f, _s) in enumerate(carrier):
        buckets.setdefault(where[f[corner]], set()).add(i)
    algebra = TypeAlgebra(range(len(m)), [frozenset(b) for _, b in sorted(buckets.items())])
    units = frozenset(index[g] for g in gens if g[1] in t2.units)
    result = TypedMonoid(f"{t1.name}{op}{t2.name}", m, algebra, units)
    return BlockProduct(result, tuple(carrier), tuple(gens))


def block_product(t1: TypedMonoid, t2: TypedMonoid, C: Iterable[int] = (), ordered: bool = False,
                  cap: int = DEFAULT_CARRIER_CAP) -> TypedMonoid:
    return block_product_detail(t1, t2, C, ordered, cap).typed


def full_block_product(m1: FiniteMonoid, m2: FiniteMonoid, cap: int = DEFAULT_CARRIER_CAP) -> FiniteMonoid:
    """The whole of M^(NxN) x N with the block multiplication."""
    size = len(m1) ** (len(m2) ** 2) * len(m2)
    if size > cap:
        raise CarrierTooLarge(f"full block product has {size} elements (cap {cap})")
    ident = (tuple([m1.identity] * len(m2) ** 2), m2.identity)
    elements = [ident] + [
        (f, s)
        for f in itertools.product(range(len(m1)), repeat=len(m2) ** 2)
        for s in range(len(m2))
        if (f, s) != ident
    ]
    return _tabulate(f"{m1.name}[]{m2.name}", m1, m2, elements)


def block_carrier_elements(m1: FiniteMonoid, m2: FiniteMonoid) -> Iterable[tuple]:
    for f in itertools.product(range(len(m1)), repeat=len(m2) ** 2):
        for s in range(len(m2)):
            yield f, s


def block_multiply(m1: FiniteMonoid, m2: FiniteMonoid, a, b):
    return _block_mul(m1, m2, a, b)


# --------------------------------------------------------------- text format


def parse_typed(text: str, monoids: dict | None = None):
    """Parse ``typed <name>`` / ``base:`` / ``types: { a b } ; { c }`` / ``units:``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("typed"):
        raise FormatError("expected header 'typed <name>'")
    parts = lines[0].split(None, 1)
    name = parts[1].strip() if len(parts) > 1 else None
    fields = {}
    for ln in lines[1:]:
        key, sep, rest = ln.partition(":")
        if not sep or key.strip() not in ("base", "types", "units"):
            raise FormatError(f"unexpected line {ln!r}")
        fields[key.strip()] = rest.strip()
    if "base" not in fields:
        raise FormatError("typed monoid needs a 'base:' line")
    base = fields["base"]
    if base in ("Z", "N"):
        t = integers_typed() if base == "Z" else naturals_typed()
        return SymbolicTypedMonoid(name or t.name, base)
    registry = builtin_monoids()
    registry.update(monoids or {})
    if base not in registry:
        raise FormatError(f"unknown base monoid {base!r}")
    m = registry[base]
    gens = []
    listed = fields.get("types", "")
    for chunk in listed.split(";") if listed else []:
        chunk = chunk.strip()
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise FormatError(f"type generator must be written {{ e1 e2 ... }}, got {chunk!r}")
        gens.append(frozenset(m.index(x) for x in chunk[1:-1].split()))
    algebra = generated_algebra(range(len(m)), gens, cap=None)
    units = frozenset(m.index(x) for x in fields.get("units", "").split())
    return TypedMonoid(name or m.name, m, algebra, units)


def format_typed(t) -> str:
    if isinstance(t, SymbolicTypedMonoid):
        units = " ".join(f"{u:+d}" if t.kind == "Z" else str(u) for u in t.units)
        return f"typed {t.name}\nbase: {t.kind}\ntypes: {{ {t.type_names()[0]} }}\nunits: {units}\n"
    names = t.monoid.elements
    atoms = t.types.atoms if len(t.types.atoms) > 1 else ()
    types = " ; ".join("{ " + " ".join(names[x] for x in sorted(a)) + " }" for a in atoms)
    lines = [f"typed {t.name}", f"base: {t.monoid.name}", f"types: {types}".rstrip(), "units: " + " ".join(
        names[u] for u in sorted(t.units))]
    return "\n".join(ln.rstrip() for ln in lines) + "\n"
