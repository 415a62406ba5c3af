"""Finite monoids given by multiplication tables, and letter maps into them.

Elements are referred to by their index in the fixed enumeration
``monoid.elements``; every construction that needs "the i-th element" uses
that order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import FormatError, MonoidWidthMismatch, NoIdentity, NotAssociative
from .words import (
    WordStructure,
    bits_to_str,
    letter_code,
    letter_from_code,
    str_to_bits,
)


@dataclass(frozen=True)
class FiniteMonoid:
    name: str
    elements: tuple
    identity: int
    table: tuple

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteMonoid({self.name!r}, {len(self)} elements)"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise FormatError(f"{name!r} is not an element of {self.name}") from None

    def product(self, seq: Iterable[int]) -> int:
        acc = self.identity
        for x in seq:
            acc = self.table[acc][x]
        return acc

    def closure(self, gens: Iterable[int]) -> frozenset:
        """The submonoid generated by `gens` (always contains the identity)."""
        gens = list(dict.fromkeys(gens))
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def is_commutative(self) -> bool:
        n = len(self)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def check(self) -> None:
        """Raise unless the table is associative with a two-sided identity."""
        n = len(self)
        t = self.table
        e = self.identity
        if not 0 <= e < n:
            raise NoIdentity(f"identity index {e} out of range")
        for m in range(n):
            if t[e][m] != m or t[m][e] != m:
                raise NoIdentity(f"{self.elements[e]} is not a two-sided identity")
        for i in range(n):
            row_i = t[i]
            for j in range(n):
                ij = row_i[j]
                row_j = t[j]
                for k in range(n):
                    if t[ij][k] != row_i[row_j[k]]:
                        raise NotAssociative(self.elements[i], self.elements[j], self.elements[k])


def validate(name: str, elements: Sequence[str], identity: str, rows: Sequence[Sequence[str]]) -> FiniteMonoid:
    """Build a monoid from a named table, checking associativity and identity."""
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise FormatError("duplicate element names")
    index = {x: i for i, x in enumerate(elements)}
    if identity not in index:
        raise NoIdentity(f"identity {identity!r} is not an element")
    if len(rows) != len(elements) or any(len(r) != len(elements) for r in rows):
        raise FormatError("table must be square over the element list")
    try:
        table = tuple(tuple(index[x] for x in row) for row in rows)
    except KeyError as exc:
        raise FormatError(f"unknown element {exc.args[0]!r} in table") from None
    m = FiniteMonoid(name, elements, index[identity], table)
    m.check()
    return m


def from_operation(name: str, elements: Sequence, op, identity, names=None) -> FiniteMonoid:
    """Tabulate a Python binary operation over a finite carrier."""
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
    names = tuple(names) if names is not None else tuple(str(x) for x in elements)
    return FiniteMonoid(name, names, index[identity], table)


def word_product(m: FiniteMonoid, seq: Iterable[int]) -> int:
    return m.product(seq)


def reversed_monoid(m: FiniteMonoid) -> FiniteMonoid:
    """Same carrier and identity, with a *^R b = b * a."""
    n = len(m)
    table = tuple(tuple(m.table[b][a] for b in range(n)) for a in range(n))
    name = m.name[:-2] if m.name.endswith("^R") else m.name + "^R"
    return FiniteMonoid(name, m.elements, m.identity, table)


def direct_product(m1: FiniteMonoid, m2: FiniteMonoid, name: str | None = None) -> FiniteMonoid:
    pairs = list(itertools.product(range(len(m1)), range(len(m2))))
    index = {p: i for i, p in enumerate(pairs)}
    table = tuple(
        tuple(index[(m1.table[a1][b1], m2.table[a2][b2])] for (b1, b2) in pairs) for (a1, a2) in pairs
    )
    names = tuple(f"<{m1.elements[a]},{m2.elements[b]}>" for a, b in pairs)
    return FiniteMonoid(name or f"{m1.name}x{m2.name}", names, index[(m1.identity, m2.identity)], table)


def is_homomorphism(src: FiniteMonoid, dst: FiniteMonoid, h: Sequence[int]) -> bool:
    if h[src.identity] != dst.identity:
        return False
    n = len(src)
    return all(h[src.table[a][b]] == dst.table[h[a]][h[b]] for a in range(n) for b in range(n))


def generating_set(m: FiniteMonoid, candidates: Iterable[int] | None = None) -> list[int]:
    """A greedy (not necessarily minimum) generating list drawn from `candidates`."""
    candidates = range(len(m)) if candidates is None else candidates
    gens: list[int] = []
    current = m.closure(())
    for c in candidates:
        if c not in current:
            gens.append(c)
            current = m.closure(gens)
    return gens


def extend_morphism(src: FiniteMonoid, gens: Sequence[int], images: Sequence[int], dst: FiniteMonoid):
    """Extend generator images to a morphism on <gens>, or None if ill-defined."""
    h = {src.identity: dst.identity}
    queue = deque([src.identity])
    while queue:
        x = queue.popleft()
        hx = h[x]
        for g, img in zip(gens, images):
            y = src.table[x][g]
            hy = dst.table[hx][img]
            prev = h.get(y)
            if prev is None:
                h[y] = hy
                queue.append(y)
            elif prev != hy:
                return None
    return h


def isomorphic(m1: FiniteMonoid, m2: FiniteMonoid) -> bool:
    if len(m1) != len(m2):
        return False
    gens = generating_set(m1)
    for images in itertools.product(range(len(m2)), repeat=len(gens)):
        h = extend_morphism(m1, gens, images, m2)
        if h is not None and len(set(h.values())) == len(m1):
            return True
    return False


# ---------------------------------------------------------------- letter maps


@dataclass(frozen=True)
class LetterMap:
    """A map gamma from {0,1}^width into a monoid, given by an explicit table."""

    monoid: FiniteMonoid
    width: int
    images: tuple  # indexed by letter code

    def __post_init__(self):
        if len(self.images) != 2**self.width:
            raise MonoidWidthMismatch(f"letter map of width {self.width} needs {2**self.width} images")

    def image(self, letter: Sequence[int]) -> int:
        return self.images[letter_code(letter)]

    def items(self):
        for code, img in enumerate(self.images):
            yield letter_from_code(code, self.width), img


@dataclass(frozen=True)
class OneHotDelta:
    """One-hot encoding of i maps to the i-th element; anything else to the identity."""

    monoid: FiniteMonoid

    @property
    def width(self) -> int:
        return len(self.monoid)

    def image(self, letter: Sequence[int]) -> int:
        if sum(letter) == 1:
            return list(letter).index(1)
        return self.monoid.identity

    def items(self):
        for code in range(2**self.width):
            letter = letter_from_code(code, self.width)
            yield letter, self.image(letter)


@dataclass(frozen=True)
class BlockOneHotDelta:
    """Letters split into `blocks` consecutive |M|-bit blocks.

    A letter maps to m_i when exactly one block is the one-hot encoding of i
    and every other bit is 0; all other letters map to the identity.
    """

    monoid: FiniteMonoid
    blocks: int

    @property
    def width(self) -> int:
        return len(self.monoid) * self.blocks

    def image(self, letter: Sequence[int]) -> int:
        if sum(letter) == 1:
            return list(letter).index(1) % len(self.monoid)
        return self.monoid.identity

    def items(self):
        for code in range(2**self.width):
            letter = letter_from_code(code, self.width)
            yield letter, self.image(letter)


def one_hot_delta(m: FiniteMonoid) -> OneHotDelta:
    return OneHotDelta(m)


def one_hot(i: int, c: int) -> tuple:
    """The c-bit one-hot encoding of the 0-based index i."""
    return tuple(int(j == i) for j in range(c))


def letter_map(m: FiniteMonoid, mapping: Mapping[str, str]) -> LetterMap:
    """Build a letter map from ``{"bits": "element"}``; must be total."""
    widths = {len(bits) for bits in mapping}
    if len(widths) != 1:
        raise MonoidWidthMismatch("letter map keys must all have the same width")
    (k,) = widths
    images = [None] * 2**k
    for bits, elem in mapping.items():
        images[letter_code(str_to_bits(bits))] = m.index(elem)
    if None in images:
        raise MonoidWidthMismatch(f"letter map is not total on {{0,1}}^{k}")
    return LetterMap(m, k, tuple(images))


def gamma_extend(gamma, w: WordStructure) -> int:
    """Homomorphic extension of a letter map to words: gamma(eps) = 1, gamma(wa) = gamma(w)gamma(a)."""
    if w.width != gamma.width:
        raise MonoidWidthMismatch(f"word width {w.width} != letter map width {gamma.width}")
    return gamma.monoid.product(gamma.image(a) for a in w.letters)


# ------------------------------------------------------------------ built-ins


def trivial_monoid(name: str = "1") -> FiniteMonoid:
    return FiniteMonoid(name, ("1",), 0, ((0,),))


def u1() -> FiniteMonoid:
    """({1, 0}, *) with 1 listed first."""
    return FiniteMonoid("U1", ("1", "0"), 0, ((0, 1), (1, 1)))


def cyclic(n: int) -> FiniteMonoid:
    """Z/nZ under addition, elements named 0..n-1."""
    return from_operation(f"C{n}", range(n), lambda a, b: (a + b) % n, 0)


def cycle_notation(perm: Sequence[int]) -> str:
    """Bracketed cycle notation, 1-based: (0,2,1) -> ``[23]``; identity -> ``id``."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("[" + "".join(cyc) + "]")
    return "".join(parts) or "id"


def permutation_monoid(name: str, generators: Sequence[Sequence[int]]) -> FiniteMonoid:
    """Closure of permutation generators, in breadth-first generation order.

    Products compose left to right: (p*q)(x) = q(p(x)).
    """
    degree = len(generators[0])
    ident = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    order = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(g[p[x]] for x in range(degree))
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return from_operation(
        name,
        order,
        lambda p, q: tuple(q[p[x]] for x in range(degree)),
        ident,
        names=[cycle_notation(p) for p in order],
    )


def symmetric(n: int) -> FiniteMonoid:
    """S_n generated by the transposition (1 2) and the n-cycle (1 2 ... n)."""
    transposition = (1, 0) + tuple(range(2, n))
    ncycle = tuple((x + 1) % n for x in range(n))
    return permutation_monoid(f"S{n}", [transposition, ncycle])


def builtin_monoids() -> dict[str, FiniteMonoid]:
    ms = [trivial_monoid(), u1(), cyclic(2), cyclic(3), symmetric(3), symmetric(5)]
    return {m.name: m for m in ms}


# ---------------------------------------------------------------- text format


def parse_monoid(text: str) -> FiniteMonoid:
    """Parse the ``monoid <name>`` text format (header, elements, identity, rows)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("monoid "):
        raise FormatError("expected header 'monoid <name>'")
    name = lines[0].split(None, 1)[1].strip()
    fields = {}
    rows = []
    for ln in lines[1:]:
        key, sep, rest = ln.partition(":")
        if sep and key.strip() in ("elements", "identity"):
            fields[key.strip()] = rest.split()
        else:
            rows.append(ln.split())
    if "elements" not in fields or len(fields.get("identity", [])) != 1:
        raise FormatError("monoid needs 'elements:' and a single 'identity:'")
    return validate(name, fields["elements"], fields["identity"][0], rows)


def format_monoid(m: FiniteMonoid) -> str:
    width = max(len(x) for x in m.elements)
    lines = [
        f"monoid {m.name}",
        "elements: " + " ".join(m.elements),
        f"identity: {m.elements[m.identity]}",
    ]
    for row in m.table:
        lines.append(" ".join(m.elements[x].ljust(width) for x in row).rstrip())
    return "\n".join(lines) + "\n"


def parse_letter_map(text: str, m: FiniteMonoid) -> LetterMap:
    mapping = {}
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        bits, arrow, elem = ln.partition("->")
        if not arrow:
            raise FormatError(f"expected 'bits -> element', got {ln!r}")
        mapping[bits.strip()] = elem.strip()
    return letter_map(m, mapping)


def format_letter_map(gamma) -> str:
    names = gamma.monoid.elements
    return "".join(f"{bits_to_str(bits)} -> {names[img]}\n" for bits, img in gamma.items())
