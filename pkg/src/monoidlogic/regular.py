"""DFAs over {0,1}^k, minimization, equivalence, and syntactic monoids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import FormatError, WidthMismatch
from .monoids import FiniteMonoid, LetterMap
from .words import (
    WordStructure,
    bits_to_str,
    format_word,
    letter_code,
    letter_from_code,
    str_to_bits,
    words_up_to,
)


@dataclass(frozen=True)
class Dfa:
    width: int
    states: int
    start: int
    accepting: frozenset
    transitions: tuple  # transitions[state][letter code]
    name: str = "dfa"

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "transitions", tuple(tuple(row) for row in self.transitions))
        if not 0 <= self.start < self.states:
            raise FormatError(f"start state {self.start} out of range")
        if any(not 0 <= q < self.states for q in self.accepting):
            raise FormatError("accepting state out of range")
        if len(self.transitions) != self.states:
            raise FormatError("transition table must have one row per state")
        for row in self.transitions:
            if len(row) != 2**self.width or any(not 0 <= q < self.states for q in row):
                raise FormatError("transitions must be total and in range")

    @property
    def alphabet_size(self) -> int:
        return 2**self.width

    def step(self, q: int, code: int) -> int:
        return self.transitions[q][code]

    def run(self, w: WordStructure, q: int | None = None) -> int:
        q = self.start if q is None else q
        for a in w.letters:
            q = self.transitions[q][letter_code(a)]
        return q

    def accepts(self, w: WordStructure) -> bool:
        if w.width != self.width:
            raise WidthMismatch(f"word width {w.width} != DFA width {self.width}")
        return self.run(w) in self.accepting

    __contains__ = accepts


def dfa_from_function(width: int, start, accept: Callable, step: Callable, name="dfa") -> Dfa:
    """Build a DFA from Python callables by exploring the states reachable from `start`."""
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        q = order[i]
        row = []
        for code in range(2**width):
            r = step(q, letter_from_code(code, width))
            if r not in index:
                index[r] = len(order)
                order.append(r)
            row.append(index[r])
        rows.append(row)
        i += 1
    accepting = {index[q] for q in order if accept(q)}
    return Dfa(width, len(order), 0, accepting, rows, name)


def complement(d: Dfa) -> Dfa:
    return Dfa(d.width, d.states, d.start, set(range(d.states)) - d.accepting, d.transitions, d.name + "^c")


def reachable(d: Dfa) -> list[int]:
    seen = {d.start}
    order = [d.start]
    queue = deque([d.start])
    while queue:
        q = queue.popleft()
        for r in d.transitions[q]:
            if r not in seen:
                seen.add(r)
                order.append(r)
                queue.append(r)
    return order


def minimize(d: Dfa) -> Dfa:
    """Minimal DFA for the same language (Moore partition refinement).

    States of the result are numbered in breadth-first order from the start.
    """
    live = reachable(d)
    block = {q: int(q in d.accepting) for q in live}
    while True:
        sig = {q: (block[q],) + tuple(block[r] for r in d.transitions[q]) for q in live}
        renum: dict = {}
        new_block = {q: renum.setdefault(sig[q], len(renum)) for q in live}
        if len(renum) == len(set(block.values())):
            break
        block = new_block
    # renumber classes by BFS from the start class
    rep = {}
    for q in live:
        rep.setdefault(block[q], q)
    order = [block[d.start]]
    index = {block[d.start]: 0}
    i = 0
    while i < len(order):
        for r in d.transitions[rep[order[i]]]:
            b = block[r]
            if b not in index:
                index[b] = len(order)
                order.append(b)
        i += 1
    rows = [[index[block[r]] for r in d.transitions[rep[b]]] for b in order]
    accepting = {index[b] for b in order if rep[b] in d.accepting}
    return Dfa(d.width, len(order), 0, accepting, rows, d.name)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return find_difference(d1, d2) is None


def find_difference(d1: Dfa, d2: Dfa) -> WordStructure | None:
    """Shortest word (shortlex-least) on which the two DFAs disagree, or None."""
    if d1.width != d2.width:
        raise WidthMismatch(f"widths {d1.width} and {d2.width} differ")
    start = (d1.start, d2.start)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if (p[0] in d1.accepting) != (p[1] in d2.accepting):
            letters = []
            while parent[p] is not None:
                p, code = parent[p]
                letters.append(letter_from_code(code, d1.width))
            return WordStructure(d1.width, tuple(reversed(letters)))
        for code in range(d1.alphabet_size):
            r = (d1.transitions[p[0]][code], d2.transitions[p[1]][code])
            if r not in parent:
                parent[r] = (p, code)
                queue.append(r)
    return None


def lang_upto(d: Dfa, n: int) -> set:
    return {w for w in words_up_to(d.width, n) if d.accepts(w)}


def dfa_from_monoid(m: FiniteMonoid, gamma, accept: Iterable[int], name: str = "dfa") -> Dfa:
    """The DFA reading gamma-images left to right in m and accepting on `accept`."""
    accept = frozenset(accept)
    codes = range(2**gamma.width)
    images = [gamma.image(letter_from_code(c, gamma.width)) for c in codes]
    rows = [[m.table[x][img] for img in images] for x in range(len(m))]
    base = Dfa(gamma.width, len(m), m.identity, accept, rows, name)
    return _restrict_reachable(base)


def _restrict_reachable(d: Dfa) -> Dfa:
    live = reachable(d)
    index = {q: i for i, q in enumerate(live)}
    rows = [[index[r] for r in d.transitions[q]] for q in live]
    return Dfa(d.width, len(live), 0, {index[q] for q in live if q in d.accepting}, rows, d.name)


@dataclass(frozen=True)
class SyntacticMonoidResult:
    monoid: FiniteMonoid
    letter_images: LetterMap
    accept_set: frozenset
    words: tuple  # shortlex-least representative of each element

    def dfa(self) -> Dfa:
        return dfa_from_monoid(self.monoid, self.letter_images, self.accept_set)


def syntactic_monoid(d: Dfa, name: str | None = None) -> SyntacticMonoidResult:
    """Transition monoid of the minimal DFA, which is the syntactic monoid of L(d).

    Elements are discovered breadth-first over letters in code order, so each
    is named by the shortlex-least word that induces it.
    """
    md = minimize(d)
    k = md.width
    ident = tuple(range(md.states))
    letter_fns = [tuple(md.transitions[q][c] for q in range(md.states)) for c in range(md.alphabet_size)]
    funcs = [ident]
    reps = [WordStructure(k, ())]
    index = {ident: 0}
    i = 0
    while i < len(funcs):
        f = funcs[i]
        for c, g in enumerate(letter_fns):
            h = tuple(g[f[q]] for q in range(md.states))  # f then g
            if h not in index:
                index[h] = len(funcs)
                funcs.append(h)
                reps.append(WordStructure(k, reps[i].letters + (letter_from_code(c, k),)))
        i += 1
    table = tuple(
        tuple(index[tuple(g[f[q]] for q in range(md.states))] for g in funcs) for f in funcs
    )
    names = tuple(format_word(w) for w in reps)
    monoid = FiniteMonoid(name or f"syn({d.name})", names, 0, table)
    gamma = LetterMap(monoid, k, tuple(index[g] for g in letter_fns))
    accept = frozenset(i for i, f in enumerate(funcs) if f[md.start] in md.accepting)
    return SyntacticMonoidResult(monoid, gamma, accept, tuple(reps))


# ---------------------------------------------------------------- text format


def parse_dfa(text: str) -> Dfa:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("dfa"):
        raise FormatError("expected header 'dfa <name>'")
    parts = lines[0].split(None, 1)
    name = parts[1].strip() if len(parts) > 1 else "dfa"
    fields: dict = {}
    trans: dict = {}
    for ln in lines[1:]:
        if "->" in ln:
            lhs, rhs = ln.split("->")
            try:
                q, bits = lhs.split()
                trans[(int(q), letter_code(str_to_bits(bits)))] = int(rhs)
            except ValueError:
                raise FormatError(f"bad transition line {ln!r}") from None
        else:
            key, sep, rest = ln.partition(":")
            if not sep:
                raise FormatError(f"unexpected line {ln!r}")
            fields[key.strip()] = rest.split()
    try:
        width = int(fields["width"][0])
        states = int(fields["states"][0])
        start = int(fields["start"][0])
        accept = {int(x) for x in fields.get("accept", [])}
    except (KeyError, IndexError, ValueError):
        raise FormatError("dfa needs width:, states:, start: and accept: fields") from None
    rows = []
    for q in range(states):
        row = []
        for c in range(2**width):
            if (q, c) not in trans:
                raise FormatError(f"missing transition from state {q} on letter code {c}")
            row.append(trans[(q, c)])
        rows.append(row)
    return Dfa(width, states, start, accept, rows, name)


def format_dfa(d: Dfa) -> str:
    lines = [
        f"dfa {d.name}",
        f"width: {d.width}",
        f"states: {d.states}",
        f"start: {d.start}",
        "accept: " + " ".join(str(q) for q in sorted(d.accepting)),
    ]
    for q in range(d.states):
        for c in range(d.alphabet_size):
            lines.append(f"{q} {bits_to_str(letter_from_code(c, d.width))} -> {d.transitions[q][c]}")
    return "\n".join(lines) + "\n"
