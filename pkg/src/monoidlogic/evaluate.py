"""Brute-force semantics of formulas over word structures.

This is the oracle every rewriting pass is checked against, so it follows
the definitions literally: a multiplication quantifier multiplies out the
letter-map images of its bodies' truth vectors over all d-tuples of
positions in the quantifier's order. Subformula results are memoized per
word on the values of their free variables.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Mapping

from .errors import FreeVariables, MonoidWidthMismatch, UnboundVariable, WidthMismatch
from .logic import (
    Const,
    Equal,
    FoOrder,
    Formula,
    GenLex,
    Less,
    Letter,
    Lex,
    MultQ,
    Not,
    And,
    Or,
    Plus,
    Quant,
    Times,
)
from .words import WordStructure, words_up_to


def genlex_tuples(n: int, dirs) -> list[tuple]:
    """All d-tuples over 1..n in generalized lexicographic order (l = ascending, r = descending)."""
    ranges = [range(1, n + 1) if d == "l" else range(n, 0, -1) for d in dirs]
    return list(itertools.product(*ranges))


class Evaluator:
    """Evaluates formulas on one fixed word, caching quantified subformulas."""

    def __init__(self, word: WordStructure):
        self.word = word
        self.n = len(word)
        self.memo: dict = {}
        self.order_memo: dict = {}

    def holds(self, f: Formula, env: Mapping[str, int]) -> bool:
        if isinstance(f, Const):
            return f.value
        if isinstance(f, Letter):
            if f.index > self.word.width:
                raise WidthMismatch(f"R_{f.index} used on a word of width {self.word.width}")
            return self.word.holds(f.index, self._get(env, f.var))
        if isinstance(f, Less):
            return self._get(env, f.left) < self._get(env, f.right)
        if isinstance(f, Equal):
            return self._get(env, f.left) == self._get(env, f.right)
        if isinstance(f, Plus):
            return self._get(env, f.x) + self._get(env, f.y) == self._get(env, f.z)
        if isinstance(f, Times):
            return self._get(env, f.x) * self._get(env, f.y) == self._get(env, f.z)
        if isinstance(f, Not):
            return not self.holds(f.body, env)
        if isinstance(f, And):
            return self.holds(f.left, env) and self.holds(f.right, env)
        if isinstance(f, Or):
            return self.holds(f.left, env) or self.holds(f.right, env)

        key = (id(f),) + tuple(self._get(env, v) for v in f.free_key)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if isinstance(f, Quant):
            value = self._quant(f, env)
        elif isinstance(f, MultQ):
            value = self._mult(f, env)
        else:
            raise TypeError(f"not a formula: {f!r}")
        # keep f alive so its id cannot be reused while the memo exists
        self.memo[key] = value
        self.memo.setdefault(("keep", id(f)), f)
        return value

    @staticmethod
    def _get(env, var):
        try:
            return env[var]
        except KeyError:
            raise UnboundVariable(f"variable {var!r} has no value") from None

    def _quant(self, f: Quant, env) -> bool:
        inner = dict(env)
        count = 0
        for p in range(1, self.n + 1):
            inner[f.var] = p
            truth = self.holds(f.body, inner)
            if f.kind == "exists" and truth:
                return True
            if f.kind == "forall" and not truth:
                return False
            count += truth
        if f.kind == "exists":
            return False
        if f.kind == "forall":
            return True
        if f.kind == "maj":
            return 2 * count >= self.n
        return count > 0 and math.isqrt(count) ** 2 == count  # sq

    def order_tuples(self, f: MultQ, env) -> list[tuple] | None:
        """The d-tuples in the quantifier's order, or None when an fo order is not linear."""
        order = f.order
        if isinstance(order, Lex):
            return genlex_tuples(self.n, "l" * f.dim)
        if isinstance(order, GenLex):
            return genlex_tuples(self.n, order.dirs)
        key = (id(order),) + tuple(self._get(env, v) for v in sorted(order.params))
        if key in self.order_memo:
            return self.order_memo[key]
        result = self._fo_order(order, f.dim, env)
        self.order_memo[key] = result
        self.memo.setdefault(("keep", id(order)), order)
        return result

    def _fo_order(self, order: FoOrder, d: int, env) -> list[tuple] | None:
        tuples = list(itertools.product(range(1, self.n + 1), repeat=d))
        xs, ys = order.vars[:d], order.vars[d:]
        inner = dict(env)
        wins = {t: 0 for t in tuples}
        for a in tuples:
            inner.update(zip(xs, a))
            for b in tuples:
                inner.update(zip(ys, b))
                if self.holds(order.formula, inner):
                    if a == b:
                        return None  # not irreflexive
                    wins[a] += 1
        # With scores N-1..0 and every ranked pair related, the relation has exactly
        # the N(N-1)/2 pairs of the ranking, so it is that strict linear order.
        ranked = sorted(tuples, key=lambda t: -wins[t])
        if [wins[t] for t in ranked] != list(range(len(tuples) - 1, -1, -1)):
            return None
        for i, a in enumerate(ranked):
            inner.update(zip(xs, a))
            for b in ranked[i + 1:]:
                inner.update(zip(ys, b))
                if not self.holds(order.formula, inner):
                    return None
        return ranked

    def _mult(self, f: MultQ, env) -> bool:
        gamma = f.gamma
        if gamma.width != len(f.bodies):
            raise MonoidWidthMismatch(f"letter map width {gamma.width} but {len(f.bodies)} bodies")
        tuples = self.order_tuples(f, env)
        if tuples is None:
            return False
        table = f.monoid.table
        acc = f.monoid.identity
        inner = dict(env)
        for t in tuples:
            inner.update(zip(f.bound, t))
            bits = tuple(int(self.holds(b, inner)) for b in f.bodies)
            acc = table[acc][gamma.image(bits)]
        return acc in f.accept


def evaluate(f: Formula, word: WordStructure, assignment: Mapping[str, int] | None = None) -> bool:
    """Truth of f on `word` under `assignment` (variables to 1-based positions)."""
    assignment = dict(assignment or {})
    for v, p in assignment.items():
        if not 1 <= p <= len(word):
            raise UnboundVariable(f"{v} = {p} is not a position of a word of length {len(word)}")
    missing = f.free_vars - assignment.keys()
    if missing:
        raise UnboundVariable(f"no value for free variable(s) {', '.join(sorted(missing))}")
    return Evaluator(word).holds(f, assignment)


def is_linear_order(order: FoOrder, word: WordStructure, assignment: Mapping[str, int] | None = None) -> bool:
    """Does the order formula define a strict linear order on d-tuples of positions?"""
    return Evaluator(word)._fo_order(order, order.dim, dict(assignment or {})) is not None


def fo_order_tuples(order: FoOrder, word: WordStructure, assignment: Mapping[str, int] | None = None):
    """All d-tuples sorted by the order formula, or None if it is not a strict linear order."""
    return Evaluator(word)._fo_order(order, order.dim, dict(assignment or {}))


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("MONOIDLOGIC_THREADS", "1")))
    except ValueError:
        return 1


def _check_closed(f: Formula):
    if f.free_vars:
        raise FreeVariables(f"formula has free variable(s) {', '.join(sorted(f.free_vars))}")


def truth_table(f: Formula, words: Iterable[WordStructure], threads: int | None = None) -> list[bool]:
    """Truth of a closed formula on each word, in input order."""
    _check_closed(f)
    words = list(words)
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(words) < 2:
        return [Evaluator(w).holds(f, {}) for w in words]
    with ThreadPoolExecutor(threads) as pool:
        return list(pool.map(lambda w: Evaluator(w).holds(f, {}), words))


def language_of(f: Formula, k: int, n: int, threads: int | None = None) -> list[WordStructure]:
    """Words of width k and length <= n satisfying the closed formula f, in shortlex order."""
    words = list(words_up_to(k, n))
    return [w for w, t in zip(words, truth_table(f, words, threads)) if t]
