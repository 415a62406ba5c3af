"""Semantics-preserving passes over formulas with multiplication quantifiers.

* one_hot_normalize: any letter map gamma -> the one-hot map delta of M.
* collapse_lex: a lex-ordered delta-form quantifier of dimension d becomes
  a unary quantifier over x_1 whose c bodies are (d-1)-dimensional
  quantifiers with singleton accept sets {m_i}, collapsed recursively.
* unarize: both of the above, bottom-up; genlex coordinates running
  right-to-left use the reversed monoid at their level.
* apply_enumerator: replaces an fo-ordered quantifier by one over the loop
  variables of a for-program, ordered by the loop directions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import EnumeratorArityMismatch, EnumeratorOrderMismatch, NotLex, NotNormalized
from .evaluate import Evaluator, truth_table
from .forprog import ForProgram, directions_as_dirs, run
from .logic import (
    FALSE,
    TRUE,
    And,
    Const,
    Equal,
    FoOrder,
    Formula,
    FreshNames,
    GenLex,
    Less,
    Letter,
    Lex,
    MultQ,
    Not,
    Or,
    Quant,
    conj,
    disj,
    mq_nodes,
    node_count,
    render,
    substitute,
)
from .monoids import BlockOneHotDelta, FiniteMonoid, LetterMap, OneHotDelta, reversed_monoid
from .words import WordStructure, words_of_length, words_up_to


def map_mq(f: Formula, fn) -> Formula:
    """Rebuild f bottom-up, replacing each MultQ node g (bodies already rebuilt) by fn(g)."""
    if isinstance(f, (Const, Letter, Less, Equal)) or not f.children():
        return f
    if isinstance(f, Not):
        return Not(map_mq(f.body, fn))
    if isinstance(f, And):
        return And(map_mq(f.left, fn), map_mq(f.right, fn))
    if isinstance(f, Or):
        return Or(map_mq(f.left, fn), map_mq(f.right, fn))
    if isinstance(f, Quant):
        return Quant(f.kind, f.var, map_mq(f.body, fn))
    if isinstance(f, MultQ):
        bodies = tuple(map_mq(b, fn) for b in f.bodies)
        return fn(MultQ(f.monoid, f.accept, f.gamma, f.order, f.bound, bodies))
    return f


def _is_delta(g: MultQ) -> bool:
    return isinstance(g.gamma, OneHotDelta) and g.gamma.monoid == g.monoid


# --------------------------------------------------------------- one-hot


def _psi_table(gamma, bodies) -> list[Formula]:
    """psi_t = OR over letters w with gamma(w) = t of the conjunction of phi_i / not phi_i."""
    c = len(gamma.monoid)
    groups: list[list] = [[] for _ in range(c)]
    for bits, img in gamma.items():
        groups[img].append(conj(b if bit else Not(b) for b, bit in zip(bodies, bits)))
    return [disj(g) for g in groups]


def _psi_one_hot_like(gamma, bodies) -> list[Formula]:
    """Same truth values as _psi_table for one-hot style maps, without the 2^k blowup.

    Such a map sends the one-hot letter with bit p set to image(p) and every
    other letter to the identity.
    """
    m = gamma.monoid
    k = len(bodies)
    exactly = [conj([bodies[p]] + [Not(bodies[q]) for q in range(k) if q != p]) for p in range(k)]
    none = conj(Not(b) for b in bodies)
    two = disj(And(bodies[p], bodies[q]) for p, q in itertools.combinations(range(k), 2))
    psi = []
    for t in range(len(m)):
        parts = [exactly[p] for p in range(k) if gamma.image(tuple(int(q == p) for q in range(k))) == t]
        if t == m.identity:
            parts.append(none)
            if k >= 2:
                parts.append(two)
        psi.append(disj(parts))
    return psi


def psi_formulas(g: MultQ) -> list[Formula]:
    """Bodies of the delta-form equivalent of g, one per monoid element."""
    if isinstance(g.gamma, (OneHotDelta, BlockOneHotDelta)):
        return _psi_one_hot_like(g.gamma, g.bodies)
    return _psi_table(g.gamma, g.bodies)


def normalize_node(g: MultQ) -> MultQ:
    if _is_delta(g):
        return g
    return MultQ(g.monoid, g.accept, OneHotDelta(g.monoid), g.order, g.bound, tuple(psi_formulas(g)))


def one_hot_normalize(f: Formula) -> Formula:
    """Replace every letter map by the one-hot map delta of the same monoid."""
    return map_mq(f, normalize_node)


# --------------------------------------------------------------- collapse


def _collapse(g: MultQ, dirs: tuple) -> MultQ:
    """Unary nesting equivalent to the delta-form node g whose coordinates run in `dirs`."""
    m = g.monoid
    outer = m if dirs[0] == "l" else reversed_monoid(m)
    if g.dim == 1:
        return MultQ(outer, g.accept, OneHotDelta(outer), Lex(), g.bound, g.bodies)
    rest = g.bound[1:]
    inner_order = GenLex(dirs[1:])
    thetas = tuple(
        _collapse(MultQ(m, {i}, OneHotDelta(m), inner_order, rest, g.bodies), dirs[1:]) for i in range(len(m))
    )
    return MultQ(outer, g.accept, OneHotDelta(outer), Lex(), g.bound[:1], thetas)


def _node_dirs(g: MultQ) -> tuple:
    if isinstance(g.order, Lex):
        return ("l",) * g.dim
    if isinstance(g.order, GenLex):
        return g.order.dirs
    raise NotLex(f"quantifier with an fo order cannot be collapsed: {render(g)[:80]}")


def collapse_lex(f: Formula) -> Formula:
    """Collapse every lex delta-form quantifier to nested unary ones."""

    def step(g: MultQ) -> MultQ:
        if not _is_delta(g):
            raise NotNormalized(f"letter map of {g.monoid.name} quantifier is not one-hot; normalize first")
        if not isinstance(g.order, Lex):
            raise NotLex(f"collapse_lex needs lex orders, found {type(g.order).__name__}")
        return _collapse(g, ("l",) * g.dim)

    return map_mq(f, step)


def unarize(f: Formula) -> Formula:
    """Equivalent formula whose multiplication quantifiers are all unary and one-hot."""

    def step(g: MultQ) -> MultQ:
        dirs = _node_dirs(g)
        return _collapse(normalize_node(g), dirs)

    return map_mq(f, step)


# ------------------------------------------------------------- enumerators


def _check_program(P: ForProgram, g: MultQ):
    if P.output_dim != g.dim:
        raise EnumeratorArityMismatch(f"program outputs {P.output_dim}-tuples, quantifier has dimension {g.dim}")


def _order_tuples(g: MultQ, w: WordStructure, env: dict):
    return Evaluator(w).order_tuples(g, env)


def validate_against_order(P: ForProgram, g: MultQ, upto: int, width: int = 1) -> None:
    """Raise unless run(P) equals the quantifier's tuple order on every word up to length `upto`.

    Order parameters range over all positions of each word.
    """
    _check_program(P, g)
    params = sorted((g.order.params if isinstance(g.order, FoOrder) else set()) | P.params)
    for w in words_up_to(width, upto):
        n = len(w)
        if params and n == 0:
            continue
        for values in itertools.product(range(1, n + 1), repeat=len(params)):
            env = dict(zip(params, values))
            expected = _order_tuples(g, w, env)
            if expected is None:
                raise EnumeratorOrderMismatch(f"order formula is not a strict linear order on word {w} with {env}")
            got = run(P, w, env)
            if got != expected:
                raise EnumeratorOrderMismatch(
                    f"program {P.name} disagrees with the quantifier order on word {w} with {env}"
                )


def enumerator_node(g: MultQ, P: ForProgram, fresh: FreshNames | None = None) -> MultQ:
    """The quantifier over P's loop variables: bodies theta_j and psi_{m_j'} at output j, block one-hot map."""
    _check_program(P, g)
    fresh = fresh or FreshNames(g, *P.guards)
    g = normalize_node(g)
    m = g.monoid
    c = len(m)
    ys = tuple(fresh() for _ in P.loop_vars)
    rename = dict(zip(P.loop_vars, ys))
    bodies = []
    for guard, out in zip(P.guards, P.outputs):
        theta = substitute(guard, rename, fresh)
        target = {v: ys[i - 1] for v, i in zip(g.bound, out)}
        for psi in g.bodies:
            bodies.append(And(theta, substitute(psi, target, fresh)))
    blocks = len(P.guards)
    gamma = OneHotDelta(m) if blocks == 1 else BlockOneHotDelta(m, blocks)
    dirs = directions_as_dirs(P)
    order = Lex() if all(d == "l" for d in dirs) else GenLex(dirs)
    assert len(bodies) == blocks * c
    return MultQ(m, g.accept, gamma, order, ys, tuple(bodies))


def apply_enumerator(f: Formula, P: ForProgram, validate_upto: int | None = 3, width: int = 1) -> Formula:
    """Replace f (an fo-ordered quantifier) by the quantifier built from the for-program P.

    When `validate_upto` is set, P's output order is first compared with the
    quantifier's own order on every word up to that length.
    """
    if not isinstance(f, MultQ):
        raise EnumeratorArityMismatch("apply_enumerator expects a multiplication quantifier node")
    if validate_upto is not None:
        validate_against_order(P, f, validate_upto, width)
    return enumerator_node(f, P)


def apply_enumerator_everywhere(f: Formula, P: ForProgram, validate_upto: int | None = 3, width: int = 1) -> Formula:
    """apply_enumerator at every fo-ordered quantifier whose dimension matches P (bottom-up)."""

    def step(g: MultQ) -> MultQ:
        if isinstance(g.order, FoOrder) and g.dim == P.output_dim:
            return apply_enumerator(g, P, validate_upto, width)
        return g

    return map_mq(f, step)


# ------------------------------------------------------------ equivalence


def equivalent_upto(f1: Formula, f2: Formula, k: int, n: int, threads: int | None = None):
    """(True, None) if f1 and f2 agree on every word of width k and length <= n,
    else (False, shortest shortlex-first word where they differ)."""
    for length in range(n + 1):
        words = list(words_of_length(k, length))
        a = truth_table(f1, words, threads)
        b = truth_table(f2, words, threads)
        for w, x, y in zip(words, a, b):
            if x != y:
                return False, w
    return True, None


# ----------------------------------------------------------------- reports


@dataclass
class RewriteReport:
    input: Formula
    output: Formula
    passes: list = field(default_factory=list)
    node_counts: list = field(default_factory=list)  # input first, then after each pass
    monoids_introduced: list = field(default_factory=list)

    def text(self) -> str:
        lines = [f"passes: {' '.join(self.passes) or '(none)'}"]
        lines.append("node counts: " + " -> ".join(str(c) for c in self.node_counts))
        lines.append("monoids introduced: " + (" ".join(self.monoids_introduced) or "(none)"))
        lines.append(f"max quantifier dimension: {max((g.dim for g in mq_nodes(self.output)), default=0)}")
        lines.append("output:")
        lines.append(render(self.output))
        return "\n".join(lines) + "\n"


def rewrite(f: Formula, passes, program: ForProgram | None = None, validate_upto: int | None = 3) -> RewriteReport:
    """Run named passes (onehot, collapse, unarize, enumerator) in order, recording a report."""
    report = RewriteReport(f, f, [], [node_count(f)], [])
    before = {g.monoid.name for g in mq_nodes(f)}
    current = f
    for name in passes:
        if name == "onehot":
            current = one_hot_normalize(current)
        elif name == "collapse":
            current = collapse_lex(current)
        elif name == "unarize":
            current = unarize(current)
        elif name == "enumerator":
            if program is None:
                raise EnumeratorArityMismatch("the enumerator pass needs a for-program")
            current = apply_enumerator_everywhere(current, program, validate_upto)
        else:
            raise ValueError(f"unknown pass {name!r}")
        report.passes.append(name)
        report.node_counts.append(node_count(current))
    report.output = current
    after = []
    for g in mq_nodes(current):
        if g.monoid.name not in before and g.monoid.name not in after:
            after.append(g.monoid.name)
    report.monoids_introduced = after
    return report


# ------------------------------------------------------ random formulas


class FormulaGenerator:
    """Random closed formulas of lex-(FO + Maj + multiplication quantifiers)[<] for property tests."""

    def __init__(self, monoids, rng: random.Random, max_dim: int = 2, max_depth: int = 2,
                 genlex: bool = False, unary_quantifiers=("exists", "forall")):
        self.monoids = list(monoids)
        self.rng = rng
        self.max_dim = max_dim
        self.max_depth = max_depth
        self.genlex = genlex
        self.unary = tuple(unary_quantifiers)
        self.counter = 0

    def fresh(self) -> str:
        self.counter += 1
        return f"v{self.counter}"

    def atom(self, scope):
        r = self.rng
        if not scope:
            return r.choice([TRUE, FALSE])
        kind = r.random()
        if kind < 0.5 or len(scope) < 2:
            return Letter(1, r.choice(scope))
        a, b = r.sample(scope, 2)
        return Less(a, b) if kind < 0.85 else Equal(a, b)

    def formula(self, scope, depth):
        r = self.rng
        roll = r.random()
        if depth <= 0 or roll < 0.3:
            base = self.atom(scope)
            return Not(base) if r.random() < 0.3 else base
        if roll < 0.45:
            return r.choice([And, Or])(self.formula(scope, depth - 1), self.formula(scope, depth - 1))
        if roll < 0.6 and self.unary:
            v = self.fresh()
            return Quant(r.choice(self.unary), v, self.formula(scope + [v], depth - 1))
        return self.mq(scope, depth)

    def letter_map(self, m: FiniteMonoid, k: int):
        return LetterMap(m, k, tuple(self.rng.randrange(len(m)) for _ in range(2**k)))

    def mq(self, scope, depth):
        r = self.rng
        m = r.choice(self.monoids)
        d = r.randint(1, self.max_dim)
        bound = [self.fresh() for _ in range(d)]
        k = r.randint(1, 2)
        bodies = tuple(self.formula(scope + bound, depth - 1) for _ in range(k))
        accept = frozenset(x for x in range(len(m)) if r.random() < 0.5)
        if self.genlex and d > 1 and r.random() < 0.5:
            order = GenLex(tuple(r.choice("lr") for _ in range(d)))
        else:
            order = Lex()
        return MultQ(m, accept, self.letter_map(m, k), order, tuple(bound), bodies)

    def closed(self):
        return self.mq([], self.max_depth)
