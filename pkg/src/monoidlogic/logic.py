"""Formula AST for logics over words with multiplication quantifiers.

Concrete syntax is parenthesized prefix notation::

    (and f f) (or f f) (not f) true false
    (exists (v) f) (forall (v) f) (maj (v) f) (sq (v) f)
    (letter i v) (< v v) (= v v) (plus v v v) (times v v v)
    (mq :monoid NAME :accept (e ...) :dim d :gamma G :order ORD (v ...) (f ...))

    G   := ((bits -> e) ...) | (onehot) | (blockonehot l)
    ORD := lex | (genlex DIRS) | (fo (v ...) f)      DIRS in {l,r}+

A monoid name ``X^R`` resolves to the reversed monoid of ``X``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import (
    ArityMismatch,
    FormatError,
    LogicSyntaxError,
    MonoidWidthMismatch,
    UnboundVariable,
    UnknownMonoid,
)
from .monoids import (
    BlockOneHotDelta,
    FiniteMonoid,
    LetterMap,
    OneHotDelta,
    builtin_monoids,
    letter_map,
    reversed_monoid,
)
from .words import bits_to_str


class Formula:
    """Base class of all AST nodes. Nodes are immutable and compare structurally."""

    def children(self) -> tuple:
        return ()

    @cached_property
    def free_vars(self) -> frozenset:
        out: set = set()
        for c in self.children():
            out |= c.free_vars
        return frozenset(out)

    @cached_property
    def free_key(self) -> tuple:
        return tuple(sorted(self.free_vars))

    def __str__(self):
        return render(self)


@dataclass(frozen=True, eq=True)
class Const(Formula):
    value: bool


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Letter(Formula):
    index: int  # 1-based R_index
    var: str

    @cached_property
    def free_vars(self):
        return frozenset((self.var,))


@dataclass(frozen=True)
class Less(Formula):
    left: str
    right: str

    @cached_property
    def free_vars(self):
        return frozenset((self.left, self.right))


@dataclass(frozen=True)
class Equal(Formula):
    left: str
    right: str

    @cached_property
    def free_vars(self):
        return frozenset((self.left, self.right))


@dataclass(frozen=True)
class Plus(Formula):
    """x + y = z."""

    x: str
    y: str
    z: str

    @cached_property
    def free_vars(self):
        return frozenset((self.x, self.y, self.z))


@dataclass(frozen=True)
class Times(Formula):
    """x * y = z."""

    x: str
    y: str
    z: str

    @cached_property
    def free_vars(self):
        return frozenset((self.x, self.y, self.z))


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Quant(Formula):
    """Unary first-order style quantifier binding one variable."""

    kind: str  # exists | forall | maj | sq
    var: str
    body: Formula

    def children(self):
        return (self.body,)

    @cached_property
    def free_vars(self):
        return self.body.free_vars - {self.var}


def Exists(var, body):
    return Quant("exists", var, body)


def Forall(var, body):
    return Quant("forall", var, body)


def Maj(var, body):
    return Quant("maj", var, body)


def Sq(var, body):
    return Quant("sq", var, body)


QUANT_KINDS = ("exists", "forall", "maj", "sq")


@dataclass(frozen=True)
class Lex:
    pass


@dataclass(frozen=True)
class GenLex:
    dirs: tuple  # of "l" / "r"

    def __post_init__(self):
        object.__setattr__(self, "dirs", tuple(self.dirs))
        if not self.dirs or any(x not in ("l", "r") for x in self.dirs):
            raise ArityMismatch(f"genlex directions must be a nonempty l/r string, got {self.dirs}")


@dataclass(frozen=True)
class FoOrder:
    """phi(x_1..x_d, y_1..y_d) holds iff tuple x precedes tuple y."""

    vars: tuple
    formula: Formula

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))

    @property
    def dim(self) -> int:
        return len(self.vars) // 2

    @cached_property
    def params(self) -> frozenset:
        return self.formula.free_vars - set(self.vars)


@dataclass(frozen=True)
class MultQ(Formula):
    monoid: FiniteMonoid
    accept: frozenset
    gamma: object  # LetterMap | OneHotDelta | BlockOneHotDelta
    order: object  # Lex | GenLex | FoOrder
    bound: tuple
    bodies: tuple

    def __post_init__(self):
        object.__setattr__(self, "accept", frozenset(self.accept))
        object.__setattr__(self, "bound", tuple(self.bound))
        object.__setattr__(self, "bodies", tuple(self.bodies))

    @property
    def dim(self) -> int:
        return len(self.bound)

    def children(self):
        return self.bodies

    @cached_property
    def free_vars(self):
        out: set = set()
        for b in self.bodies:
            out |= b.free_vars
        out -= set(self.bound)
        if isinstance(self.order, FoOrder):
            out |= self.order.params
        return frozenset(out)


# ------------------------------------------------------------------ helpers


def conj(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        return TRUE
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def disj(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        return FALSE
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def walk(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal, descending into fo order formulas as well."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        kids = list(g.children())
        if isinstance(g, MultQ) and isinstance(g.order, FoOrder):
            kids.append(g.order.formula)
        stack.extend(reversed(kids))


def node_count(f: Formula) -> int:
    return sum(1 for _ in walk(f))


def mq_nodes(f: Formula) -> list:
    return [g for g in walk(f) if isinstance(g, MultQ)]


def max_mq_dim(f: Formula) -> int:
    return max((g.dim for g in mq_nodes(f)), default=0)


def all_vars(f: Formula) -> set:
    out: set = set()
    for g in walk(f):
        if isinstance(g, Letter):
            out.add(g.var)
        elif isinstance(g, (Less, Equal)):
            out |= {g.left, g.right}
        elif isinstance(g, (Plus, Times)):
            out |= {g.x, g.y, g.z}
        elif isinstance(g, Quant):
            out.add(g.var)
        elif isinstance(g, MultQ):
            out |= set(g.bound)
            if isinstance(g.order, FoOrder):
                out |= set(g.order.vars)
    return out


class FreshNames:
    """Generator of variables ``_r<N>`` not occurring in the given formulas."""

    def __init__(self, *formulas: Formula):
        top = 0
        for f in formulas:
            for v in all_vars(f):
                m = re.fullmatch(r"_r(\d+)", v)
                if m:
                    top = max(top, int(m.group(1)) + 1)
        self.next = top

    def __call__(self) -> str:
        name = f"_r{self.next}"
        self.next += 1
        return name


def substitute(f: Formula, mapping: Mapping[str, str], fresh: FreshNames | None = None) -> Formula:
    """Simultaneously replace free variables; bound variables are renamed on capture."""
    mapping = {k: v for k, v in mapping.items() if k != v}
    if not mapping or not (f.free_vars & mapping.keys()):
        return f
    fresh = fresh or FreshNames(f)
    targets = set(mapping.values())
    r = lambda v: mapping.get(v, v)  # noqa: E731

    if isinstance(f, Letter):
        return Letter(f.index, r(f.var))
    if isinstance(f, Less):
        return Less(r(f.left), r(f.right))
    if isinstance(f, Equal):
        return Equal(r(f.left), r(f.right))
    if isinstance(f, Plus):
        return Plus(r(f.x), r(f.y), r(f.z))
    if isinstance(f, Times):
        return Times(r(f.x), r(f.y), r(f.z))
    if isinstance(f, Not):
        return Not(substitute(f.body, mapping, fresh))
    if isinstance(f, And):
        return And(substitute(f.left, mapping, fresh), substitute(f.right, mapping, fresh))
    if isinstance(f, Or):
        return Or(substitute(f.left, mapping, fresh), substitute(f.right, mapping, fresh))
    if isinstance(f, Quant):
        inner = {k: v for k, v in mapping.items() if k != f.var}
        var = f.var
        if var in targets:
            var = fresh()
            inner[f.var] = var
        return Quant(f.kind, var, substitute(f.body, inner, fresh))
    if isinstance(f, MultQ):
        inner = {k: v for k, v in mapping.items() if k not in f.bound}
        bound = list(f.bound)
        for i, v in enumerate(bound):
            if v in targets:
                bound[i] = fresh()
                inner[v] = bound[i]
        order = f.order
        if isinstance(order, FoOrder):
            omap = {k: v for k, v in mapping.items() if k not in order.vars}
            ovars = list(order.vars)
            for i, v in enumerate(ovars):
                if v in targets:
                    ovars[i] = fresh()
                    omap[v] = ovars[i]
            order = FoOrder(tuple(ovars), substitute(order.formula, omap, fresh))
        bodies = tuple(substitute(b, inner, fresh) for b in f.bodies)
        return MultQ(f.monoid, f.accept, f.gamma, order, tuple(bound), bodies)
    return f


# ---------------------------------------------------------------- rendering


def _render_gamma(g) -> str:
    if isinstance(g, OneHotDelta):
        return "(onehot)"
    if isinstance(g, BlockOneHotDelta):
        return f"(blockonehot {g.blocks})"
    names = g.monoid.elements
    return "(" + " ".join(f"({bits_to_str(bits)} -> {names[img]})" for bits, img in g.items()) + ")"


def _render_order(o) -> str:
    if isinstance(o, Lex):
        return "lex"
    if isinstance(o, GenLex):
        return f"(genlex {''.join(o.dirs)})"
    return f"(fo ({' '.join(o.vars)}) {render(o.formula)})"


def render(f: Formula) -> str:
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Letter):
        return f"(letter {f.index} {f.var})"
    if isinstance(f, Less):
        return f"(< {f.left} {f.right})"
    if isinstance(f, Equal):
        return f"(= {f.left} {f.right})"
    if isinstance(f, Plus):
        return f"(plus {f.x} {f.y} {f.z})"
    if isinstance(f, Times):
        return f"(times {f.x} {f.y} {f.z})"
    if isinstance(f, Not):
        return f"(not {render(f.body)})"
    if isinstance(f, And):
        return f"(and {render(f.left)} {render(f.right)})"
    if isinstance(f, Or):
        return f"(or {render(f.left)} {render(f.right)})"
    if isinstance(f, Quant):
        return f"({f.kind} ({f.var}) {render(f.body)})"
    if isinstance(f, MultQ):
        names = f.monoid.elements
        accept = " ".join(names[i] for i in sorted(f.accept))
        return (
            f"(mq :monoid {f.monoid.name} :accept ({accept}) :dim {f.dim} "
            f":gamma {_render_gamma(f.gamma)} :order {_render_order(f.order)} "
            f"({' '.join(f.bound)}) ({' '.join(render(b) for b in f.bodies)}))"
        )
    raise TypeError(f"not a formula: {f!r}")


# ------------------------------------------------------------------ parsing


@dataclass
class _Tok:
    text: str
    line: int
    col: int


@dataclass
class _List:
    items: list
    line: int
    col: int


_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")
_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_KEYWORDS = {"and", "or", "not", "true", "false", "letter", "plus", "times", "mq", "lex", "fo", "genlex"} | set(
    QUANT_KINDS
)


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split(";", 1)[0]  # ';' starts a comment
        for m in _TOKEN_RE.finditer(line):
            toks.append(_Tok(m.group(), lineno, m.start() + 1))
    return toks


def _read_sexpr(toks: list[_Tok], pos: int):
    if pos >= len(toks):
        last = toks[-1] if toks else _Tok("", 1, 1)
        raise LogicSyntaxError("unexpected end of input", last.line, last.col)
    t = toks[pos]
    if t.text == ")":
        raise LogicSyntaxError("unexpected ')'", t.line, t.col)
    if t.text != "(":
        return t, pos + 1
    items = []
    pos += 1
    while True:
        if pos >= len(toks):
            raise LogicSyntaxError("unclosed '('", t.line, t.col)
        if toks[pos].text == ")":
            return _List(items, t.line, t.col), pos + 1
        item, pos = _read_sexpr(toks, pos)
        items.append(item)


def read_sexprs(text: str) -> list:
    toks = _tokenize(text)
    out = []
    pos = 0
    while pos < len(toks):
        item, pos = _read_sexpr(toks, pos)
        out.append(item)
    return out


def _err(node, message, exc=LogicSyntaxError):
    if exc is LogicSyntaxError:
        return LogicSyntaxError(message, node.line, node.col)
    return exc(f"{node.line}:{node.col}: {message}")


def _atom(node, what="atom") -> str:
    if not isinstance(node, _Tok):
        raise _err(node, f"expected {what}, found a list")
    return node.text


def _var(node) -> str:
    name = _atom(node, "variable")
    if not _VAR_RE.fullmatch(name) or name in _KEYWORDS:
        raise _err(node, f"bad variable name {name!r}")
    return name


def _var_list(node) -> tuple:
    if not isinstance(node, _List):
        raise _err(node, "expected a variable list")
    return tuple(_var(x) for x in node.items)


class _Parser:
    def __init__(self, monoids: Mapping[str, FiniteMonoid]):
        self.monoids = dict(monoids)

    def monoid(self, node) -> FiniteMonoid:
        name = _atom(node, "monoid name")
        if name in self.monoids:
            return self.monoids[name]
        if name.endswith("^R") and name[:-2] in self.monoids:
            m = reversed_monoid(self.monoids[name[:-2]])
            self.monoids[name] = m
            return m
        raise _err(node, f"unknown monoid {name!r}", UnknownMonoid)

    def formula(self, node) -> Formula:
        if isinstance(node, _Tok):
            if node.text == "true":
                return TRUE
            if node.text == "false":
                return FALSE
            raise _err(node, f"unexpected atom {node.text!r}")
        if not node.items:
            raise _err(node, "empty form")
        head = _atom(node.items[0], "operator")
        args = node.items[1:]

        def arity(n):
            if len(args) != n:
                raise _err(node, f"'{head}' takes {n} arguments, got {len(args)}", ArityMismatch)

        if head in ("and", "or"):
            if len(args) < 2:
                raise _err(node, f"'{head}' needs at least 2 arguments", ArityMismatch)
            parts = [self.formula(a) for a in args]
            out = parts[-1]
            for p in reversed(parts[:-1]):
                out = (And if head == "and" else Or)(p, out)
            return out
        if head == "not":
            arity(1)
            return Not(self.formula(args[0]))
        if head in QUANT_KINDS:
            arity(2)
            vs = _var_list(args[0])
            if len(vs) != 1:
                raise _err(args[0], f"'{head}' binds exactly one variable", ArityMismatch)
            return Quant(head, vs[0], self.formula(args[1]))
        if head == "letter":
            arity(2)
            idx = _atom(args[0], "relation index")
            if not idx.isdigit() or int(idx) < 1:
                raise _err(args[0], f"relation index must be a positive integer, got {idx!r}")
            return Letter(int(idx), _var(args[1]))
        if head in ("<", "="):
            arity(2)
            cls = Less if head == "<" else Equal
            return cls(_var(args[0]), _var(args[1]))
        if head in ("plus", "times"):
            arity(3)
            cls = Plus if head == "plus" else Times
            return cls(*(_var(a) for a in args))
        if head == "mq":
            return self.mq(node, args)
        raise _err(node.items[0], f"unknown operator {head!r}")

    def mq(self, node, args) -> MultQ:
        opts = {}
        i = 0
        while i < len(args) and isinstance(args[i], _Tok) and args[i].text.startswith(":"):
            if i + 1 >= len(args):
                raise _err(args[i], f"option {args[i].text} needs a value")
            opts[args[i].text] = args[i + 1]
            i += 2
        rest = args[i:]
        for key in (":monoid", ":accept", ":dim", ":gamma", ":order"):
            if key not in opts:
                raise _err(node, f"mq is missing {key}")
        unknown = set(opts) - {":monoid", ":accept", ":dim", ":gamma", ":order"}
        if unknown:
            raise _err(node, f"unknown mq option(s) {sorted(unknown)}")
        if len(rest) != 2:
            raise _err(node, "mq needs a bound-variable list and a body list", ArityMismatch)
        m = self.monoid(opts[":monoid"])
        acc_node = opts[":accept"]
        if not isinstance(acc_node, _List):
            raise _err(acc_node, "expected an element list")
        try:
            accept = frozenset(m.index(_atom(x, "element")) for x in acc_node.items)
        except FormatError as exc:
            raise _err(acc_node, str(exc)) from None
        dim_text = _atom(opts[":dim"], "dimension")
        if not dim_text.isdigit() or int(dim_text) < 1:
            raise _err(opts[":dim"], f"dimension must be a positive integer, got {dim_text!r}")
        dim = int(dim_text)
        gamma = self.gamma(opts[":gamma"], m)
        bound = _var_list(rest[0])
        if len(bound) != dim:
            raise _err(rest[0], f":dim {dim} but {len(bound)} bound variables", ArityMismatch)
        if len(set(bound)) != len(bound):
            raise _err(rest[0], "repeated bound variable", ArityMismatch)
        if not isinstance(rest[1], _List):
            raise _err(rest[1], "expected a list of body formulas")
        bodies = tuple(self.formula(b) for b in rest[1].items)
        if len(bodies) != gamma.width:
            raise _err(rest[1], f"letter map has width {gamma.width} but {len(bodies)} bodies", ArityMismatch)
        order = self.order(opts[":order"], dim)
        return MultQ(m, accept, gamma, order, bound, bodies)

    def gamma(self, node, m: FiniteMonoid):
        if not isinstance(node, _List) or not node.items:
            raise _err(node, "expected a letter map")
        first = node.items[0]
        if isinstance(first, _Tok):
            if first.text == "onehot" and len(node.items) == 1:
                return OneHotDelta(m)
            if first.text == "blockonehot" and len(node.items) == 2:
                blocks = _atom(node.items[1], "block count")
                if not blocks.isdigit() or int(blocks) < 1:
                    raise _err(node.items[1], "block count must be a positive integer")
                return BlockOneHotDelta(m, int(blocks))
            raise _err(node, "expected (onehot), (blockonehot l) or ((bits -> e) ...)")
        mapping = {}
        for entry in node.items:
            if not isinstance(entry, _List) or len(entry.items) != 3 or _atom(entry.items[1]) != "->":
                raise _err(entry, "expected (bits -> element)")
            bits = _atom(entry.items[0], "bit string")
            if bits in mapping:
                raise _err(entry, f"duplicate letter {bits}")
            mapping[bits] = _atom(entry.items[2], "element")
        try:
            return letter_map(m, mapping)
        except (FormatError, MonoidWidthMismatch) as exc:
            raise _err(node, str(exc), ArityMismatch) from None

    def order(self, node, dim: int):
        if isinstance(node, _Tok):
            if node.text == "lex":
                return Lex()
            raise _err(node, f"unknown order {node.text!r}")
        if not node.items:
            raise _err(node, "empty order")
        head = _atom(node.items[0], "order kind")
        if head == "genlex":
            dirs = "".join(_atom(x, "direction") for x in node.items[1:])
            if len(dirs) != dim or set(dirs) - {"l", "r"}:
                raise _err(node, f"genlex needs {dim} directions from l/r, got {dirs!r}", ArityMismatch)
            return GenLex(tuple(dirs))
        if head == "fo":
            if len(node.items) != 3:
                raise _err(node, "(fo (vars) formula) expected", ArityMismatch)
            vs = _var_list(node.items[1])
            if len(vs) != 2 * dim:
                raise _err(node.items[1], f"fo order of dimension {dim} needs {2 * dim} variables", ArityMismatch)
            if len(set(vs)) != len(vs):
                raise _err(node.items[1], "repeated order variable", ArityMismatch)
            return FoOrder(vs, self.formula(node.items[2]))
        raise _err(node, f"unknown order kind {head!r}")


def parse(
    text: str,
    monoids: Mapping[str, FiniteMonoid] | None = None,
    free: Iterable[str] | None = (),
) -> Formula:
    """Parse one formula.

    `monoids` extends the built-in registry. `free` lists the variables that
    may occur free (default: none, i.e. the formula must be closed); pass
    None to skip the scope check.
    """
    registry = builtin_monoids()
    registry.update(monoids or {})
    forms = read_sexprs(text)
    if len(forms) != 1:
        where = forms[1] if len(forms) > 1 else None
        line, col = (where.line, where.col) if where else (1, 1)
        raise LogicSyntaxError(f"expected exactly one formula, found {len(forms)}", line, col)
    f = _Parser(registry).formula(forms[0])
    if free is not None:
        extra = f.free_vars - set(free)
        if extra:
            raise UnboundVariable(f"unbound variable(s): {', '.join(sorted(extra))}")
    return f


def parse_order(text: str, dim: int, monoids: Mapping[str, FiniteMonoid] | None = None):
    """Parse an order for dimension `dim`: ``lex``, ``(genlex lr)`` or ``(fo (x.. y..) f)``."""
    registry = builtin_monoids()
    registry.update(monoids or {})
    forms = read_sexprs(text)
    if len(forms) != 1:
        raise LogicSyntaxError(f"expected exactly one order, found {len(forms)}", 1, 1)
    return _Parser(registry).order(forms[0], dim)


# ---------------------------------------------------------------- fragments


@dataclass(frozen=True)
class PredicateProfile:
    """Allowed numerical predicates (subset of {'<', '+', '*'}) and, optionally, quantifier kinds."""

    predicates: frozenset = frozenset({"<"})
    quantifiers: frozenset | None = None  # subset of {'exists','forall','maj','sq','mq'}; None = any

    def __post_init__(self):
        object.__setattr__(self, "predicates", frozenset(self.predicates))
        if self.quantifiers is not None:
            object.__setattr__(self, "quantifiers", frozenset(self.quantifiers))


def _is_fo_order_formula(f: Formula) -> bool:
    """MultQ-free, Maj/Sq-free, and over < only."""
    for g in walk(f):
        if isinstance(g, (MultQ, Plus, Times)):
            return False
        if isinstance(g, Quant) and g.kind not in ("exists", "forall"):
            return False
    return True


def check_fragment(
    f: Formula,
    profile: PredicateProfile,
    fragment: str = "any",
    *,
    max_dim: int | None = None,
    delta_only: bool = False,
) -> bool:
    """Does `f` belong to the lex-/fo-/unrestricted fragment over `profile`?

    Order formulas of fo-ordered quantifiers define the interpretation and
    are checked only for being first-order over <; their atoms do not count
    against `profile`. `max_dim` bounds quantifier dimensions and
    `delta_only` demands one-hot letter maps.
    """
    if fragment not in ("lex", "fo", "any"):
        raise ValueError(f"unknown fragment {fragment!r}")
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Less) and "<" not in profile.predicates:
            return False
        if isinstance(g, Plus) and "+" not in profile.predicates:
            return False
        if isinstance(g, Times) and "*" not in profile.predicates:
            return False
        if isinstance(g, Quant) and profile.quantifiers is not None and g.kind not in profile.quantifiers:
            return False
        if isinstance(g, MultQ):
            if profile.quantifiers is not None and "mq" not in profile.quantifiers:
                return False
            if max_dim is not None and g.dim > max_dim:
                return False
            if delta_only and not (isinstance(g.gamma, OneHotDelta) and g.gamma.monoid == g.monoid):
                return False
            if isinstance(g.order, FoOrder):
                if fragment == "lex":
                    return False
                if fragment == "fo" and not _is_fo_order_formula(g.order.formula):
                    return False
        stack.extend(g.children())
    return True


def check_width(f: Formula, width: int) -> bool:
    """Every letter atom refers to a relation among R_1..R_width."""
    return all(g.index <= width for g in walk(f) if isinstance(g, Letter))


__all__ = [
    "And",
    "Const",
    "Equal",
    "Exists",
    "FALSE",
    "FoOrder",
    "Forall",
    "Formula",
    "FreshNames",
    "GenLex",
    "Less",
    "Letter",
    "Lex",
    "LetterMap",
    "Maj",
    "MultQ",
    "Not",
    "Or",
    "Plus",
    "PredicateProfile",
    "Quant",
    "Sq",
    "TRUE",
    "Times",
    "check_fragment",
    "check_width",
    "conj",
    "disj",
    "mq_nodes",
    "node_count",
    "parse",
    "render",
    "substitute",
    "walk",
]
