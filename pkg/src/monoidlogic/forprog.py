"""For-programs: nested directional loops whose guarded outputs enumerate d-tuples.

A program with loops y_1..y_d' runs every assignment of [n]^d' in nested
loop order. For each assignment at most one guard may hold; when guard j
holds, the tuple (y_{i_1}, ..., y_{i_d}) of output j is emitted.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import FormatError, GuardOverlap, InvalidForProgram, NotLinearOrder
from .evaluate import Evaluator, fo_order_tuples
from .logic import (
    TRUE,
    FoOrder,
    Formula,
    Letter,
    MultQ,
    Plus,
    Quant,
    Times,
    parse,
    render,
    walk,
)
from .words import WordStructure

ASC, DESC = "asc", "desc"


def _is_fo_less(f: Formula) -> bool:
    for g in walk(f):
        if isinstance(g, (MultQ, Plus, Times)):
            return False
        if isinstance(g, Quant) and g.kind not in ("exists", "forall"):
            return False
    return True


@dataclass(frozen=True)
class ForProgram:
    name: str
    loop_vars: tuple  # y_1..y_d'
    directions: tuple  # "asc" / "desc" per loop
    guards: tuple  # formulas
    outputs: tuple  # per guard, a tuple of 1-based loop indices
    output_dim: int

    def __post_init__(self):
        for attr in ("loop_vars", "directions", "guards"):
            object.__setattr__(self, attr, tuple(getattr(self, attr)))
        object.__setattr__(self, "outputs", tuple(tuple(o) for o in self.outputs))
        if not self.loop_vars:
            raise InvalidForProgram("a for-program needs at least one loop")
        if len(set(self.loop_vars)) != len(self.loop_vars):
            raise InvalidForProgram("loop variables must be distinct")
        if len(self.directions) != len(self.loop_vars) or set(self.directions) - {ASC, DESC}:
            raise InvalidForProgram("each loop needs a direction asc or desc")
        if len(self.guards) != len(self.outputs):
            raise InvalidForProgram("each guard needs exactly one output tuple")
        if self.output_dim < 1:
            raise InvalidForProgram("output dimension must be positive")
        for g in self.guards:
            if not _is_fo_less(g):
                raise InvalidForProgram(f"guard {render(g)} is not a first-order formula over <")
        for out in self.outputs:
            if len(out) != self.output_dim:
                raise InvalidForProgram(f"output {out} does not have {self.output_dim} coordinates")
            if any(not 1 <= i <= len(self.loop_vars) for i in out):
                raise InvalidForProgram(f"output {out} refers to a loop that does not exist")

    @property
    def loop_count(self) -> int:
        return len(self.loop_vars)

    @property
    def params(self) -> frozenset:
        free: set = set()
        for g in self.guards:
            free |= g.free_vars
        return frozenset(free - set(self.loop_vars))

    def width_needed(self) -> int:
        return max((g.index for f in self.guards for g in walk(f) if isinstance(g, Letter)), default=1)


def _as_word(P: ForProgram, structure) -> WordStructure:
    if isinstance(structure, WordStructure):
        return structure
    return WordStructure(P.width_needed(), ((0,) * P.width_needed(),) * int(structure))


def run(P: ForProgram, structure, assignment: Mapping[str, int] | None = None) -> list[tuple]:
    """The output sequence of P on a word (or on a size n, using an all-zero word)."""
    w = _as_word(P, structure)
    n = len(w)
    ev = Evaluator(w)
    env = dict(assignment or {})
    ranges = [range(1, n + 1) if d == ASC else range(n, 0, -1) for d in P.directions]
    out = []
    for values in itertools.product(*ranges):
        env.update(zip(P.loop_vars, values))
        fired = [j for j, g in enumerate(P.guards) if ev.holds(g, env)]
        if len(fired) > 1:
            raise GuardOverlap(dict(zip(P.loop_vars, values)), tuple(fired[:2]))
        if fired:
            out.append(tuple(values[i - 1] for i in P.outputs[fired[0]]))
    return out


def validate_enumerator(P: ForProgram, structure, assignment: Mapping[str, int] | None = None) -> bool:
    """Does P list every tuple of [n]^d exactly once?"""
    tuples = run(P, structure, assignment)
    n = len(_as_word(P, structure))
    counts = Counter(tuples)
    return len(counts) == n**P.output_dim and all(c == 1 for c in counts.values())


def genlex_program(d: int, dirs: Sequence[str], name: str | None = None) -> ForProgram:
    """d loops, loop i ascending iff dirs[i] == 'l', one `true` guard, output (y_1..y_d)."""
    dirs = tuple(dirs)
    if len(dirs) != d or not dirs or set(dirs) - {"l", "r"}:
        raise InvalidForProgram(f"need {d} directions from l/r, got {dirs}")
    return ForProgram(
        name or f"genlex-{''.join(dirs)}",
        tuple(f"y{i}" for i in range(1, d + 1)),
        tuple(ASC if x == "l" else DESC for x in dirs),
        (TRUE,),
        (tuple(range(1, d + 1)),),
        d,
    )


def matches_order(P: ForProgram, order: FoOrder, word: WordStructure, assignment: Mapping[str, int] | None = None) -> bool:
    """Is run(P, word) the list of all d-tuples sorted by the order formula?"""
    if order.dim != P.output_dim:
        return False
    expected = fo_order_tuples(order, word, assignment)
    if expected is None:
        raise NotLinearOrder(f"order formula is not a strict linear order on words like {word}")
    try:
        return run(P, word, assignment) == expected
    except GuardOverlap:
        return False


def directions_as_dirs(P: ForProgram) -> tuple:
    return tuple("l" if d == ASC else "r" for d in P.directions)


# ---------------------------------------------------------------- text format

_LOOP_RE = re.compile(r"\(\s*([A-Za-z_][A-Za-z0-9_']*)\s+(asc|desc)\s*\)")
_OUTPUT_RE = re.compile(r"^(.*)\boutput\s*\(([^()]*)\)\s*$")


def parse_forprog(text: str, monoids=None) -> ForProgram:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("forprog"):
        raise FormatError("expected header 'forprog <name>'")
    parts = lines[0].split(None, 1)
    name = parts[1].strip() if len(parts) > 1 else "forprog"
    loops = None
    outdim = None
    guards, outputs = [], []
    for ln in lines[1:]:
        if ln.startswith("loops:"):
            body = ln[len("loops:"):].strip()
            loops = _LOOP_RE.findall(body)
            if _LOOP_RE.sub("", body).strip():
                raise FormatError(f"bad loops line {ln!r}")
        elif ln.startswith("outdim:"):
            try:
                outdim = int(ln[len("outdim:"):])
            except ValueError:
                raise FormatError(f"bad outdim line {ln!r}") from None
        elif ln.startswith("guard"):
            m = _OUTPUT_RE.match(ln[len("guard"):])
            if not m:
                raise FormatError(f"expected 'guard <formula> output (y...)', got {ln!r}")
            guards.append(m.group(1).strip())
            outputs.append(m.group(2).split())
        else:
            raise FormatError(f"unexpected line {ln!r}")
    if loops is None or outdim is None:
        raise FormatError("for-program needs 'loops:' and 'outdim:' lines")
    loop_vars = tuple(v for v, _ in loops)
    position = {v: i + 1 for i, v in enumerate(loop_vars)}
    out_idx = []
    for out in outputs:
        try:
            out_idx.append(tuple(position[v] for v in out))
        except KeyError as exc:
            raise InvalidForProgram(f"output names unknown loop variable {exc.args[0]!r}") from None
    parsed = [parse(g, monoids, free=None) for g in guards]
    return ForProgram(name, loop_vars, tuple(d for _, d in loops), tuple(parsed), tuple(out_idx), outdim)


def format_forprog(P: ForProgram) -> str:
    lines = [
        f"forprog {P.name}",
        "loops: " + " ".join(f"({v} {d})" for v, d in zip(P.loop_vars, P.directions)),
        f"outdim: {P.output_dim}",
    ]
    for g, out in zip(P.guards, P.outputs):
        lines.append(f"guard {render(g)} output ({' '.join(P.loop_vars[i - 1] for i in out)})")
    return "\n".join(lines) + "\n"
