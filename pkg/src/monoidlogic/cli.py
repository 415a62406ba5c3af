"""Command-line front end: ``monoidlogic <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (bad file, failed check
that raises, exhausted budget) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import forprog, logic, monoids, regular, rewrite, typed
from .errors import FormatError, MonoidLogicError
from .evaluate import evaluate, language_of
from .words import bits_to_str, format_word, letter_from_code, word, words_up_to


def _header(text: str) -> str:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    return ""


@dataclass
class Workspace:
    """Named objects loaded from --lib files, one namespace per kind."""

    monoids: dict = field(default_factory=dict)
    dfas: dict = field(default_factory=dict)
    typed: dict = field(default_factory=dict)
    programs: dict = field(default_factory=dict)

    def _add(self, table: dict, name: str, obj, kind: str):
        if name in table:
            raise FormatError(f"duplicate {kind} name {name!r}")
        table[name] = obj

    def load_text(self, text: str):
        kind = _header(text)
        if kind == "monoid":
            m = monoids.parse_monoid(text)
            self._add(self.monoids, m.name, m, "monoid")
            return "monoid", m
        if kind == "dfa":
            d = regular.parse_dfa(text)
            self._add(self.dfas, d.name, d, "dfa")
            return "dfa", d
        if kind == "typed":
            t = typed.parse_typed(text, self.monoids)
            self._add(self.typed, t.name, t, "typed monoid")
            return "typed", t
        if kind == "forprog":
            p = forprog.parse_forprog(text, self.monoids)
            self._add(self.programs, p.name, p, "for-program")
            return "forprog", p
        if kind.startswith("("):
            return "formula", logic.parse(text, self.monoids, free=None)
        raise FormatError(f"cannot tell the file kind from its first line ({kind!r})")

    def load(self, path: str):
        return self.load_text(Path(path).read_text())

    def formula(self, source: str, free=()) -> logic.Formula:
        text = source if source.lstrip().startswith("(") else Path(source).read_text()
        return logic.parse(text, self.monoids, free=free)

    def _object(self, source: str, kind: str, table: dict):
        if source in table:
            return table[source]
        got_kind, obj = Workspace(monoids=dict(self.monoids)).load(source)
        if got_kind != kind:
            raise FormatError(f"{source} holds a {got_kind}, expected a {kind}")
        return obj

    def dfa(self, source: str) -> regular.Dfa:
        return self._object(source, "dfa", self.dfas)

    def typed_monoid(self, source: str):
        if source in ("Z", "N"):
            return typed.integers_typed() if source == "Z" else typed.naturals_typed()
        if source == "S5P":
            return typed.s5_powerset_typed()
        return self._object(source, "typed", self.typed)

    def program(self, source: str) -> forprog.ForProgram:
        return self._object(source, "forprog", self.programs)


def _assignment(pairs):
    out = {}
    for item in pairs or []:
        var, sep, val = item.partition("=")
        if not sep or not val.isdigit():
            raise FormatError(f"expected var=position, got {item!r}")
        out[var] = int(val)
    return out


def _bool(value: bool) -> str:
    return "true" if value else "false"


# ----------------------------------------------------------- subcommands


def cmd_eval(ws: Workspace, args, out):
    assignment = _assignment(args.assign)
    f = ws.formula(args.formula, free=None)
    w = word(args.word, args.width)
    out.write(_bool(evaluate(f, w, assignment)) + "\n")


def cmd_lang(ws, args, out):
    f = ws.formula(args.formula)
    for w in language_of(f, args.width, args.maxlen):
        out.write(format_word(w) + "\n")


def cmd_rewrite(ws, args, out):
    f = ws.formula(args.formula, free=None)
    program = ws.program(args.program) if args.program else None
    report = rewrite.rewrite(f, args.pass_ or ["unarize"], program, validate_upto=args.validate_upto)
    if args.report:
        out.write(report.text())
    else:
        out.write(logic.render(report.output) + "\n")


def cmd_check_equiv(ws, args, out):
    a = ws.formula(args.a)
    b = ws.formula(args.b)
    same, witness = rewrite.equivalent_upto(a, b, args.width, args.maxlen)
    if same:
        out.write(f"EQUIVALENT (n≤{args.maxlen})\n")
    else:
        out.write(f"COUNTEREXAMPLE {format_word(witness)}\n")


def cmd_synmon(ws, args, out):
    res = regular.syntactic_monoid(ws.dfa(args.dfa), args.name)
    out.write(monoids.format_monoid(res.monoid))
    out.write("accept: " + " ".join(res.monoid.elements[i] for i in sorted(res.accept_set)) + "\n")
    out.write(monoids.format_letter_map(res.letter_images))


def cmd_syntyped(ws, args, out):
    t = typed.syntactic_typed_monoid(ws.dfa(args.dfa), args.name)
    out.write(monoids.format_monoid(t.monoid))
    out.write(typed.format_typed(t))
    out.write(f"syntactic shape: {_bool(typed.is_syntactic_shape(t))}\n")


def _element_set(t, names: str | None):
    if not names:
        return []
    return [t.monoid.index(x) for x in names.split(",") if x]


def cmd_blockprod(ws, args, out):
    left = ws.typed_monoid(args.left)
    right = ws.typed_monoid(args.right)
    detail = typed.block_product_detail(left, right, _element_set(right, args.C), args.ordered, args.cap)
    t = detail.typed
    out.write(f"{t.name}\n")
    out.write(f"elements: {len(t.monoid)}\n")
    out.write(f"generators: {len(detail.generators)}\n")
    out.write(f"units: {len(t.units)}\n")
    out.write(f"type atoms: {len(t.types.atoms)}\n")
    if args.table:
        out.write(monoids.format_monoid(t.monoid))
        out.write(typed.format_typed(t))


def cmd_recognizes(ws, args, out):
    t = ws.typed_monoid(args.typed)
    d = ws.dfa(args.dfa)
    if isinstance(t, typed.SymbolicTypedMonoid):
        result = typed.symbolic_recognizes_upto(t, d, args.maxlen, d.width)
        out.write(f"{_bool(result)} (words up to length {args.maxlen})\n")
        return
    found = typed.find_recognition(t, d, args.budget)
    out.write(_bool(found is not None) + "\n")
    if found is not None:
        for code, img in enumerate(found.assignment):
            out.write(f"{bits_to_str(letter_from_code(code, d.width))} -> {t.monoid.elements[img]}\n")
        out.write("type: { " + " ".join(t.monoid.elements[x] for x in sorted(found.accept_type)) + " }\n")


def cmd_forprog_run(ws, args, out):
    p = ws.program(args.program)
    structure = word(args.word, p.width_needed()) if args.word is not None else args.n
    for tup in forprog.run(p, structure, _assignment(args.assign)):
        out.write("(" + " ".join(map(str, tup)) + ")\n")


def cmd_forprog_check(ws, args, out):
    p = ws.program(args.program)
    order = None
    if args.order:
        text = args.order if args.order.lstrip().startswith("(") else Path(args.order).read_text()
        order = logic.parse_order(text, p.output_dim, ws.monoids)
    ok = True
    for w in words_up_to(p.width_needed(), args.maxlen):
        if not forprog.validate_enumerator(p, w):
            out.write(f"not an enumerator on {format_word(w)}\n")
            ok = False
            break
        if isinstance(order, logic.FoOrder) and not forprog.matches_order(p, order, w):
            out.write(f"order mismatch on {format_word(w)}\n")
            ok = False
            break
    out.write(("ok" if ok else "FAILED") + f" (words up to length {args.maxlen})\n")


def cmd_validate(ws, args, out):
    for path in args.files:
        kind, obj = ws.load(path)
        if kind == "monoid":
            obj.check()
        name = getattr(obj, "name", None) or logic.render(obj)[:60]
        out.write(f"ok {kind} {name}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monoidlogic", description="Logics with monoid multiplication quantifiers.")
    p.add_argument("--lib", action="append", default=[], help="load a monoid/dfa/typed/forprog file first")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate a formula on a word")
    s.add_argument("--formula", required=True, help="formula file or inline text")
    s.add_argument("--word", required=True, help="word such as 101/011; '-' is empty")
    s.add_argument("--width", type=int, help="width (needed for the empty word)")
    s.add_argument("--assign", action="append", help="free variable value, var=position")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("lang", help="list the words up to a length satisfying a closed formula")
    s.add_argument("--formula", required=True)
    s.add_argument("--width", type=int, default=1)
    s.add_argument("--maxlen", type=int, default=5)
    s.set_defaults(run=cmd_lang)

    s = sub.add_parser("rewrite", help="apply rewriting passes")
    s.add_argument("--formula", required=True)
    s.add_argument("--pass", dest="pass_", action="append", choices=["onehot", "collapse", "unarize", "enumerator"])
    s.add_argument("--program", help="for-program for the enumerator pass")
    s.add_argument("--validate-upto", type=int, default=3, help="word length bound for checking the program")
    s.add_argument("--report", action="store_true", help="print the rewrite report instead of just the formula")
    s.set_defaults(run=cmd_rewrite)

    s = sub.add_parser("check-equiv", help="compare two closed formulas on all short words")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--width", type=int, default=1)
    s.add_argument("--maxlen", type=int, default=5)
    s.set_defaults(run=cmd_check_equiv)

    s = sub.add_parser("synmon", help="syntactic monoid of a DFA's language")
    s.add_argument("--dfa", required=True)
    s.add_argument("--name")
    s.set_defaults(run=cmd_synmon)

    s = sub.add_parser("syntyped", help="syntactic typed monoid of a DFA's language")
    s.add_argument("--dfa", required=True)
    s.add_argument("--name")
    s.set_defaults(run=cmd_syntyped)

    s = sub.add_parser("blockprod", help="(ordered) typed block product")
    s.add_argument("--left", required=True, help="typed monoid file or name")
    s.add_argument("--right", required=True)
    s.add_argument("--C", help="comma-separated elements of the right base")
    s.add_argument("--ordered", action="store_true")
    s.add_argument("--cap", type=int, default=typed.DEFAULT_CARRIER_CAP)
    s.add_argument("--table", action="store_true", help="print the full carrier table and types")
    s.set_defaults(run=cmd_blockprod)

    s = sub.add_parser("recognizes", help="does a typed monoid recognize a DFA's language")
    s.add_argument("--typed", required=True, help="typed monoid file, or Z, N, S5P for the built-ins")
    s.add_argument("--dfa", required=True)
    s.add_argument("--budget", type=int, default=typed.DEFAULT_SEARCH_BUDGET)
    s.add_argument("--maxlen", type=int, default=5, help="length bound for the symbolic built-ins")
    s.set_defaults(run=cmd_recognizes)

    s = sub.add_parser("forprog-run", help="print the tuples a for-program outputs")
    s.add_argument("--program", required=True)
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--word")
    s.add_argument("--assign", action="append")
    s.set_defaults(run=cmd_forprog_run)

    s = sub.add_parser("forprog-check", help="check a for-program is an enumerator (optionally of an fo order)")
    s.add_argument("--program", required=True)
    s.add_argument("--order", help="(fo (x.. y..) formula) text or file")
    s.add_argument("--maxlen", type=int, default=4)
    s.set_defaults(run=cmd_forprog_check)

    s = sub.add_parser("validate", help="parse and check files of any kind")
    s.add_argument("files", nargs="+")
    s.set_defaults(run=cmd_validate)
    return p


def run_command(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    ws = Workspace()
    try:
        for path in args.lib:
            ws.load(path)
        args.run(ws, args, out)
    except (MonoidLogicError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
