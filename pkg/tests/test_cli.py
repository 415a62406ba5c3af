import io

import pytest

from helpers import parity, s5_word_problem
from monoidlogic.cli import run_command
from monoidlogic.monoids import cyclic, format_monoid
from monoidlogic.regular import format_dfa

EXISTS_MQ = "(mq :monoid U1 :accept (0) :dim 1 :gamma ((0 -> 1) (1 -> 0)) :order lex (x) ((letter 1 x)))"
PAIR_PARITY = (
    "(mq :monoid C2 :accept (1) :dim 2 :gamma ((0 -> 0) (1 -> 1)) :order lex (x y) ((and (letter 1 x) (< x y))))"
)
REVERSED = "(mq :monoid S3 :accept (id) :dim 1 :gamma ((0 -> [12]) (1 -> [123])) :order (fo (a b) (< b a)) (x) ((letter 1 x)))"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}

    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
        return str(p)

    put("parity.dfa", format_dfa(parity()))
    put("s5wp.dfa", format_dfa(s5_word_problem()))
    put("c4.monoid", format_monoid(cyclic(4)).replace("monoid C4", "monoid Four"))
    put("exists.f", EXISTS_MQ)
    put("rev.fp", "forprog rev\nloops: (y1 desc)\noutdim: 1\nguard true output (y1)\n")
    put("u1.typed", "typed u1t\nbase: U1\ntypes: { 0 }\nunits: 1 0\n")
    put("c2.typed", "typed c2t\nbase: C2\ntypes: { 0 }\nunits: 0 1\n")
    return put, paths


def test_eval(files):
    assert cli("eval", "--formula", EXISTS_MQ, "--word", "0/1") == (0, "true\n", "")
    assert cli("eval", "--formula", EXISTS_MQ, "--word", "-", "--width", "1")[1] == "false\n"
    assert cli("eval", "--formula", "(letter 1 x)", "--word", "0/1", "--assign", "x=2")[1] == "true\n"


def test_lang(files):
    code, out, _ = cli("lang", "--formula", files[1]["exists.f"], "--maxlen", "2")
    assert code == 0
    assert out.split() == ["1", "0/1", "1/0", "1/1"]


def test_rewrite_and_check_equiv(files):
    code, out, _ = cli("rewrite", "--formula", PAIR_PARITY, "--pass", "onehot", "--pass", "collapse")
    assert code == 0 and out.startswith("(mq")
    code, eq, _ = cli("check-equiv", "--a", PAIR_PARITY, "--b", out.strip(), "--maxlen", "4")
    assert (code, eq) == (0, "EQUIVALENT (n≤4)\n")
    code, report, _ = cli("rewrite", "--formula", REVERSED, "--pass", "enumerator", "--pass", "unarize",
                          "--program", files[1]["rev.fp"], "--report")
    assert code == 0 and "max quantifier dimension: 1" in report
    code, out, _ = cli("check-equiv", "--a", "(exists (x) (letter 1 x))", "--b", "(forall (x) (letter 1 x))")
    assert (code, out) == (0, "COUNTEREXAMPLE -\n")


def test_synmon_and_syntyped(files):
    code, out, _ = cli("synmon", "--dfa", files[1]["parity.dfa"])
    assert code == 0 and "elements:" in out and "accept:" in out
    code, out, _ = cli("syntyped", "--dfa", files[1]["parity.dfa"])
    assert code == 0 and "syntactic shape: true" in out


def test_blockprod(files):
    code, out, _ = cli("blockprod", "--left", files[1]["u1.typed"], "--right", files[1]["u1.typed"])
    assert code == 0
    assert "elements: 4" in out and "generators: 4" in out
    code, out, _ = cli("--lib", files[1]["u1.typed"], "--lib", files[1]["c2.typed"],
                       "blockprod", "--left", "u1t", "--right", "c2t", "--C", "0", "--ordered", "--table")
    assert code == 0 and "typed" in out
    code, _, err = cli("blockprod", "--left", "S5P", "--right", "S5P", "--cap", "100")
    assert code == 1 and "error" in err


def test_recognizes(files):
    code, out, _ = cli("recognizes", "--typed", "S5P", "--dfa", files[1]["s5wp.dfa"])
    assert code == 0 and out.startswith("true")
    code, out, _ = cli("recognizes", "--typed", "Z", "--dfa", files[1]["parity.dfa"], "--maxlen", "5")
    assert out.startswith("false")
    code, out, _ = cli("recognizes", "--typed", files[1]["c2.typed"], "--dfa", files[1]["parity.dfa"])
    assert out.startswith("true")


def test_forprog_commands(files):
    assert cli("forprog-run", "--program", files[1]["rev.fp"], "--n", "3")[1] == "(3)\n(2)\n(1)\n"
    code, out, _ = cli("forprog-check", "--program", files[1]["rev.fp"], "--order", "(fo (a b) (< b a))")
    assert code == 0 and out.startswith("ok")
    code, out, _ = cli("forprog-check", "--program", files[1]["rev.fp"], "--order", "(fo (a b) (< a b))")
    assert "order mismatch" in out and "FAILED" in out


def test_validate(files):
    put, paths = files
    code, out, _ = cli("validate", paths["parity.dfa"], paths["c4.monoid"], paths["exists.f"], paths["rev.fp"],
                       paths["u1.typed"])
    assert code == 0 and len(out.splitlines()) == 5
    bad = put("bad.monoid", "monoid Bad\nelements: a b\nidentity: a\na b\nb b\nb a\n")
    assert cli("validate", bad)[0] == 1
    code, _, err = cli("validate", put("junk.txt", "hello\n"))
    assert code == 1 and "file kind" in err


def test_exit_codes(files):
    assert cli("eval", "--formula", "(letter 1", "--word", "1")[0] == 1
    assert cli("eval", "--word", "1")[0] == 2
    assert cli("no-such-command")[0] == 2
    assert cli("lang", "--formula", "/no/such/file")[0] == 1
