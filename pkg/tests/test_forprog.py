import itertools

import pytest

from helpers import tuples_lex
from monoidlogic.errors import FormatError, GuardOverlap, InvalidForProgram, NotLinearOrder
from monoidlogic.forprog import (
    ForProgram,
    format_forprog,
    genlex_program,
    matches_order,
    parse_forprog,
    run,
    validate_enumerator,
)
from monoidlogic.logic import TRUE, FoOrder, parse
from monoidlogic.words import word, words_up_to

COLUMN_MAJOR = """
forprog colmajor
loops: (a asc) (b asc)
outdim: 2
guard true output (b a)
"""
LEX2 = FoOrder(("a", "b", "c", "d"), parse("(or (< a c) (and (= a c) (< b d)))", free=None))
GENLEX_LR = FoOrder(("a", "b", "c", "d"), parse("(or (< a c) (and (= a c) (< d b)))", free=None))
ASC1 = FoOrder(("a", "b"), parse("(< a b)", free=None))


def identity_program(direction="asc"):
    return ForProgram("id", ("y1",), (direction,), (TRUE,), ((1,),), 1)


def test_run_identity_and_reverse():
    assert run(identity_program(), 3) == [(1,), (2,), (3,)]
    assert run(identity_program("desc"), 3) == [(3,), (2,), (1,)]
    assert run(identity_program(), 0) == []


def test_run_column_major():
    p = parse_forprog(COLUMN_MAJOR)
    assert run(p, 2) == [(1, 1), (2, 1), (1, 2), (2, 2)]
    assert validate_enumerator(p, 3)


def test_validate_enumerator():
    assert validate_enumerator(identity_program(), 4)
    off_diagonal = ForProgram("offdiag", ("y1", "y2"), ("asc", "asc"), (parse("(not (= y1 y2))", free=None),),
                              ((1, 2),), 2)
    assert not validate_enumerator(off_diagonal, 2)
    twice = ForProgram("twice", ("y1", "y2"), ("asc", "asc"), (TRUE,), ((1,),), 1)
    assert not validate_enumerator(twice, 2)


def test_guard_overlap():
    p = ForProgram("overlap", ("y1",), ("asc",), (TRUE, parse("(exists (z) (= z y1))", free=None)), ((1,), (1,)), 1)
    with pytest.raises(GuardOverlap) as err:
        run(p, 1)
    assert err.value.assignment == {"y1": 1}


def test_split_guards_enumerate():
    # first output the diagonal-or-below pairs as (y1, y2), the rest as well, in one loop nest
    below = parse("(not (< y1 y2))", free=None)
    above = parse("(< y1 y2)", free=None)
    p = ForProgram("split", ("y1", "y2"), ("asc", "desc"), (below, above), ((1, 2), (1, 2)), 2)
    for n in range(4):
        assert validate_enumerator(p, n)


def test_genlex_program_examples():
    assert run(genlex_program(1, "l"), 3) == run(identity_program(), 3)
    assert run(genlex_program(2, "ll"), 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert run(genlex_program(2, "lr"), 2) == [(1, 2), (1, 1), (2, 2), (2, 1)]
    with pytest.raises(InvalidForProgram):
        genlex_program(2, "l")


def genlex_precedes(a, b, dirs):
    """Oracle: a precedes b iff at the first differing coordinate i, a_i < b_i (dir l) or a_i > b_i (dir r)."""
    for x, y, d in zip(a, b, dirs):
        if x != y:
            return x < y if d == "l" else x > y
    return False


def test_genlex_programs_realize_genlex_order():
    for d in range(1, 4):
        for dirs in itertools.product("lr", repeat=d):
            for n in range(5):
                out = run(genlex_program(d, dirs), n)
                assert validate_enumerator(genlex_program(d, dirs), n)
                assert len(out) == n**d
                assert all(genlex_precedes(out[i], out[i + 1], dirs) for i in range(len(out) - 1))
            if set(dirs) == {"l"}:
                assert run(genlex_program(d, dirs), 4) == tuples_lex(4, d)


def test_matches_order():
    w = word("0/1/0")
    assert matches_order(genlex_program(2, "ll"), LEX2, w)
    assert not matches_order(identity_program("desc"), ASC1, w)
    assert matches_order(genlex_program(2, "lr"), GENLEX_LR, w)
    assert not matches_order(genlex_program(2, "ll"), GENLEX_LR, w)
    with pytest.raises(NotLinearOrder):
        matches_order(identity_program(), FoOrder(("a", "b"), parse("true")), w)


def test_guards_with_parameters():
    g = parse("(< y1 p)", free=["y1", "p"])
    p = ForProgram("param", ("y1",), ("asc",), (g,), ((1,),), 1)
    assert run(p, 4, {"p": 3}) == [(1,), (2,)]
    assert p.params == {"p"}


def test_guards_must_be_first_order_over_less():
    with pytest.raises(InvalidForProgram):
        ForProgram("bad", ("y1",), ("asc",), (parse("(maj (z) (< z y1))", free=None),), ((1,),), 1)
    with pytest.raises(InvalidForProgram):
        ForProgram("bad", ("y1",), ("asc",), (TRUE,), ((2,),), 1)
    with pytest.raises(InvalidForProgram):
        parse_forprog("forprog p\nloops: (y1 asc)\noutdim: 1\nguard (exists (z) (plus z z y1)) output (y1)\n")


def test_text_round_trip_and_errors():
    p = parse_forprog(COLUMN_MAJOR)
    assert p.loop_vars == ("a", "b") and p.outputs == ((2, 1),)
    assert parse_forprog(format_forprog(p)) == p
    with pytest.raises(FormatError):
        parse_forprog("forprog p\nloops: (y1 up)\noutdim: 1\n")
    with pytest.raises(InvalidForProgram):
        parse_forprog("forprog p\nloops: (y1 asc)\noutdim: 1\nguard true output (y9)\n")


def test_letter_guards_use_the_word():
    g = parse("(letter 1 y1)", free=["y1"])
    p = ForProgram("ones", ("y1",), ("asc",), (g,), ((1,),), 1)
    assert run(p, word("1/0/1")) == [(1,), (3,)]
    for w in words_up_to(1, 3):
        assert validate_enumerator(p, w) == (all(a == (1,) for a in w.letters))
