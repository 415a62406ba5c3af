import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import is_square, ones
from monoidlogic.errors import FreeVariables, MonoidWidthMismatch, UnboundVariable
from monoidlogic.evaluate import evaluate, genlex_tuples, is_linear_order, language_of
from monoidlogic.logic import FoOrder, Letter, Lex, MultQ, parse
from monoidlogic.monoids import LetterMap, OneHotDelta, cyclic, gamma_extend, symmetric, u1
from monoidlogic.rewrite import FormulaGenerator
from monoidlogic.words import WordStructure, format_word, word, words_up_to

EXISTS_MQ = parse("(mq :monoid U1 :accept (0) :dim 1 :gamma ((0 -> 1) (1 -> 0)) :order lex (x) ((letter 1 x)))")
FORALL_MQ = parse("(mq :monoid U1 :accept (1) :dim 1 :gamma ((0 -> 0) (1 -> 1)) :order lex (x) ((letter 1 x)))")
PARITY = parse("(mq :monoid C2 :accept (0) :dim 1 :gamma ((0 -> 0) (1 -> 1)) :order lex (x) ((letter 1 x)))")
LEX2 = "(or (< a c) (and (= a c) (< b d)))"
COLMAJOR2 = "(or (< b d) (and (= b d) (< a c)))"


def test_exists_as_multiplication_quantifier():
    assert evaluate(EXISTS_MQ, word("0/0/1"))
    assert not evaluate(EXISTS_MQ, word("0/0"))


def test_empty_product_is_identity():
    assert evaluate(FORALL_MQ, word("-", 1))
    assert not evaluate(EXISTS_MQ, word("-", 1))


def test_unary_counting_quantifiers():
    assert evaluate(parse("(maj (x) (letter 1 x))"), word("1/0/1"))
    assert not evaluate(parse("(maj (x) (letter 1 x))"), word("1/0/0"))
    assert evaluate(parse("(maj (x) (letter 1 x))"), word("1/0"))  # exactly half
    assert evaluate(parse("(maj (x) (letter 1 x))"), word("-", 1))  # 0 >= 0
    assert evaluate(parse("(sq (x) (letter 1 x))"), word("1/1/1/1"))
    assert not evaluate(parse("(sq (x) (letter 1 x))"), word("1/1/1"))
    assert not evaluate(parse("(sq (x) (letter 1 x))"), word("0/0"))


def test_arithmetic_relations_are_partial():
    plus = parse("(exists (x) (exists (y) (exists (z) (and (plus x y z) (letter 1 z)))))")
    assert not evaluate(plus, word("1"))  # 1+1 = 2 is out of range
    assert evaluate(plus, word("0/1"))
    times = parse("(forall (x) (exists (z) (times x x z)))")
    assert not evaluate(times, word("0/0"))  # 2*2 = 4 > 2
    assert evaluate(times, word("0"))


def test_language_of_examples():
    assert [format_word(w) for w in language_of(parse("(exists (x) (letter 1 x))"), 1, 2)] == ["1", "0/1", "1/0", "1/1"]
    assert language_of(parse("false"), 1, 4) == []
    got = [format_word(w) for w in language_of(PARITY, 1, 3)]
    oracle = [format_word(w) for w in words_up_to(1, 3) if ones(w) % 2 == 0]
    assert got == oracle == ["-", "0", "0/0", "1/1", "0/0/0", "0/1/1", "1/0/1", "1/1/0"]


def test_language_of_needs_closed_formula():
    with pytest.raises(FreeVariables):
        language_of(parse("(letter 1 x)", free=["x"]), 1, 2)


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        evaluate(parse("(letter 1 x)", free=["x"]), word("1"))
    with pytest.raises(UnboundVariable):
        evaluate(parse("(letter 1 x)", free=["x"]), word("1"), {"x": 2})
    assert evaluate(parse("(letter 1 x)", free=["x"]), word("0/1"), {"x": 2})


def test_monoid_width_mismatch():
    g = LetterMap(u1(), 2, (0, 0, 0, 1))
    f = MultQ(u1(), {0}, g, Lex(), ("x",), (Letter(1, "x"),))
    with pytest.raises(MonoidWidthMismatch):
        evaluate(f, word("1"))


def test_is_linear_order():
    w = word("0/0/0")
    assert is_linear_order(FoOrder(("a", "b", "c", "d"), parse(LEX2, free=None)), w)
    assert is_linear_order(FoOrder(("a", "b", "c", "d"), parse(COLMAJOR2, free=None)), w)
    assert not is_linear_order(FoOrder(("a", "b"), parse("true")), w)
    assert not is_linear_order(FoOrder(("a", "b"), parse("(< a a)", free=None)), w)  # empty relation
    assert not is_linear_order(FoOrder(("a", "c", "b", "d"), parse("(< a b)", free=None)), w)  # not total
    # a cyclic tournament on 3 positions: 1<2, 2<3, 3<1 (total and asymmetric, not transitive)
    first = "(not (exists (z) (< z {v})))"
    last = "(not (exists (z) (< {v} z)))"
    cyc = (
        f"(or (and (< a b) (not (and {first.format(v='a')} {last.format(v='b')}))) "
        f"(and {last.format(v='a')} {first.format(v='b')}))"
    )
    assert not is_linear_order(FoOrder(("a", "b"), parse(cyc, free=None)), w)
    assert is_linear_order(FoOrder(("a", "b"), parse(cyc, free=None)), word("0/0"))


def test_fo_order_must_be_linear_else_false():
    bad = parse("(mq :monoid U1 :accept (1) :dim 1 :gamma (onehot) :order (fo (a b) true) (x) (false false))")
    assert not evaluate(bad, word("0/1"))
    # on the empty word the empty relation is a linear order of the empty set
    assert evaluate(bad, word("-", 1))


def test_lex_and_fo_lex_agree():
    gen = FormulaGenerator([cyclic(2), symmetric(3)], random.Random(7), max_dim=2, max_depth=1)
    for _ in range(10):
        f = gen.closed()
        if f.dim != 2:
            continue
        fo = MultQ(f.monoid, f.accept, f.gamma, FoOrder(("a", "b", "c", "d"), parse(LEX2, free=None)), f.bound, f.bodies)
        for w in words_up_to(1, 4):
            assert evaluate(f, w) == evaluate(fo, w)


def test_genlex_tuples():
    assert genlex_tuples(2, "lr") == [(1, 2), (1, 1), (2, 2), (2, 1)]
    assert genlex_tuples(2, "ll") == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert genlex_tuples(0, "l") == []


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=10))
def test_maj_and_sq_match_counting(bits):
    w = WordStructure(1, tuple((b,) for b in bits))
    assert evaluate(parse("(maj (x) (letter 1 x))"), w) == (2 * ones(w) >= len(w))
    assert evaluate(parse("(sq (x) (letter 1 x))"), w) == is_square(ones(w))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=8))
def test_exists_and_forall_as_u1_quantifiers(bits):
    w = WordStructure(1, tuple((b,) for b in bits))
    assert evaluate(EXISTS_MQ, w) == any(bits)
    assert evaluate(FORALL_MQ, w) == all(bits)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.lists(st.integers(0, 1), max_size=4))
def test_lex_product_splits_over_first_coordinate(seed, bits):
    """delta(w_I) for a lex dim-2 quantifier equals the product over a of the words with x1 fixed to a."""
    rng = random.Random(seed)
    m = rng.choice([u1(), cyclic(3), symmetric(3)])
    bodies = [rng.choice(["true", "false", "(letter 1 x)", "(letter 1 y)", "(< x y)", "(= x y)"]) for _ in range(len(m))]
    w = WordStructure(1, tuple((b,) for b in bits))
    from monoidlogic.evaluate import Evaluator

    ev = Evaluator(w)
    parsed = [parse(b, free=None) for b in bodies]
    delta = OneHotDelta(m)

    def image(x, y):
        return delta.image(tuple(int(ev.holds(b, {"x": x, "y": y})) for b in parsed))

    n = len(w)
    whole = m.product(image(x, y) for x in range(1, n + 1) for y in range(1, n + 1))
    split = m.product(m.product(image(a, y) for y in range(1, n + 1)) for a in range(1, n + 1))
    assert whole == split
    for target in range(len(m)):
        f = MultQ(m, {target}, delta, Lex(), ("x", "y"), tuple(parsed))
        assert evaluate(f, w) == (whole == target)


def test_parity_matches_gamma_extension():
    g = PARITY.gamma
    for w in words_up_to(1, 6):
        assert evaluate(PARITY, w) == (gamma_extend(g, w) == 0)
