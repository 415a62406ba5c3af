"""Fixture languages and brute-force oracles shared by the tests."""

import itertools
import math

from monoidlogic.monoids import symmetric
from monoidlogic.regular import dfa_from_function
from monoidlogic.words import words_up_to


def ones(w):
    return sum(a[0] for a in w.letters)


def parity():
    return dfa_from_function(1, 0, lambda q: q == 0, lambda q, a: q ^ a[0], "parity")


def contains_one():
    return dfa_from_function(1, 0, lambda q: q == 1, lambda q, a: q | a[0], "contains1")


def sigma_star():
    return dfa_from_function(1, 0, lambda q: True, lambda q, a: q, "all")


def empty_language():
    return dfa_from_function(1, 0, lambda q: False, lambda q, a: q, "none")


def ends_with_one():
    return dfa_from_function(1, 0, lambda q: q == 1, lambda q, a: a[0], "ends1")


def starts_with_one():
    # states: 0 start, 1 began with 1, 2 began with 0
    return dfa_from_function(1, 0, lambda q: q == 1, lambda q, a: q if q else (1 if a[0] else 2), "starts1")


def exactly_one_one():
    return dfa_from_function(1, 0, lambda q: q == 1, lambda q, a: min(2, q + a[0]), "exactly1")


def count_mod3():
    return dfa_from_function(1, 0, lambda q: q == 0, lambda q, a: (q + a[0]) % 3, "mod3")


def no_double_one():
    # state: (last letter was 1, dead)
    def step(q, a):
        last, dead = q
        return (a[0] == 1, dead or (last and a[0] == 1))

    return dfa_from_function(1, (False, False), lambda q: not q[1], step, "no11")


def width2_first_bit_even():
    return dfa_from_function(2, 0, lambda q: q == 0, lambda q, a: q ^ a[0], "w2parity")


FIXTURE_DFAS = [
    parity,
    contains_one,
    sigma_star,
    empty_language,
    ends_with_one,
    starts_with_one,
    exactly_one_one,
    count_mod3,
    no_double_one,
    width2_first_bit_even,
]


def s5_word_problem():
    """Width-2 letters: 10 is (1 2), 01 is (1 2 3 4 5), other letters are neutral; accept products equal to id."""
    s5 = symmetric(5)
    gen = {(1, 0): s5.index("[12]"), (0, 1): s5.index("[12345]")}

    def step(q, a):
        return s5.table[q][gen[a]] if a in gen else q

    return dfa_from_function(2, s5.identity, lambda q: q == s5.identity, step, "s5wp")


def syntactic_classes(accepts, k, length, context):
    """Number of classes of words up to `length`, separated by contexts up to `context` (brute force)."""
    ctx = list(words_up_to(k, context))
    seen = set()
    for w in words_up_to(k, length):
        sig = tuple(accepts(u + w + v) for u in ctx for v in ctx)
        seen.add(sig)
    return len(seen)


def is_square(c):
    return c > 0 and math.isqrt(c) ** 2 == c


def all_words(k, n):
    return list(words_up_to(k, n))


def tuples_lex(n, d):
    return list(itertools.product(range(1, n + 1), repeat=d))


def w(text):
    from monoidlogic.words import word

    return word(text, 1) if text == "-" else word(text)

