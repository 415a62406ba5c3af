"""Finite words over the bit-vector alphabets {0,1}^k.

A word of length n is read as a structure with universe 1..n, the natural
order, and k unary relations R_1..R_k: position i is in R_j iff bit j of the
i-th letter is 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import FormatError, NotLinearOrder, WidthMismatch

Letter = tuple  # tuple of 0/1 ints, length k


def letters_of_width(k: int) -> list[Letter]:
    """All letters of {0,1}^k in lexicographic order of their bit strings."""
    return [tuple(bits) for bits in itertools.product((0, 1), repeat=k)]


def letter_code(letter: Sequence[int]) -> int:
    """Index of a letter in `letters_of_width` order (bit 1 is most significant)."""
    code = 0
    for b in letter:
        code = 2 * code + b
    return code


def letter_from_code(code: int, k: int) -> Letter:
    return tuple((code >> (k - 1 - j)) & 1 for j in range(k))


def bits_to_str(letter: Sequence[int]) -> str:
    return "".join(str(b) for b in letter)


def str_to_bits(text: str) -> Letter:
    if not text or any(ch not in "01" for ch in text):
        raise FormatError(f"not a bit string: {text!r}")
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class WordStructure:
    width: int
    letters: tuple = ()

    def __post_init__(self):
        if self.width < 1:
            raise WidthMismatch(f"width must be positive, got {self.width}")
        letters = tuple(tuple(int(b) for b in a) for a in self.letters)
        for a in letters:
            if len(a) != self.width or any(b not in (0, 1) for b in a):
                raise WidthMismatch(f"letter {a} is not a {self.width}-bit vector")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    @property
    def positions(self) -> range:
        return range(1, len(self.letters) + 1)

    def holds(self, relation: int, position: int) -> bool:
        """R_relation(position), both 1-based."""
        return self.letters[position - 1][relation - 1] == 1

    def codes(self) -> tuple:
        return tuple(letter_code(a) for a in self.letters)

    def __add__(self, other: "WordStructure") -> "WordStructure":
        if other.width != self.width:
            raise WidthMismatch("cannot concatenate words of different widths")
        return WordStructure(self.width, self.letters + other.letters)

    def __str__(self):
        return format_word(self)


def word(text: str, width: int | None = None) -> WordStructure:
    """Parse the `/`-separated text form, e.g. ``101/011``; ``-`` is the empty word."""
    text = text.strip()
    if text in ("-", ""):
        if width is None:
            raise FormatError("the empty word needs an explicit width")
        return WordStructure(width, ())
    letters = [str_to_bits(part) for part in text.split("/")]
    k = len(letters[0]) if width is None else width
    return WordStructure(k, tuple(letters))


def format_word(w: WordStructure) -> str:
    if not w.letters:
        return "-"
    return "/".join(bits_to_str(a) for a in w.letters)


def read_words(text: str, width: int | None = None) -> list[WordStructure]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(word(line, width))
    return out


def words_of_length(k: int, n: int) -> Iterator[WordStructure]:
    alphabet = letters_of_width(k)
    for letters in itertools.product(alphabet, repeat=n):
        yield WordStructure(k, letters)


def words_up_to(k: int, n: int) -> Iterator[WordStructure]:
    """Every word of width k and length <= n, shortest first, lexicographic within a length."""
    for length in range(n + 1):
        yield from words_of_length(k, length)


def associated_string(
    universe: Iterable, less: Iterable[tuple], relations: Sequence[Iterable]
) -> WordStructure:
    """Read off the word of a linearly ordered structure with k unary relations.

    `less` is the set of pairs (a, b) with a < b; `relations[j]` is the
    interpretation of R_{j+1}.
    """
    elems = list(universe)
    order = set(less)
    rels = [set(r) for r in relations]
    if not rels:
        raise WidthMismatch("a word structure needs at least one unary relation")
    for a in elems:
        if (a, a) in order:
            raise NotLinearOrder(f"{a} < {a}")
    for a, b in itertools.combinations(elems, 2):
        ab, ba = (a, b) in order, (b, a) in order
        if ab == ba:
            raise NotLinearOrder(f"{a} and {b} are {'both' if ab else 'not'} related")
    # rank = number of predecessors; a linear order has ranks 0..n-1
    rank = {a: sum((b, a) in order for b in elems) for a in elems}
    if sorted(rank.values()) != list(range(len(elems))):
        raise NotLinearOrder("relation is not transitive")
    ordered = sorted(elems, key=rank.__getitem__)
    letters = tuple(tuple(int(a in r) for r in rels) for a in ordered)
    return WordStructure(len(rels), letters)


def as_structure(w: WordStructure) -> tuple[list[int], set[tuple[int, int]], list[frozenset]]:
    """The canonical structure of a word: universe 1..n, natural order, R_1..R_k."""
    universe = list(w.positions)
    less = {(a, b) for a in universe for b in universe if a < b}
    relations = [frozenset(i for i in universe if w.holds(j, i)) for j in range(1, w.width + 1)]
    return universe, less, relations
