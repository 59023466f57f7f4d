"""Signed words and exact-rational linear combinations of them.

A signed letter is a nonzero integer code: ``k > 0`` is the plain card k,
``-k`` is k with a bar (rotated/flipped orientation).  The alphabet order is
1̄ ≺ 1 ≺ 2̄ ≺ 2 ≺ ... ≺ N̄ ≺ N, i.e. barred just below its plain partner.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import NotInAlphabet


def letter_key(code: int) -> tuple[int, int]:
    """Sort key realising the alphabet order 1̄ ≺ 1 ≺ 2̄ ≺ 2 ≺ ..."""
    return (abs(code), 1 if code > 0 else 0)


@dataclass(frozen=True)
class SignedLetter:
    """A card label with an orientation flag."""

    value: int
    barred: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise NotInAlphabet(f"letter value must be >= 1, got {self.value}")

    @property
    def code(self) -> int:
        return -self.value if self.barred else self.value

    @classmethod
    def from_code(cls, code: int) -> "SignedLetter":
        if code == 0:
            raise NotInAlphabet("0 is not a signed letter")
        return cls(abs(code), code < 0)

    def __str__(self) -> str:
        return str(self.code)


@dataclass(frozen=True)
class AlphabetSpec:
    """The alphabet {1, ..., N} and their barred partners."""

    max_label: int

    def __post_init__(self):
        if self.max_label < 1:
            raise NotInAlphabet("max_label must be >= 1")

    @property
    def letters(self) -> tuple[int, ...]:
        """All 2N letter codes in alphabet order."""
        out = []
        for v in range(1, self.max_label + 1):
            out.extend((-v, v))
        return tuple(out)


class SignedWord(tuple):
    """An immutable word of signed letters (tuple of nonzero int codes)."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        codes = tuple(int(c) for c in letters)
        if any(c == 0 for c in codes):
            raise NotInAlphabet(f"0 is not a signed letter: {codes}")
        return super().__new__(cls, codes)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def letters(self) -> tuple[SignedLetter, ...]:
        return tuple(SignedLetter.from_code(c) for c in self)

    def bar(self) -> "SignedWord":
        """Bar every letter in place (the rotation involution on words)."""
        return SignedWord(-c for c in self)

    def reverse(self) -> "SignedWord":
        return SignedWord(reversed(self))

    def flip(self) -> "SignedWord":
        """Reverse and bar every letter (the flip involution on words)."""
        return SignedWord(-c for c in reversed(self))

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(letter_key(c) for c in self)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self) if self else "e"

    def __repr__(self) -> str:
        return f"SignedWord({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "SignedWord":
        """Parse the text format: space-separated nonzero ints, 'e' = empty."""
        text = text.strip()
        if text in ("", "e"):
            return cls()
        return cls(int(tok) for tok in text.split())


EMPTY_WORD = SignedWord()

WordLike = Union[SignedWord, tuple, list]


def as_word(w: WordLike) -> SignedWord:
    return w if isinstance(w, SignedWord) else SignedWord(w)


def word_lex_key(w) -> tuple:
    """Lexicographic key for whole words under the alphabet order."""
    return tuple(letter_key(c) for c in w)


class AlgebraElement:
    """A finite formal QQ-linear combination of signed words.

    Stores no zero coefficients; equality is coefficient-wise.  Which Hopf
    structure (shuffle vs concatenation) an element lives in is chosen per
    operation, not stored on the element.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable] = ()):
        acc: dict[SignedWord, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            w = as_word(w)
            c = Fraction(c)
            if not c:
                continue
            new = acc.get(w, 0) + c
            if new:
                acc[w] = new
            else:
                acc.pop(w, None)
        self._terms = acc

    @classmethod
    def from_word(cls, w: WordLike, coeff=1) -> "AlgebraElement":
        return cls([(w, coeff)])

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def unit(cls) -> "AlgebraElement":
        """The empty word with coefficient 1 (the unit of either algebra)."""
        return cls([(EMPTY_WORD, 1)])

    def coeff(self, w: WordLike) -> Fraction:
        return self._terms.get(as_word(w), Fraction(0))

    def terms(self) -> dict[SignedWord, Fraction]:
        return dict(self._terms)

    def words(self) -> Iterator[SignedWord]:
        return iter(self._terms)

    def canonical_items(self) -> list[tuple[SignedWord, Fraction]]:
        """Terms sorted by the alphabet-order lex key on words."""
        return sorted(self._terms.items(), key=lambda kv: word_lex_key(kv[0]))

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        acc = dict(self._terms)
        for w, c in other._terms.items():
            new = acc.get(w, 0) + c
            if new:
                acc[w] = new
            else:
                acc.pop(w, None)
        out = AlgebraElement.__new__(AlgebraElement)
        out._terms = acc
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        out = AlgebraElement.__new__(AlgebraElement)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __mul__(self, scalar) -> "AlgebraElement":
        s = Fraction(scalar)
        out = AlgebraElement.__new__(AlgebraElement)
        out._terms = {w: c * s for w, c in self._terms.items()} if s else {}
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "AlgebraElement":
        return self * (Fraction(1) / Fraction(scalar))

    def is_homogeneous(self) -> bool:
        degs = {len(w) for w in self._terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Common degree of a homogeneous non-zero element."""
        degs = {len(w) for w in self._terms}
        if len(degs) != 1:
            from .errors import NotHomogeneous

            raise NotHomogeneous(f"degrees present: {sorted(degs)}")
        return degs.pop()

    def map_words(self, fn) -> "AlgebraElement":
        """Apply a word -> word map linearly."""
        return AlgebraElement((fn(w), c) for w, c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for w, c in self.canonical_items():
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            pieces.append(f"{coeff}({w})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"AlgebraElement({len(self._terms)} terms)"

    def to_json(self) -> list[dict]:
        """Canonical JSON form: [{"coeff": "p/q", "word": [int, ...]}, ...]."""
        return [
            {"coeff": str(c), "word": list(w)} for w, c in self.canonical_items()
        ]

    @classmethod
    def from_json(cls, data) -> "AlgebraElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((SignedWord(d["word"]), Fraction(d["coeff"])) for d in data)


def all_words(n: int, max_label: int) -> list[SignedWord]:
    """All words of degree n over labels <= max_label, in canonical order."""
    alphabet = AlphabetSpec(max_label).letters
    return [SignedWord(p) for p in itertools.product(alphabet, repeat=n)]


def signed_permutations(n: int) -> list[SignedWord]:
    """All 2^n n! signed permutations of n, in canonical order."""
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((-1, 1), repeat=n):
            out.append(SignedWord(s * v for s, v in zip(signs, perm)))
    out.sort(key=word_lex_key)
    return out


def distinct_letter_words(n: int, max_label: int) -> list[SignedWord]:
    """Degree-n words over labels <= max_label using distinct labels."""
    out = []
    for labels in itertools.permutations(range(1, max_label + 1), n):
        for signs in itertools.product((-1, 1), repeat=n):
            out.append(SignedWord(s * v for s, v in zip(signs, labels)))
    out.sort(key=word_lex_key)
    return out
