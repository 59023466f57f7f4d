"""The two Hopf structures on signed words, and the involutions.

Shuffle algebra: product = sum of interleavings, coproduct = deconcatenation.
Free associative (concatenation) algebra: product = concatenation, coproduct
= deshuffling.  The rotation involution bars every letter in place; the flip
involution reverses the word and bars every letter.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence, Union

from .errors import NotHomogeneous, SizeMismatch
from .words import AlgebraElement, SignedWord, WordLike, as_word

SHUFFLE = "shuffle"
CONCAT = "concat"

Element = Union[SignedWord, AlgebraElement]


def _as_element(x: Element) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    return AlgebraElement.from_word(as_word(x))


# ---------------------------------------------------------------------------
# shuffle algebra


def _shuffle_two(u: tuple, v: tuple):
    """Yield all |u+v| choose |u| interleavings (with repetition)."""
    m, n = len(u), len(v)
    if m == 0:
        yield tuple(v)
        return
    if n == 0:
        yield tuple(u)
        return
    total = m + n
    for positions in itertools.combinations(range(total), m):
        word = [None] * total
        for src, pos in zip(u, positions):
            word[pos] = src
        it = iter(v)
        for i in range(total):
            if word[i] is None:
                word[i] = next(it)
        yield tuple(word)


def shuffle_product(factors: Sequence[Element]) -> AlgebraElement:
    """Product in the shuffle algebra: sum of all interleavings.

    Multi-factor products iterate the binary product; interleavings are
    counted with multiplicity (repeated letters can make coefficients > 1).
    """
    result = AlgebraElement.unit()
    for f in factors:
        elt = _as_element(f)
        acc: dict[SignedWord, Fraction] = {}
        for w1, c1 in result:
            for w2, c2 in elt:
                c = c1 * c2
                for merged in _shuffle_two(tuple(w1), tuple(w2)):
                    mw = SignedWord(merged)
                    acc[mw] = acc.get(mw, 0) + c
        result = AlgebraElement(acc)
    return result


def deconcatenate(w: WordLike, parts: Sequence[int]) -> tuple[SignedWord, ...]:
    """Split w into consecutive segments with the given lengths."""
    w = as_word(w)
    if sum(parts) != len(w):
        raise SizeMismatch(f"parts {tuple(parts)} do not sum to degree {len(w)}")
    out = []
    i = 0
    for p in parts:
        out.append(SignedWord(w[i : i + p]))
        i += p
    return tuple(out)


# ---------------------------------------------------------------------------
# concatenation algebra


def concat_product(factors: Sequence[Element]) -> Element:
    """Product in the concatenation algebra.

    On words returns the concatenated word; on AlgebraElements (or a mix)
    extends bilinearly and returns an AlgebraElement.
    """
    if not any(isinstance(f, AlgebraElement) for f in factors):
        joined: list[int] = []
        for f in factors:
            joined.extend(as_word(f))
        return SignedWord(joined)
    result = AlgebraElement.unit()
    for f in factors:
        elt = _as_element(f)
        acc: dict[SignedWord, Fraction] = {}
        for w1, c1 in result:
            for w2, c2 in elt:
                mw = SignedWord(tuple(w1) + tuple(w2))
                c = c1 * c2
                acc[mw] = acc.get(mw, 0) + c
        result = AlgebraElement(acc)
    return result


def concat_elements(*factors: Element) -> AlgebraElement:
    """Concatenation product, always returning an AlgebraElement."""
    out = concat_product(list(factors))
    return out if isinstance(out, AlgebraElement) else AlgebraElement.from_word(out)


def _position_splits(n: int, parts: Sequence[int]):
    """Yield tuples of disjoint sorted position-tuples with the given sizes."""

    def rec(remaining: tuple, idx: int):
        if idx == len(parts):
            yield ()
            return
        for chosen in itertools.combinations(remaining, parts[idx]):
            rest = tuple(p for p in remaining if p not in chosen)
            for tail in rec(rest, idx + 1):
                yield (chosen,) + tail

    yield from rec(tuple(range(n)), 0)


def deshuffle(w: WordLike, parts: Sequence[int]) -> list[tuple[SignedWord, ...]]:
    """Coproduct of the concatenation algebra, refined by part sizes.

    Returns the list of slot tuples (coefficient +1 each, duplicates kept):
    all ways of distributing the positions of w into subsequences of the
    prescribed sizes, each keeping the original left-to-right order.
    """
    w = as_word(w)
    if sum(parts) != len(w):
        raise SizeMismatch(f"parts {tuple(parts)} do not sum to degree {len(w)}")
    out = []
    for split in _position_splits(len(w), parts):
        out.append(tuple(SignedWord(w[p] for p in chosen) for chosen in split))
    return out


# ---------------------------------------------------------------------------
# involutions


def tau(x: Element) -> Element:
    """Rotation: bar every letter, order unchanged.  Linear on elements."""
    if isinstance(x, AlgebraElement):
        return x.map_words(lambda w: w.bar())
    return as_word(x).bar()


def tau_tilde(x: Element) -> Element:
    """Flip: reverse the word and bar every letter.  Linear on elements."""
    if isinstance(x, AlgebraElement):
        return x.map_words(lambda w: w.flip())
    return as_word(x).flip()


INVOLUTIONS = {"tau": tau, "tau_tilde": tau_tilde}


def project_invariant(x: Element, which: str = "tau", sign: str = "+") -> AlgebraElement:
    """(x + σ(x))/2 or (x − σ(x))/2 for the chosen involution σ."""
    x = _as_element(x)
    sx = INVOLUTIONS[which](x)
    if sign == "+":
        return (x + sx) / 2
    if sign == "-":
        return (x - sx) / 2
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def lie_bracket(x: Element, y: Element) -> AlgebraElement:
    """[x, y] = xy − yx in the concatenation algebra."""
    x, y = _as_element(x), _as_element(y)
    return concat_elements(x, y) - concat_elements(y, x)


# ---------------------------------------------------------------------------
# primitivity


def coproduct_component(x: AlgebraElement, i: int, algebra: str) -> dict:
    """The (i, n−i) component of the coproduct, as {(u, v): coeff}."""
    n = x.degree()
    acc: dict[tuple, Fraction] = {}
    for w, c in x:
        if algebra == SHUFFLE:
            pair = (SignedWord(w[:i]), SignedWord(w[i:]))
            acc[pair] = acc.get(pair, 0) + c
        elif algebra == CONCAT:
            for u, v in deshuffle(w, (i, n - i)):
                acc[(u, v)] = acc.get((u, v), 0) + c
        else:
            raise ValueError(f"unknown algebra {algebra!r}")
    return {k: v for k, v in acc.items() if v}


def is_primitive(x: Element, algebra: str) -> bool:
    """True iff every proper coproduct component of x vanishes."""
    x = _as_element(x)
    if not x:
        return True
    n = x.degree()
    if n < 1:
        raise NotHomogeneous("primitivity needs degree >= 1")
    return all(not coproduct_component(x, i, algebra) for i in range(1, n))
