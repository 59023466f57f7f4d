import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperoct import (
    CONCAT,
    AlgebraElement,
    Decoration,
    EmptyWord,
    NotLyndon,
    OutsideBasis,
    SignedWord,
    SingleLetter,
    apply_operator,
    build_eigenvector,
    classify_primitive,
    concat_elements,
    eigenbasis,
    is_lyndon,
    is_primitive,
    letter_key,
    lyndon_factorize,
    lyndon_words,
    primitive_dimensions,
    riffle_operator,
    shuffle_multiplicities,
    signed_permutations,
    standard_factorization,
    stdbrac,
    symmetrized_product,
    tau,
    tau_tilde,
)
from conftest import W

letters = st.integers(min_value=-3, max_value=3).filter(bool)
words = st.lists(letters, min_size=1, max_size=8).map(SignedWord)


def brute_is_lyndon(w):
    k = tuple(letter_key(c) for c in w)
    return all(k < k[i:] + k[:i] for i in range(1, len(k)))


def test_is_lyndon_paper_examples():
    assert is_lyndon(W("-1 6 -7 -2"))
    assert not is_lyndon(W("-5 3"))
    assert not is_lyndon(W("3 -5 3 -5"))
    assert is_lyndon(W("4"))
    assert is_lyndon(W("-4"))
    with pytest.raises(EmptyWord):
        is_lyndon(SignedWord())


def test_factorize_paper_example():
    got = lyndon_factorize(W("-4 3 5 -1 6 -7 -2"))
    assert got == (W("-4"), W("3 5"), W("-1 6 -7 -2"))


@given(words)
@settings(max_examples=150)
def test_factorize_properties(w):
    factors = lyndon_factorize(w)
    assert SignedWord(c for f in factors for c in f) == w
    assert all(is_lyndon(f) for f in factors)
    keys = [tuple(letter_key(c) for c in f) for f in factors]
    assert all(keys[i] >= keys[i + 1] for i in range(len(keys) - 1))
    if is_lyndon(w):
        assert factors == (w,)


def test_factors_start_at_left_to_right_minima():
    # distinct-letter words: factors begin exactly at left-to-right minima
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 6)
        labels = rng.sample(range(1, 8), n)
        w = SignedWord(rng.choice((-1, 1)) * v for v in labels)
        starts = []
        pos = 0
        for f in lyndon_factorize(w):
            starts.append(pos)
            pos += len(f)
        minima = [
            i
            for i in range(n)
            if all(letter_key(w[j]) > letter_key(w[i]) for j in range(i))
        ]
        assert starts == minima


def test_standard_factorization():
    assert standard_factorization(W("-1 6 -7 -2")) == (W("-1 6 -7"), W("-2"))
    assert standard_factorization(W("-1 6 -7")) == (W("-1"), W("6 -7"))
    assert standard_factorization(W("3 5")) == (W("3"), W("5"))
    with pytest.raises(SingleLetter):
        standard_factorization(W("3"))
    with pytest.raises(NotLyndon):
        standard_factorization(W("-5 3"))


def test_stdbrac_base_cases():
    assert stdbrac(W("-1")) == AlgebraElement([(W("1"), 1), (W("-1"), -1)])
    assert stdbrac(W("1")) == AlgebraElement([(W("1"), 1), (W("-1"), 1)])


def test_stdbrac_two_letters():
    got = stdbrac(W("6 -7"))
    assert len(got) == 8
    assert set(got.terms().values()) <= {1, -1}
    # [6+6bar, 7-7bar]
    assert got.coeff(W("6 7")) == 1
    assert got.coeff(W("6 -7")) == -1
    assert got.coeff(W("7 6")) == -1
    assert got.coeff(W("-7 -6")) == 1


# the first eight monomials of each displayed group of stdbrac(1bar 6 7bar 2bar)
PAPER_STDBRAC_TERMS = {
    "1 6 7 2": 1, "1 6 -7 2": -1, "1 -6 7 2": 1, "1 -6 -7 2": -1,
    "1 7 6 2": -1, "1 7 -6 2": -1, "1 -7 6 2": 1, "1 -7 -6 2": 1,
    "-1 6 7 2": -1, "-1 6 -7 2": 1, "-1 -6 7 2": -1, "-1 -6 -7 2": 1,
    "-1 7 6 2": 1, "-1 7 -6 2": 1, "-1 -7 6 2": -1, "-1 -7 -6 2": -1,
    "6 7 1 2": -1, "6 -7 1 2": 1, "-6 7 1 2": -1, "-6 -7 1 2": 1,
    "7 6 1 2": 1, "7 -6 1 2": 1, "-7 6 1 2": -1, "-7 -6 1 2": -1,
    "6 7 -1 2": 1, "6 -7 -1 2": -1, "-6 7 -1 2": 1, "-6 -7 -1 2": -1,
    "7 6 -1 2": -1, "7 -6 -1 2": -1, "-7 6 -1 2": 1, "-7 -6 -1 2": 1,
    "1 6 7 -2": -1, "1 6 -7 -2": 1, "1 -6 7 -2": -1, "1 -6 -7 -2": 1,
    "2 1 6 7": -1, "2 1 6 -7": 1, "2 1 -6 7": -1, "2 1 -6 -7": 1,
    "-2 1 6 7": 1, "-2 1 6 -7": -1, "-2 1 -6 7": 1, "-2 1 -6 -7": -1,
}


def test_stdbrac_128_term_example():
    got = stdbrac(W("-1 6 -7 -2"))
    assert len(got) == 128
    assert set(got.terms().values()) == {1, -1}
    for text, coeff in PAPER_STDBRAC_TERMS.items():
        assert got.coeff(W(text)) == coeff, text
    assert is_primitive(got, CONCAT)


def test_classify_primitive_paper_examples():
    assert classify_primitive(W("3 5"), Decoration.BAR) == "invariant"
    assert classify_primitive(W("-1 6 -7 -2"), Decoration.BAR) == "negating"
    assert classify_primitive(W("-4"), Decoration.TBAR) == "negating"
    assert classify_primitive(W("-3 5"), Decoration.TBAR) == "invariant"
    assert classify_primitive(W("-4"), Decoration.BAR) == "negating"
    with pytest.raises(NotLyndon):
        classify_primitive(W("-5 3"), Decoration.BAR)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_classification_matches_involution_action(d):
    for u in lyndon_words(2, d):
        b = stdbrac(u)
        assert is_primitive(b, CONCAT)
        for flavor, sigma in ((Decoration.BAR, tau), (Decoration.TBAR, tau_tilde)):
            want = 1 if classify_primitive(u, flavor) == "invariant" else -1
            assert sigma(b) == want * b, (u, flavor)


def test_symmetrized_product():
    p = stdbrac(W("1"))
    assert symmetrized_product([p]) == p
    q = stdbrac(W("2"))
    assert symmetrized_product([p, q]) == concat_elements(p, q) + concat_elements(q, p)
    # every signed permutation word of {1,2,3} has coefficient 1
    sym = symmetrized_product([stdbrac(W(str(i))) for i in (1, 2, 3)])
    for w in signed_permutations(3):
        assert sym.coeff(w) == 1


def test_build_eigenvector_rotation_paper_example():
    w = W("-4 3 5 -1 6 -7 -2")
    vec, value = build_eigenvector(w, 3, "+", Decoration.BAR)
    assert value == 3
    p1 = stdbrac(W("3 5"))
    q1 = stdbrac(W("-4"))
    q2 = stdbrac(W("-1 6 -7 -2"))
    want = (
        concat_elements(q1, q2, p1)
        + concat_elements(q1, p1, q2)
        + concat_elements(q2, p1, q1)
        + concat_elements(p1, q2, q1)
    )
    assert vec == want


def test_build_eigenvector_flip_example_eigenvalue():
    # the governing theorem gives (-1)^kbar * a^k = -9 here (k = 2, kbar = 1)
    w = W("-4 -3 5 -1 6 -7 -2")
    vec, value = build_eigenvector(w, 3, "-", Decoration.TBAR)
    assert value == -9
    T = riffle_operator(3, "-", Decoration.TBAR, 7)
    assert apply_operator(T, vec, CONCAT) == value * vec


def test_build_eigenvector_flip_even_zero():
    w = W("-4 -3 5 -1 6 -7 -2")
    vec, value = build_eigenvector(w, 2, "+", Decoration.TBAR)
    assert value == 0
    T = riffle_operator(2, "+", Decoration.TBAR, 7)
    assert apply_operator(T, vec, CONCAT) == AlgebraElement.zero()


def test_all_singleton_factor_eigenvector():
    # the decreasing word n..1 factorizes into n single positive letters,
    # so every operator assigns it the symmetrized product at eigenvalue a^n
    # (the increasing word 1..n is itself Lyndon: one factor, eigenvalue a)
    for flavor in (Decoration.BAR, Decoration.TBAR):
        for a, sign in ((2, "+"), (3, "-")):
            vec, value = build_eigenvector(W("3 2 1"), a, sign, flavor)
            assert value == a**3
            assert vec == symmetrized_product([stdbrac(W(str(i))) for i in (3, 2, 1)])
            _, one_factor = build_eigenvector(W("1 2 3"), a, sign, flavor)
            assert one_factor == a


def test_outside_basis():
    with pytest.raises(OutsideBasis):
        build_eigenvector(W("-1 2"), 2, "+", Decoration.BAR)


def test_degree_one_eigenbasis():
    got = eigenbasis(1, 1, 2, "+", Decoration.TBAR)
    vecs = {str(vec) for _, vec, _ in got}
    assert len(got) == 2
    assert {v for _, v, _ in got} == {
        AlgebraElement([(W("1"), 1), (W("-1"), 1)]),
        AlgebraElement([(W("1"), 1), (W("-1"), -1)]),
    }


def test_eigenbasis_n2_flip_counts():
    got = eigenbasis(2, 2, 2, "+", Decoration.TBAR)
    # only the 8 signed permutations of {1, 2}
    assert len(got) == 8
    from collections import Counter

    counts = Counter(v for _, _, v in got)
    assert counts == {4: 1, 2: 2, 0: 5}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_eigen_equations_all_configs(n):
    states = signed_permutations(n)
    for a in (2, 3):
        for sign in ("+", "-"):
            for flavor in (Decoration.BAR, Decoration.TBAR):
                T = riffle_operator(a, sign, flavor, n)
                emitted = eigenbasis(n, n, a, sign, flavor)
                for w, vec, mu in emitted:
                    assert apply_operator(T, vec, CONCAT) == mu * vec


def test_tilde_plus_alternate_format():
    w = W("-1 2 -3")
    left, lval = build_eigenvector(w, 3, "+", Decoration.TBAR, tilde_plus_format="left")
    right, rval = build_eigenvector(w, 3, "+", Decoration.TBAR, tilde_plus_format="right")
    assert lval == rval
    T = riffle_operator(3, "+", Decoration.TBAR, 3)
    assert apply_operator(T, left, CONCAT) == lval * left
    assert apply_operator(T, right, CONCAT) == rval * right


def test_primitive_dimensions_identity():
    # sum of b_i + bbar_i over classes equals the Lyndon word count
    for flavor in (Decoration.BAR, Decoration.TBAR):
        b, bb = primitive_dimensions(2, 4, flavor)
        for d in range(1, 5):
            assert b[d - 1] + bb[d - 1] == len(lyndon_words(2, d))
