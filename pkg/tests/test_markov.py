import math
from fractions import Fraction

import numpy as np
import pytest

from hyperoct import (
    FLIP,
    ROTATION,
    BadIndices,
    FlavorUnsupported,
    HypothesesNotMet,
    ShuffleSpec,
    SignedWord,
    StateSpaceTooLarge,
    batch_step,
    des,
    eigenfunction_value,
    exact_stat_expectation,
    expectation_via_eigenfunction,
    expected_descents,
    f_minus,
    f_plus,
    f_tilde,
    g_fn,
    sample_step,
    signed_permutations,
    stationary_distribution,
    stationary_is_unique,
    subdominant_families,
    transition_matrix,
    verify_subdominant,
)
from hyperoct import exactla
from conftest import W


def test_spec_validation():
    s = ShuffleSpec(3, 2, "plus", "flip")
    assert s.sign == "+"
    with pytest.raises(ValueError):
        ShuffleSpec(0, 2, "+", "flip")
    with pytest.raises(ValueError):
        ShuffleSpec(2, 2, "+", "twist")


def test_transition_n1_flip_minus(tm_cache):
    tm = tm_cache(1, 2, "-", FLIP)
    one = W("1")
    assert tm.entry(one, W("1")) == Fraction(1, 2)
    assert tm.entry(one, W("-1")) == Fraction(1, 2)
    assert tm.row_sums_exact()


def test_state_space_cap():
    with pytest.raises(StateSpaceTooLarge):
        transition_matrix(ShuffleSpec(6, 2, "+", FLIP), cap=5)


@pytest.mark.parametrize("a,sign,flavor", [(2, "+", FLIP), (3, "-", ROTATION)])
def test_rows_stochastic(tm_cache, a, sign, flavor):
    for n in (1, 2, 3):
        tm = tm_cache(n, a, sign, flavor)
        assert tm.row_sums_exact()
        assert (tm.counts >= 0).all()


def test_charpoly_n3_flip_table(tm_cache):
    tm = tm_cache(3, 2, "+", FLIP)
    assert exactla.charpoly_matches(tm.counts, {8: 1, 4: 6, 2: 8, 0: 33})


def test_stationary(tm_cache):
    pi = stationary_distribution(ShuffleSpec(2, 2, "+", FLIP))
    assert pi == [Fraction(1, 8)] * 8
    assert sum(pi) == 1
    with pytest.raises(HypothesesNotMet):
        stationary_distribution(ShuffleSpec(2, 1, "+", FLIP))
    for n in (1, 2, 3):
        for a, sign, flavor in ((2, "+", FLIP), (2, "-", ROTATION), (3, "-", FLIP)):
            tm = tm_cache(n, a, sign, flavor)
            # pi K = pi exactly: column sums equal the scale
            assert (tm.counts.sum(axis=0) == tm.scale).all()
            assert stationary_is_unique(tm)


def test_des_examples():
    assert des(W("4 3 5 -1 6 -7 -2")) == 3
    assert des(W("1 2 3 4")) == 0
    assert des(W("4 3 2 1")) == 3
    # the paper's descent set: 43, 5 1bar, 6 7bar (signed-integer comparison)
    w = W("4 3 5 -1 6 -7 -2")
    pairs = [(w[i], w[i + 1]) for i in range(len(w) - 1) if w[i] > w[i + 1]]
    assert pairs == [(4, 3), (5, -1), (6, -7)]


def test_eigenfunction_values():
    w = W("1 6 -7 2")
    assert f_tilde(6, 7, w) == -1  # 6 7bar is the (i jbar) case for i=6, j=7
    assert f_tilde(7, 6, w) == -1  # and the (j ibar) case for i=7, j=6
    assert f_tilde(7, 6, W("7 6 1 2")) == 1
    assert f_plus(6, 7, w) == 0
    assert f_minus(6, 7, w) == 1  # 6 7bar is the (i jbar) case, i = 6 < j = 7
    assert g_fn(1, w) == 1
    assert g_fn(2, w) == 1
    assert g_fn(6, w) == 0
    with pytest.raises(BadIndices):
        f_plus(3, 3, w)
    with pytest.raises(BadIndices):
        f_tilde(3, 3, w)


def test_f_minus_sign_convention():
    # f-: +1 on (ibar j) and (i jbar); -1 on (j ibar) and (jbar i), i < j
    assert f_minus(1, 2, W("-1 2 3")) == 1
    assert f_minus(1, 2, W("1 -2 3")) == 1
    assert f_minus(1, 2, W("2 -1 3")) == -1
    assert f_minus(1, 2, W("-2 1 3")) == -1
    assert f_minus(1, 2, W("1 3 2")) == 0


def test_ftilde_descent_identity():
    # sum over i<j of f_tilde = (n-1) - 2 des(w)
    import itertools
    import random

    rng = random.Random(0)
    for _ in range(40):
        n = rng.randint(2, 5)
        w = SignedWord(
            s * v
            for s, v in zip(
                (rng.choice((-1, 1)) for _ in range(n)),
                rng.sample(range(1, n + 1), n),
            )
        )
        total = sum(
            f_tilde(i, j, w) for i, j in itertools.combinations(range(1, n + 1), 2)
        )
        assert total == (n - 1) - 2 * des(w)


@pytest.mark.parametrize(
    "a,sign,flavor",
    [(2, "+", ROTATION), (2, "-", FLIP), (3, "+", FLIP), (3, "-", ROTATION)],
)
def test_subdominant(tm_cache, a, sign, flavor):
    for n in (2, 3):
        spec = ShuffleSpec(n, a, sign, flavor)
        rep = verify_subdominant(spec, tm_cache(n, a, sign, flavor))
        assert rep["ok"], rep


def test_subdominant_family_shapes():
    fams = dict(subdominant_families(ShuffleSpec(3, 2, "+", FLIP)))
    assert len(fams[Fraction(1, 2)]) == 6  # n(n-1) ordered pairs
    fams_odd = dict(subdominant_families(ShuffleSpec(3, 3, "-", ROTATION)))
    assert len(fams_odd[Fraction(1, 3)]) == 6  # f+ and f- over 3 pairs
    assert len(fams_odd[Fraction(-1, 3)]) == 3  # g_i


def test_expected_descents_formula(tm_cache):
    spec = ShuffleSpec(3, 2, "+", FLIP)
    w0 = W("3 2 1")
    assert expected_descents(spec, w0, 0) == des(w0)
    assert expected_descents(spec, w0, 1) == Fraction(3, 2)
    tm = tm_cache(3, 2, "+", FLIP)
    desvec = [des(s) for s in tm.states]
    for t in range(5):
        assert exact_stat_expectation(tm, w0, t, desvec) == expected_descents(spec, w0, t)
    with pytest.raises(FlavorUnsupported):
        expected_descents(ShuffleSpec(3, 2, "+", ROTATION), w0, 1)


def test_expectation_via_eigenfunction(tm_cache):
    tm = tm_cache(3, 2, "+", FLIP)
    w0 = W("2 1 3")
    beta = Fraction(1, 2)
    f = lambda w: f_tilde(1, 2, w)
    # cross-check beta^t f(w0) against the exact K^t expectation
    fvec = [f(s) for s in tm.states]
    for t in (0, 1, 2, 3):
        assert expectation_via_eigenfunction(f, beta, w0, t) == exact_stat_expectation(
            tm, w0, t, fvec
        )


def test_sample_step_deterministic_cases():
    rng = np.random.default_rng(0)
    spec = ShuffleSpec(4, 1, "+", FLIP)
    w = W("2 -4 1 3")
    assert sample_step(spec, w, rng) == w  # a=1, sign +: single undecorated pile
    # a=1, sign -: the whole deck is one decorated pile
    flip_all = sample_step(ShuffleSpec(4, 1, "-", FLIP), w, rng)
    assert flip_all == w.flip()
    rot_all = sample_step(ShuffleSpec(4, 1, "-", ROTATION), w, rng)
    assert rot_all == w.bar()


def test_batch_matches_single_distribution(tm_cache):
    spec = ShuffleSpec(2, 2, "-", FLIP)
    tm = tm_cache(2, 2, "-", FLIP)
    w0 = W("1 2")
    row = {y: tm.entry(w0, y) for y in tm.states}
    trials = 40_000
    rng = np.random.default_rng(123)
    decks = np.tile(np.array(w0, dtype=np.int64), (trials, 1))
    out = batch_step(spec, decks, rng)
    counts = {}
    for r in out:
        key = SignedWord(r)
        counts[key] = counts.get(key, 0) + 1
    rng2 = np.random.default_rng(123)
    counts_single = {}
    for _ in range(10_000):
        y = sample_step(spec, w0, rng2)
        counts_single[y] = counts_single.get(y, 0) + 1
    for y, p in row.items():
        if p == 0:
            assert counts.get(y, 0) == 0
            assert counts_single.get(y, 0) == 0
            continue
        for c, total in ((counts.get(y, 0), trials), (counts_single.get(y, 0), 10_000)):
            se = math.sqrt(float(p) * (1 - float(p)) * total)
            assert abs(c - float(p) * total) < 5 * se, (y, c, p)
