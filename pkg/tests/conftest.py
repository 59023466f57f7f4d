import itertools

import pytest

from hyperoct import SignedWord, ShuffleSpec, transition_matrix


def W(text: str) -> SignedWord:
    return SignedWord.parse(text)


def brute_shuffle_two(u, v):
    """Independent oracle: all interleavings by recursion on first letters."""
    u, v = tuple(u), tuple(v)
    if not u:
        return [v]
    if not v:
        return [u]
    return [(u[0],) + rest for rest in brute_shuffle_two(u[1:], v)] + [
        (v[0],) + rest for rest in brute_shuffle_two(u, v[1:])
    ]


def brute_deshuffle_pairs(w, i):
    """Independent oracle: choose the first-slot positions directly."""
    w = tuple(w)
    out = []
    for chosen in itertools.combinations(range(len(w)), i):
        rest = tuple(p for p in range(len(w)) if p not in chosen)
        out.append(
            (tuple(w[p] for p in chosen), tuple(w[p] for p in rest))
        )
    return out


@pytest.fixture(scope="session")
def tm_cache():
    cache = {}

    def get(n, a, sign, flavor):
        key = (n, a, sign, flavor)
        if key not in cache:
            cache[key] = transition_matrix(ShuffleSpec(n, a, sign, flavor))
        return cache[key]

    return get
