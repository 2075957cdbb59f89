"""Shared helpers for the test suite."""

import random


def random_term(rng: random.Random, n: int, d: int, w: int):
    """A random (not necessarily canonical) term of exact weight w."""
    if w == 1:
        return rng.randint(1, d)
    # split w + n - 2 into n child weights, each in [1, w - 1]
    while True:
        cuts = [rng.randint(1, w - 1) for _ in range(n - 1)]
        last = w + n - 2 - sum(cuts)
        if 1 <= last <= w - 1:
            cuts.append(last)
            break
    rng.shuffle(cuts)
    return tuple(random_term(rng, n, d, wc) for wc in cuts)


def relabel(t, perm: dict):
    """Apply a generator-index permutation to a term."""
    if isinstance(t, int):
        return perm[t]
    return tuple(relabel(c, perm) for c in t)
