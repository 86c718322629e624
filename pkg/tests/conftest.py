"""Shared helpers: seeded random data and independent brute-force oracles.

The oracles deliberately avoid the library's reduction and expansion code
paths so that tests compare two separate routes to the same value.
"""

from __future__ import annotations

import random

from linkhomotopy import SimplicialElement, Word, element, reduce_word
from linkhomotopy.links import LinkProfile, build_profile


def random_syllables(
    rng: random.Random,
    max_generator: int,
    max_syllables: int = 8,
    max_exponent: int = 3,
) -> list[tuple[int, int]]:
    exponents = [e for e in range(-max_exponent, max_exponent + 1) if e != 0]
    return [
        (rng.randint(1, max_generator), rng.choice(exponents))
        for _ in range(rng.randint(0, max_syllables))
    ]


def random_word(
    rng: random.Random,
    max_generator: int,
    max_syllables: int = 8,
    max_exponent: int = 3,
) -> Word:
    return reduce_word(random_syllables(rng, max_generator, max_syllables, max_exponent))


def random_element(rng: random.Random, degree: int, max_syllables: int = 6) -> SimplicialElement:
    if degree == 0:
        return element(0, Word())
    return element(degree, random_word(rng, degree, max_syllables, max_exponent=2))


def naive_reduce_letters(letters: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Letter-by-letter stack reduction; input and output are single letters
    ``(generator, +1 or -1)``."""
    stack: list[tuple[int, int]] = []
    for gen, sign in letters:
        if stack and stack[-1] == (gen, -sign):
            stack.pop()
        else:
            stack.append((gen, sign))
    return stack


def as_letters(syllables: list[tuple[int, int]]) -> list[tuple[int, int]]:
    letters = []
    for gen, exp in syllables:
        sign = 1 if exp > 0 else -1
        letters.extend([(gen, sign)] * abs(exp))
    return letters


def random_profile(rng: random.Random, n: int) -> LinkProfile:
    """A profile satisfying the basic genus constraints, otherwise arbitrary."""
    from itertools import combinations

    overrides: dict[frozenset[int], int] = {frozenset(): -1}
    for r in range(1, n + 1):
        for sub in combinations(range(1, n + 1), r):
            overrides[frozenset(sub)] = 0 if r == 1 else rng.randint(0, r - 1)
    return build_profile(n, overrides=overrides)
