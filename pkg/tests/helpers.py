"""Shared builders for the test suite: seeded random words, loops, and flows."""

import random

from latticegroups import (
    Edge,
    EdgeFlow,
    Letter,
    Word,
    evaluate_path,
    parse_word,
)


def w(text, d=2):
    return parse_word(text, d)


def flow_of(text, d=2):
    return evaluate_path(parse_word(text, d)).flow


def random_letters(rng: random.Random, d: int, length: int):
    return [Letter(rng.randint(1, d), rng.choice((1, -1))) for _ in range(length)]


def random_word(rng: random.Random, d: int, max_len: int) -> Word:
    return Word(random_letters(rng, d, rng.randint(0, max_len)), d)


def random_loop_word(rng: random.Random, d: int, max_half: int) -> Word:
    """A word with zero endpoint: random letters followed by their inverses
    in a shuffled order (each inverse letter cancels one step's displacement)."""
    out = random_letters(rng, d, rng.randint(1, max_half))
    back = [letter.inverse() for letter in out]
    rng.shuffle(back)
    return Word(out + back, d)


def random_loop_flow(rng: random.Random, d: int, max_half: int) -> EdgeFlow:
    return evaluate_path(random_loop_word(rng, d, max_half)).flow


def shuffled_copy(flow: EdgeFlow, rng: random.Random) -> EdgeFlow:
    """Same flow, rebuilt with a different insertion order of its entries."""
    pairs = list(flow.entries())
    rng.shuffle(pairs)
    return EdgeFlow(flow.d, pairs)


def edge(base, axis) -> Edge:
    return Edge(tuple(base), axis)
