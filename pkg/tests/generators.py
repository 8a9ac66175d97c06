"""Seeded random languages for the oracle comparisons."""
from __future__ import annotations

import random

from booltop.lang import Dfa, equivalent, minimize, rotation_closure
from booltop.theory import Evaluation, canonical_circular, is_cuttable


def random_dfa(rng: random.Random, alphabet: str = "ab", max_states: int = 5) -> Dfa:
    n = rng.randint(1, max_states)
    return _draw(rng, alphabet, n)


def _draw(rng: random.Random, alphabet: str, n: int) -> Dfa:
    delta = tuple(tuple(rng.randrange(n) for _ in alphabet) for _ in range(n))
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(tuple(alphabet), delta, 0, accepting)


def minimal_of_size(rng: random.Random, n: int, alphabet: str = "ab") -> Dfa:
    """A random language whose minimal DFA has exactly n states."""
    while True:
        d = minimize(_draw(rng, alphabet, n))
        if d.n_states == n:
            return d


def random_circle(rng: random.Random, alphabet: str = "ab", max_states: int = 5) -> Dfa:
    """Rotation closure of a random language, redrawn until it fits the state bound."""
    while True:
        d = minimize(rotation_closure(random_dfa(rng, alphabet, 3)))
        if d.n_states <= max_states:
            return d


def random_pairs(seed: int, count: int, max_states: int = 5) -> list[tuple[Evaluation, bool]]:
    """(evaluation, circle is the canonical one) pairs; about half use the canonical circle."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        li = minimal_of_size(rng, rng.choice([1, 2, 3, 3, 4, 4, 5, 5][:2 * max_states - 2]))
        canonical = None
        if is_cuttable(li):
            c = canonical_circular(li)
            if c.n_states <= max_states:
                canonical = c
        if canonical is not None and rng.random() < 0.5:
            circ = canonical
        else:
            circ = random_circle(rng, "ab", max_states)
        is_canon = canonical is not None and equivalent(circ, canonical)
        out.append((Evaluation.from_dfas(li, circ), is_canon))
    return out
