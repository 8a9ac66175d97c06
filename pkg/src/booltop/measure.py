"""Complexity of a language as the size of its minus state space, and
state spaces of several languages read together.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .boolsemi import Semimodule, reduced_tensor
from .errors import AlphabetMismatch, NotCircular
from .lang import Dfa, is_rotation_closed, minimize, opposite
from .theory.diagrams import pm_state_space
from .theory.evaluation import Evaluation
from .theory.halfspace import half_state_space


@dataclass(frozen=True)
class Complexity:
    card: int
    base: int = 1

    @property
    def exact(self) -> bool:
        r = Fraction(self.card, self.base)
        return r.denominator == 1 and r.numerator & (r.numerator - 1) == 0

    @property
    def value(self) -> float:
        return math.log2(self.card / self.base)

    def to_json(self) -> dict:
        out = {"card": self.card, "c": round(self.value, 12), "exact": self.exact}
        if self.base != 1:
            out["base"] = self.base
        return out


def complexity(dfa: Dfa) -> Complexity:
    return Complexity(half_state_space(dfa, "-").space.cardinality)


def _check(dfas: Sequence[Dfa]) -> None:
    for d in dfas[1:]:
        if d.alphabet != dfas[0].alphabet:
            raise AlphabetMismatch("languages use different alphabets")


def _product_prefixes(dfas: Sequence[Dfa]) -> list[tuple[int, ...]]:
    """Reachable state tuples of the product automaton, BFS order."""
    letters = dfas[0].alphabet
    start = tuple(d.init for d in dfas)
    seen = {start: None}
    order = [start]
    k = 0
    while k < len(order):
        t = order[k]
        for i in range(len(letters)):
            nxt = tuple(d.delta[q][i] for d, q in zip(dfas, t))
            if nxt not in seen:
                seen[nxt] = None
                order.append(nxt)
        k += 1
    return order


def _block_space(rows_dfas: Sequence[Dfa], column_blocks: Sequence[Sequence[Dfa]]) -> Semimodule:
    """Row span for prefixes read by ``rows_dfas`` against suffix classes per block.

    Block j pairs with ``rows_dfas[j]`` evaluated on suffixes that separate
    the languages of ``column_blocks[j]``.
    """
    states = _product_prefixes(rows_dfas)
    cols = []
    for j, block in enumerate(column_blocks):
        joint_op = _joint_suffix_reps(block)
        cols.extend((j, s) for s in joint_op)
    rows = []
    for t in states:
        rows.append(sum(1 << c for c, (j, s) in enumerate(cols)
                        if rows_dfas[j].run(t[j], s) in rows_dfas[j].accepting))
    return Semimodule.span(len(cols), rows)


def _joint_suffix_reps(dfas: Sequence[Dfa]) -> list[str]:
    # reverse of an access word of the product of the opposite automata
    ops = [opposite(d) for d in dfas]
    letters = ops[0].alphabet
    start = tuple(o.init for o in ops)
    words = {start: ""}
    order = [start]
    k = 0
    while k < len(order):
        t = order[k]
        for i in sorted(range(len(letters)), key=lambda i: letters[i]):
            nxt = tuple(o.delta[q][i] for o, q in zip(ops, t))
            if nxt not in words:
                words[nxt] = words[t] + letters[i]
                order.append(nxt)
        k += 1
    return [words[t][::-1] for t in order]


def joint_space(dfas: Sequence[Dfa]) -> Semimodule:
    _check(dfas)
    ds = [minimize(d) for d in dfas]
    return _block_space(ds, [[d] for d in ds])


def joint_complexity(dfas: Sequence[Dfa]) -> Complexity:
    return Complexity(joint_space(dfas).cardinality)


def relative_complexity(l2: Dfa, l1: Dfa) -> Complexity:
    """c(L2 | L1) = c(L1, L2) - c(L1), reported as a cardinality ratio."""
    return Complexity(joint_space([l1, l2]).cardinality, complexity(l1).card)


def circ_relative(ev: Evaluation) -> Complexity:
    pm = pm_state_space(ev)
    card_a = pm.space.cardinality
    card_t = reduced_tensor(pm.plus.space, pm.minus.space).space.cardinality
    return Complexity(card_a, card_t)


@dataclass(frozen=True)
class LanguageMatrix:
    out_labels: tuple[str, ...]
    in_labels: tuple[str, ...]
    grid: tuple[tuple[Dfa, ...], ...]
    circ: Dfa

    def __post_init__(self):
        if len(self.grid) != len(self.out_labels) or any(len(r) != len(self.in_labels) for r in self.grid):
            raise ValueError("grid shape does not match labels")
        alph = self.circ.alphabet
        if any(d.alphabet != alph for r in self.grid for d in r):
            raise AlphabetMismatch("grid languages use different alphabets")
        if not is_rotation_closed(self.circ):
            raise NotCircular("circle language is not closed under rotation")

    def to_json(self) -> dict:
        return {"out": list(self.out_labels), "in": list(self.in_labels),
                "grid": [[d.to_json() for d in r] for r in self.grid], "circ": self.circ.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "LanguageMatrix":
        return cls(tuple(obj["out"]), tuple(obj["in"]),
                   tuple(tuple(Dfa.from_json(d) for d in r) for r in obj["grid"]),
                   Dfa.from_json(obj["circ"]))


def matrix_language_space(lm: LanguageMatrix) -> Semimodule:
    """A(-) spanned by (prefix, out-label i) against (in-label j, suffix).

    Rows for out-label i come from the product of the languages in row i;
    columns for in-label j are joint suffix classes of the column-j
    languages.  One out-label and k in-labels gives the joint space of the k
    languages.
    """
    grid = [[minimize(d) for d in r] for r in lm.grid]
    ncol = len(lm.in_labels)
    col_suffixes = [_joint_suffix_reps([grid[i][j] for i in range(len(grid))]) for j in range(ncol)]
    cols = [(j, s) for j in range(ncol) for s in col_suffixes[j]]
    rows = []
    for i, row in enumerate(grid):
        for t in _product_prefixes(row):
            rows.append(sum(1 << c for c, (j, s) in enumerate(cols)
                            if row[j].run(t[j], s) in row[j].accepting))
    return Semimodule.span(len(cols), rows)
