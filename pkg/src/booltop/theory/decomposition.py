"""Decompositions of the identity and the circle language they induce."""
from __future__ import annotations

from dataclasses import dataclass

from ..boolsemi import coevaluation, distributivity_counterexample, is_distributive
from ..errors import NotCuttable
from ..lang import Dfa, is_rotation_closed, minimize
from .halfspace import HalfSpace, half_state_space


@dataclass(frozen=True)
class IdDecomposition:
    """Pairs (u in A(+), v in A(-)) with a(xy) = OR_i <x|u_i> <v_i|y>."""

    minus: HalfSpace
    plus: HalfSpace
    pairs: tuple[tuple[int, int], ...]

    def names(self) -> list[tuple[str, str]]:
        return [(self.plus.name(u), self.minus.name(v)) for u, v in self.pairs]

    def __str__(self) -> str:
        return " + ".join(f"{u}⊗{v}" for u, v in self.names())

    def holds(self) -> bool:
        """Exhaustive check over prefix classes x and suffix classes y."""
        m = self.minus.matrix
        for x in range(m.rows):
            for y in range(m.cols):
                rhs = any(u >> x & 1 and v >> y & 1 for u, v in self.pairs)
                if rhs != bool(m.entry(x, y)):
                    return False
        return True

    def snake(self, v: int) -> int:
        """v -> OR_i <v, u_i> v_i on A(-)."""
        acc = 0
        for u, w in self.pairs:
            if self.minus.pairing(v, u):
                acc |= w
        return acc

    def to_json(self) -> dict:
        return {"pairs": [{"plus": u, "minus": v} for u, v in self.names()]}


def id_decomposition(dfa: Dfa) -> IdDecomposition:
    hm = half_state_space(dfa, "-")
    hp = half_state_space(dfa, "+")
    s = hm.space
    if not is_distributive(s):
        a, b, c = distributivity_counterexample(s)
        raise NotCuttable("A(-) is not distributive; the language is not cuttable",
                          counterexample=[hm.name(a), hm.name(b), hm.name(c)])
    coev = coevaluation(s)
    columns = hp.word_class  # plus elements of the suffix classes, as vectors over prefix classes
    pairs = []
    for x, f in coev.pairs:
        # plus element pairing like f: join of suffix classes whose functional is below f
        fx = f.bits
        u = 0
        for p, col in enumerate(columns):
            if all(not (v >> p & 1) or _eval(s, fx, v) for v in s.elements):
                u |= col
        pairs.append((u, x.bits))
    out = IdDecomposition(hm, hp, tuple(pairs))
    if not out.holds():
        raise AssertionError("decomposition of the identity failed verification")
    return out


def _eval(s, f: int, v: int) -> bool:
    from ..boolsemi import evaluate

    return bool(evaluate(s, f, v))


def is_cuttable(dfa: Dfa) -> bool:
    return is_distributive(half_state_space(dfa, "-").space)


def canonical_circular(dfa: Dfa, idd: IdDecomposition | None = None) -> Dfa:
    """DFA of the circle language a(w) = OR_i a(v_i w u_i)."""
    idd = id_decomposition(dfa) if idd is None else idd
    hm = idd.minus
    letters = hm.dfa.alphabet
    start = tuple(v for _, v in idd.pairs)
    index = {start: 0}
    states = [start]
    delta = []
    k = 0
    while k < len(states):
        t = states[k]
        row = []
        for a in letters:
            nxt = tuple(hm.act(v, a) for v in t)
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
        k += 1
    accepting = frozenset(i for i, t in enumerate(states)
                          if any(hm.pairing(v, u) for v, (u, _) in zip(t, idd.pairs)))
    out = minimize(Dfa(letters, tuple(delta), 0, accepting))
    if not is_rotation_closed(out):
        raise AssertionError("canonical circle language is not rotation closed")
    return out


def word_circular_value(idd: IdDecomposition, w: str) -> bool:
    """Circle value from words alone: OR of a(m w p) over each pair (u, v),
    m a prefix class below v and p a suffix class below u.
    """
    hm, hp = idd.minus, idd.plus
    d = hm.dfa
    for u, v in idd.pairs:
        ms = [m for m, x in zip(hm.prefix_reps, hm.word_class) if m is not None and x and x & ~v == 0]
        ps = [p for p, x in zip(hp.suffix_reps, hp.word_class) if p is not None and x and x & ~u == 0]
        if any(d.accepts(m + w + p) for m in ms for p in ps):
            return True
    return False
