"""Deterministic circular automata: two commuting actions that prepend
(``delta_l``) and append (``delta_r``) letters to a word on a circle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidAutomaton, NotCircular
from .lang import CircularWord, Dfa, is_rotation_closed, minimize, transition_monoid


@dataclass(frozen=True)
class CircularDfa:
    alphabet: tuple[str, ...]
    delta_l: tuple[tuple[int, ...], ...]
    delta_r: tuple[tuple[int, ...], ...]
    q_in: int
    accepting: frozenset[int]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.delta_l)
        if len(self.delta_r) != n:
            raise ValueError("delta_l and delta_r have different state counts")
        for table in (self.delta_l, self.delta_r):
            for row in table:
                if len(row) != len(self.alphabet) or any(not 0 <= q < n for q in row):
                    raise ValueError("transition table is not total")
        if not 0 <= self.q_in < n:
            raise ValueError("q_in out of range")

    @property
    def n_states(self) -> int:
        return len(self.delta_l)

    def state_of(self, left: str, right: str) -> int:
        """State for the word ``left + right`` built by appending ``right`` then prepending ``left``."""
        q = self.q_in
        for ch in right:
            q = self.delta_r[q][self.alphabet.index(ch)]
        for ch in reversed(left):
            q = self.delta_l[q][self.alphabet.index(ch)]
        return q

    def to_json(self) -> dict:
        out = {
            "alphabet": list(self.alphabet),
            "states": self.n_states,
            "q_in": self.q_in,
            "accepting": sorted(self.accepting),
            "delta_l": [list(r) for r in self.delta_l],
            "delta_r": [list(r) for r in self.delta_r],
        }
        if self.names is not None:
            out["names"] = list(self.names)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CircularDfa":
        names = tuple(obj["names"]) if "names" in obj else None
        return cls(tuple(obj["alphabet"]), tuple(tuple(r) for r in obj["delta_l"]),
                   tuple(tuple(r) for r in obj["delta_r"]), int(obj["q_in"]),
                   frozenset(obj["accepting"]), names)


def validate_dcfa(c: CircularDfa) -> list[dict]:
    out = []
    k = len(c.alphabet)
    for q in range(c.n_states):
        for a in range(k):
            for b in range(k):
                lr = c.delta_l[c.delta_r[q][b]][a]
                rl = c.delta_r[c.delta_l[q][a]][b]
                if lr != rl:
                    out.append({"axiom": 1, "a": c.alphabet[a], "b": c.alphabet[b], "q": q})
    for a in range(k):
        if c.delta_l[c.q_in][a] != c.delta_r[c.q_in][a]:
            out.append({"axiom": 2, "a": c.alphabet[a], "q": c.q_in})
    for q in range(c.n_states):
        for a in range(k):
            if (c.delta_l[q][a] in c.accepting) != (c.delta_r[q][a] in c.accepting):
                out.append({"axiom": 3, "a": c.alphabet[a], "q": q})
    return out


def dcfa_accepts(c: CircularDfa, w: CircularWord | str) -> bool:
    s = w.word if isinstance(w, CircularWord) else w
    splits = {0, len(s) // 2, len(s)}
    results = {c.state_of(s[:k], s[k:]) in c.accepting for k in splits}
    if len(results) != 1:
        raise InvalidAutomaton("acceptance depends on where the word is split", word=s)
    return results.pop()


def split_states(c: CircularDfa, w: str) -> list[int]:
    """Reached state for every split and every rotation of ``w``."""
    out = []
    rots = [w[i:] + w[:i] for i in range(len(w))] or [""]
    for r in rots:
        for k in range(len(r) + 1):
            out.append(c.state_of(r[:k], r[k:]))
    return out


def _require_circular(dfa: Dfa) -> None:
    if not is_rotation_closed(dfa):
        raise NotCircular("language is not closed under rotation")


def dcfa_from_language(dfa: Dfa) -> CircularDfa:
    """States are syntactic monoid elements; left and right actions multiply by letters."""
    _require_circular(dfa)
    m = transition_monoid(minimize(dfa))
    n = len(m)
    delta_l = tuple(tuple(m.mult[m.letters[a]][e] for a in range(len(dfa.alphabet))) for e in range(n))
    delta_r = tuple(tuple(m.mult[e][m.letters[a]] for a in range(len(dfa.alphabet))) for e in range(n))
    accepting = frozenset(e for e in range(n) if m.accepting[e])
    return CircularDfa(dfa.alphabet, delta_l, delta_r, 0, accepting, tuple(m.reps))


def minimal_dcfa(dfa: Dfa) -> CircularDfa:
    """Minimal circular automaton.

    For a rotation-closed language the right congruence of the minimal DFA
    already is two-sided, so its states carry a left action too:
    ``delta_l(a, q)`` is the state of ``a`` followed by a word reaching q.
    """
    _require_circular(dfa)
    d = minimize(dfa)
    reps = d.access_words
    delta_l = tuple(tuple(d.run(d.init, a + reps[q]) for a in d.alphabet) for q in range(d.n_states))
    c = CircularDfa(d.alphabet, delta_l, d.delta, d.init, d.accepting, tuple(reps))
    bad = validate_dcfa(c)
    if bad:
        raise InvalidAutomaton("circular automaton axioms fail", violations=bad[:5])
    return c


def interval_forget(c: CircularDfa) -> Dfa:
    """Forget the left action; the right action reads words left to right."""
    return Dfa(c.alphabet, c.delta_r, c.q_in, c.accepting)


def minimize_dcfa(c: CircularDfa) -> CircularDfa:
    bad = validate_dcfa(c)
    if bad:
        raise InvalidAutomaton("circular automaton axioms fail", violations=bad[:5])
    return minimal_dcfa(interval_forget(c))


# -- mixed automata -------------------------------------------------------------


@dataclass(frozen=True)
class MixedAutomaton:
    """Arc, plus, minus and (second kind) pair states with their actions.

    ``None`` in any table stands for the shared zero state.  ``tau_plus``
    sends an arc or pair state to a plus state (a suffix) and ``tau_minus``
    to a minus state (a prefix).
    """

    kind: str
    alphabet: tuple[str, ...]
    arc_names: tuple[str, ...]
    arc_l: tuple[tuple[int, ...], ...]
    arc_r: tuple[tuple[int, ...], ...]
    plus_names: tuple[str, ...]
    plus_act: tuple[tuple[int | None, ...], ...]
    minus_names: tuple[str, ...]
    minus_act: tuple[tuple[int | None, ...], ...]
    tau_plus_arc: tuple[int | None, ...]
    tau_minus_arc: tuple[int | None, ...]
    pair_names: tuple[str, ...] = ()
    pair_l: tuple[tuple[int | None, ...], ...] = ()
    pair_r: tuple[tuple[int | None, ...], ...] = ()
    tau_plus_pair: tuple[int | None, ...] = ()
    tau_minus_pair: tuple[int | None, ...] = ()
    distinguished: int | None = None

    def intertwining_violations(self) -> list[dict]:
        out = []
        k = len(self.alphabet)

        def act(table, q, a):
            return None if q is None else table[q][a]

        for s in range(len(self.arc_names)):
            for a in range(k):
                if self.tau_plus_arc[self.arc_l[s][a]] != act(self.plus_act, self.tau_plus_arc[s], a):
                    out.append({"map": "tau_plus", "state": self.arc_names[s], "a": self.alphabet[a]})
                if self.tau_minus_arc[self.arc_r[s][a]] != act(self.minus_act, self.tau_minus_arc[s], a):
                    out.append({"map": "tau_minus", "state": self.arc_names[s], "a": self.alphabet[a]})
        return out

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "alphabet": list(self.alphabet),
            "arc_states": list(self.arc_names),
            "arc_delta_l": [list(r) for r in self.arc_l],
            "arc_delta_r": [list(r) for r in self.arc_r],
            "plus_states": list(self.plus_names),
            "plus_action": [list(r) for r in self.plus_act],
            "minus_states": list(self.minus_names),
            "minus_action": [list(r) for r in self.minus_act],
            "tau_plus": list(self.tau_plus_arc),
            "tau_minus": list(self.tau_minus_arc),
        }
        if self.kind == "second":
            out.update({
                "pair_states": list(self.pair_names),
                "pair_delta_l": [list(r) for r in self.pair_l],
                "pair_delta_r": [list(r) for r in self.pair_r],
                "pair_tau_plus": list(self.tau_plus_pair),
                "pair_tau_minus": list(self.tau_minus_pair),
                "distinguished": self.distinguished,
            })
        return out


def _index_of(items: list, key) -> int | None:
    if key == 0:
        return None
    if key not in items:
        items.append(key)
    return items.index(key)


def mixed_automaton(ev, kind: str = "first") -> MixedAutomaton:
    """Build the mixed automaton of an evaluation from its state spaces."""
    from .theory import pm_state_space, show_word

    if kind not in ("first", "second"):
        raise ValueError("kind must be 'first' or 'second'")
    pm = pm_state_space(ev)
    hm, hp = pm.minus, pm.plus
    sigma = ev.alphabet
    k = len(sigma)

    # plus and minus states: nonzero word classes, zero collapsed to None
    minus_keys: list[int] = []
    for v in hm.word_class:
        _index_of(minus_keys, v)
    plus_keys: list[int] = []
    for v in hp.word_class:
        _index_of(plus_keys, v)

    def minus_id(v: int) -> int | None:
        return _index_of(minus_keys, v)

    def plus_id(v: int) -> int | None:
        return _index_of(plus_keys, v)

    minus_act = tuple(tuple(minus_id(hm.act(v, a)) for a in sigma) for v in list(minus_keys))
    plus_act = tuple(tuple(plus_id(hp.act(v, a)) for a in sigma) for v in list(plus_keys))

    arc_keys: list[int] = []
    arc_words: list[str] = []
    queue = [""]
    while queue:
        w = queue.pop(0)
        v = pm.arc_vector(w)
        if v not in arc_keys:
            arc_keys.append(v)
            arc_words.append(w)
            queue.extend(w + a for a in sigma)

    def arc_id(w: str) -> int:
        return arc_keys.index(pm.arc_vector(w))

    arc_l = tuple(tuple(arc_id(a + w) for a in sigma) for w in arc_words)
    arc_r = tuple(tuple(arc_id(w + a) for a in sigma) for w in arc_words)
    tau_plus = tuple(plus_id(hp.word_vector(w)) for w in arc_words)
    tau_minus = tuple(minus_id(hm.word_vector(w)) for w in arc_words)
    minus_names = tuple(show_word(hm.shortest_word(v)) for v in minus_keys)
    plus_names = tuple(show_word(hp.shortest_word(v)) for v in plus_keys)
    arc_names = tuple(f"arc({show_word(w)})" for w in arc_words)

    if kind == "first":
        return MixedAutomaton(kind, sigma, arc_names, arc_l, arc_r, plus_names, plus_act,
                              minus_names, minus_act, tau_plus, tau_minus)

    pair_keys: list[int] = []
    pair_words: list[tuple[str, str]] = []
    queue2 = [("", "")]
    while queue2:
        p, m = queue2.pop(0)
        v = pm.pair_vector(p, m)
        if v == 0 or v in pair_keys:
            continue
        pair_keys.append(v)
        pair_words.append((p, m))
        queue2.extend((a + p, m) for a in sigma)
        queue2.extend((p, m + a) for a in sigma)

    def pair_id(p: str, m: str) -> int | None:
        return _index_of(pair_keys, pm.pair_vector(p, m))

    pair_l = tuple(tuple(pair_id(a + p, m) for a in sigma) for p, m in pair_words)
    pair_r = tuple(tuple(pair_id(p, m + a) for a in sigma) for p, m in pair_words)
    tpp = tuple(plus_id(hp.word_vector(p)) if ev.alpha_interval(m) else None for p, m in pair_words)
    tmp = tuple(minus_id(hm.word_vector(m)) if ev.alpha_interval(p) else None for p, m in pair_words)
    pair_names = tuple(f"pair({show_word(p)},{show_word(m)})" for p, m in pair_words)
    dist = pair_id("", "")
    del k
    return MixedAutomaton(kind, sigma, arc_names, arc_l, arc_r, plus_names, plus_act,
                          minus_names, minus_act, tau_plus, tau_minus, pair_names, pair_l,
                          pair_r, tpp, tmp, dist)


def trivial_dcfa(alphabet: Iterable[str]) -> CircularDfa:
    letters = tuple(alphabet)
    row = (0,) * len(letters)
    return CircularDfa(letters, (row,), (row,), 0, frozenset({0}), ("",))
