"""State spaces of a single point: prefixes on the minus side, suffixes on
the plus side, both realised inside the evaluation matrix of the language.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product

from ..boolsemi import BoolMatrix, Semimodule
from ..errors import LimitExceeded
from ..lang import Dfa, Nfa, minimize, opposite, words_up_to


def _shortlex_suffix_reps(op: Dfa) -> tuple[str, ...]:
    """Shortlex-least word w for each state reached by reverse(w) in ``op``."""
    n = op.n_states
    dist = [None] * n
    dist[op.init] = 0
    frontier = [op.init]
    while frontier:
        nxt = []
        for q in frontier:
            for r in op.delta[q]:
                if dist[r] is None:
                    dist[r] = dist[q] + 1
                    nxt.append(r)
        frontier = nxt
    preds: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for q in range(n):
        for i, r in enumerate(op.delta[q]):
            preds[r].append((i, q))
    letters = sorted(range(len(op.alphabet)), key=lambda i: op.alphabet[i])
    reps = []
    for p in range(n):
        if dist[p] is None:
            reps.append(None)
            continue
        # choose the first letter of w (the last one read) greedily
        cur = {p}
        word = []
        for k in range(dist[p], 0, -1):
            for i in letters:
                nxt = {q for s in cur for j, q in preds[s] if j == i and dist[q] == k - 1}
                if nxt:
                    word.append(op.alphabet[i])
                    cur = nxt
                    break
        reps.append("".join(word))
    return tuple(reps)


@dataclass(frozen=True, eq=False)
class HalfSpace:
    """A(-) (``sign='-'``) or A(+) (``sign='+'``) of an interval language.

    ``matrix[q][p]`` is the value on (prefix class q, suffix class p).  The
    minus space is the row span, the plus space the column span.
    """

    sign: str
    dfa: Dfa
    op: Dfa
    matrix: BoolMatrix

    @cached_property
    def prefix_reps(self) -> tuple[str, ...]:
        return self.dfa.access_words

    @cached_property
    def suffix_reps(self) -> tuple[str, ...]:
        return _shortlex_suffix_reps(self.op)

    @cached_property
    def word_class(self) -> tuple[int, ...]:
        """Element of every prefix (minus) or suffix (plus) state."""
        if self.sign == "-":
            return self.matrix.data
        return self.matrix.transpose().data

    @property
    def reps(self) -> tuple[str, ...]:
        return self.prefix_reps if self.sign == "-" else self.suffix_reps

    @cached_property
    def space(self) -> Semimodule:
        width = self.matrix.cols if self.sign == "-" else self.matrix.rows
        return Semimodule.span(width, self.word_class)

    def state_of(self, w: str) -> int:
        if self.sign == "-":
            return self.dfa.run(self.dfa.init, w)
        return self.op.run(self.op.init, w[::-1])

    def word_vector(self, w: str) -> int:
        return self.word_class[self.state_of(w)]

    @property
    def init(self) -> int:
        return self.word_vector("")

    @property
    def trace_bit(self) -> int:
        return self.op.init if self.sign == "-" else self.dfa.init

    def trace(self, v: int) -> int:
        return v >> self.trace_bit & 1

    @cached_property
    def _letter_maps(self) -> dict[str, tuple[int, ...]]:
        # minus: (v·a)[p] = v[δop(p, a)]; plus: (a·u)[q] = u[δ(q, a)]
        other = self.op if self.sign == "-" else self.dfa
        return {a: tuple(other.delta[c][i] for c in range(other.n_states))
                for i, a in enumerate(other.alphabet)}

    def act(self, v: int, a: str) -> int:
        """Append (minus) or prepend (plus) the letter ``a``."""
        src = self._letter_maps[a]
        out = 0
        for c, s in enumerate(src):
            if v >> s & 1:
                out |= 1 << c
        return out

    def act_word(self, v: int, w: str) -> int:
        letters = w if self.sign == "-" else reversed(w)
        for a in letters:
            v = self.act(v, a)
        return v

    @cached_property
    def irreducible_states(self) -> tuple[int, ...]:
        """One state index per irreducible element, in irreducible order."""
        out = []
        for x in self.space.irreducibles:
            out.append(min(i for i, v in enumerate(self.word_class) if v == x))
        return tuple(out)

    def shortest_word(self, v: int) -> str | None:
        best = None
        for i, u in enumerate(self.word_class):
            w = self.reps[i]
            if u == v and w is not None and (best is None or (len(w), w) < (len(best), best)):
                best = w
        return best

    def name(self, v: int) -> str:
        """Readable name: a shortest word of the class or a join of such names."""
        from .evaluation import show_word

        w = self.shortest_word(v)
        if w is not None:
            return show_word(w)
        if v == 0:
            return "0"
        parts = [show_word(self.shortest_word(x)) for x in self.space.irreducibles if x & ~v == 0]
        return "+".join(parts)

    def pairing(self, v: int, u: int) -> int:
        """<v|u> for v in A(-) and u in A(+)."""
        rows = [q for q, r in enumerate(self.matrix.data) if r & ~v == 0]
        return int(any(u >> q & 1 for q in rows))


@lru_cache(maxsize=256)
def _half_matrix(dfa: Dfa) -> tuple[Dfa, Dfa, BoolMatrix]:
    d = minimize(dfa)
    op = opposite(d)
    suffixes = _shortlex_suffix_reps(op)
    rows = []
    for q in range(d.n_states):
        rows.append(sum(1 << p for p, s in enumerate(suffixes) if d.run(q, s) in d.accepting))
    return d, op, BoolMatrix(d.n_states, op.n_states, tuple(rows))


def half_state_space(dfa: Dfa, sign: str) -> HalfSpace:
    if sign not in "+-" or len(sign) != 1:
        raise ValueError("sign must be '+' or '-'")
    d, op, m = _half_matrix(dfa)
    return HalfSpace(sign, d, op, m)


def minimal_dfa_from_space(h: HalfSpace) -> Dfa:
    """Reachable word classes under the letter action, starting at the empty word."""
    if h.sign != "-":
        raise ValueError("minimal DFA is read off the minus space")
    letters = h.dfa.alphabet
    index = {h.init: 0}
    states = [h.init]
    delta = []
    k = 0
    while k < len(states):
        v = states[k]
        row = []
        for a in letters:
            u = h.act(v, a)
            if u not in index:
                index[u] = len(states)
                states.append(u)
            row.append(index[u])
        delta.append(tuple(row))
        k += 1
    accepting = frozenset(i for i, v in enumerate(states) if h.trace(v))
    return Dfa(letters, tuple(delta), 0, accepting)


@dataclass(frozen=True)
class NfaEnumeration:
    states: tuple[int, ...]
    names: tuple[str, ...]
    count: int
    nfas: tuple[Nfa, ...]
    fibres: dict


def _subsets(items: list[tuple[int, int]]):
    n = len(items)
    for mask in range(1 << n):
        yield [items[i] for i in range(n) if mask >> i & 1]


def _join(s) -> int:
    acc = 0
    for _, v in s:
        acc |= v
    return acc


def _nfa_canonical_key(nfa: Nfa) -> tuple:
    n = nfa.n_states
    best = None
    for perm in permutations(range(n)):
        delta = [None] * n
        for q in range(n):
            delta[perm[q]] = tuple(tuple(sorted(perm[r] for r in s)) for s in nfa.delta[q])
        key = (tuple(delta), tuple(sorted(perm[q] for q in nfa.inits)),
               tuple(sorted(perm[q] for q in nfa.accepting)))
        if best is None or key < best:
            best = key
    return best


def minimal_nfas(h: HalfSpace, limit: int = 10_000, check_len: int = 8,
                 dedupe: bool = False) -> NfaEnumeration:
    """All liftings of the minimal DFA to NFAs on the irreducibles of A(-)."""
    if h.sign != "-":
        raise ValueError("liftings are taken in the minus space")
    irr = list(h.space.irreducibles)
    jj = list(enumerate(irr))
    letters = h.dfa.alphabet

    def fibre(target: int) -> list[frozenset[int]]:
        below = [(k, v) for k, v in jj if v & ~target == 0]
        return [frozenset(k for k, _ in s) for s in _subsets(below) if _join(s) == target]

    init_fibre = fibre(h.init)
    trans_fibres = {(k, a): fibre(h.act(v, a)) for k, v in jj for a in letters}
    count = len(init_fibre)
    for f in trans_fibres.values():
        count *= len(f)
    if count > limit:
        raise LimitExceeded(f"{count} liftings exceed the limit {limit}", count=count)
    accepting = frozenset(k for k, v in jj if h.trace(v))
    keys = [(k, a) for k, _ in jj for a in letters]
    nfas = []
    seen = set()
    words = list(words_up_to(letters, check_len)) if check_len >= 0 else []
    for inits in init_fibre:
        for choice in product(*(trans_fibres[key] for key in keys)):
            table = dict(zip(keys, choice))
            delta = tuple(tuple(table[(k, a)] for a in letters) for k in range(len(irr)))
            nfa = Nfa(letters, delta, inits, accepting)
            for w in words:
                if nfa.accepts(w) != h.dfa.accepts(w):
                    raise AssertionError(f"lifting disagrees with the language on {w!r}")
            if dedupe:
                key = _nfa_canonical_key(nfa)
                if key in seen:
                    continue
                seen.add(key)
            nfas.append(nfa)
    states = h.irreducible_states
    names = tuple(h.name(v) for v in irr)
    fibres = {"init": [sorted(s) for s in init_fibre],
              **{f"{k}:{a}": [sorted(s) for s in trans_fibres[(k, a)]] for k, a in keys}}
    return NfaEnumeration(states, names, count, tuple(nfas), fibres)
