"""Regular languages: regex parsing, NFA/DFA construction, minimization,
syntactic monoids, rotation closure and cyclic derivatives.

Words are plain ``str`` values over the alphabet letters.  DFAs are always
complete (an explicit dead state is kept when needed) and minimized DFAs are
numbered in breadth-first order from the initial state, so two minimal DFAs
for the same language compare equal.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatch, NotCircular, RegexSyntaxError, UnknownLetter


# -- alphabet and words -------------------------------------------------------


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letters in alphabet")
        for ch in self.letters:
            if len(ch) != 1 or not ("a" <= ch <= "z"):
                raise ValueError(f"letter {ch!r} is not a lowercase ASCII letter")

    @classmethod
    def of(cls, letters: "str | Iterable[str] | Alphabet") -> "Alphabet":
        if isinstance(letters, Alphabet):
            return letters
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def index(self, ch: str) -> int:
        return self.letters.index(ch)

    def __str__(self) -> str:
        return "".join(self.letters)


def words_up_to(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """All words of length <= max_len in shortlex order."""
    letters = sorted(alphabet)
    for n in range(max_len + 1):
        for t in product(letters, repeat=n):
            yield "".join(t)


def canonical_rotation(w: str) -> str:
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


@dataclass(frozen=True, order=True)
class CircularWord:
    """A word up to rotation, stored as its lexicographically least rotation."""

    word: str

    def __post_init__(self):
        object.__setattr__(self, "word", canonical_rotation(self.word))

    def __len__(self) -> int:
        return len(self.word)

    def rotations(self) -> list[str]:
        w = self.word
        return [w[i:] + w[:i] for i in range(len(w))] or [""]

    def __str__(self) -> str:
        return self.word


def circular_words_up_to(alphabet: Sequence[str], max_len: int) -> list[CircularWord]:
    seen = dict.fromkeys(CircularWord(w) for w in words_up_to(alphabet, max_len))
    return list(seen)


# -- regex AST and parser -------------------------------------------------------


class RegexAst:
    __slots__ = ()


@dataclass(frozen=True)
class Empty(RegexAst):
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Eps(RegexAst):
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Letter(RegexAst):
    ch: str

    def __str__(self):
        return self.ch


@dataclass(frozen=True)
class Union(RegexAst):
    left: RegexAst
    right: RegexAst

    def __str__(self):
        return f"({self.left}+{self.right})"


@dataclass(frozen=True)
class Concat(RegexAst):
    left: RegexAst
    right: RegexAst

    def __str__(self):
        return f"{self.left}{self.right}"


@dataclass(frozen=True)
class Star(RegexAst):
    inner: RegexAst

    def __str__(self):
        return f"({self.inner})*"


class _Parser:
    # union := concat ('+' concat)*
    # concat := star star*
    # star := atom '*'*
    # atom := letter | '1' | '0' | '(' union ')'

    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> RegexAst:
        node = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return node

    def union(self) -> RegexAst:
        node = self.concat()
        while self.peek() == "+":
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self) -> RegexAst:
        node = self.star()
        while True:
            c = self.peek()
            if c is None or c in "+)":
                return node
            node = Concat(node, self.star())

    def star(self) -> RegexAst:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> RegexAst:
        c = self.peek()
        at = self.pos
        if c is None:
            raise RegexSyntaxError("unexpected end of input", at)
        self.pos += 1
        if c == "(":
            node = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return node
        if c == "1":
            return Eps()
        if c == "0":
            return Empty()
        if "a" <= c <= "z":
            if c not in self.alphabet.letters:
                raise UnknownLetter(f"letter {c!r} not in alphabet {str(self.alphabet)!r}", at)
            return Letter(c)
        raise RegexSyntaxError(f"unexpected {c!r}", at)


def parse_regex(text: str, alphabet: "str | Alphabet") -> RegexAst:
    return _Parser(text, Alphabet.of(alphabet)).parse()


def ast_matches(ast: RegexAst, w: str) -> bool:
    """Direct recursive membership test; independent of the automaton pipeline."""
    return len(w) in _ends(ast, w, 0)


def _ends(ast: RegexAst, w: str, i: int) -> frozenset[int]:
    if isinstance(ast, Empty):
        return frozenset()
    if isinstance(ast, Eps):
        return frozenset({i})
    if isinstance(ast, Letter):
        return frozenset({i + 1}) if i < len(w) and w[i] == ast.ch else frozenset()
    if isinstance(ast, Union):
        return _ends(ast.left, w, i) | _ends(ast.right, w, i)
    if isinstance(ast, Concat):
        out: set[int] = set()
        for j in _ends(ast.left, w, i):
            out |= _ends(ast.right, w, j)
        return frozenset(out)
    if isinstance(ast, Star):
        seen = {i}
        todo = [i]
        while todo:
            j = todo.pop()
            for k in _ends(ast.inner, w, j):
                if k not in seen:
                    seen.add(k)
                    todo.append(k)
        return frozenset(seen)
    raise TypeError(ast)


# -- automata -----------------------------------------------------------------


def _check_alphabets(*alphabets: tuple[str, ...]) -> None:
    first = alphabets[0]
    for other in alphabets[1:]:
        if other != first:
            raise AlphabetMismatch(f"alphabets differ: {''.join(first)!r} vs {''.join(other)!r}")


@dataclass(frozen=True)
class Dfa:
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    init: int
    accepting: frozenset[int]

    def __post_init__(self):
        n = len(self.delta)
        if not 0 <= self.init < n:
            raise ValueError("init state out of range")
        for row in self.delta:
            if len(row) != len(self.alphabet) or any(not 0 <= q < n for q in row):
                raise ValueError("transition table is not total")
        if any(not 0 <= q < n for q in self.accepting):
            raise ValueError("accepting state out of range")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    @cached_property
    def _letter_index(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.alphabet)}

    def step(self, q: int, ch: str) -> int:
        return self.delta[q][self._letter_index[ch]]

    def run(self, q: int, w: str) -> int:
        idx = self._letter_index
        for ch in w:
            q = self.delta[q][idx[ch]]
        return q

    def accepts(self, w: str) -> bool:
        return self.run(self.init, w) in self.accepting

    @cached_property
    def access_words(self) -> tuple[str | None, ...]:
        """Shortlex-least word reaching each state (None if unreachable)."""
        reps: list[str | None] = [None] * self.n_states
        reps[self.init] = ""
        queue = deque([self.init])
        order = sorted(range(len(self.alphabet)), key=lambda i: self.alphabet[i])
        while queue:
            q = queue.popleft()
            for i in order:
                r = self.delta[q][i]
                if reps[r] is None:
                    reps[r] = reps[q] + self.alphabet[i]
                    queue.append(r)
        return tuple(reps)

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.n_states,
            "init": self.init,
            "accepting": sorted(self.accepting),
            "delta": [list(r) for r in self.delta],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Dfa":
        dfa = cls(tuple(obj["alphabet"]), tuple(tuple(r) for r in obj["delta"]),
                  int(obj["init"]), frozenset(obj["accepting"]))
        if dfa.n_states != int(obj["states"]):
            raise ValueError("state count does not match delta")
        return dfa


@dataclass(frozen=True)
class Nfa:
    alphabet: tuple[str, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    inits: frozenset[int]
    accepting: frozenset[int]

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def step_set(self, states: Iterable[int], ch: str) -> frozenset[int]:
        i = self.alphabet.index(ch)
        out: set[int] = set()
        for q in states:
            out |= self.delta[q][i]
        return frozenset(out)

    def accepts(self, w: str) -> bool:
        cur = self.inits
        for ch in w:
            cur = self.step_set(cur, ch)
            if not cur:
                return False
        return bool(cur & self.accepting)

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.n_states,
            "inits": sorted(self.inits),
            "accepting": sorted(self.accepting),
            "delta": [[sorted(s) for s in row] for row in self.delta],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Nfa":
        return cls(tuple(obj["alphabet"]),
                   tuple(tuple(frozenset(s) for s in row) for row in obj["delta"]),
                   frozenset(obj["inits"]), frozenset(obj["accepting"]))


@dataclass
class _EpsNfa:
    """Mutable builder for NFAs with epsilon moves; only used internally."""

    alphabet: tuple[str, ...]
    moves: list[dict[int, set[int]]] = field(default_factory=list)
    eps: list[set[int]] = field(default_factory=list)

    def new(self) -> int:
        self.moves.append({})
        self.eps.append(set())
        return len(self.moves) - 1

    def add(self, p: int, ch: int, q: int) -> None:
        self.moves[p].setdefault(ch, set()).add(q)

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for r in self.eps[q]:
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return frozenset(seen)

    def finish(self, inits: Iterable[int], accepting: Iterable[int]) -> Nfa:
        acc = set(accepting)
        n = len(self.moves)
        closures = [self.closure([q]) for q in range(n)]
        delta = []
        for q in range(n):
            row = []
            for i in range(len(self.alphabet)):
                out: set[int] = set()
                for p in closures[q]:
                    for r in self.moves[p].get(i, ()):
                        out |= closures[r]
                row.append(frozenset(out))
            delta.append(tuple(row))
        init_set = self.closure(inits)
        return Nfa(self.alphabet, tuple(delta), init_set, frozenset(acc))


def compile(ast: RegexAst, alphabet: "str | Alphabet") -> Nfa:
    """Thompson construction followed by epsilon elimination."""
    letters = Alphabet.of(alphabet).letters
    b = _EpsNfa(letters)

    def build(node: RegexAst) -> tuple[int, int]:
        s, t = b.new(), b.new()
        if isinstance(node, Empty):
            pass
        elif isinstance(node, Eps):
            b.eps[s].add(t)
        elif isinstance(node, Letter):
            if node.ch not in letters:
                raise AlphabetMismatch(f"letter {node.ch!r} not in alphabet")
            b.add(s, letters.index(node.ch), t)
        elif isinstance(node, Union):
            for part in (node.left, node.right):
                ps, pt = build(part)
                b.eps[s].add(ps)
                b.eps[pt].add(t)
        elif isinstance(node, Concat):
            ls, lt = build(node.left)
            rs, rt = build(node.right)
            b.eps[s].add(ls)
            b.eps[lt].add(rs)
            b.eps[rt].add(t)
        elif isinstance(node, Star):
            is_, it = build(node.inner)
            b.eps[s] |= {is_, t}
            b.eps[it] |= {is_, t}
        else:
            raise TypeError(node)
        return s, t

    s, t = build(ast)
    nfa = b.finish([s], [t])
    accepting = frozenset(q for q in range(nfa.n_states) if t in b.closure([q]))
    return Nfa(nfa.alphabet, nfa.delta, nfa.inits, accepting)


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction; the empty subset becomes the dead state when reached."""
    start = nfa.inits
    index = {start: 0}
    subsets = [start]
    delta: list[tuple[int, ...]] = []
    k = 0
    while k < len(subsets):
        cur = subsets[k]
        row = []
        for i in range(len(nfa.alphabet)):
            nxt: set[int] = set()
            for q in cur:
                nxt |= nfa.delta[q][i]
            key = frozenset(nxt)
            if key not in index:
                index[key] = len(subsets)
                subsets.append(key)
            row.append(index[key])
        delta.append(tuple(row))
        k += 1
    accepting = frozenset(i for i, s in enumerate(subsets) if s & nfa.accepting)
    return Dfa(nfa.alphabet, tuple(delta), 0, accepting)


def _reachable(dfa: Dfa) -> list[int]:
    return [q for q, w in enumerate(dfa.access_words) if w is not None]


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA by partition refinement, renumbered in BFS order."""
    states = _reachable(dfa)
    block = {q: int(q in dfa.accepting) for q in states}
    n_blocks = len(set(block.values()))
    while True:
        sig = {q: (block[q],) + tuple(block[r] for r in dfa.delta[q]) for q in states}
        ids: dict[tuple, int] = {}
        new_block = {q: ids.setdefault(sig[q], len(ids)) for q in states}
        block = new_block
        if len(ids) == n_blocks:
            break
        n_blocks = len(ids)
    # BFS renumbering from the initial block
    order: dict[int, int] = {block[dfa.init]: 0}
    rep = {block[dfa.init]: dfa.init}
    queue = deque([dfa.init])
    letter_order = sorted(range(len(dfa.alphabet)), key=lambda i: dfa.alphabet[i])
    while queue:
        q = queue.popleft()
        for i in letter_order:
            r = dfa.delta[q][i]
            b = block[r]
            if b not in order:
                order[b] = len(order)
                rep[b] = r
                queue.append(r)
    delta = [None] * len(order)
    for b, k in order.items():
        q = rep[b]
        delta[k] = tuple(order[block[r]] for r in dfa.delta[q])
    accepting = frozenset(order[block[q]] for q in states if q in dfa.accepting)
    return Dfa(dfa.alphabet, tuple(delta), 0, accepting)


def regex_dfa(text: str, alphabet: "str | Alphabet") -> Dfa:
    """Minimal DFA of a regex."""
    return minimize(determinize(compile(parse_regex(text, alphabet), alphabet)))


def universal_dfa(alphabet: "str | Alphabet") -> Dfa:
    letters = Alphabet.of(alphabet).letters
    return Dfa(letters, ((0,) * len(letters),), 0, frozenset({0}))


def empty_dfa(alphabet: "str | Alphabet") -> Dfa:
    letters = Alphabet.of(alphabet).letters
    return Dfa(letters, ((0,) * len(letters),), 0, frozenset())


def dfa_to_nfa(dfa: Dfa) -> Nfa:
    return Nfa(dfa.alphabet, tuple(tuple(frozenset({r}) for r in row) for row in dfa.delta),
               frozenset({dfa.init}), dfa.accepting)


def _product(a: Dfa, b: Dfa, accept) -> Dfa:
    _check_alphabets(a.alphabet, b.alphabet)
    nb = b.n_states
    delta = tuple(
        tuple(a.delta[p][i] * nb + b.delta[q][i] for i in range(len(a.alphabet)))
        for p in range(a.n_states) for q in range(nb)
    )
    acc = frozenset(p * nb + q for p in range(a.n_states) for q in range(nb)
                    if accept(p in a.accepting, q in b.accepting))
    return Dfa(a.alphabet, delta, a.init * nb + b.init, acc)


def intersect(a: Dfa, b: Dfa) -> Dfa:
    return minimize(_product(a, b, lambda x, y: x and y))


def union(a: Dfa, b: Dfa) -> Dfa:
    return minimize(_product(a, b, lambda x, y: x or y))


def complement(a: Dfa) -> Dfa:
    return minimize(Dfa(a.alphabet, a.delta, a.init, frozenset(range(a.n_states)) - a.accepting))


def is_empty(a: Dfa) -> bool:
    return not any(w is not None and q in a.accepting for q, w in enumerate(a.access_words))


def equivalent(a: Dfa, b: Dfa) -> bool:
    return is_empty(_product(a, b, lambda x, y: x != y))


def subset(a: Dfa, b: Dfa) -> bool:
    return is_empty(_product(a, b, lambda x, y: x and not y))


def algebra(a: Dfa, b: Dfa | None, op: str):
    """Dispatch for the Boolean language operations by name."""
    ops = {
        "and": lambda: intersect(a, b), "or": lambda: union(a, b),
        "not": lambda: complement(a), "eq": lambda: equivalent(a, b),
        "subset": lambda: subset(a, b), "empty": lambda: is_empty(a),
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op]()


def reverse_nfa(dfa: Dfa) -> Nfa:
    n = dfa.n_states
    rows = [[set() for _ in dfa.alphabet] for _ in range(n)]
    for q in range(n):
        for i, r in enumerate(dfa.delta[q]):
            rows[r][i].add(q)
    return Nfa(dfa.alphabet, tuple(tuple(frozenset(s) for s in row) for row in rows),
               dfa.accepting, frozenset({dfa.init}))


def opposite(dfa: Dfa) -> Dfa:
    """Minimal DFA of the reversed language."""
    return minimize(determinize(reverse_nfa(dfa)))


# -- syntactic monoid ---------------------------------------------------------


@dataclass(frozen=True)
class Monoid:
    """Transformation monoid of a DFA with shortlex representatives.

    ``mult[i][j]`` is the class of ``reps[i] + reps[j]``; element 0 is the
    identity.
    """

    transforms: tuple[tuple[int, ...], ...]
    reps: tuple[str, ...]
    mult: tuple[tuple[int, ...], ...]
    letters: tuple[int, ...]
    accepting: tuple[bool, ...]

    identity = 0

    def __len__(self) -> int:
        return len(self.transforms)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {t: i for i, t in enumerate(self.transforms)}

    def of_word(self, w: str, alphabet: tuple[str, ...]) -> int:
        e = 0
        for ch in w:
            e = self.mult[e][self.letters[alphabet.index(ch)]]
        return e


def transition_monoid(dfa: Dfa) -> Monoid:
    n = dfa.n_states
    ident = tuple(range(n))
    index = {ident: 0}
    transforms = [ident]
    reps = [""]
    order = sorted(range(len(dfa.alphabet)), key=lambda i: dfa.alphabet[i])
    k = 0
    while k < len(transforms):
        t = transforms[k]
        for i in order:
            u = tuple(dfa.delta[q][i] for q in t)
            if u not in index:
                index[u] = len(transforms)
                transforms.append(u)
                reps.append(reps[k] + dfa.alphabet[i])
        k += 1
    mult = tuple(tuple(index[tuple(t2[q] for q in t1)] for t2 in transforms) for t1 in transforms)
    letters = tuple(index[tuple(dfa.delta[q][i] for q in ident)] for i in range(len(dfa.alphabet)))
    accepting = tuple(t[dfa.init] in dfa.accepting for t in transforms)
    return Monoid(tuple(transforms), tuple(reps), mult, letters, accepting)


def syntactic_monoid(dfa: Dfa) -> Monoid:
    return transition_monoid(minimize(dfa))


# -- circular languages -------------------------------------------------------


def rotation_nfa(dfa: Dfa) -> Nfa:
    """NFA for rot(L) = {yx : xy in L}: guess the state m reached after x."""
    n = dfa.n_states
    b = _EpsNfa(dfa.alphabet)
    # phase 1: (m, q) reads y from m; phase 2: (m, q) reads x from init
    p1 = {(m, q): b.new() for m in range(n) for q in range(n)}
    p2 = {(m, q): b.new() for m in range(n) for q in range(n)}
    for (m, q), s in p1.items():
        for i, r in enumerate(dfa.delta[q]):
            b.add(s, i, p1[(m, r)])
        if q in dfa.accepting:
            b.eps[s].add(p2[(m, dfa.init)])
    for (m, q), s in p2.items():
        for i, r in enumerate(dfa.delta[q]):
            b.add(s, i, p2[(m, r)])
    inits = [p1[(m, m)] for m in range(n)]
    nfa = b.finish(inits, [])
    accepting = frozenset(p2[(m, m)] for m in range(n))
    return Nfa(nfa.alphabet, nfa.delta, nfa.inits, accepting)


def rotation_closure(dfa: Dfa) -> Dfa:
    return minimize(determinize(rotation_nfa(dfa)))


def is_rotation_closed(dfa: Dfa) -> bool:
    """Closed under all rotations iff aw in L implies wa in L for each letter a."""
    for i in range(len(dfa.alphabet)):
        after = Dfa(dfa.alphabet, dfa.delta, dfa.delta[dfa.init][i], dfa.accepting)
        before = Dfa(dfa.alphabet, dfa.delta, dfa.init,
                     frozenset(q for q in range(dfa.n_states) if dfa.delta[q][i] in dfa.accepting))
        if not subset(after, before):
            return False
    return True


def cyclic_derivative_word(w: "CircularWord | str", a: str) -> set[str]:
    s = w.word if isinstance(w, CircularWord) else w
    return {s[i + 1:] + s[:i] for i, ch in enumerate(s) if ch == a}


def cyclic_derivative_lang(dfa: Dfa, a: str) -> Nfa:
    """NFA for the union of cyclic derivatives of a rotation-closed language.

    For u = yx with xay in L: guess the state m after x, read y from
    δ(m, a) to an accepting state, then read x from the initial state back
    to m.  Two copies of the automaton are bridged by an epsilon move.
    """
    if not is_rotation_closed(dfa):
        raise NotCircular("language is not closed under rotation")
    if a not in dfa.alphabet:
        raise AlphabetMismatch(f"letter {a!r} not in alphabet")
    ai = dfa.alphabet.index(a)
    n = dfa.n_states
    b = _EpsNfa(dfa.alphabet)
    p1 = {(m, q): b.new() for m in range(n) for q in range(n)}
    p2 = {(m, q): b.new() for m in range(n) for q in range(n)}
    for (m, q), s in p1.items():
        for i, r in enumerate(dfa.delta[q]):
            b.add(s, i, p1[(m, r)])
        if q in dfa.accepting:
            b.eps[s].add(p2[(m, dfa.init)])
    for (m, q), s in p2.items():
        for i, r in enumerate(dfa.delta[q]):
            b.add(s, i, p2[(m, r)])
    inits = [p1[(m, dfa.delta[m][ai])] for m in range(n)]
    nfa = b.finish(inits, [])
    accepting = frozenset(p2[(m, m)] for m in range(n))
    return Nfa(nfa.alphabet, nfa.delta, nfa.inits, accepting)


def left_quotient(dfa: Dfa, w: str) -> Dfa:
    """DFA for {u : wu in L}."""
    return minimize(Dfa(dfa.alphabet, dfa.delta, dfa.run(dfa.init, w), dfa.accepting))
