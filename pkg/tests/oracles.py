"""Brute-force reference computations, independent of the package internals.

Languages are given either as a regex (matched with the stdlib ``re``) or as
a raw transition table run word by word.  State spaces are spanned by the
functionals of explicit words.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations, product

import numpy as np


def words(alphabet: str, n: int):
    for k in range(n + 1):
        for t in product(alphabet, repeat=k):
            yield "".join(t)


def py_regex(text: str) -> re.Pattern:
    """Translate the package syntax (+ union, 1 empty word, 0 empty set) to ``re``."""
    out = []
    for c in text:
        if c == "+":
            out.append("|")
        elif c == "1":
            out.append("(?:)")
        elif c == "0":
            out.append("(?!)")
        elif c in "()*":
            out.append(c)
        elif c.isspace():
            continue
        else:
            out.append(re.escape(c))
    return re.compile("".join(out))


def matcher(text: str):
    pat = py_regex(text)

    @lru_cache(maxsize=None)
    def accepts(w: str) -> bool:
        return pat.fullmatch(w) is not None

    return accepts


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))] or [""]


def circular(accepts):
    """Circle membership: some rotation of the word is accepted."""

    @lru_cache(maxsize=None)
    def acc(w: str) -> bool:
        return any(accepts(r) for r in rotations(w))

    return acc


def table_accepts(delta, init, accepting, alphabet):
    """Plain run of a transition table ``delta[q][letter index]``."""
    idx = {a: i for i, a in enumerate(alphabet)}

    def accepts(w: str) -> bool:
        q = init
        for c in w:
            q = delta[q][idx[c]]
        return q in accepting

    return accepts


# ---------------------------------------------------------------- semilattices

def span(vectors) -> frozenset[int]:
    """All joins of the given bit vectors, zero included."""
    out = {0}
    for v in set(vectors):
        out |= {x | v for x in out}
    return frozenset(out)


def irreducibles(elements) -> list[int]:
    els = set(elements)
    out = []
    for x in els:
        if x == 0:
            continue
        below = [y for y in els if y != x and y & ~x == 0]
        acc = 0
        for y in below:
            acc |= y
        if acc != x:
            out.append(x)
    return sorted(out)


def meet(elements, x: int, y: int) -> int:
    acc = 0
    for z in elements:
        if z & ~x == 0 and z & ~y == 0:
            acc |= z
    return acc


def distributive(elements) -> bool:
    els = list(elements)
    for x in els:
        for y in els:
            for z in els:
                if meet(els, x, y | z) != meet(els, x, y) | meet(els, x, z):
                    return False
    return True


def isomorphic(s1, s2) -> bool:
    """Finite lattices are isomorphic iff their join-irreducible posets are."""
    i1, i2 = irreducibles(s1), irreducibles(s2)
    if len(s1) != len(s2) or len(i1) != len(i2):
        return False
    le1 = [[a & ~b == 0 for b in i1] for a in i1]
    le2 = [[a & ~b == 0 for b in i2] for a in i2]
    n = len(i1)
    for perm in permutations(range(n)):
        if all(le1[i][j] == le2[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False


def dual_count(elements) -> int:
    """Number of join-preserving maps to B: distinct valid 0/1 labellings generated from irreducibles."""
    els = sorted(elements)
    irr = irreducibles(els)
    found = set()
    for bits in product((0, 1), repeat=len(irr)):
        value = {x: int(any(b and (a & ~x == 0) for a, b in zip(irr, bits))) for x in els}
        if all(value[x | y] == (value[x] | value[y]) for x in els for y in els):
            found.add(tuple(value[x] for x in els))
    return len(found)


def column_sets(vectors, width: int) -> set[int]:
    """For each coordinate, the generators having a 1 there, as a bitmask over generators."""
    out = set(_rows_as_ints(_ints_as_rows(vectors, width).T))
    out.discard(0)
    return out


def _ints_as_rows(vectors, width: int) -> np.ndarray:
    nbytes = (width + 7) // 8
    raw = np.frombuffer(b"".join(v.to_bytes(nbytes, "little") for v in vectors), dtype=np.uint8)
    return np.unpackbits(raw.reshape(len(vectors), nbytes), axis=1, bitorder="little")[:, :width].astype(bool)


def same_relations(a, width_a: int, b, width_b: int) -> bool:
    """Whether g_i -> h_i extends to an isomorphism span(a) -> span(b).

    The closed sets of generators are the complements of unions of column
    sets, so the relations are fixed by the irreducible column sets.
    """
    if len(a) != len(b):
        return False
    return set(irreducibles(column_sets(a, width_a))) == set(irreducibles(column_sets(b, width_b)))


# ---------------------------------------------------------------- word tables

class WordTable:
    """Membership of every word up to length ``n`` as numpy arrays per length.

    Word index: letters are base-k digits, first letter most significant.
    """

    def __init__(self, alphabet: str, n: int, accepts=None, table=None):
        self.alphabet = alphabet
        self.k = len(alphabet)
        self.n = -1
        self.mem = []
        self._accepts = accepts
        self._table = None
        self._base = None
        if table is not None:
            delta, init, accepting = table
            d = np.array(delta, dtype=np.int64).reshape(len(delta), self.k)
            acc = np.zeros(len(delta), dtype=bool)
            acc[list(accepting)] = True
            self._table = (d, acc, np.array([init]))
        self.ensure(n)

    def ensure(self, n: int) -> None:
        while self.n < n:
            L = self.n + 1
            if self._base is not None:
                self.mem.append(self._rotated(L))
            elif self._table is not None:
                d, acc, states = self._table
                if L > 0:
                    states = d[states].reshape(-1)
                    self._table = (d, acc, states)
                self.mem.append(acc[states])
            elif self._accepts is not None:
                self.mem.append(np.array([self._accepts("".join(t)) for t in product(self.alphabet, repeat=L)],
                                         dtype=bool))
            else:
                raise ValueError(f"table only covers words up to length {self.n}")
            self.n = L

    def circular(self) -> "WordTable":
        """Rotation closure, extended alongside this table."""
        out = WordTable.__new__(WordTable)
        out.alphabet, out.k, out.n, out.mem = self.alphabet, self.k, -1, []
        out._accepts, out._table, out._base = None, None, self
        out.ensure(self.n)
        return out

    def _rotated(self, L: int) -> np.ndarray:
        self._base.ensure(L)
        m = self._base.mem[L]
        if L == 0:
            return m.copy()
        hi = self.k ** (L - 1)
        acc = m.copy()
        cur = np.arange(self.k ** L)
        for _ in range(L - 1):
            cur = (cur % hi) * self.k + cur // hi
            acc |= m[cur]
        return acc

    def index(self, w: str) -> int:
        v = 0
        for c in w:
            v = v * self.k + self.alphabet.index(c)
        return v

    def sandwich(self, left: list[str], middle: list[str], right: list[str]) -> np.ndarray:
        """Matrix [u][i] of membership of left[i] + middle[u] + right[i]."""
        li, ll = self._indices(left)
        ri, rl = self._indices(right)
        mi, ml = self._indices(middle)
        outer = ll + rl
        self.ensure(int(outer.max(initial=0) + ml.max(initial=0)))
        out = np.zeros((len(middle), len(left)), dtype=bool)
        for L in np.unique(ml):
            rows = np.flatnonzero(ml == L)
            for s in np.unique(outer):
                cols = np.flatnonzero(outer == s)
                idx = (li[cols][None, :] * self.k ** L + mi[rows][:, None]) * self.k ** rl[cols][None, :] \
                    + ri[cols][None, :]
                out[np.ix_(rows, cols)] = self.mem[s + L][idx]
        return out

    def _indices(self, ws: list[str]) -> tuple[np.ndarray, np.ndarray]:
        return (np.array([self.index(w) for w in ws], dtype=np.int64),
                np.array([len(w) for w in ws], dtype=np.int64))

    def __call__(self, w: str) -> bool:
        self.ensure(len(w))
        return bool(self.mem[len(w)][self.index(w)])

    def block(self, left: list[str], right: list[str]) -> np.ndarray:
        """Matrix of membership of left[i] + right[j]."""
        li, ll = self._indices(left)
        ri, rl = self._indices(right)
        self.ensure(int(ll.max(initial=0) + rl.max(initial=0)))
        out = np.zeros((len(left), len(right)), dtype=bool)
        for A in np.unique(ll):
            rows = np.flatnonzero(ll == A)
            for B in np.unique(rl):
                cols = np.flatnonzero(rl == B)
                out[np.ix_(rows, cols)] = self.mem[A + B][li[rows][:, None] * self.k ** B + ri[cols][None, :]]
        return out


def _rows_as_ints(m: np.ndarray) -> list[int]:
    """Row i becomes the integer with bit j set when m[i, j]."""
    packed = np.packbits(np.asarray(m, dtype=bool), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _classes(m: np.ndarray, ws: list[str]) -> tuple[dict[str, int], list[str]]:
    """Word -> class id by identical rows; shortlex representative per class."""
    keys = {}
    cls = {}
    reps = []
    for w, row in zip(ws, m):
        key = row.tobytes()
        if key not in keys:
            keys[key] = len(reps)
            reps.append(w)
        cls[w] = keys[key]
    return cls, reps


class HalfOracle:
    """A(-) as the row span and A(+) as the column span of a(m + p) over words <= n."""

    def __init__(self, table: WordTable, n: int = 8):
        self.table = table
        self.ws = list(words(table.alphabet, n))
        self.m = table.block(self.ws, self.ws)
        self.prefix_class, self.prefix_reps = _classes(self.m, self.ws)
        self.suffix_class, self.suffix_reps = _classes(self.m.T, self.ws)
        self._prefix_key = {self.m[self.ws.index(w)].tobytes(): w for w in self.prefix_reps}
        self._suffix_key = {self.m[:, self.ws.index(w)].tobytes(): w for w in self.suffix_reps}

    def prefix_rep(self, m: str) -> str:
        return self._prefix_key[self.table.block([m], self.ws)[0].tobytes()]

    def suffix_rep(self, p: str) -> str:
        return self._suffix_key[self.table.block(self.ws, [p])[:, 0].tobytes()]

    def minus_space(self) -> frozenset[int]:
        return span(_rows_as_ints(self.m))

    def plus_space(self) -> frozenset[int]:
        return span(_rows_as_ints(self.m.T))

    @property
    def n_prefix_classes(self) -> int:
        return len(self.prefix_reps)


class PmOracle:
    """A(+-) spanned by arcs and pairs decorated with words <= n.

    pair(p, m) . pair(p', m') = a(m p') a(m' p); pair(p, m) . arc(u) = a(m u p);
    arc(u) . arc(v) = a_circ(u v).
    """

    def __init__(self, interval: WordTable, circle: WordTable, n: int = 8):
        self.half = HalfOracle(interval, n)
        h = self.half
        ms, ps = h.prefix_reps, h.suffix_reps
        self.pairs = [(p, m) for m in ms for p in ps]
        ws = h.ws
        self.interval, self.circle = interval, circle
        # arc(u) is identified by its values on every pair class and every arc over words <= n
        ctx = interval.sandwich([m for _, m in self.pairs], ws, [p for p, _ in self.pairs])
        keys = np.hstack([ctx, circle.block(ws, ws)])
        self.arc_keys: dict[bytes, str] = {}
        self.arcs = []
        for u, row in zip(ws, keys):
            key = row.tobytes()
            if key not in self.arc_keys:
                self.arc_keys[key] = u
                self.arcs.append(u)

    def arc_key(self, u: str) -> bytes:
        ctx = self.interval.sandwich([m for _, m in self.pairs], [u], [p for p, _ in self.pairs])[0]
        return np.concatenate([ctx, self.circle.block([u], self.half.ws)[0]]).tobytes()

    def elements(self) -> list[tuple]:
        return [("pair", p, m) for p, m in self.pairs] + [("arc", u) for u in self.arcs]

    def value(self, x: tuple, y: tuple) -> bool:
        a, c = self.interval, self.circle
        if x[0] == "pair" and y[0] == "pair":
            return a(x[2] + y[1]) and a(y[2] + x[1])
        if x[0] == "arc" and y[0] == "arc":
            return c(x[1] + y[1])
        if x[0] == "arc":
            x, y = y, x
        return a(x[2] + y[1] + x[1])

    def gram(self, els: list[tuple] | None = None) -> np.ndarray:
        els = self.elements() if els is None else els
        pairs = [e for e in els if e[0] == "pair"]
        arcs = [e[1] for e in els if e[0] == "arc"]
        ms = [m for _, _, m in pairs]
        ps = [p for _, p, _ in pairs]
        mp = self.interval.block(ms, ps)
        pp = mp & mp.T
        ap = self.interval.sandwich(ms, arcs, ps)
        aa = self.circle.block(arcs, arcs)
        g = np.block([[pp, ap.T], [ap, aa]])
        order = [i for i, e in enumerate(els) if e[0] == "pair"] + [i for i, e in enumerate(els) if e[0] == "arc"]
        inv = np.argsort(order)
        return g[np.ix_(inv, inv)]

    def slow_gram(self, els: list[tuple]) -> np.ndarray:
        return np.array([[self.value(x, y) for y in els] for x in els], dtype=bool)

    def rows(self) -> set[bytes]:
        return {r.tobytes() for r in self.gram()}

    def space(self) -> frozenset[int]:
        return span(_rows_as_ints(self.gram()))

    def element_of(self, kind: str, *ws: str) -> tuple:
        """The class representative of a decorated element."""
        h = self.half
        if kind == "arc":
            return ("arc", self.arc_keys[self.arc_key(ws[0])])
        p, m = ws
        return ("pair", h.suffix_rep(p), h.prefix_rep(m))


# ---------------------------------------------------------------- misc

def word_cyclic_derivative(w: str, a: str) -> set[str]:
    """Remove one occurrence of ``a`` and read the rest of the circle from there."""
    return {w[i + 1:] + w[:i] for i, c in enumerate(w) if c == a}


def myhill_nerode_count(accepts, alphabet: str, n: int = 8) -> int:
    ws = list(words(alphabet, n))
    short = [w for w in ws if len(w) <= n // 2]
    return len({tuple(accepts(w + u) for u in ws) for w in short})


def syntactic_classes(accepts, alphabet: str, n: int = 3, ctx: int = 3) -> int:
    """Two-sided context classes of words <= n against contexts <= ctx."""
    cs = list(words(alphabet, ctx))
    return len({tuple(accepts(x + w + y) for x in cs for y in cs) for w in words(alphabet, n)})


# ---------------------------------------------------------------- label-free gluing

def dotless_diagrams(eps: str) -> list[frozenset]:
    """Every set of disjoint arcs joining points of opposite sign; other points are free ends."""
    n = len(eps)
    out = []

    def rec(i: int, used: frozenset, arcs: frozenset):
        if i == n:
            out.append(arcs)
            return
        if i in used:
            rec(i + 1, used, arcs)
            return
        rec(i + 1, used | {i}, arcs)
        for j in range(i + 1, n):
            if j not in used and eps[j] != eps[i]:
                rec(i + 1, used | {i, j}, arcs | {(i, j)})

    rec(0, frozenset(), frozenset())
    return out


def dotless_value(x: frozenset, y: frozenset, n: int, interval: int, circle: int) -> int:
    """Glue two diagrams point by point; each loop scores ``circle`` and each strand ``interval``."""
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edges = [0] * n
    for i, j in list(x) + list(y):
        parent[find(i)] = find(j)
    for i, j in list(x) + list(y):
        edges[find(i)] += 1
    size = [0] * n
    for i in range(n):
        size[find(i)] += 1
    value = 1
    for r in range(n):
        if size[r]:
            value &= circle if edges[r] == size[r] else interval
    return value
