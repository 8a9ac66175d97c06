"""Diagrams with boundary: arcs joining a plus point to a minus point plus
free ends, their gluing pairing and the resulting state spaces.

Conventions.  A minus point sends the strand out of the diagram and a plus
point takes it in.  An arc runs from its plus point to its minus point and
reads its label in that direction.  A free minus end carries a prefix, a
free plus end a suffix.  Closing x (boundary eps) with y glues point k of y
to point n-1-k of x, so y has boundary ``dual_signs(eps)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from ..boolsemi import BoolMatrix, Semimodule, is_distributive, reduced_tensor, tensor_cardinality
from ..errors import SizeLimit
from ..limits import SIGN_LENGTH_LIMIT, size_limit
from .evaluation import Evaluation, show_word
from .halfspace import HalfSpace, half_state_space


def dual_signs(eps: str) -> str:
    return "".join("+" if s == "-" else "-" for s in reversed(eps))


def _check_signs(eps: str) -> None:
    if any(s not in "+-" for s in eps):
        raise ValueError(f"sign sequence {eps!r} may only contain '+' and '-'")


# -- arc labels -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ArcMonoid:
    """Arc labels: pairs (interval transformation, circle state) of words.

    Two words with the same pair cannot be told apart by any gluing, since
    the circle language's minimal DFA is a monoid when the language is
    rotation closed.
    """

    reps: tuple[str, ...]
    interval: np.ndarray  # (|E|, |Q_I|) state transformation
    circle: np.ndarray  # (|E|,) state of the circle DFA
    mult: np.ndarray  # (|E|, |E|) index of the concatenation
    circle_mult: np.ndarray  # (|Q_c|, |Q_c|)
    circle_accept: np.ndarray  # (|Q_c|,) bool

    def __len__(self) -> int:
        return len(self.reps)

    @cached_property
    def _index(self) -> dict[tuple, int]:
        return {(tuple(self.interval[e].tolist()), int(self.circle[e])): e for e in range(len(self))}

    def key_of(self, ev: Evaluation, w: str) -> tuple:
        di, dc = ev.dfa_interval, ev.dfa_circle
        return tuple(di.run(q, w) for q in range(di.n_states)), dc.run(dc.init, w)

    def of_word(self, ev: Evaluation, w: str) -> int:
        return self._index[self.key_of(ev, w)]


@lru_cache(maxsize=64)
def arc_monoid(ev: Evaluation) -> ArcMonoid:
    di, dc = ev.dfa_interval, ev.dfa_circle
    k = len(ev.alphabet)
    order = sorted(range(k), key=lambda i: ev.alphabet[i])
    start = (tuple(range(di.n_states)), dc.init)
    index = {start: 0}
    keys = [start]
    reps = [""]
    j = 0
    while j < len(keys):
        t, c = keys[j]
        for i in order:
            key = (tuple(di.delta[q][i] for q in t), dc.delta[c][i])
            if key not in index:
                index[key] = len(keys)
                keys.append(key)
                reps.append(reps[j] + ev.alphabet[i])
        j += 1
    n = len(keys)
    interval = np.array([t for t, _ in keys], dtype=np.int64).reshape(n, di.n_states)
    circle = np.array([c for _, c in keys], dtype=np.int64)
    mult = np.empty((n, n), dtype=np.int64)
    for e, (t1, c1) in enumerate(keys):
        for f, (t2, _) in enumerate(keys):
            mult[e, f] = index[(tuple(t2[q] for q in t1), dc.run(c1, reps[f]))]
    creps = dc.access_words
    cm = np.array([[dc.run(q, creps[r]) for r in range(dc.n_states)] for q in range(dc.n_states)],
                  dtype=np.int64)
    acc = np.array([q in dc.accepting for q in range(dc.n_states)], dtype=bool)
    return ArcMonoid(tuple(reps), interval, circle, mult, cm, acc)


# -- the A(+-) semiring ------------------------------------------------------------


@dataclass(frozen=True)
class PmDiagram:
    kind: str  # "arc" or "pair"
    arc: int = -1  # index into the arc monoid
    plus: int = -1  # suffix class (plus slot)
    minus: int = -1  # prefix class (minus slot)


@dataclass(frozen=True, eq=False)
class PmStateSpace:
    ev: Evaluation
    monoid: ArcMonoid
    minus: HalfSpace
    plus: HalfSpace
    spanning: tuple[PmDiagram, ...]
    gram: BoolMatrix

    @cached_property
    def vectors(self) -> tuple[int, ...]:
        return self.gram.data

    @cached_property
    def space(self) -> Semimodule:
        return Semimodule.span(self.gram.cols, self.vectors)

    @cached_property
    def _pos(self) -> dict[PmDiagram, int]:
        return {d: i for i, d in enumerate(self.spanning)}

    @property
    def unit(self) -> int:
        return self.vectors[self._pos[PmDiagram("arc", arc=0)]]

    def names(self) -> list[str]:
        return [self.name(d) for d in self.spanning]

    def name(self, d: PmDiagram) -> str:
        if d.kind == "arc":
            return f"arc({show_word(self.monoid.reps[d.arc])})"
        return (f"pair({show_word(self.plus.suffix_reps[d.plus])},"
                f"{show_word(self.minus.prefix_reps[d.minus])})")

    def arc_index(self, w: str) -> int:
        return self._pos[PmDiagram("arc", arc=self.monoid.of_word(self.ev, w))]

    def pair_index(self, p: str, m: str) -> int:
        return self._pos[PmDiagram("pair", plus=self.plus.state_of(p), minus=self.minus.state_of(m))]

    def arc_vector(self, w: str) -> int:
        return self.vectors[self.arc_index(w)]

    def pair_vector(self, p: str, m: str) -> int:
        return self.vectors[self.pair_index(p, m)]

    def element_name(self, v: int) -> str:
        for i, u in enumerate(self.vectors):
            if u == v:
                return self.name(self.spanning[i])
        if v == 0:
            return "0"
        return "+".join(self.element_name(x) for x in self.space.irreducibles if x & ~v == 0)

    def product_index(self, i: int, j: int) -> int | None:
        """Spanning index of the product of spanning diagrams i and j (None for zero)."""
        x, y = self.spanning[i], self.spanning[j]
        mon, op, di = self.monoid, self.plus.op, self.minus.dfa
        if x.kind == "arc" and y.kind == "arc":
            return self._pos[PmDiagram("arc", arc=int(mon.mult[x.arc, y.arc]))]
        if x.kind == "arc":
            p = op.run(y.plus, mon.reps[x.arc][::-1])
            return self._pos[PmDiagram("pair", plus=p, minus=y.minus)]
        if y.kind == "arc":
            m = di.run(x.minus, mon.reps[y.arc])
            return self._pos[PmDiagram("pair", plus=x.plus, minus=m)]
        if not self.minus.matrix.entry(x.minus, y.plus):
            return None
        return self._pos[PmDiagram("pair", plus=x.plus, minus=y.minus)]

    @cached_property
    def mult(self) -> tuple[tuple[int | None, ...], ...]:
        n = len(self.spanning)
        return tuple(tuple(self.product_index(i, j) for j in range(n)) for i in range(n))

    def multiply(self, u: int, v: int) -> int:
        below_u = [i for i, r in enumerate(self.vectors) if r & ~u == 0]
        below_v = [j for j, r in enumerate(self.vectors) if r & ~v == 0]
        acc = 0
        for i in below_u:
            for j in below_v:
                k = self.mult[i][j]
                if k is not None:
                    acc |= self.vectors[k]
        return acc

    def trace(self, v: int) -> int:
        return v >> self._pos[PmDiagram("arc", arc=0)] & 1

    @cached_property
    def irreducible_arcs(self) -> tuple[int, ...]:
        """Arc labels whose class is irreducible, one per irreducible."""
        out = []
        irr = set(self.space.irreducibles)
        seen = set()
        for i, d in enumerate(self.spanning):
            v = self.vectors[i]
            if d.kind == "arc" and v in irr and v not in seen:
                seen.add(v)
                out.append(d.arc)
        return tuple(out)


@lru_cache(maxsize=64)
def pm_state_space(ev: Evaluation) -> PmStateSpace:
    """A(+-) from the closed formulas for the three kinds of pairings."""
    mon = arc_monoid(ev)
    hm = half_state_space(ev.dfa_interval, "-")
    hp = half_state_space(ev.dfa_interval, "+")
    B = np.array(hm.matrix.to_lists(), dtype=bool).reshape(hm.matrix.rows, hm.matrix.cols)
    nq, npl = B.shape
    pairs = [PmDiagram("pair", plus=p, minus=m) for m in range(nq) for p in range(npl)]
    arcs = [PmDiagram("arc", arc=e) for e in range(len(mon))]
    pm = np.array([d.minus for d in pairs], dtype=np.int64)
    pp = np.array([d.plus for d in pairs], dtype=np.int64)
    # pair x pair: <(p1,m1),(p2,m2)> = a(m1 p2) a(m2 p1)
    g_pp = B[pm[:, None], pp[None, :]] & B[pm[None, :], pp[:, None]]
    # arc e x pair (p, m): a(m e p)
    g_ap = B[mon.interval[:, pm], pp[None, :]]
    # arc e x arc f: circle value of ef
    g_aa = mon.circle_accept[mon.circle_mult[mon.circle[:, None], mon.circle[None, :]]]
    gram = np.block([[g_pp, g_ap.T], [g_ap, g_aa]])
    rows = _pack_rows(gram)
    return PmStateSpace(ev, mon, hm, hp, tuple(pairs + arcs),
                        BoolMatrix(len(rows), gram.shape[1], tuple(rows)))


def _pack_rows(arr: np.ndarray) -> list[int]:
    if arr.shape[1] == 0:
        return [0] * arr.shape[0]
    packed = np.packbits(arr.astype(bool), axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


# -- general boundaries --------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """Matching of a sign sequence: ``partner[i]`` is the other end of an arc or -1."""

    eps: str
    partner: tuple[int, ...]

    @cached_property
    def slots(self) -> tuple[tuple[str, int], ...]:
        """(kind, point) per labelled slot in point order; arcs sit at their plus point."""
        out = []
        for i, s in enumerate(self.eps):
            j = self.partner[i]
            if s == "+":
                out.append(("arc" if j >= 0 else "plus", i))
            elif j < 0:
                out.append(("minus", i))
        return tuple(out)

    def shifted_union(self, other: "Pattern") -> "Pattern":
        n = len(self.eps)
        part = self.partner + tuple(j + n if j >= 0 else -1 for j in other.partner)
        return Pattern(self.eps + other.eps, part)


def matchings(eps: str) -> list[Pattern]:
    plus = [i for i, s in enumerate(eps) if s == "+"]
    minus = [i for i, s in enumerate(eps) if s == "-"]
    out = []

    def rec(k: int, used: frozenset, partner: list[int]):
        if k == len(plus):
            out.append(Pattern(eps, tuple(partner)))
            return
        i = plus[k]
        rec(k + 1, used, partner)
        for j in minus:
            if j not in used:
                partner[i], partner[j] = j, i
                rec(k + 1, used | {j}, partner)
                partner[i], partner[j] = -1, -1

    rec(0, frozenset(), [-1] * len(eps))
    return out


@dataclass(frozen=True)
class Labels:
    arc: tuple[int, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def of(self, kind: str) -> tuple[int, ...]:
        return getattr(self, kind)


@dataclass(frozen=True)
class Diagram:
    pattern: Pattern
    labels: tuple[int, ...]


class _Context:
    """Arrays needed to evaluate gluings for one evaluation."""

    def __init__(self, ev: Evaluation):
        self.ev = ev
        self.mon = arc_monoid(ev)
        self.minus = half_state_space(ev.dfa_interval, "-")
        self.plus = half_state_space(ev.dfa_interval, "+")
        m = self.minus.matrix
        self.B = np.array(m.to_lists(), dtype=bool).reshape(m.rows, m.cols)

    def labels(self, reduce: bool) -> Labels:
        if not reduce:
            return Labels(tuple(range(len(self.mon))), tuple(range(self.B.shape[1])),
                          tuple(range(self.B.shape[0])))
        pm = pm_state_space(self.ev)
        return Labels(pm.irreducible_arcs, self.plus.irreducible_states, self.minus.irreducible_states)

    def label_name(self, kind: str, label: int) -> str:
        if kind == "arc":
            return show_word(self.mon.reps[label])
        if kind == "plus":
            return show_word(self.plus.suffix_reps[label])
        return show_word(self.minus.prefix_reps[label])

    def diagram_name(self, d: Diagram) -> str:
        parts = []
        for (kind, i), lab in zip(d.pattern.slots, d.labels):
            w = self.label_name(kind, lab)
            if kind == "arc":
                parts.append(f"arc{i}-{d.pattern.partner[i]}({w})")
            elif kind == "plus":
                parts.append(f"+{i}({w})")
            else:
                parts.append(f"-{i}({w})")
        return " ".join(parts) if parts else "empty"

    def block(self, x: Pattern, xl: Sequence[np.ndarray], y: Pattern, yl: Sequence[np.ndarray]) -> np.ndarray:
        """Closure values for all labellings of x against all labellings of y."""
        n = len(x.eps)
        nx = len(x.slots)
        slot_of = {}
        for s, (_, i) in enumerate(x.slots):
            slot_of[(0, i)] = s
        for s, (_, i) in enumerate(y.slots):
            slot_of[(1, i)] = nx + s
        sizes = [len(a) for a in xl] + [len(a) for a in yl]
        labels = list(xl) + list(yl)
        pats = (x, y)
        visited = set()
        comps = []

        def follow(side: int, point: int):
            """Walk from a strand leaving ``side`` at ``point``; return (arcs, end)."""
            arcs = []
            while True:
                side, point = 1 - side, n - 1 - point
                pat = pats[side]
                j = pat.partner[point]
                if j < 0:
                    return arcs, slot_of[(side, point)]
                if (side, point) in visited:
                    return arcs, None
                visited.add((side, point))
                arcs.append(slot_of[(side, point)])
                point = j

        for side in (0, 1):
            pat = pats[side]
            for i, s in enumerate(pat.eps):
                if s == "-" and pat.partner[i] < 0:
                    arcs, end = follow(side, i)
                    comps.append(("interval", slot_of[(side, i)], arcs, end))
        for side in (0, 1):
            pat = pats[side]
            for i, s in enumerate(pat.eps):
                if s == "+" and pat.partner[i] >= 0 and (side, i) not in visited:
                    visited.add((side, i))
                    arcs, _ = follow(side, pat.partner[i])
                    comps.append(("circle", None, [slot_of[(side, i)]] + arcs, None))

        total = len(sizes)
        out = np.ones([1] * total, dtype=bool)
        for kind, start, arcs, end in comps:
            if kind == "interval":
                axes = [start] + arcs + [end]
                state = self.minus_states(labels[start])
                for a in arcs:
                    t = self.mon.interval[labels[a]]  # (K, Q)
                    state = np.moveaxis(t[:, state], 0, -1)
                val = self.B[state[..., None], labels[end]]
            else:
                axes = arcs
                state = self.mon.circle[labels[arcs[0]]]
                for a in arcs[1:]:
                    c = self.mon.circle[labels[a]]
                    state = self.mon.circle_mult[state[..., None], c]
                val = self.mon.circle_accept[state]
            order = np.argsort(axes)
            val = np.transpose(val, order)
            shape = [1] * total
            for ax in axes:
                shape[ax] = sizes[ax]
            out = out & val.reshape(shape)
        out = np.broadcast_to(out, sizes)
        rows = int(np.prod(sizes[:nx], dtype=np.int64))
        return out.reshape(rows, -1)

    def minus_states(self, labels: np.ndarray) -> np.ndarray:
        return np.asarray(labels, dtype=np.int64)


@lru_cache(maxsize=64)
def _context(ev: Evaluation) -> _Context:
    return _Context(ev)


def _label_arrays(ctx: _Context, pat: Pattern, labels: Labels) -> list[np.ndarray]:
    return [np.array(labels.of(kind), dtype=np.int64) for kind, _ in pat.slots]


def _gram(ctx: _Context, xs: list[tuple[Pattern, list[np.ndarray]]],
          ys: list[tuple[Pattern, list[np.ndarray]]]) -> tuple[list[int], int]:
    rows: list[int] = []
    width = sum(int(np.prod([len(a) for a in yl], dtype=np.int64)) for _, yl in ys)
    for x, xl in xs:
        nrows = int(np.prod([len(a) for a in xl], dtype=np.int64))
        if nrows == 0:
            continue
        blocks = [ctx.block(x, xl, y, yl) for y, yl in ys
                  if int(np.prod([len(a) for a in yl], dtype=np.int64))]
        full = np.concatenate(blocks, axis=1) if blocks else np.zeros((nrows, 0), dtype=bool)
        rows.extend(_pack_rows(full))
    return rows, width


def _spanning(ctx: _Context, eps: str, labels: Labels) -> list[tuple[Pattern, list[np.ndarray]]]:
    return [(p, _label_arrays(ctx, p, labels)) for p in matchings(eps)]


def _diagrams(spec: list[tuple[Pattern, list[np.ndarray]]]) -> list[Diagram]:
    out = []
    for pat, arrays in spec:
        for combo in product(*[a.tolist() for a in arrays]):
            out.append(Diagram(pat, tuple(combo)))
    return out


@dataclass(frozen=True, eq=False)
class StateSpace:
    ev: Evaluation
    eps: str
    diagrams: tuple[Diagram, ...]
    vectors: tuple[int, ...]
    width: int
    reduced: bool

    @cached_property
    def space(self) -> Semimodule:
        return Semimodule.span(self.width, self.vectors)

    def names(self) -> list[str]:
        ctx = _context(self.ev)
        return [ctx.diagram_name(d) for d in self.diagrams]


def general_state_space(ev: Evaluation, eps: str, reduce: bool = True,
                        max_len: int | None = None) -> StateSpace:
    _check_signs(eps)
    bound = SIGN_LENGTH_LIMIT if max_len is None else max_len
    if len(eps) > bound:
        raise SizeLimit(f"sign sequence longer than {bound}", limit=bound)
    return _state_space(ev, eps, reduce)


@lru_cache(maxsize=512)
def _state_space(ev: Evaluation, eps: str, reduce: bool) -> StateSpace:
    ctx = _context(ev)
    labels = ctx.labels(reduce)
    xs = _spanning(ctx, eps, labels)
    ys = _spanning(ctx, dual_signs(eps), labels)
    _guard(xs, ys)
    rows, width = _gram(ctx, xs, ys)
    return StateSpace(ev, eps, tuple(_diagrams(xs)), tuple(rows), width, reduce)


def _guard(xs, ys) -> None:
    cells = sum(int(np.prod([len(a) for a in xl], dtype=np.int64)) for _, xl in xs)
    cells *= sum(int(np.prod([len(a) for a in yl], dtype=np.int64)) for _, yl in ys)
    limit = size_limit(1 << 26)
    if cells > limit:
        raise SizeLimit(f"pairing table would have {cells} entries", limit=limit)


# -- tensor maps and the TQFT test ---------------------------------------------------


@dataclass(frozen=True)
class TensorReport:
    eps: str
    eps2: str
    surjective: bool
    injective: bool | None
    card_source: int | None
    card_target: int | None
    card_image: int | None
    card_reduced: int | None
    method: str

    @property
    def iso(self) -> bool:
        return bool(self.surjective and self.injective)

    def to_json(self) -> dict:
        return {"eps": self.eps, "eps2": self.eps2, "surjective": self.surjective,
                "injective": self.injective, "iso": self.iso,
                "card_tensor": self.card_source, "card_target": self.card_target,
                "card_image": self.card_image, "card_reduced_tensor": self.card_reduced,
                "injectivity_method": self.method}


def _safe_card(s: Semimodule) -> int | None:
    try:
        return s.cardinality
    except SizeLimit:
        return None


def tensor_compare(ev: Evaluation, eps: str, eps2: str, reduce: bool = True,
                   cardinalities: bool = True, injectivity: bool = True) -> TensorReport:
    """The map A(eps) ⊗ A(eps2) -> A(eps eps2) given by placing diagrams side by side.

    Without ``cardinalities`` only what decides the verdict is computed; with
    ``injectivity`` off the map is only tested for surjectivity.
    """
    _check_signs(eps + eps2)
    ctx = _context(ev)
    labels = ctx.labels(reduce)
    a = general_state_space(ev, eps, reduce)
    b = general_state_space(ev, eps2, reduce)
    target = general_state_space(ev, eps + eps2, reduce)
    xs = []
    for pa in matchings(eps):
        for pb in matchings(eps2):
            xs.append((pa.shifted_union(pb), _label_arrays(ctx, pa, labels) + _label_arrays(ctx, pb, labels)))
    ys = _spanning(ctx, dual_signs(eps + eps2), labels)
    rows, width = _gram(ctx, xs, ys)
    image = Semimodule.span(width, rows)
    surjective = all(image.contains(v) for v in target.space.irreducibles)

    sa, sb = a.space, b.space
    card_source = None
    if not injectivity or (not surjective and not cardinalities):
        injective, method = None, "skipped"
    elif is_distributive_safe(sa) or is_distributive_safe(sb):
        injective, method = True, "distributive factor"
        card_source = _safe_card(image) if cardinalities else None
    else:
        try:
            card_img = image.cardinality
            # counting past |image| already rules out injectivity
            card_source = tensor_cardinality(sa, sb, cap=None if cardinalities else card_img)
            injective, method = card_source == card_img, "cardinality"
            if card_source > card_img and not cardinalities:
                card_source = None
        except SizeLimit:
            injective, method = None, "too large"
    card_image = _safe_card(image) if cardinalities else None
    card_target = _safe_card(target.space) if cardinalities else None
    card_red = None
    if cardinalities:
        try:
            card_red = reduced_tensor(sa, sb).space.cardinality
        except SizeLimit:
            card_red = None
    return TensorReport(eps, eps2, surjective, injective, card_source, card_target,
                        card_image, card_red, method)


def is_distributive_safe(s: Semimodule) -> bool:
    """Distributivity without enumerating huge free semimodules."""
    if s.is_free():
        return True
    return is_distributive(s)


def sign_sequences(max_len: int) -> list[str]:
    out = []
    for n in range(1, max_len + 1):
        for t in product("+-", repeat=n):
            out.append("".join(t))
    return out


@dataclass(frozen=True)
class TqftReport:
    tqft: bool
    checked: tuple[TensorReport, ...]
    failure: TensorReport | None

    def to_json(self) -> dict:
        return {"tqft": self.tqft, "checked": len(self.checked),
                "failure": self.failure.to_json() if self.failure else None}


def tqft_check(ev: Evaluation, max_len: int = 4, reduce: bool = True) -> TqftReport:
    """Check A(e) ⊗ A(e') ≅ A(ee') for all nonempty e, e' with |e|+|e'| <= max_len.

    Surjectivity is tested on every pair before any injectivity test, so the
    reported failure is the first non-surjective map when there is one.
    Raises SizeLimit when an injectivity test cannot be decided.
    """
    seqs = sign_sequences(max_len - 1)
    pairs = sorted(((e, f) for e in seqs for f in seqs if len(e) + len(f) <= max_len),
                   key=lambda p: (len(p[0]) + len(p[1]), p))
    done = []
    for e, f in pairs:
        rep = tensor_compare(ev, e, f, reduce, cardinalities=False, injectivity=False)
        done.append(rep)
        if not rep.surjective:
            return TqftReport(False, tuple(done), rep)
    done = []
    for e, f in pairs:
        rep = tensor_compare(ev, e, f, reduce, cardinalities=False)
        done.append(rep)
        if rep.injective is None:
            raise SizeLimit(f"cannot decide injectivity for A({e}) ⊗ A({f})", eps=e, eps2=f)
        if not rep.iso:
            return TqftReport(False, tuple(done), rep)
    return TqftReport(True, tuple(done), None)
