"""Finite Boolean semimodules represented as OR-closed sets of bit-vectors.

A vector is a Python ``int``; coordinate ``i`` is bit ``i``.  In the textual
form (bit-strings) the leftmost character is coordinate 0.  Join is bitwise
OR and the order is bitwise inclusion, so every semimodule here is a finite
(join, 0)-semilattice sitting inside a free one.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import NotProjective, SizeLimit
from .limits import ELEMENT_LIMIT, TENSOR_LIMIT, size_limit


def bits_from_str(text: str) -> int:
    value = 0
    for i, ch in enumerate(text):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise ValueError(f"bad bit character {ch!r} in {text!r}")
    return value


def bits_to_str(value: int, width: int) -> str:
    return "".join("1" if value >> i & 1 else "0" for i in range(width))


def leq(a: int, b: int) -> bool:
    return a & ~b == 0


def or_all(vectors: Iterable[int]) -> int:
    acc = 0
    for v in vectors:
        acc |= v
    return acc


def popcount(v: int) -> int:
    return bin(v).count("1")


@dataclass(frozen=True)
class BoolMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], cols: int | None = None) -> "BoolMatrix":
        data = []
        width = cols
        for r in rows:
            if isinstance(r, str):
                w = len(r)
                v = bits_from_str(r)
            else:
                w = len(r)
                v = sum(1 << j for j, x in enumerate(r) if x)
            if width is None:
                width = w
            elif w != width:
                raise ValueError("ragged matrix")
            data.append(v)
        return cls(len(data), width or 0, tuple(data))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> "BoolMatrix":
        return cls(len(columns), rows, tuple(columns)).transpose()

    def entry(self, i: int, j: int) -> int:
        return self.data[i] >> j & 1

    def column(self, j: int) -> int:
        return sum(1 << i for i, r in enumerate(self.data) if r >> j & 1)

    def transpose(self) -> "BoolMatrix":
        return BoolMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.cols)] for r in self.data]

    def to_strings(self) -> list[str]:
        return [bits_to_str(r, self.cols) for r in self.data]

    def delete_row(self, i: int) -> "BoolMatrix":
        return BoolMatrix(self.rows - 1, self.cols, self.data[:i] + self.data[i + 1:])

    def delete_column(self, j: int) -> "BoolMatrix":
        return self.transpose().delete_row(j).transpose()

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.transpose().data == self.data


@dataclass(frozen=True, eq=False)
class Semimodule:
    """OR-span of ``generators`` inside ``B^ambient``.

    Equality is equality of spans (same ambient, same irreducibles).
    Elements are enumerated lazily and guarded by a size limit.
    """

    ambient: int
    generators: tuple[int, ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[int]) -> "Semimodule":
        seen: dict[int, None] = {}
        for v in vectors:
            if v >> ambient:
                raise ValueError("vector wider than ambient dimension")
            seen.setdefault(v, None)
        return cls(ambient, tuple(seen))

    @classmethod
    def free(cls, n: int) -> "Semimodule":
        return cls(n, tuple(1 << i for i in range(n)))

    @cached_property
    def irreducibles(self) -> tuple[int, ...]:
        gens = sorted({g for g in self.generators if g})
        out = []
        for x in gens:
            below = 0
            for g in gens:
                if g != x and g & ~x == 0:
                    below |= g
            if below != x:
                out.append(x)
        return tuple(out)

    @cached_property
    def elements(self) -> tuple[int, ...]:
        limit = size_limit(ELEMENT_LIMIT)
        elems = {0}
        for g in self.irreducibles:
            elems |= {e | g for e in elems}
            if len(elems) > limit:
                raise SizeLimit(f"semimodule has more than {limit} elements", limit=limit)
        return tuple(sorted(elems))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    @cached_property
    def top(self) -> int:
        return or_all(self.irreducibles)

    @property
    def rank(self) -> int:
        return len(self.irreducibles)

    def contains(self, v: int) -> bool:
        return or_all(g for g in self.irreducibles if g & ~v == 0) == v

    def closure_below(self, v: int) -> int:
        """Largest element of the span that is bitwise below ``v``."""
        return or_all(g for g in self.irreducibles if g & ~v == 0)

    def is_free(self) -> bool:
        irr = self.irreducibles
        for i, x in enumerate(irr):
            rest = or_all(y for k, y in enumerate(irr) if k != i)
            if x & ~rest == 0:
                return False
        return True

    def element(self, bits: int) -> "SmElement":
        if not self.contains(bits):
            raise ValueError(f"{bits:b} is not an element")
        return SmElement(bits, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Semimodule):
            return NotImplemented
        return self.ambient == other.ambient and set(self.irreducibles) == set(other.irreducibles)

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.irreducibles)))

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "generators": [bits_to_str(g, self.ambient) for g in self.generators]}

    @classmethod
    def from_json(cls, obj: dict) -> "Semimodule":
        n = int(obj["ambient"])
        gens = [bits_from_str(s) for s in obj["generators"]]
        for s in obj["generators"]:
            if len(s) != n:
                raise ValueError("generator width differs from ambient")
        return cls.span(n, gens)


@dataclass(frozen=True)
class SmElement:
    bits: int
    owner: Semimodule

    def __le__(self, other: "SmElement") -> bool:
        return leq(self.bits, other.bits)

    def __or__(self, other: "SmElement") -> "SmElement":
        return SmElement(self.bits | other.bits, self.owner)

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.owner.ambient)


def span_rows(m: BoolMatrix) -> Semimodule:
    return Semimodule.span(m.cols, m.data)


def span_columns(m: BoolMatrix) -> Semimodule:
    return span_rows(m.transpose())


def irreducibles(s: Semimodule) -> tuple[SmElement, ...]:
    return tuple(SmElement(x, s) for x in s.irreducibles)


def _first_redundant(vectors: Sequence[int]) -> int | None:
    for i, r in enumerate(vectors):
        acc = 0
        for k, v in enumerate(vectors):
            if k != i and v & ~r == 0:
                acc |= v
        if acc == r:
            return i
    return None


def canonical_matrix(m: BoolMatrix) -> BoolMatrix:
    """Delete rows, then columns, that are joins of the others until stable."""
    cur = m
    while True:
        i = _first_redundant(cur.data)
        if i is not None:
            cur = cur.delete_row(i)
            continue
        j = _first_redundant(cur.transpose().data)
        if j is not None:
            cur = cur.delete_column(j)
            continue
        return cur


# -- duality ---------------------------------------------------------------


def _below_masks(s: Semimodule) -> dict[int, int]:
    irr = s.irreducibles
    return {x: sum(1 << k for k, j in enumerate(irr) if j & ~x == 0) for x in s.elements}


def functional(s: Semimodule, a: int) -> int:
    """The functional ``f_a`` (zero exactly on the down-set of ``a``) as a vector over irr(s)."""
    return sum(1 << k for k, j in enumerate(s.irreducibles) if j & ~a)


def evaluate(s: Semimodule, f: int, x: int) -> int:
    """Value of a functional (vector over irr(s)) at element ``x``."""
    for k, j in enumerate(s.irreducibles):
        if f >> k & 1 and j & ~x == 0:
            return 1
    return 0


def dual(s: Semimodule) -> tuple[Semimodule, BoolMatrix]:
    """Dual semimodule of join-preserving functionals and its pairing matrix.

    The pairing has one row per dual element and one column per element of
    ``s`` (both in sorted order).
    """
    elems = s.elements
    below = _below_masks(s)
    n = len(s.irreducibles)
    full = (1 << n) - 1
    dual_space = Semimodule.span(n, [full & ~below[a] for a in elems])
    cols = len(elems)
    rows = []
    for f in dual_space.elements:
        rows.append(sum(1 << c for c, x in enumerate(elems) if f & below[x]))
    return dual_space, BoolMatrix(len(rows), cols, tuple(rows))


def double_dual_map(s: Semimodule) -> dict[int, int]:
    """Canonical map ``x -> ev_x`` into dual(dual(s)), as vectors over irr(dual(s))."""
    d, _ = dual(s)
    below = _below_masks(s)
    return {x: sum(1 << k for k, psi in enumerate(d.irreducibles) if psi & below[x]) for x in s.elements}


def meet_irreducibles(s: Semimodule) -> tuple[int, ...]:
    """Elements that are not the meet of the elements strictly above them."""
    elems = s.elements
    top = s.top
    out = []
    for m in elems:
        if m == top:
            continue
        above = top
        for y in elems:
            if y != m and m & ~y == 0:
                above &= y
        if s.closure_below(above) != m:
            out.append(m)
    return tuple(out)


# -- lattice structure -------------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    space: Semimodule

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.space.top

    def join(self, a: int, b: int) -> int:
        return a | b

    def meet(self, a: int, b: int) -> int:
        return self.space.closure_below(a & b)

    def meet_table(self) -> dict[tuple[int, int], int]:
        e = self.space.elements
        return {(a, b): self.meet(a, b) for a in e for b in e}

    def join_table(self) -> dict[tuple[int, int], int]:
        e = self.space.elements
        return {(a, b): a | b for a in e for b in e}


def lattice(s: Semimodule) -> Lattice:
    return Lattice(s)


def _count_down_sets(poset: Sequence[int], cap: int) -> int:
    """Number of down-sets of ``poset`` (order = bitwise inclusion), stopping past ``cap``."""
    n = len(poset)
    lower = [sum(1 << k for k in range(n) if k != i and poset[k] & ~poset[i] == 0) for i in range(n)]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(n):
                if not d >> i & 1 and lower[i] & ~d == 0:
                    e = d | 1 << i
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
                        if len(seen) > cap:
                            return len(seen)
        frontier = nxt
    return len(seen)


def is_distributive(s: Semimodule) -> bool:
    """Distributive iff every irreducible is join-prime.

    An irreducible j is join-prime when it is not below the join of the
    irreducibles that are not above it.  No elements are enumerated.
    """
    irr = s.irreducibles
    for j in irr:
        rest = or_all(i for i in irr if j & ~i)
        if j & ~rest == 0:
            return False
    return True


def is_distributive_birkhoff(s: Semimodule) -> bool:
    """Birkhoff test: distributive iff elements correspond to down-sets of irreducibles."""
    card = s.cardinality
    return _count_down_sets(s.irreducibles, card) == card


def distributivity_counterexample(s: Semimodule) -> tuple[int, int, int] | None:
    """A triple (a, b, c) with a∧(b∨c) != (a∧b)∨(a∧c), or None."""
    lat = Lattice(s)
    elems = s.elements
    for a in s.irreducibles:
        for i, b in enumerate(elems):
            if a & ~b == 0:
                continue
            for c in elems[i + 1:]:
                if a & ~c == 0 or a & ~(b | c):
                    continue
                if lat.meet(a, b | c) != lat.meet(a, b) | lat.meet(a, c):
                    return a, b, c
    return None


def is_flat(s: Semimodule) -> bool:
    return is_distributive(s)


# -- coevaluation and projectivity -----------------------------------------


@dataclass(frozen=True)
class Coevaluation:
    space: Semimodule
    dual_space: Semimodule
    pairs: tuple[tuple[SmElement, SmElement], ...]

    def apply(self, v: int) -> int:
        acc = 0
        for p, f in self.pairs:
            if evaluate(self.space, f.bits, v):
                acc |= p.bits
        return acc

    def dual_apply(self, g: int) -> int:
        """Other snake composite: g -> join of g(p_i) f_i, for g a dual vector."""
        acc = 0
        for p, f in self.pairs:
            if evaluate(self.space, g, p.bits):
                acc |= f.bits
        return acc

    def snake_holds(self) -> bool:
        ok_left = all(self.apply(v) == v for v in self.space.elements)
        ok_right = all(self.dual_apply(g) == g for g in self.dual_space.elements)
        return ok_left and ok_right

    def circle_value(self) -> int:
        return int(any(evaluate(self.space, f.bits, p.bits) for p, f in self.pairs))


def coevaluation(p: Semimodule) -> Coevaluation:
    if not is_distributive(p):
        raise NotProjective("semimodule is not distributive; no coevaluation exists",
                            counterexample=distributivity_counterexample(p))
    irr = p.irreducibles
    d, _ = dual(p)
    pairs = []
    for x in irr:
        # largest element not above x; its functional is u -> [x <= u]
        a = or_all(j for j in irr if x & ~j)
        pairs.append((SmElement(x, p), SmElement(functional(p, a), d)))
    return Coevaluation(p, d, tuple(pairs))


def retract_witness(p: Semimodule) -> tuple[dict[int, int], tuple[int, ...]] | None:
    """Join-preserving ``iota: p -> B^irr`` and ``proj`` (images of unit vectors) with proj∘iota = id.

    Returns None when the canonical candidate fails, which happens exactly
    for non-distributive ``p``.
    """
    irr = p.irreducibles
    iota = {v: sum(1 << k for k, x in enumerate(irr) if x & ~v == 0) for v in p.elements}
    for a in p.elements:
        for b in p.elements:
            if iota[a | b] != iota[a] | iota[b]:
                return None
    proj = tuple(irr)
    for v, code in iota.items():
        if or_all(proj[k] for k in range(len(irr)) if code >> k & 1) != v:
            return None
    return iota, proj


def identity_in_rank_one_span(p: Semimodule) -> bool:
    """Whether id_p is a join of rank-one maps v -> f(v)·n (the image of p*⊗p in End(p))."""
    elems = p.elements
    d, _ = dual(p)
    below = _below_masks(p)
    best = []
    for f in d.elements:
        support = [v for v in elems if f & below[v]]
        if not support:
            continue
        meet = p.top
        for v in support:
            meet &= v
        best.append((f, p.closure_below(meet)))
    for v in elems:
        acc = 0
        for f, n in best:
            if f & below[v]:
                acc |= n
        if acc != v:
            return False
    return True


# -- tensor products ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TensorProduct:
    left: Semimodule
    right: Semimodule
    space: Semimodule
    _pure: dict

    def pure(self, a: int, b: int) -> int:
        """Vector of the pure tensor ``a ⊗ b`` for arbitrary elements a, b."""
        key = (a, b)
        if key not in self._pure:
            irr_a = [j for j in self.left.irreducibles if j & ~a == 0]
            irr_b = [k for k in self.right.irreducibles if k & ~b == 0]
            self._pure[key] = or_all(self._pure[(j, k)] for j in irr_a for k in irr_b)
        return self._pure[key]

    def __len__(self) -> int:
        return self.space.cardinality


def tensor(s: Semimodule, t: Semimodule, limit: int | None = None) -> TensorProduct:
    """Tensor product of finite (join, 0)-semilattices via bi-ideals.

    A bi-ideal of s×t is stored as a map ``beta: s -> t`` (the row of pairs
    (a, b) in the ideal is the principal down-set of ``beta(a)``).  Bi-ideals
    correspond to bimorphisms s×t -> B, so the tensor product is realised as
    the OR-span of the pure tensors ``a⊗b -> [(a, b) not in I]`` indexed by
    all bi-ideals I.
    """
    limit = size_limit(TENSOR_LIMIT) if limit is None else limit
    S = s.elements
    T = t.elements
    if len(S) * len(T) > limit:
        raise SizeLimit(f"|s|·|t| = {len(S) * len(T)} exceeds the tensor guard {limit}", limit=limit)
    n = len(S)
    sidx = {a: i for i, a in enumerate(S)}
    irr_s = [sidx[j] for j in s.irreducibles]
    joins = [[sidx[S[i] | S[k]] for k in irr_s] for i in range(n)]
    below = [[k for k in range(n) if S[k] & ~S[i] == 0 and k != i] for i in range(n)]
    top_t = t.top
    meet_cache: dict[tuple[int, int], int] = {}

    def meet_t(u: int, v: int) -> int:
        key = (u, v) if u <= v else (v, u)
        r = meet_cache.get(key)
        if r is None:
            r = meet_cache[key] = t.closure_below(u & v)
        return r

    def close(beta: list[int]) -> tuple[int, ...]:
        beta[0] = top_t
        changed = True
        while changed:
            changed = False
            for i in range(n - 1, -1, -1):
                b = beta[i]
                if b:
                    for k in below[i]:
                        if b & ~beta[k]:
                            beta[k] |= b
                            changed = True
            for i in range(n):
                bi = beta[i]
                if not bi:
                    continue
                for pos, k in enumerate(irr_s):
                    v = meet_t(bi, beta[k])
                    c = joins[i][pos]
                    if v & ~beta[c]:
                        beta[c] |= v
                        changed = True
        return tuple(beta)

    def principal(a: int, b: int) -> tuple[int, ...]:
        beta = [b if S[i] & ~a == 0 else 0 for i in range(n)]
        return close(beta)

    zero = close([0] * n)
    gens = {(j, k): principal(j, k) for j in s.irreducibles for k in t.irreducibles}
    ideals = {zero: None}
    frontier = [zero]
    elem_limit = size_limit(ELEMENT_LIMIT)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens.values():
                y = close([p | q for p, q in zip(x, g)])
                if y not in ideals:
                    ideals[y] = None
                    nxt.append(y)
                    if len(ideals) > elem_limit:
                        raise SizeLimit("tensor product too large", limit=elem_limit)
        frontier = nxt
    order = sorted(ideals)
    width = max(top_t.bit_length(), 1)

    def pack(beta: tuple[int, ...]) -> int:
        acc = 0
        for i, b in enumerate(beta):
            acc |= b << (i * width)
        return acc

    packed = [pack(b) for b in order]

    def code(beta: tuple[int, ...]) -> int:
        x = pack(beta)
        return sum(1 << c for c, I in enumerate(packed) if x & ~I)

    pure = {key: code(beta) for key, beta in gens.items()}
    space = Semimodule.span(len(order), pure.values())
    return TensorProduct(s, t, space, pure)


def _cover_constraints(s: Semimodule) -> list[tuple[int, int]]:
    """Pairs (k, mask): irreducible k lies below the join of the irreducibles in mask.

    Taken from every join x | y that puts k below it while neither part does,
    plus the order among irreducibles; only minimal masks are kept.
    """
    irr = s.irreducibles
    r = len(irr)
    elems = s.elements
    support = {x: sum(1 << i for i, j in enumerate(irr) if j & ~x == 0) for x in elems}
    found: set[tuple[int, int]] = set()
    for k, jk in enumerate(irr):
        for i, ji in enumerate(irr):
            if i != k and jk & ~ji == 0:
                found.add((k, 1 << i))
    for a, x in enumerate(elems):
        for y in elems[a + 1:]:
            z = x | y
            new = support[z] & ~support[x] & ~support[y]
            mask = support[x] | support[y]
            for k in range(r):
                if new >> k & 1:
                    found.add((k, mask))
    minimal = []
    for k, mask in found:
        if not any(k2 == k and m2 != mask and m2 & ~mask == 0 for k2, m2 in found):
            minimal.append((k, mask))
    return sorted(minimal)


def hom_count(s: Semimodule, c: Semimodule, limit: int | None = None, cap: int | None = None) -> int:
    """Number of (join, 0)-homomorphisms s -> c.

    A homomorphism is a choice of images for the irreducibles of s that
    respects every cover constraint; choices are made in irreducible order and
    each constraint is tested once its last variable is fixed.  With ``cap``
    the count stops at cap + 1, enough to tell whether it exceeds cap.
    """
    limit = size_limit(ELEMENT_LIMIT) if limit is None else limit
    r = len(s.irreducibles)
    cons = _cover_constraints(s)
    by_last: list[list[tuple[int, int]]] = [[] for _ in range(r)]
    for k, mask in cons:
        last = max(k, mask.bit_length() - 1)
        by_last[last].append((k, mask))
    values = list(c.elements)
    chosen = [0] * r

    def ok(pos: int) -> bool:
        for k, mask in by_last[pos]:
            acc = 0
            m = mask
            while m:
                low = m & -m
                acc |= chosen[low.bit_length() - 1]
                m ^= low
            if chosen[k] & ~acc:
                return False
        return True

    count = 0
    stop = None if cap is None else cap + 1

    def walk(pos: int) -> bool:
        nonlocal count
        if pos == r:
            count += 1
            if stop is None and count > limit:
                raise SizeLimit("homomorphism count exceeds the element guard", limit=limit)
            return count == stop
        for v in values:
            chosen[pos] = v
            if ok(pos) and walk(pos + 1):
                return True
        chosen[pos] = 0
        return False

    walk(0)
    return count


def tensor_cardinality(s: Semimodule, t: Semimodule, cap: int | None = None) -> int:
    """|s ⊗ t| as the number of homomorphisms s -> t*, both being finite.

    With ``cap`` the result is min(|s ⊗ t|, cap + 1).
    """
    return hom_count(s, dual(t)[0], cap=cap)


def embedding_coordinates(s: Semimodule) -> tuple[int, ...]:
    """Meet-irreducibles of s; ``x -> ([x not<= m])_m`` embeds s into B^irr(s*)."""
    return meet_irreducibles(s)


def embed(s: Semimodule, x: int, coords: Sequence[int] | None = None) -> int:
    coords = embedding_coordinates(s) if coords is None else coords
    return sum(1 << k for k, m in enumerate(coords) if x & ~m)


def kron(u: int, v: int, width_v: int) -> int:
    acc = 0
    i = 0
    while u:
        if u & 1:
            acc |= v << (i * width_v)
        u >>= 1
        i += 1
    return acc


@dataclass(frozen=True, eq=False)
class ReducedTensor:
    left: Semimodule
    right: Semimodule
    space: Semimodule
    left_coords: tuple[int, ...]
    right_coords: tuple[int, ...]

    def pure(self, a: int, b: int) -> int:
        return kron(embed(self.left, a, self.left_coords), embed(self.right, b, self.right_coords),
                    len(self.right_coords))

    def __len__(self) -> int:
        return self.space.cardinality


def reduced_tensor(s: Semimodule, t: Semimodule) -> ReducedTensor:
    cs = embedding_coordinates(s)
    ct = embedding_coordinates(t)
    width = len(ct)
    gens = [kron(embed(s, j, cs), embed(t, k, ct), width) for j in s.irreducibles for k in t.irreducibles]
    return ReducedTensor(s, t, Semimodule.span(len(cs) * width, gens), cs, ct)


def map_image(gen_images: Iterable[int], ambient: int) -> Semimodule:
    return Semimodule.span(ambient, gen_images)


# -- flatness probes ---------------------------------------------------------

M3_IN_B3 = Semimodule.span(3, [bits_from_str(r) for r in ("110", "101", "011")])
# columns of the embedding matrices: generators are the images of the named elements
N5_IN_B3 = Semimodule.span(3, [bits_from_str(r) for r in ("101", "011", "100")])
FREE_B3 = Semimodule.free(3)


def _probe(sub: Semimodule, s: Semimodule) -> bool:
    """Is ``inclusion ⊗ id_s : sub⊗s -> B³⊗s`` injective?"""
    small = tensor(sub, s)
    big = tensor(FREE_B3, s)
    image = Semimodule.span(big.space.ambient,
                            [big.pure(j, k) for j in sub.irreducibles for k in s.irreducibles])
    return image.cardinality == small.space.cardinality


@dataclass(frozen=True)
class FlatnessReport:
    distributive: bool
    m3_probe_injective: bool
    n5_probe_injective: bool

    @property
    def flat(self) -> bool:
        return self.distributive


def flatness_probes(s: Semimodule) -> FlatnessReport:
    return FlatnessReport(is_distributive(s), _probe(M3_IN_B3, s), _probe(N5_IN_B3, s))


def homomorphism_image(f: Callable[[int], int], s: Semimodule, ambient: int) -> Semimodule:
    return Semimodule.span(ambient, (f(g) for g in s.irreducibles))
