"""Theories given by a Boolean pairing matrix and a circle value, and the
four label-free theories over the empty alphabet.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .boolsemi import BoolMatrix, Semimodule
from .lang import empty_dfa, universal_dfa
from .theory.evaluation import Evaluation


@dataclass(frozen=True)
class PairingTheory:
    """``m[v][u]``: value of an interval from in-label u (column) to out-label v (row)."""

    m: BoolMatrix
    lam: int
    in_names: tuple[str, ...] | None = None
    out_names: tuple[str, ...] | None = None

    @property
    def n_in(self) -> int:
        return self.m.cols

    @property
    def n_out(self) -> int:
        return self.m.rows

    def pair_labels(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n_in) for v in range(self.n_out)]

    def names(self) -> list[str]:
        ins = self.in_names or tuple(f"u{i}" for i in range(self.n_in))
        outs = self.out_names or tuple(f"v{i}" for i in range(self.n_out))
        return [f"{ins[u]}{outs[v]}" for u, v in self.pair_labels()] + ["cup"]

    def to_json(self) -> dict:
        return {"matrix": {"rows": self.m.rows, "cols": self.m.cols, "data": self.m.to_strings()},
                "lambda": self.lam}

    @classmethod
    def from_json(cls, obj: dict) -> "PairingTheory":
        mat = obj["matrix"]
        m = BoolMatrix.from_rows(mat["data"], int(mat["cols"]))
        if m.rows != int(mat["rows"]):
            raise ValueError("row count does not match data")
        lam = int(obj["lambda"])
        if lam not in (0, 1):
            raise ValueError("lambda must be 0 or 1")
        return cls(m, lam)


def extended_gram(t: PairingTheory) -> BoolMatrix:
    labels = t.pair_labels()
    m = t.m.entry
    rows = []
    for u, v in labels:
        row = [m(v, u2) & m(v2, u) for u2, v2 in labels] + [m(v, u)]
        rows.append(row)
    rows.append([m(v, u) for u, v in labels] + [t.lam])
    return BoolMatrix.from_rows(rows, len(labels) + 1)


@dataclass(frozen=True, eq=False)
class PairingSpace:
    theory: PairingTheory
    gram: BoolMatrix

    @cached_property
    def space(self) -> Semimodule:
        return Semimodule.span(self.gram.cols, self.gram.data)

    def vector(self, name: str) -> int:
        return self.gram.data[self.theory.names().index(name)]

    def join(self, *names: str) -> int:
        acc = 0
        for n in names:
            acc |= self.vector(n)
        return acc


def pairing_state_space(t: PairingTheory) -> PairingSpace:
    return PairingSpace(t, extended_gram(t))


DOTLESS_CASES = {
    1: (False, False),
    2: (False, True),
    3: (True, True),
    4: (True, False),
}


def dotless_theory(case: int) -> Evaluation:
    """Empty alphabet; each of the interval and circle languages is {ε} or empty."""
    if case not in DOTLESS_CASES:
        raise ValueError("case must be 1, 2, 3 or 4")
    interval, circle = DOTLESS_CASES[case]
    mk = lambda keep: universal_dfa("") if keep else empty_dfa("")
    return Evaluation.from_dfas(mk(interval), mk(circle))


def dotless_closed_form(case: int, eps: str) -> int:
    """Cardinality of A(eps) predicted in closed form for cases 1-3."""
    if case == 1:
        return 2 if not eps else 1
    if case == 2:
        return 2 if eps.count("+") == eps.count("-") else 1
    if case == 3:
        return 2
    raise ValueError("no closed form for case 4")
