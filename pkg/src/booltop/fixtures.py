"""Named example languages and matrices used by the tests and the CLI."""
from __future__ import annotations

from .boolsemi import M3_IN_B3, N5_IN_B3, BoolMatrix, Semimodule, span_rows
from .lang import Dfa, regex_dfa, rotation_closure
from .pairing import PairingTheory
from .theory.evaluation import Evaluation

ANY = "(a+b)*"

PENULT = ("ab", "(a+b)*b(a+b)")
EVEN = ("a", "(aa)*")
AB = ("ab", "(a+b)*b(aa)*a+(aa)*a")
# circular words with two cyclically adjacent a's; the one-letter word a
# counts since its only letter is next to itself around the circle
AA_CIRC = ("ab", "(a+b)*aa(a+b)*+a(a+b)*a+a")
AA_CIRC_LITERAL = ("ab", "(a+b)*aa(a+b)*+a(a+b)*a")
ABAB_PATTERN = ("ab", f"{ANY}a{ANY}b{ANY}a{ANY}b{ANY}")


def penult() -> Dfa:
    return regex_dfa(PENULT[1], PENULT[0])


def even() -> Dfa:
    return regex_dfa(EVEN[1], EVEN[0])


def ab() -> Dfa:
    return regex_dfa(AB[1], AB[0])


def circ_aa() -> Dfa:
    return regex_dfa(AA_CIRC[1], AA_CIRC[0])


def circ_abab() -> Dfa:
    return rotation_closure(regex_dfa(ABAB_PATTERN[1], ABAB_PATTERN[0]))


def even_even() -> Evaluation:
    return Evaluation.from_regex("a", "(aa)*", "(aa)*")


def even_odd() -> Evaluation:
    return Evaluation.from_regex("a", "(aa)*", "a(aa)*")


def even_all() -> Evaluation:
    return Evaluation.from_regex("a", "(aa)*", "a*")


A1 = BoolMatrix.from_rows(["01", "11"])
A2 = BoolMatrix.from_rows(["001", "010", "111"])
A3 = BoolMatrix.from_rows(["001", "011", "111"])
A4 = BoolMatrix.from_rows(["110", "101", "011"])

M3 = M3_IN_B3
N5 = N5_IN_B3

PAIR_M = BoolMatrix.from_rows(["01", "11"])


def pair_theory(lam: int) -> PairingTheory:
    return PairingTheory(PAIR_M, lam, ("x", "y"), ("x'", "y'"))


def spans() -> dict[str, Semimodule]:
    return {"A1": span_rows(A1), "A2": span_rows(A2), "A3": span_rows(A3), "A4": span_rows(A4)}


EVALUATIONS = {
    "F-EVEN/EVEN": even_even,
    "F-EVEN/ODD": even_odd,
    "F-EVEN/ALL": even_all,
}
