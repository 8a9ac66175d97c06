from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import NotCircular
from ..lang import Alphabet, CircularWord, Dfa, is_rotation_closed, minimize, regex_dfa


def show_word(w: str | None) -> str:
    if w is None:
        return "0"
    return w if w else "∅"


@dataclass(frozen=True)
class Evaluation:
    """Interval language and (linearized) circle language over one alphabet."""

    alphabet: tuple[str, ...]
    dfa_interval: Dfa
    dfa_circle: Dfa

    @classmethod
    def from_dfas(cls, interval: Dfa, circle: Dfa) -> "Evaluation":
        if interval.alphabet != circle.alphabet:
            from ..errors import AlphabetMismatch
            raise AlphabetMismatch("interval and circle languages use different alphabets")
        if not is_rotation_closed(circle):
            raise NotCircular("circle language is not closed under rotation")
        return cls(interval.alphabet, minimize(interval), minimize(circle))

    @classmethod
    def from_regex(cls, alphabet: "str | Alphabet", interval: str, circle: str) -> "Evaluation":
        return cls.from_dfas(regex_dfa(interval, alphabet), regex_dfa(circle, alphabet))

    def alpha_interval(self, w: str) -> bool:
        return self.dfa_interval.accepts(w)

    def alpha_circle(self, w: "str | CircularWord") -> bool:
        s = w.word if isinstance(w, CircularWord) else w
        return self.dfa_circle.accepts(s)


def alpha_eval(ev: Evaluation, intervals: Iterable[str] = (), circles: Iterable["str | CircularWord"] = ()) -> bool:
    """Value of a closed diagram: the AND over its intervals and circles."""
    return all(ev.alpha_interval(w) for w in intervals) and all(ev.alpha_circle(c) for c in circles)
