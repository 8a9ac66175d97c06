"""JSON and DOT emission."""
from __future__ import annotations

import json

from .boolsemi import BoolMatrix
from .circauto import CircularDfa
from .lang import Dfa, Nfa


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def matrix_json(m: BoolMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "data": m.to_strings()}


def matrix_from_json(obj: dict) -> BoolMatrix:
    m = BoolMatrix.from_rows(obj["data"], int(obj["cols"]))
    if m.rows != int(obj["rows"]):
        raise ValueError("row count does not match data")
    return m


def _label(names, q: int) -> str:
    if names is None:
        return str(q)
    return names[q] or "∅"


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def _edges(rows, alphabet, style: str = "") -> list[tuple[int, int, str, str]]:
    grouped: dict[tuple[int, int], list[str]] = {}
    for q, row in enumerate(rows):
        for i, r in enumerate(row):
            grouped.setdefault((q, r), []).append(alphabet[i])
    return [(q, r, ",".join(ls), style) for (q, r), ls in grouped.items()]


def _dot(name: str, n: int, names, inits, accepting, edges) -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=circle];']
    for q in range(n):
        shape = "doublecircle" if q in accepting else "circle"
        lines.append(f"  q{q} [label={_quote(_label(names, q))}, shape={shape}];")
    for k, q in enumerate(sorted(inits)):
        lines.append(f"  start{k} [shape=point];")
        lines.append(f"  start{k} -> q{q};")
    for q, r, lab, style in edges:
        extra = f", {style}" if style else ""
        lines.append(f"  q{q} -> q{r} [label={_quote(lab)}{extra}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfa_dot(d: Dfa, names=None) -> str:
    return _dot("dfa", d.n_states, names, {d.init}, d.accepting, _edges(d.delta, d.alphabet))


def nfa_dot(nfa: Nfa, names=None) -> str:
    grouped: dict[tuple[int, int], list[str]] = {}
    for q, row in enumerate(nfa.delta):
        for i, targets in enumerate(row):
            for r in sorted(targets):
                grouped.setdefault((q, r), []).append(nfa.alphabet[i])
    edges = [(q, r, ",".join(ls), "") for (q, r), ls in grouped.items()]
    return _dot("nfa", nfa.n_states, names, nfa.inits, nfa.accepting, edges)


def dcfa_dot(c: CircularDfa) -> str:
    left = [(q, r, f"l:{lab}", "style=dashed") for q, r, lab, _ in _edges(c.delta_l, c.alphabet)]
    right = [(q, r, f"r:{lab}", "") for q, r, lab, _ in _edges(c.delta_r, c.alphabet)]
    return _dot("dcfa", c.n_states, c.names, {c.q_in}, c.accepting, left + right)
