"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (reported as JSON).
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import serialize as ser
from .boolsemi import bits_to_str, is_distributive
from .circauto import CircularDfa, minimal_dcfa, validate_dcfa
from .errors import (AlphabetMismatch, BooltopError, DomainError, InvalidAutomaton, RegexSyntaxError)
from .lang import (Dfa, cyclic_derivative_lang, cyclic_derivative_word, minimize, regex_dfa,
                   syntactic_monoid, universal_dfa)
from .measure import circ_relative, complexity, joint_complexity, relative_complexity
from .pairing import PairingTheory, extended_gram, pairing_state_space
from .theory import (Evaluation, canonical_circular, general_state_space, half_state_space, id_decomposition,
                     minimal_nfas, pm_state_space, show_word, tqft_check)


class Output:
    def __init__(self, fmt: str, out: str | None):
        self.fmt = fmt
        self.out = out

    def emit(self, text: str) -> None:
        if self.out:
            Path(self.out).write_text(text, encoding="utf-8")
        else:
            click.echo(text, nl=False)


def _opts(f):
    f = click.option("--out", "out", type=click.Path(dir_okay=False), default=None)(f)
    f = click.option("--format", "fmt", type=click.Choice(["json", "dot", "table"]), default="json")(f)
    return f


def _alphabet(alphabet: str | None) -> str:
    if alphabet is None:
        raise click.UsageError("--alphabet is required")
    return alphabet


def _language(regex: str | None, alphabet: str | None, infile: str | None) -> Dfa:
    if infile:
        return Dfa.from_json(json.loads(Path(infile).read_text(encoding="utf-8")))
    if regex is None:
        raise click.UsageError("give --regex or --in")
    return regex_dfa(regex, _alphabet(alphabet))


def _circle(circ: str | None, alphabet: str | None, infile: str | None = None) -> Dfa:
    if circ is None and infile is None:
        raise click.UsageError("give --circ-regex")
    return _language(circ, alphabet, infile)


def _table(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def _dfa_table(d: Dfa, names=None) -> str:
    names = names or [show_word(w) for w in d.access_words]
    rows = [["state", *d.alphabet, "init", "accepting"]]
    for q in range(d.n_states):
        rows.append([names[q], *[names[r] for r in d.delta[q]],
                     "*" if q == d.init else "", "*" if q in d.accepting else ""])
    return _table(rows)


def _emit_dfa(o: Output, d: Dfa) -> None:
    if o.fmt == "dot":
        o.emit(ser.dfa_dot(d, [show_word(w) for w in d.access_words]))
    elif o.fmt == "table":
        o.emit(_dfa_table(d))
    else:
        o.emit(ser.dumps(d.to_json()))


def _space_report(space, names=None) -> dict:
    from .errors import SizeLimit

    try:
        card = space.cardinality
    except SizeLimit:
        card = None
    report = {"ambient": space.ambient, "rank": space.rank, "free": space.is_free(),
              "cardinality": card}
    if card is not None:
        report["distributive"] = is_distributive(space)
    report["irreducibles"] = [bits_to_str(x, space.ambient) for x in space.irreducibles]
    if names is not None:
        report["irreducible_names"] = names
    return report


@click.group()
def cli():
    """Topological theories of regular languages over the Boolean semiring."""


@cli.command("min-dfa")
@click.option("--regex")
@click.option("--alphabet")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False))
@_opts
def min_dfa_cmd(regex, alphabet, infile, fmt, out):
    _emit_dfa(Output(fmt, out), minimize(_language(regex, alphabet, infile)))


@cli.command("min-nfa")
@click.option("--regex")
@click.option("--alphabet")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False))
@click.option("--limit", type=int, default=10_000)
@click.option("--max-len", type=int, default=8)
@click.option("--dedupe", is_flag=True)
@_opts
def min_nfa_cmd(regex, alphabet, infile, limit, max_len, dedupe, fmt, out):
    h = half_state_space(_language(regex, alphabet, infile), "-")
    res = minimal_nfas(h, limit=limit, check_len=max_len, dedupe=dedupe)
    o = Output(fmt, out)
    if fmt == "dot":
        o.emit("".join(ser.nfa_dot(n, list(res.names)) for n in res.nfas))
    elif fmt == "table":
        lines = [f"liftings: {res.count}, emitted: {len(res.nfas)}, states: {', '.join(res.names)}\n"]
        for k, n in enumerate(res.nfas):
            lines.append(f"nfa {k}: init {{{','.join(res.names[q] for q in sorted(n.inits))}}}\n")
            for q in range(n.n_states):
                for i, a in enumerate(n.alphabet):
                    tgt = ",".join(res.names[r] for r in sorted(n.delta[q][i]))
                    lines.append(f"  {res.names[q]} -{a}-> {{{tgt}}}\n")
        o.emit("".join(lines))
    else:
        o.emit(ser.dumps({"count": res.count, "emitted": len(res.nfas), "states": list(res.names),
                          "nfas": [n.to_json() for n in res.nfas]}))


@cli.command("monoid")
@click.option("--regex")
@click.option("--alphabet")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False))
@_opts
def monoid_cmd(regex, alphabet, infile, fmt, out):
    m = syntactic_monoid(_language(regex, alphabet, infile))
    o = Output(fmt, out)
    if fmt == "table":
        names = [show_word(w) for w in m.reps]
        rows = [["·", *names]] + [[names[i], *[names[j] for j in m.mult[i]]] for i in range(len(m))]
        o.emit(f"elements: {len(m)}\n" + _table(rows))
    elif fmt == "dot":
        raise click.UsageError("monoid has no dot output")
    else:
        o.emit(ser.dumps({"size": len(m), "elements": list(m.reps),
                          "accepting": [m.reps[i] for i in range(len(m)) if m.accepting[i]],
                          "mult": [list(r) for r in m.mult]}))


@cli.command("circ-min")
@click.option("--circ-regex", "circ")
@click.option("--alphabet")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False))
@_opts
def circ_min_cmd(circ, alphabet, infile, fmt, out):
    c = minimal_dcfa(_circle(circ, alphabet, infile))
    o = Output(fmt, out)
    if fmt == "dot":
        o.emit(ser.dcfa_dot(c))
    elif fmt == "table":
        names = [show_word(w) for w in c.names]
        rows = [["state", *[f"l:{a}" for a in c.alphabet], *[f"r:{a}" for a in c.alphabet], "accepting"]]
        for q in range(c.n_states):
            rows.append([names[q], *[names[r] for r in c.delta_l[q]], *[names[r] for r in c.delta_r[q]],
                         "*" if q in c.accepting else ""])
        o.emit(f"states: {c.n_states}\n" + _table(rows))
    else:
        o.emit(ser.dumps(c.to_json()))


def _evaluation(regex, circ, alphabet, need_circle: bool) -> Evaluation:
    alphabet = _alphabet(alphabet)
    if regex is None:
        raise click.UsageError("--regex is required")
    if circ is None:
        if need_circle:
            raise click.UsageError("--circ-regex is required")
        circle = universal_dfa(alphabet)
    else:
        circle = regex_dfa(circ, alphabet)
    return Evaluation.from_dfas(regex_dfa(regex, alphabet), circle)


@cli.command("state-space")
@click.option("--regex")
@click.option("--circ-regex", "circ")
@click.option("--alphabet")
@click.option("--eps", default="-")
@click.option("--full", is_flag=True, help="use every label instead of irreducible ones")
@_opts
def state_space_cmd(regex, circ, alphabet, eps, full, fmt, out):
    if any(s not in "+-" for s in eps):
        raise click.UsageError("--eps may only contain '+' and '-'")
    ev = _evaluation(regex, circ, alphabet, need_circle="+" in eps and "-" in eps)
    st = general_state_space(ev, eps, reduce=not full)
    names = st.names()
    irr = st.space.irreducibles
    irr_names = [names[st.vectors.index(x)] for x in irr]
    report = {"eps": eps, "spanning": len(st.diagrams), **_space_report(st.space, irr_names)}
    o = Output(fmt, out)
    if fmt == "table":
        lines = [f"A({eps}): rank {report['rank']}, free {report['free']}, "
                 f"cardinality {report['cardinality']}\n"]
        lines += [f"  {n}\n" for n in irr_names]
        o.emit("".join(lines))
    elif fmt == "dot":
        raise click.UsageError("state-space has no dot output")
    else:
        o.emit(ser.dumps(report))


@cli.command("pm-space")
@click.option("--regex")
@click.option("--circ-regex", "circ")
@click.option("--alphabet")
@_opts
def pm_space_cmd(regex, circ, alphabet, fmt, out):
    ev = _evaluation(regex, circ, alphabet, need_circle=True)
    pm = pm_state_space(ev)
    names = pm.names()
    o = Output(fmt, out)
    irr_names = [pm.element_name(x) for x in pm.space.irreducibles]
    if fmt == "table":
        rows = [["", *names]] + [[names[i], *pm.gram.to_strings()[i]] for i in range(len(names))]
        o.emit(_table(rows) + f"rank {pm.space.rank}, free {pm.space.is_free()}\n"
               + "irreducibles: " + ", ".join(irr_names) + "\n")
    elif fmt == "dot":
        raise click.UsageError("pm-space has no dot output")
    else:
        o.emit(ser.dumps({"spanning": names, "gram": pm.gram.to_strings(),
                          **_space_report(pm.space, irr_names)}))


@cli.command("cuttable")
@click.option("--regex")
@click.option("--alphabet")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False))
@_opts
def cuttable_cmd(regex, alphabet, infile, fmt, out):
    idd = id_decomposition(_language(regex, alphabet, infile))
    o = Output(fmt, out)
    if fmt == "table":
        o.emit(f"id = {idd}\n")
    else:
        o.emit(ser.dumps({"cuttable": True, **idd.to_json()}))


@cli.command("canonical-circ")
@click.option("--regex")
@click.option("--alphabet")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False))
@_opts
def canonical_circ_cmd(regex, alphabet, infile, fmt, out):
    d = canonical_circular(_language(regex, alphabet, infile))
    _emit_dfa(Output(fmt, out), d)


@cli.command("tqft")
@click.option("--regex")
@click.option("--circ-regex", "circ")
@click.option("--alphabet")
@click.option("--max-len", type=int, default=4)
@_opts
def tqft_cmd(regex, circ, alphabet, max_len, fmt, out):
    ev = _evaluation(regex, circ, alphabet, need_circle=True)
    rep = tqft_check(ev, max_len=max_len)
    o = Output(fmt, out)
    if fmt == "table":
        line = f"tqft: {rep.tqft} ({len(rep.checked)} tensor maps checked)\n"
        if rep.failure:
            f = rep.failure
            line += f"fails at A({f.eps}) ⊗ A({f.eps2}): surjective {f.surjective}, injective {f.injective}\n"
        o.emit(line)
    else:
        o.emit(ser.dumps(rep.to_json()))


@cli.command("complexity")
@click.option("--regex")
@click.option("--circ-regex", "circ")
@click.option("--alphabet")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False))
@_opts
def complexity_cmd(regex, circ, alphabet, infile, fmt, out):
    d = _language(regex, alphabet, infile)
    report = {"language": complexity(d).to_json()}
    if circ is not None:
        ev = Evaluation.from_dfas(d, regex_dfa(circ, _alphabet(alphabet)))
        report["circle_relative"] = circ_relative(ev).to_json()
    o = Output(fmt, out)
    if fmt == "table":
        o.emit("".join(f"{k}: {json.dumps(v, ensure_ascii=False)}\n" for k, v in report.items()))
    else:
        o.emit(ser.dumps(report))


@cli.command("joint")
@click.option("--regex", multiple=True)
@click.option("--alphabet")
@_opts
def joint_cmd(regex, alphabet, fmt, out):
    if len(regex) < 2:
        raise click.UsageError("give --regex at least twice")
    alphabet = _alphabet(alphabet)
    dfas = [regex_dfa(r, alphabet) for r in regex]
    report = {"joint": joint_complexity(dfas).to_json(),
              "single": [complexity(d).to_json() for d in dfas]}
    if len(dfas) == 2:
        report["relative"] = relative_complexity(dfas[1], dfas[0]).to_json()
    o = Output(fmt, out)
    if fmt == "table":
        o.emit("".join(f"{k}: {json.dumps(v, ensure_ascii=False)}\n" for k, v in report.items()))
    else:
        o.emit(ser.dumps(report))


@cli.command("pairing")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False), required=True)
@_opts
def pairing_cmd(infile, fmt, out):
    t = PairingTheory.from_json(json.loads(Path(infile).read_text(encoding="utf-8")))
    g = extended_gram(t)
    s = pairing_state_space(t).space
    names = t.names()
    o = Output(fmt, out)
    if fmt == "table":
        rows = [["", *names]] + [[names[i], *g.to_strings()[i]] for i in range(len(names))]
        o.emit(_table(rows) + f"rank {s.rank}, cardinality {s.cardinality}\n")
    else:
        o.emit(ser.dumps({"names": names, "gram": g.to_strings(), **_space_report(s)}))


@cli.command("derive-cyclic")
@click.option("--circ-regex", "circ")
@click.option("--alphabet")
@click.option("--letter", required=True)
@click.option("--word")
@_opts
def derive_cyclic_cmd(circ, alphabet, letter, word, fmt, out):
    o = Output(fmt, out)
    if word is not None:
        res = sorted(cyclic_derivative_word(word, letter))
        if fmt == "table":
            o.emit(" + ".join(res) + "\n" if res else "0\n")
        else:
            o.emit(ser.dumps({"word": word, "letter": letter, "derivative": res}))
        return
    d = _circle(circ, alphabet)
    nfa = cyclic_derivative_lang(d, letter)
    from .lang import determinize
    dfa = minimize(determinize(nfa))
    if fmt == "dot":
        o.emit(ser.dfa_dot(dfa, [show_word(w) for w in dfa.access_words]))
    elif fmt == "table":
        o.emit(_dfa_table(dfa))
    else:
        o.emit(ser.dumps({"nfa": nfa.to_json(), "dfa": dfa.to_json()}))


@cli.command("validate")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False), required=True)
@_opts
def validate_cmd(infile, fmt, out):
    c = CircularDfa.from_json(json.loads(Path(infile).read_text(encoding="utf-8")))
    bad = validate_dcfa(c)
    if bad:
        raise InvalidAutomaton("circular automaton axioms fail", violations=bad)
    Output(fmt, out).emit(ser.dumps({"valid": True, "states": c.n_states}))


def run(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, prog_name="booltop", standalone_mode=False)
    except DomainError as e:
        click.echo(ser.dumps(e.to_dict()), nl=False)
        return 2
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    except click.ClickException as e:
        e.show()
        return 1
    except (RegexSyntaxError, AlphabetMismatch, BooltopError, ValueError, KeyError,
            json.JSONDecodeError) as e:
        click.echo(f"error: {e}", err=True)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
