"""Command line interface: ``sgap <subcommand> ...``.

Exit status is 0 on success, 1 when an input fails validation and 2 on
usage errors. ``-`` reads a document from standard input; relation arguments
take a literal such as ``pairs=(0,1)(1,2)`` or ``@file`` holding one.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict


from .errors import SgapError, ValidationError, PreconditionError
from .families import generate_family
from .free import Word, all_words, extend_morphism
from .green import co_green_quasiorders, co_green_relations, eggbox_dot, green_relations
from .kernels import cotransitive_kernel, hamming2_relation
from .relations import (
    FiniteRelation,
    FiniteSetoid,
    FiniteSubset,
    classify_apartness,
    classify_relation,
    equivalence_closure,
    format_relation,
    parse_relation,
    transitive_closure,
)
from .semigroup import (
    classify_compatibility,
    collapse,
    compatible_closure,
    congruence_closure,
    eta,
    index_period,
    rees_factor,
)
from .sgapfile import SgapDocument, SgapSyntaxError, emit_sgap, parse_sgap


class UsageError(Exception):
    pass


def _rel_json(r: FiniteRelation) -> dict:
    return {"n": r.n, "pairs": [list(p) for p in r.pairs()], "literal": format_relation(r)}


def _read(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args, stdin):
    return parse_sgap(_read(args.file, stdin)).semigroup()


def _relation_arg(text: str, n: int, stdin) -> FiniteRelation:
    if text.startswith("@"):
        text = _read(text[1:], stdin)
    try:
        return parse_relation(text, n)
    except SgapError as exc:
        raise UsageError(f"bad relation argument: {exc}") from None


def _index_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated indices, got {text!r}") from None


def _emit(out, payload):
    out.write(json.dumps(payload, indent=2) + "\n")


def cmd_validate(args, stdin, out):
    s = _load(args, stdin)
    out.write(f"OK n={s.n}\n")


def cmd_classify(args, stdin, out):
    s = _load(args, stdin)
    if args.rel is None:
        _emit(out, {"apartness": asdict(classify_apartness(s.apt, s.eq))})
        return
    alpha = _relation_arg(args.rel, s.n, stdin)
    _emit(out, {
        "relation": _rel_json(alpha),
        "report": asdict(classify_relation(alpha, s.setoid)),
        "compatibility": asdict(classify_compatibility(alpha, s)),
    })


def cmd_kernel(args, stdin, out):
    if args.hamming is not None:
        if args.kind != "cotransitive":
            raise UsageError("--hamming only supports --kind cotransitive")
        try:
            alpha = hamming2_relation(args.hamming)
        except PreconditionError as exc:
            raise UsageError(str(exc)) from None
        inner = alpha
    else:
        if args.file is None or args.rel is None:
            raise UsageError("kernel needs --rel and a document (or --hamming)")
        s = _load(args, stdin)
        alpha = _relation_arg(args.rel, s.n, stdin)
        if args.kind == "cotransitive":
            inner = alpha
        elif args.kind == "coequivalence":
            inner = alpha & alpha.inverse() & s.apt
        else:
            e = eta(alpha, s)
            inner = e & e.inverse() & s.apt
    res = cotransitive_kernel(inner)
    _emit(out, {"kind": args.kind, "relation": _rel_json(res.kernel),
                "fixpoint_step": res.fixpoint_step})


def cmd_closure(args, stdin, out):
    s = _load(args, stdin)
    alpha = _relation_arg(args.rel, s.n, stdin)
    result = {
        "transitive": lambda: transitive_closure(alpha),
        "equivalence": lambda: equivalence_closure(alpha, s.eq),
        "compatible": lambda: compatible_closure(alpha, s),
        "congruence": lambda: congruence_closure(alpha, s),
    }[args.kind]()
    _emit(out, {"kind": args.kind, "relation": _rel_json(result)})


def cmd_green(args, stdin, out):
    g = green_relations(_load(args, stdin))
    _emit(out, {k: _rel_json(getattr(g, k)) for k in ("leqL", "leqR", "leqJ", "L", "R", "J", "H", "D")})


def cmd_cogreen(args, stdin, out):
    s = _load(args, stdin)
    q = co_green_quasiorders(s)
    co = co_green_relations(s)
    payload = {k: _rel_json(v) for k, v in vars(q).items()}
    payload.update({k: _rel_json(v) for k, v in vars(co).items()})
    _emit(out, payload)


def cmd_eggbox(args, stdin, out):
    s = _load(args, stdin)
    g = green_relations(s)
    if args.format == "dot":
        out.write(eggbox_dot(s, g))
    else:
        _emit(out, g.eggbox.to_json())


def cmd_rees(args, stdin, out):
    s = _load(args, stdin)
    members = _index_list(args.coideal)
    if any(not 0 <= i < s.n for i in members):
        raise UsageError("co-ideal index out of range")
    res = rees_factor(s, FiniteSubset.from_indices(s.n, members))
    compact, reps = collapse(res.Q)
    _emit(out, {
        "coideal": members,
        "ideal": res.ideal.indices(),
        "kappa": _rel_json(res.kappa),
        "rees_congruence": _rel_json(res.rees_congruence),
        "representatives": reps,
        "factor": emit_sgap(SgapDocument.from_semigroup(compact, "rees factor")),
    })


def cmd_monogenic(args, stdin, out):
    s = _load(args, stdin)
    if not 0 <= args.element < s.n:
        raise UsageError(f"element {args.element} out of range")
    data = index_period(s, args.element)
    _emit(out, {"element": args.element, "index": data.index, "period": data.period,
                "idempotent_power": data.idempotent_power, "orbit": data.orbit})


def cmd_free(args, stdin, out):
    s = _load(args, stdin)
    f = _index_list(args.map)
    gens = FiniteSetoid.discrete(len(f))
    if args.word:
        try:
            words = [Word(_index_list(w), gens) for w in args.word]
        except SgapError as exc:
            raise UsageError(str(exc)) from None
    else:
        words = all_words(gens, args.max_length)
    values = extend_morphism(f, words, s)
    _emit(out, {"map": f, "words": [{"word": str(w), "letters": list(w.letters), "value": v}
                                    for w, v in zip(words, values)]})


def cmd_gen(args, stdin, out):
    try:
        doc = generate_family(args.family)
    except SgapError as exc:
        raise UsageError(str(exc)) from None
    text = emit_sgap(doc)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_oracle(args, stdin, out):
    from .acceptance import SUITES, run_suite, suite_names

    if args.list:
        for name in suite_names():
            out.write(f"{SUITES[name][0]:2d} {name}\n")
        return 0
    if args.check == "all":
        names = suite_names(13)
    elif args.check in SUITES:
        names = [args.check]
    else:
        raise UsageError(f"unknown check {args.check!r}; try --list")
    ok = True
    for name in names:
        res = run_suite(name)
        out.write(res.line() + "\n")
        out.flush()
        ok &= res.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgap", description="Finite semigroups with apartness.")
    sub = p.add_subparsers(dest="command", required=True)

    def doc_cmd(name, func, help_text, file_optional=False):
        sp = sub.add_parser(name, help=help_text)
        if file_optional:
            sp.add_argument("file", nargs="?", help="a .sgap document, or - for stdin")
        else:
            sp.add_argument("file", help="a .sgap document, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    doc_cmd("validate", cmd_validate, "check a document")
    doc_cmd("classify", cmd_classify, "classify a relation, or the apartness").add_argument("--rel")
    sp = doc_cmd("kernel", cmd_kernel, "kernel of a relation", file_optional=True)
    sp.add_argument("--kind", choices=["cotransitive", "coequivalence", "cocongruence"],
                    default="cotransitive")
    sp.add_argument("--rel")
    sp.add_argument("--hamming", type=int, metavar="K", help="use the distance >= 2 relation on {0,1}^K")
    sp = doc_cmd("closure", cmd_closure, "closure of a relation")
    sp.add_argument("--kind", choices=["transitive", "equivalence", "compatible", "congruence"],
                    default="congruence")
    sp.add_argument("--rel", required=True)
    doc_cmd("green", cmd_green, "classical Green relations")
    doc_cmd("cogreen", cmd_cogreen, "co-Green relations")
    doc_cmd("eggbox", cmd_eggbox, "egg-box diagram").add_argument(
        "--format", choices=["json", "dot"], default="json")
    doc_cmd("rees", cmd_rees, "Rees factor by a co-ideal").add_argument("--coideal", required=True)
    doc_cmd("monogenic", cmd_monogenic, "index and period of an element").add_argument(
        "--element", type=int, required=True)
    sp = doc_cmd("free", cmd_free, "extend a generator map to words")
    sp.add_argument("--map", required=True, help="images of the generators, e.g. 0,1")
    sp.add_argument("--word", action="append", help="a word as letter indices, e.g. 0,1,0")
    sp.add_argument("--max-length", type=int, default=4)
    sp = sub.add_parser("gen", help="write a built-in family")
    sp.add_argument("--family", required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)
    sp = sub.add_parser("oracle", help="run acceptance sweeps")
    sp.add_argument("--check", default="all")
    sp.add_argument("--list", action="store_true")
    sp.set_defaults(func=cmd_oracle)
    return p


def run_cli(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = args.func(args, stdin, out)
    except UsageError as exc:
        err.write(f"sgap: {exc}\n")
        return 2
    except (ValidationError, SgapSyntaxError, PreconditionError, SgapError) as exc:
        err.write(f"sgap: {type(exc).__name__}: {exc}\n")
        return 1
    return status or 0


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
