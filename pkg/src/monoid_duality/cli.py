"""Command line interface.

Exit codes: 0 ok, 1 invalid input, 2 a duality identity failed (a bug in this
package, never a user error), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .dual import compute_dual
from .errors import DualityViolation, MonoidError
from .fileformat import dumps_dual, dumps_monoid, parse_monoid_text
from .invariants import invariant_problems
from .monoid import (
    clifford_decomposition,
    idempotents,
    is_abelian,
    is_clifford,
    is_inverse_semigroup,
)
from .reflexivity import check_reflexive, delta

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    S = parse_monoid_text(_read(args.file))
    print(f"valid monoid: {len(S)} elements, unit {S.elements[S.unit]}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    S = parse_monoid_text(_read(args.file))
    lab = S.elements
    abelian, inverse = is_abelian(S), is_inverse_semigroup(S)
    clifford = inverse and is_clifford(S)
    info = {
        "size": len(S),
        "abelian": abelian,
        "inverse": inverse,
        "clifford": clifford,
        "idempotents": [lab[e] for e in idempotents(S)],
    }
    if clifford:
        dec = clifford_decomposition(S)
        info["hasse"] = [[lab[e], lab[f]] for e, f in dec.hasse()]
        info["maximal_subgroups"] = {lab[e]: [lab[x] for x in dec.groups[e]] for e in dec.idempotents}
        info["retraction"] = {lab[x]: lab[dec.pi[x]] for x in range(len(S))}
    for key in ("size", "abelian", "inverse", "clifford"):
        print(f"{key}: {info[key]}")
    print("idempotents: " + " ".join(info["idempotents"]))
    if clifford:
        print("hasse (lower < upper): " + ", ".join(f"{a}<{b}" for a, b in info["hasse"]))
        for e, members in info["maximal_subgroups"].items():
            print(f"H[{e}] = {{{', '.join(members)}}}")
        print("pi: " + ", ".join(f"{x}->{e}" for x, e in info["retraction"].items()))
    print(json.dumps(info, ensure_ascii=False))
    return EXIT_OK


def cmd_dual(args) -> int:
    S = parse_monoid_text(_read(args.file))
    D = compute_dual(S, method=args.method)
    _emit(dumps_dual(D), args.output)
    return EXIT_OK


def bidual_document(S) -> str:
    D = compute_dual(S)
    B = compute_dual(D.base)
    d = delta(S, D, B)
    return dumps_dual(B, extra={"delta": {S.elements[x]: B.base.elements[y] for x, y in enumerate(d.map)}})


def cmd_bidual(args) -> int:
    S = parse_monoid_text(_read(args.file))
    _emit(bidual_document(S), args.output)
    return EXIT_OK


def cmd_reflexivity(args) -> int:
    S = parse_monoid_text(_read(args.file))
    r = check_reflexive(S)
    print(f"sizes: |S|={r.monoid_size} |S^⊙|={r.dual_size} |S^⊙⊙|={r.bidual_size}")
    print(f"delta injective: {r.is_injective}" + (f" ({r.separation})" if r.separation else ""))
    print(f"delta surjective: {r.is_surjective}")
    print("verdict: " + ("reflexive" if r.verdict else "not reflexive"))
    print("predicted: " + ("reflexive" if r.predicted else f"not reflexive ({r.reason})"))
    print(json.dumps(r.to_dict(), ensure_ascii=False, sort_keys=False))
    if not r.consistent:
        print("error: verdict disagrees with the structural prediction", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _build_corpus(name: str, params: list[str]):
    if name == "strong_semilattice":
        examples = corpus.strong_semilattice_examples()
        if len(params) != 1 or params[0] not in examples:
            raise UsageError(f"strong_semilattice takes one of: {', '.join(examples)}")
        return examples[params[0]]
    if name not in corpus.GENERATORS:
        raise UsageError(f"unknown generator {name!r}; choose from {', '.join(sorted(corpus.GENERATORS))}, strong_semilattice, all")
    try:
        ints = [int(p) for p in params]
    except ValueError:
        raise UsageError("generator arguments must be integers") from None
    if len(ints) != 1:
        raise UsageError(f"{name} takes exactly one integer argument")
    return corpus.GENERATORS[name](*ints)


def _file_name(name: str) -> str:
    keep = "".join(c if c.isalnum() or c in "_-" else "_" for c in name)
    return keep.strip("_") + ".json"


def cmd_corpus(args) -> int:
    if args.name == "all":
        if not args.output:
            raise UsageError("corpus all needs -o DIR")
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for name, S in corpus.standard_corpus().items():
            (out / _file_name(name)).write_text(dumps_monoid(S))
        return EXIT_OK
    _emit(dumps_monoid(_build_corpus(args.name, args.params)), args.output)
    return EXIT_OK


def cmd_check_all(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    status = EXIT_OK
    for path in sorted(root.glob("*.json")):
        try:
            S = parse_monoid_text(path.read_text())
        except MonoidError as exc:
            print(f"INVALID {path.name}: {exc}")
            status = max(status, EXIT_INVALID)
            continue
        problems = invariant_problems(S)
        if problems:
            status = EXIT_VIOLATION
            print(f"FAIL {path.name}: " + "; ".join(problems))
        else:
            print(f"ok   {path.name} ({len(S)} elements)")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="monoid-duality", description="Duality of finite monoids into the dotted circle.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def with_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", nargs="?", default="-", help="monoid JSON file, '-' for stdin")
        sp.set_defaults(func=func)
        return sp

    with_file("validate", cmd_validate, "check the monoid axioms")
    with_file("analyze", cmd_analyze, "classify and decompose")
    sp = with_file("dual", cmd_dual, "compute the dual inverse monoid")
    sp.add_argument("--method", choices=("auto", "brute", "clifford"), default="auto")
    sp.add_argument("-o", "--output")
    sp = with_file("bidual", cmd_bidual, "second dual and the evaluation map")
    sp.add_argument("-o", "--output")
    with_file("reflexivity", cmd_reflexivity, "decide reflexivity")

    sp = sub.add_parser("corpus", help="emit a generated monoid")
    sp.add_argument("name")
    sp.add_argument("params", nargs="*")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_corpus)

    sp = sub.add_parser("check-all", help="run every invariant over a directory of monoid files")
    sp.add_argument("dir")
    sp.set_defaults(func=cmd_check_all)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (MonoidError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DualityViolation as exc:
        print(f"internal duality violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    raise SystemExit(main())
