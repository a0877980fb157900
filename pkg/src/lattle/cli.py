"""Command-line front end: ``lattle analyze|laws|search|corpus``.

Exit codes: 0 success, 1 usage, 2 unreadable input, 3 not a lattice,
4 a law failed without a documented counterexample, 5 a search for a law
id found a counterexample.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import corpus
from .errors import (
    LatticeError,
    LattleError,
    ParseError,
    QuerySyntaxError,
    SizeCapExceeded,
    SpecError,
    UnknownKey,
    UnknownLaw,
    UnknownPredicate,
)
from .lattice import Lattice, build_lattice
from .laws import FAILS, SubsetUniverse, check_all, law_catalog, lookup
from .report import analyze, dumps, filter_label, render_dot, render_text, spec_dict, verdict_line
from .search import search

log = logging.getLogger("lattle")

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_LATTICE, EXIT_LAW_FAILED, EXIT_FOUND = range(6)


class UsageError(LattleError):
    pass


def _color() -> bool:
    return os.environ.get("LATTLE_COLOR", "0") == "1"


def load_lattice(source: str) -> Lattice:
    """A corpus key, a path to a JSON description, or ``-`` for stdin."""
    if source in corpus.builtin_keys():
        return corpus.builtin(source).lattice()
    if source == "-":
        spec = corpus.parse(sys.stdin.read())
    else:
        try:
            spec = corpus.load(source)
        except FileNotFoundError:
            raise UsageError(f"{source}: neither a corpus key nor a readable file") from None
    return build_lattice(spec)


def _universe(args) -> SubsetUniverse:
    return SubsetUniverse(args.universe or "auto")


# -- subcommands -------------------------------------------------------------


def cmd_analyze(args) -> int:
    L = load_lattice(args.input)
    if args.format == "dot":
        sys.stdout.write(render_dot(L))
        return EXIT_OK
    doc = analyze(L, _universe(args), laws=not args.no_laws)
    sys.stdout.write(dumps(doc) if args.format == "json" else render_text(L, doc))
    return EXIT_OK


def cmd_laws(args) -> int:
    ids = args.law or [law.id for law in law_catalog()]
    for i in ids:
        lookup(i)
    lattices = [load_lattice(s) for s in args.inputs]
    universe = _universe(args)
    status = EXIT_OK
    docs = []
    for L in lattices:
        verdicts = check_all(L, universe, ids)
        for v in verdicts:
            if v.status == FAILS:
                law = lookup(v.law)
                if law.refuted:
                    log.info("%s fails on %s as documented: %s", v.law, L.name, law.refuted)
                else:
                    status = EXIT_LAW_FAILED
        if args.format == "json":
            docs.append({"lattice": L.name, "verdicts": [v.to_json() for v in verdicts]})
        else:
            for v in verdicts:
                print(verdict_line(L, v, _color()))
    if args.format == "json":
        sys.stdout.write(dumps(docs))
    return status


def cmd_search(args) -> int:
    is_law = True
    try:
        lookup(args.target)
    except UnknownLaw:
        is_law = False
    if args.mode == "exhaustive" and args.max_size > corpus.SOFT_CAP and not args.allow_large:
        raise SizeCapExceeded(
            f"exhaustive search above {corpus.SOFT_CAP} elements needs --allow-large"
        )
    result = search(
        args.target,
        args.max_size,
        mode=args.mode,
        seed=args.seed,
        budget=args.budget,
        universe=_universe(args),
        jobs=args.jobs,
    )
    hit = result.hit
    if args.format == "json":
        doc = {
            "target": result.target,
            "mode": result.mode,
            "max_size": args.max_size,
            "examined": result.examined,
            "found": hit is not None,
        }
        if hit is not None:
            doc["lattice"] = spec_dict(hit.lattice)
            if hit.verdict is not None:
                doc["verdict"] = hit.verdict.to_json()
            if hit.filter is not None:
                doc["filter"] = filter_label(hit.lattice, hit.filter)
        sys.stdout.write(dumps(doc))
    elif hit is None:
        print(f"none (examined {result.examined} lattices)")
    elif args.format == "dot":
        sys.stdout.write(render_dot(hit.lattice, hit.filter))
    else:
        L = hit.lattice
        print(f"found {L.name} ({L.n} elements) after {result.examined} lattices")
        if hit.filter is not None:
            print(f"filter: {filter_label(L, hit.filter)}")
        if hit.verdict is not None:
            print(verdict_line(L, hit.verdict))
        sys.stdout.write(corpus.serialize(L.to_spec()))
        sys.stdout.write(render_dot(L, hit.filter))
    if hit is not None and is_law:
        return EXIT_FOUND
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.action == "list":
        keys = corpus.builtin_keys()
        if args.format == "json":
            sys.stdout.write(dumps([{"key": k, "size": len(corpus.builtin(k).spec.elements)} for k in keys]))
        else:
            for k in keys:
                print(f"{k}  {len(corpus.builtin(k).spec.elements)}")
        return EXIT_OK
    if not args.key:
        raise UsageError(f"corpus {args.action} needs a key")
    entry = corpus.builtin(args.key)
    if args.action == "show":
        if args.format == "json":
            sys.stdout.write(corpus.serialize(entry.spec))
        elif args.format == "dot":
            sys.stdout.write(render_dot(entry.lattice()))
        else:
            print(f"{entry.key}: {' '.join(entry.spec.elements)}")
            for lo, hi in entry.spec.covers:
                print(f"  {lo}-{hi}")
            for note in entry.notes:
                print(f"  note: {note}")
            for e in entry.errata:
                where = f" at {e.element}" if e.element else ""
                print(f"  erratum {e.table}{where}: printed {e.printed}, corrected {e.corrected}")
        return EXIT_OK
    if not args.path:
        raise UsageError("corpus export needs a path")
    with open(args.path, "w", encoding="utf-8") as f:
        f.write(corpus.serialize(entry.spec))
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument(
        "--universe", choices=("singletons", "pairs", "filters", "powerset"),
        help="subsets that set-quantified laws range over (default: powerset up to 8 "
        "elements, principal filters above)",
    )
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="lattle", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="operator tables and filter classes")
    a.add_argument("input", help="corpus key, JSON file, or - for stdin")
    a.add_argument("--no-laws", action="store_true", help="skip the law summary")
    a.set_defaults(func=cmd_analyze)

    w = sub.add_parser("laws", parents=[common], help="check the law catalog")
    w.add_argument("inputs", nargs="+")
    w.add_argument("--law", action="append", help="restrict to this law id (repeatable)")
    w.set_defaults(func=cmd_laws)

    s = sub.add_parser("search", parents=[common], help="search small lattices")
    s.add_argument("target", help='a law id, or a query such as "cond1 & !cond2"')
    s.add_argument("--max-size", type=int, default=7)
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=1000, help="lattices drawn in random mode")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--allow-large", action="store_true")
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("corpus", parents=[common], help="built-in example lattices")
    c.add_argument("action", choices=("list", "show", "export"))
    c.add_argument("key", nargs="?")
    c.add_argument("path", nargs="?")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s"
    )
    if getattr(args, "max_size", 2) < 2:
        print("error: --max-size must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, SpecError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except LatticeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LATTICE
    except (
        UsageError, UnknownKey, UnknownLaw, UnknownPredicate, QuerySyntaxError, SizeCapExceeded
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
