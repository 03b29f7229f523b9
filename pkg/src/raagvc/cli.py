"""``raagvc`` command line.

Exit codes: 0 success, 1 negative answer (words not conjugate), 2 usage or
parse error, 3 verification failure, 4 search budget exhausted, 5 automorphism
not vertex-conjugating, 6 input map is not an automorphism.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import factorization, presentation
from .autos import first_non_conjugate_vertex, is_vertex_conjugating, parse_endo
from .errors import BudgetExceeded, NotAnAutomorphism, NotVertexConjugating, ParseError, UnknownVertexError
from .graph import Graph, parse_graph
from .whitehead import one_term_generators
from .words import are_conjugate, cyclic_normal_form, format_word, normal_form, parse_word

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4
EXIT_NOT_IN_H = 5
EXIT_NOT_AUTO = 6


def _set(G: Graph, names) -> str:
    order = sorted(names, key=G.index.__getitem__)
    return "{" + ",".join(order) + "}"


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def cmd_info(args) -> int:
    G = _load_graph(args.graph)
    print(str(G), end="")
    for v in G.vertices:
        print(f"lk({v}) = {_set(G, G.link(v))}  st({v}) = {_set(G, G.star(v))}")
    dom = [f"{v}>={w}" for v in G.vertices for w in G.vertices if v != w and G.dominates(v, w)]
    print("domination: " + (" ".join(dom) if dom else "none"))
    print(f"center: {_set(G, G.center_vertices())}")
    gp = G.gamma_prime()
    print("gamma': " + str(gp).replace("\n", "; ").rstrip("; "))
    print(f"graph automorphisms: {len(G.graph_automorphisms())}")
    return EXIT_OK


def cmd_gens(args) -> int:
    G = _load_graph(args.graph)
    table = factorization.GeneratorTable(G)
    names = [pc.name(G) for pc in one_term_generators(G)] if args.one_term else table.names
    for name in names:
        print(name)
    return EXIT_OK


def cmd_present(args) -> int:
    G = _load_graph(args.graph)
    P = presentation.build_presentation(G)
    report = P.verify() if args.verify else None
    text = presentation.export(P, args.format)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(f"wrote {args.format} presentation to {args.out}")
        print(f"generators: {len(P.table)}  relators: {len(P.relations)}")
    else:
        print(text)
    if report is not None:
        print(report.summary(), file=sys.stderr)
        for r in report.failures:
            print(f"FAILED {r.family}: {presentation.relator_text(P.table, r.relator)}", file=sys.stderr)
        if not report.ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_nf(args) -> int:
    G = _load_graph(args.graph)
    print(format_word(G, normal_form(G, parse_word(G, args.word))))
    return EXIT_OK


def cmd_conj(args) -> int:
    G = _load_graph(args.graph)
    u, v = parse_word(G, args.u), parse_word(G, args.v)
    cu, cv = cyclic_normal_form(G, u), cyclic_normal_form(G, v)
    verdict = are_conjugate(G, u, v)
    print(f"cyclic form 1: {format_word(G, cu)}")
    print(f"cyclic form 2: {format_word(G, cv)}")
    print(f"conjugate: {'true' if verdict else 'false'}")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_check_vc(args) -> int:
    G = _load_graph(args.graph)
    f = parse_endo(G, Path(args.auto).read_text(encoding="utf-8"))
    witness = is_vertex_conjugating(G, f)
    if witness is None:
        print(f"vertex-conjugating: no (vertex {first_non_conjugate_vertex(G, f)})")
        return EXIT_NOT_IN_H
    print("vertex-conjugating: yes")
    for i, w in enumerate(witness.conjugators):
        print(f"w_{G.vertices[i]} = {format_word(G, w)}")
    return EXIT_OK


def cmd_factor(args) -> int:
    G = _load_graph(args.graph)
    f = parse_endo(G, Path(args.auto).read_text(encoding="utf-8"))
    table = factorization.GeneratorTable(G)
    word = factorization.factor(G, f, max_states=args.budget, max_length=args.max_length, table=table)
    print(table.format(word))
    if args.oracle_depth is not None:
        found = factorization.oracle_bfs(G, f, args.oracle_depth, table)
        if found is None:
            print(f"oracle: no S-word of length <= {args.oracle_depth}")
        else:
            same = factorization.evaluate(G, found, table) == factorization.evaluate(G, word, table)
            print(f"oracle: {table.format(found)}")
            if not same:
                print("oracle disagrees with factorization", file=sys.stderr)
                return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="raagvc", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="graph data: links, stars, domination, center")
    s.add_argument("graph")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("gens", help="list the partial conjugations")
    s.add_argument("graph")
    s.add_argument("--one-term", action="store_true", help="only c[x|{y}] generators")
    s.set_defaults(func=cmd_gens)

    s = sub.add_parser("present", help="export the presentation <S | R>")
    s.add_argument("graph")
    s.add_argument("--format", choices=("plain", "structured"), default="plain")
    s.add_argument("--verify", action="store_true", help="check every relation; exit 3 on failure")
    s.add_argument("--out", help="write the export to this path")
    s.set_defaults(func=cmd_present)

    s = sub.add_parser("nf", help="normal form of a word")
    s.add_argument("graph")
    s.add_argument("word")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("conj", help="decide conjugacy of two words")
    s.add_argument("graph")
    s.add_argument("u")
    s.add_argument("v")
    s.set_defaults(func=cmd_conj)

    s = sub.add_parser("check-vc", help="decide whether an automorphism is vertex-conjugating")
    s.add_argument("graph")
    s.add_argument("auto")
    s.set_defaults(func=cmd_check_vc)

    s = sub.add_parser("factor", help="write a vertex-conjugating automorphism in the generators")
    s.add_argument("graph")
    s.add_argument("auto")
    s.add_argument("--budget", type=int, default=factorization.DEFAULT_MAX_STATES,
                   help="state cap for the fallback search")
    s.add_argument("--max-length", type=int, default=factorization.DEFAULT_MAX_LENGTH,
                   help="word-length cap for the fallback search")
    s.add_argument("--oracle-depth", type=int, help="cross-check with exhaustive search to this depth")
    s.set_defaults(func=cmd_factor)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownVertexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotVertexConjugating as exc:
        print(f"not vertex-conjugating: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_H
    except NotAnAutomorphism as exc:
        print(f"not an automorphism: {exc}", file=sys.stderr)
        return EXIT_NOT_AUTO


if __name__ == "__main__":
    sys.exit(main())
