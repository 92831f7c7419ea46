"""Command-line surface.

Every subcommand reads a presentation via ``-p``, emits its answer on
stdout and diagnostics on stderr.  Exit codes: 0 success, 1 computed
negative answer, 2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileio
from .errors import (
    CosetLimitExceeded,
    FulfillmentFailed,
    GluingInvalid,
    ParseError,
    SearchBudgetExceeded,
    StallingsError,
)
from .words import Presentation, Word
from .xgraph import BasedXGraph
from .subgroup import (
    SubgroupGraph,
    coset_enumerate,
    default_max_cosets,
    subgroup_from_graph,
)
from .products import ProductGraph, coset_meet, intersect, is_malnormal
from .enumerator import EnumerationTask, enumerate_graphs, hall_search
from . import families

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_presentation(path: str) -> Presentation:
    return fileio.parse_presentation(Path(path).read_text())


def _load_subgroup(path: str, pres: Presentation) -> SubgroupGraph:
    g = fileio.parse_graph(Path(path).read_text(), pres.alphabet)
    return subgroup_from_graph(g, pres)


def _write_dot(args, graph: BasedXGraph) -> None:
    if getattr(args, "dot", None):
        Path(args.dot).write_text(fileio.export_dot(graph))


def _fmt(pres: Presentation, w: Word) -> str:
    return pres.alphabet.format_word(w)


def cmd_build(args, pres):
    gens = [pres.word(t) for t in args.generators]
    sg = coset_enumerate(pres, gens, max_cosets=args.max_cosets)
    print(fileio.serialize_graph(sg.graph), end="")
    _write_dot(args, sg.graph)
    return EXIT_OK


def cmd_verify(args, pres):
    try:
        sg = _load_subgroup(args.graphfile, pres)
    except (ValueError, FulfillmentFailed) as e:
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    print(f"valid subgroup graph of index {sg.index()}")
    return EXIT_OK


def cmd_index(args, pres):
    print(_load_subgroup(args.graphfile, pres).index())
    return EXIT_OK


def cmd_cosets(args, pres):
    sg = _load_subgroup(args.graphfile, pres)
    for v, rep in enumerate(sg.coset_reps):
        print(f"{v}\t{_fmt(pres, rep)}")
    return EXIT_OK


def cmd_membership(args, pres):
    sg = _load_subgroup(args.graphfile, pres)
    if sg.contains(pres.word(args.word)):
        print("member")
        return EXIT_OK
    print("not a member")
    return EXIT_NEGATIVE


def cmd_basis(args, pres):
    sg = _load_subgroup(args.graphfile, pres)
    for w in sg.free_basis():
        print(_fmt(pres, w))
    return EXIT_OK


def cmd_conjugate(args, pres):
    sg1 = _load_subgroup(args.graphfile1, pres)
    sg2 = _load_subgroup(args.graphfile2, pres)
    g = sg1.conjugate(sg2)
    if g is None:
        print("not conjugate")
        return EXIT_NEGATIVE
    print(_fmt(pres, g))
    return EXIT_OK


def cmd_normal(args, pres):
    sg = _load_subgroup(args.graphfile, pres)
    if sg.is_normal():
        print("normal")
        return EXIT_OK
    print("not normal")
    return EXIT_NEGATIVE


def cmd_normalizer(args, pres):
    sg = _load_subgroup(args.graphfile, pres)
    reps, nsg = sg.normalizer()
    print("coset representatives over the subgroup:")
    for rep in reps:
        print(f"  {_fmt(pres, rep)}")
    print(f"normalizer index: {nsg.index()}")
    print(fileio.serialize_graph(nsg.graph), end="")
    _write_dot(args, nsg.graph)
    return EXIT_OK


def cmd_intersect(args, pres):
    sg1 = _load_subgroup(args.graphfile1, pres)
    sg2 = _load_subgroup(args.graphfile2, pres)
    meet = intersect(sg1, sg2)
    print(fileio.serialize_graph(meet.graph), end="")
    _write_dot(args, meet.graph)
    return EXIT_OK


def cmd_coset_meet(args, pres):
    sg1 = _load_subgroup(args.graphfile1, pres)
    sg2 = _load_subgroup(args.graphfile2, pres)
    pg = ProductGraph(sg1, sg2)
    word = coset_meet(pg, args.vertex1, args.vertex2)
    if word is None:
        print("empty intersection")
        return EXIT_NEGATIVE
    print(_fmt(pres, word))
    return EXIT_OK


def cmd_malnormal(args, pres):
    sg = _load_subgroup(args.graphfile, pres)
    if is_malnormal(sg, args.order):
        print("malnormal")
        return EXIT_OK
    print("not malnormal")
    return EXIT_NEGATIVE


def cmd_hall(args, pres):
    witness = hall_search(pres, args.order, args.d)
    if witness is None:
        print("no Hall subgroup of that order")
        return EXIT_NEGATIVE
    print(fileio.serialize_graph(witness.graph), end="")
    _write_dot(args, witness.graph)
    return EXIT_OK


def cmd_enumerate(args, pres):
    task = EnumerationTask(pres, args.n, mode=args.mode)
    found = enumerate_graphs(task)
    print(f"{len(found)} {args.mode} classes with {args.n} vertices")
    for i, sg in enumerate(found):
        print(f"# class {i}")
        print(fileio.serialize_graph(sg.graph), end="")
    return EXIT_OK


def _print_certificate(pres_out: Presentation, cert) -> None:
    print(f"vertices: {cert.vertex_count}")
    print(f"word: {pres_out.alphabet.format_word(cert.word)}")
    print(f"prime: {'yes' if families.is_prime(cert.vertex_count) else 'no'}")
    print(fileio.serialize_graph(cert.graph.graph), end="")


def cmd_gamma(args, pres):
    if args.family == "type1":
        cert = families.build_type1(pres, pres.alphabet.index(args.letter), args.p)
    elif args.family == "artin":
        li = pres.alphabet.index(args.letter) if args.letter else 0
        cert = families.build_parallel_circles(pres, args.p, li)
    elif args.family == "type2":
        cert = families.build_type2(
            pres,
            pres.alphabet.index(args.a), args.k,
            pres.alphabet.index(args.b), args.l,
            args.pairs,
        )
    else:  # glued or amalgam; the factors carry their own presentations
        left_pres = _load_presentation(args.left_pres)
        right_pres = _load_presentation(args.right_pres)
        spec = families.GluingSpec(
            _load_subgroup(args.left_graph, left_pres),
            left_pres.word(args.left_word),
            _load_subgroup(args.right_graph, right_pres),
            right_pres.word(args.right_word),
            args.pairs,
        )
        if args.family == "glued":
            cert = families.build_glued(spec)
        else:
            pairs = []
            for ident in args.identify or []:
                if "=" not in ident:
                    raise ParseError(f"bad identification (want d=psi): {ident!r}")
                d_text, psi_text = ident.split("=", 1)
                pairs.append((left_pres.word(d_text), right_pres.word(psi_text)))
            cert = families.build_amalgam(spec, pairs)
    _print_certificate(cert.presentation(), cert)
    _write_dot(args, cert.graph.graph)
    return EXIT_OK


def cmd_certify(args, pres):
    g = fileio.parse_graph(Path(args.graphfile).read_text(), pres.alphabet)
    sg = subgroup_from_graph(g, pres)
    w = pres.word(args.word)
    ok, orbit = families.verify_reachability(sg.graph, w)
    if not ok:
        print("reachability fails", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.prime is not None and sg.index() != args.prime:
        print(f"vertex count {sg.index()} != {args.prime}", file=sys.stderr)
        return EXIT_NEGATIVE
    print(f"certificate ok: {sg.index()} vertices, orbit {list(orbit)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stallings",
        description="Subgroup graphs of finitely presented groups",
    )
    parser.add_argument("-p", "--presentation", required=True,
                        help="presentation file")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("build", cmd_build, help="coset-enumerate a subgroup")
    p.add_argument("-g", "--generator", dest="generators", action="append",
                   default=[], help="subgroup generator word (repeatable)")
    p.add_argument("--max-cosets", type=int, default=default_max_cosets())
    p.add_argument("--dot")

    p = add("verify", cmd_verify, help="check a graph file is a subgroup graph")
    p.add_argument("graphfile")

    p = add("index", cmd_index, help="index of the subgroup")
    p.add_argument("graphfile")

    p = add("cosets", cmd_cosets, help="coset representatives")
    p.add_argument("graphfile")

    p = add("membership", cmd_membership, help="test membership of a word")
    p.add_argument("graphfile")
    p.add_argument("word")

    p = add("basis", cmd_basis, help="free basis of the loop language")
    p.add_argument("graphfile")

    p = add("conjugate", cmd_conjugate, help="conjugacy of two subgroups")
    p.add_argument("graphfile1")
    p.add_argument("graphfile2")

    p = add("normal", cmd_normal, help="normality test")
    p.add_argument("graphfile")

    p = add("normalizer", cmd_normalizer, help="normalizer of the subgroup")
    p.add_argument("graphfile")
    p.add_argument("--dot")

    p = add("intersect", cmd_intersect, help="intersection of two subgroups")
    p.add_argument("graphfile1")
    p.add_argument("graphfile2")
    p.add_argument("--dot")

    p = add("coset-meet", cmd_coset_meet, help="intersection of two cosets")
    p.add_argument("graphfile1")
    p.add_argument("graphfile2")
    p.add_argument("vertex1", type=int)
    p.add_argument("vertex2", type=int)

    p = add("malnormal", cmd_malnormal, help="malnormality in a finite group")
    p.add_argument("graphfile")
    p.add_argument("--order", type=int, required=True, help="group order")

    p = add("hall", cmd_hall, help="search for a Hall subgroup")
    p.add_argument("--order", type=int, required=True, help="group order")
    p.add_argument("--d", type=int, required=True, help="subgroup order")
    p.add_argument("--dot")

    p = add("enumerate", cmd_enumerate, help="enumerate fulfilling graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("based", "unbased"), default="based")

    p = add("gamma", cmd_gamma, help="build a certificate graph family member")
    p.add_argument("family", choices=("type1", "artin", "type2", "glued", "amalgam"))
    p.add_argument("--letter", help="circle letter (type1/artin)")
    p.add_argument("--p", type=int, help="circle length (type1/artin)")
    p.add_argument("--a", help="first circle letter (type2)")
    p.add_argument("--k", type=int, help="first circle length (type2)")
    p.add_argument("--b", help="second circle letter (type2)")
    p.add_argument("--l", type=int, help="second circle length (type2)")
    p.add_argument("--pairs", type=int, help="number of circle/copy pairs")
    p.add_argument("--left-pres")
    p.add_argument("--left-graph")
    p.add_argument("--left-word")
    p.add_argument("--right-pres")
    p.add_argument("--right-graph")
    p.add_argument("--right-word")
    p.add_argument("--identify", action="append",
                   help="amalgam identification d=psi(d) (repeatable)")
    p.add_argument("--dot")

    p = add("certify", cmd_certify, help="verify the sweep property of a graph")
    p.add_argument("graphfile")
    p.add_argument("--word", required=True)
    p.add_argument("--prime", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        pres = _load_presentation(args.presentation)
        return args.fn(args, pres)
    except (ParseError, OSError, argparse.ArgumentError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CosetLimitExceeded, SearchBudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (FulfillmentFailed, GluingInvalid) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (StallingsError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
