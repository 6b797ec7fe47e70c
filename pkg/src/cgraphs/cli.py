"""Command-line interface: ``cgraph <subcommand> ...``.

Exit status: 0 on success, 1 on a domain failure (no witness, no path, a
failed verification, a counterexample found), 2 on usage or parse errors.
``CGRAPH_SEARCH_LIMIT`` overrides the vertex limit for relabeling searches.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import apply, core, enumeration, iso, reconstruct, structure, textio
from .errors import CGraphError, ParseError


class _Failure(Exception):
    """Domain-level negative result: print what we have, exit 1."""


def _search_limit() -> int:
    raw = os.environ.get("CGRAPH_SEARCH_LIMIT")
    if raw is None:
        return iso.DEFAULT_SEARCH_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"CGRAPH_SEARCH_LIMIT={raw!r} is not an integer") from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> core.CGraph:
    text = _read_text(path)
    try:
        return textio.parse_cgraph(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split()]
    except ValueError:
        raise ParseError(f"expected space-separated integers, got {text!r}") from None


# each command returns the lines to print; raising _Failure sets exit status 1


def cmd_canon(args):
    return [str(iso.canonical_code(_load(args.file), args.limit))]


def cmd_iso(args):
    sigma = iso.cisomorphic(_load(args.file1), _load(args.file2), args.limit)
    if sigma is None:
        raise _Failure(["ABSENT"])
    return [str(sigma)]


def cmd_complement(args):
    g = _load(args.file)
    pi = core.ColorPermutation(tuple(_ints(args.perm)))
    return textio.format_cgraph(core.pi_complement(g, pi)).splitlines()


def cmd_decompose(args):
    g = _load(args.file)
    return textio.format_cgraph(core.monochromatic_component(g, args.color)).splitlines()


def cmd_components(args):
    return [" ".join(map(str, block)) for block in structure.components(_load(args.file))]


def cmd_kpath(args):
    path = structure.find_k_path(_load(args.file), args.k, args.s, args.t)
    if path is None:
        raise _Failure(["ABSENT"])
    return [" ".join(map(str, path.vertices))]


def cmd_kcycle(args):
    cycle = structure.find_k_cycle(_load(args.file), args.k)
    if cycle is None:
        raise _Failure(["ABSENT"])
    return [" ".join(map(str, cycle.vertices))]


def cmd_jconnected(args):
    return ["true" if structure.is_j_connected(_load(args.file), args.j) else "false"]


def cmd_count(args):
    return [str(enumeration.count_unlabeled(args.n, args.p))]


def cmd_series(args):
    return enumeration.configuration_series(args.n, args.p).lines()


def cmd_cycle_index(args):
    return enumeration.pair_group_cycle_index(args.n).lines()


def cmd_oracle(args):
    return [str(enumeration.burnside_oracle(args.n, args.p))]


def cmd_deck(args):
    g = _load(args.file)
    deck = reconstruct.edge_deck(g, args.limit) if args.edges else reconstruct.vertex_deck(g, args.limit)
    return deck.lines()


def cmd_recon_search(args):
    mode = reconstruct.EDGE if args.edges else reconstruct.VERTEX
    report = reconstruct.conjecture_search(args.n, args.p, mode)
    if report.found:
        raise _Failure(report.lines())
    return report.lines()


def cmd_assign(args):
    mat = textio.parse_matrix(_read_text(args.file))
    found = apply.find_assignments(apply.pad_to_square(mat), None if args.all else 1)
    if not found:
        raise _Failure(["NONE"])
    out = []
    for k, a in enumerate(found):
        if k:
            out.append("")
        out.extend(a.lines())
    return out


def cmd_plane(args):
    pk = apply.build_projective_plane(args.q)
    if args.verify:
        report = apply.verify_packing(pk)
        if not report.ok:
            raise _Failure(report.lines())
        return report.lines()
    return textio.format_packing(pk, args.p).splitlines()


def cmd_triangles(args):
    return [" ".join(map(str, apply.triangle_census(_load(args.file))))]


def _vector_line(v: core.CVector) -> str:
    return " ".join(map(str, v.entries))


def cmd_vec_add(args):
    u, w = (core.to_vector(_load(f)) for f in (args.file1, args.file2))
    return [_vector_line(core.vector_add(u, w))]


def cmd_vec_scale(args):
    g = _load(args.file)
    return [_vector_line(core.scalar_mul(args.c % g.p, core.to_vector(g)))]


def cmd_vec_classify(args):
    vg, w = (core.to_vector(_load(f)) for f in (args.file_g, args.file_w))
    return [core.classify_relative(vg, w).value]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cgraph", description="Colorful graphs over GF(p).")
    parser.add_argument("-o", "--output", default="-", help="write results here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.set_defaults(func=func)
        return sp

    add("canon", cmd_canon, "canonical code of a cgraph").add_argument("file")
    sp = add("iso", cmd_iso, "cisomorphism witness (image list) or ABSENT")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp = add("complement", cmd_complement, "pi-complement under a color permutation")
    sp.add_argument("file")
    sp.add_argument("--perm", required=True, help='image list, e.g. "0 2 1"')
    sp = add("decompose", cmd_decompose, "monochromatic subcgraph of one color")
    sp.add_argument("file")
    sp.add_argument("--color", type=int, required=True)
    add("components", cmd_components, "connected components, one per line").add_argument("file")
    sp = add("kpath", cmd_kpath, "shortest k-colored path from s to t")
    sp.add_argument("file")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-s", type=int, required=True)
    sp.add_argument("-t", type=int, required=True)
    sp = add("kcycle", cmd_kcycle, "shortest k-colored cycle")
    sp.add_argument("file")
    sp.add_argument("-k", type=int, required=True)
    sp = add("jconnected", cmd_jconnected, "whether every pair is joined by a j-colored path")
    sp.add_argument("file")
    sp.add_argument("-j", type=int, required=True)
    for name, func, text in [
        ("count", cmd_count, "number of unlabeled cgraphs on n vertices"),
        ("series", cmd_series, "configuration counting series, graded-lex lines 'coeff e1 ... e_{p-1}'"),
        ("oracle", cmd_oracle, "Burnside orbit count (independent check of count)"),
    ]:
        sp = add(name, func, text)
        sp.add_argument("-n", type=int, required=True)
        sp.add_argument("-p", type=int, required=True)
    add("cycle-index", cmd_cycle_index, "cycle index of the pair group R_n").add_argument("-n", type=int, required=True)
    sp = add("deck", cmd_deck, "vertex deck (or edge deck) card codes")
    sp.add_argument("file")
    sp.add_argument("--edges", action="store_true")
    sp = add("recon-search", cmd_recon_search, "search all classes on n vertices for deck collisions")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--edges", action="store_true")
    sp = add("assign", cmd_assign, "job assignments from a persons x jobs matrix")
    sp.add_argument("file")
    sp.add_argument("--all", action="store_true", help="list every assignment, not just the first")
    sp = add("plane", cmd_plane, "projective plane of prime order as a packing cgraph")
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("-p", type=int, default=None, help="field for the colors (default: least prime above q^2+q+1)")
    sp.add_argument("--verify", action="store_true")
    add("triangles", cmd_triangles, "triangle census: total monochromatic rainbow other").add_argument("file")

    vec = sub.add_parser("vec", help="vector-space operations on cgraph files")
    vsub = vec.add_subparsers(dest="vec_command", required=True, metavar="OP")
    sp = vsub.add_parser("add", help="componentwise sum mod p")
    sp.set_defaults(func=cmd_vec_add)
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp = vsub.add_parser("scale", help="scalar multiple mod p")
    sp.set_defaults(func=cmd_vec_scale)
    sp.add_argument("c", type=int)
    sp.add_argument("file")
    sp = vsub.add_parser("classify", help="subcgraph / supercgraph / both / neither")
    sp.set_defaults(func=cmd_vec_classify)
    sp.add_argument("file_g")
    sp.add_argument("file_w")
    return parser


def _emit(lines, output: str) -> None:
    text = "".join(line + "\n" for line in lines)
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.limit = _search_limit()
        lines = args.func(args)
        status = 0
    except _Failure as fail:
        lines, status = fail.args[0], 1
    except ParseError as exc:
        print(f"cgraph: {exc}", file=sys.stderr)
        return 2
    except CGraphError as exc:
        print(f"cgraph: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:  # malformed arguments such as a non-permutation --perm
        print(f"cgraph: {exc}", file=sys.stderr)
        return 2
    _emit(lines, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
