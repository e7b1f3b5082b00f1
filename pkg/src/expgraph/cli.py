"""Batch command-line driver.

    expgraph <graph.net | directory> <ALGO> [--mode iterative] [--pair A B]
    expgraph gen <generator> <params...> [--seed S] [-o out.net]
    expgraph bmatrix <graph.net> [-o out.csv]

Exit codes: 0 success, 1 usage error, 2 I/O or parse error,
3 algorithm/graph mismatch.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from typing import Callable

from . import coloring, dfvs, generators, mis, mvc, separators
from .bmatrix import b_matrix
from .errors import (GraphError, InvalidParameter, ParseError, UnknownAcronym,
                     UnknownVertex, WrongDirectedness)
from .graph import Graph
from .io import read_net, write_net

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_MISMATCH = 0, 1, 2, 3


@dataclass
class Options:
    mode: str = "recursive"
    pair: tuple[str, str] | None = None


@dataclass
class RunReport:
    name: str | None
    vertex_count: int
    edge_count: int
    elapsed_ms: float
    result_size: int
    members: str

    def render(self) -> str:
        lines = [] if self.name is None else [self.name]
        lines += [
            f"V:{self.vertex_count} E:{self.edge_count}",
            f"{self.elapsed_ms:.1f} ms",
            f"Size: {self.result_size}",
            self.members,
        ]
        return "\n".join(lines)


def _render(g: Graph, value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render(g, x) for x in value) + "]"
    return g.label(value)


# each entry returns (size, members to render)
Bound = Callable[[Graph, Options], tuple[int, list]]


def _vertex_set(fn):
    def run(g, opts):
        found = fn(g)
        return len(found), found
    return run


def _cover(method):
    def run(g, opts):
        found = mvc.minimum_vertex_cover(g, method)
        return len(found), found
    return run


def _chromatic(g, opts):
    classes = coloring.graph_coloring(g)
    return len(classes), classes


def _moon_moser(g, opts):
    found = mis.mis_moon_moser(g, opts.mode)
    return len(found), found


def _separators(g, opts):
    if opts.pair is None:
        found = separators.get_all_minimal_separators(g)
    else:
        a, b = (g.find(label) for label in opts.pair)
        found = separators.get_ab_separators(g, a, b)
    return len(found), found


ALGORITHMS: dict[str, Bound] = {
    "CN": _chromatic,
    "MISBF": _vertex_set(mis.mis_brute_force),
    "MISMM": _moon_moser,
    "MISDegMax": _vertex_set(mis.mis_max_degree_branching),
    "MISFGK": _vertex_set(mis.mis_fgk),
    "MVCBF": _cover("brute_force"),
    "MVCBG": _cover("buss_goldsmith"),
    "MVCDBS": _cover("dbs"),
    "MVCN": _cover("niedermeier"),
    "DFVS": _vertex_set(dfvs.minimum_directed_fvs),
    "SEP": _separators,
}


def resolve(acronym: str) -> Bound:
    try:
        return ALGORITHMS[acronym]
    except KeyError:
        raise UnknownAcronym(
            f"unknown algorithm {acronym!r}; choose among {', '.join(ALGORITHMS)}"
        ) from None


def run_graph(g: Graph, acronym: str, opts: Options | None = None,
              name: str | None = None) -> RunReport:
    bound = resolve(acronym)
    opts = opts or Options()
    start = time.perf_counter()
    size, members = bound(g, opts)
    elapsed = (time.perf_counter() - start) * 1000.0
    return RunReport(name, len(g), g.number_of_edges(), elapsed, size, _render(g, members))


def _net_files(directory: str) -> list[str]:
    names = [f for f in os.listdir(directory)
             if f.lower().endswith(".net") and os.path.isfile(os.path.join(directory, f))]
    return sorted(names)


def _error_code(exc: BaseException) -> int:
    if isinstance(exc, (OSError, ParseError, UnicodeDecodeError)):
        return EXIT_IO
    if isinstance(exc, (WrongDirectedness, UnknownVertex, InvalidParameter)):
        return EXIT_MISMATCH
    return EXIT_MISMATCH


def _process(path: str, acronym: str, opts: Options, name: str | None, out) -> int:
    try:
        with open(path, "rb") as fh:
            g = read_net(fh.read())
        report = run_graph(g, acronym, opts, name)
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        return _error_code(exc)
    out.append(report.render())
    return EXIT_OK


def run(path: str, acronym: str, opts: Options | None = None, stdout=None) -> int:
    """Apply ``acronym`` to one .net file or every .net file of a directory."""
    stdout = stdout or sys.stdout
    opts = opts or Options()
    try:
        resolve(acronym)
    except UnknownAcronym as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    blocks: list[str] = []
    if os.path.isdir(path):
        names = _net_files(path)
        if not names:
            print(f"error: no .net files in {path}", file=sys.stderr)
            return EXIT_IO
        status = EXIT_OK
        for name in names:
            code = _process(os.path.join(path, name), acronym, opts, name, blocks)
            status = max(status, code)
    elif os.path.exists(path):
        status = _process(path, acronym, opts, None, blocks)
    else:
        print(f"error: no such file or directory: {path}", file=sys.stderr)
        return EXIT_IO
    if blocks:
        stdout.write("\n\n".join(blocks) + "\n")
    return status


# ---- auxiliary subcommands --------------------------------------------------

GENERATORS = {
    # name: (function, parameter converters, defaults for trailing parameters)
    "erdos_renyi": (generators.erdos_renyi, (int, float), ()),
    "barabasi_albert": (generators.barabasi_albert, (int, int, int), ()),
    "watts_strogatz": (generators.watts_strogatz, (int, int, float), ()),
    "kleinberg": (generators.kleinberg, (int, int, float), (2.0,)),
    "eppstein": (generators.eppstein_power_law, (int, int, int), (1000,)),
    "k_regular_random": (generators.k_regular_random, (int, int), ()),
    "grid": (generators.grid_2d, (int, int), ()),
    "ring": (generators.k_regular_ring, (int, int), ()),
}
_SEEDLESS = {"grid", "ring"}


def _write_output(text: str, target: str | None) -> None:
    if target is None or target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _gen_main(argv) -> int:
    parser = argparse.ArgumentParser(prog="expgraph gen",
                                     description="Write a generated graph as .net")
    parser.add_argument("generator", choices=sorted(GENERATORS))
    parser.add_argument("params", nargs="*")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-o", "--output")
    args = parser.parse_args(argv)
    fn, types, defaults = GENERATORS[args.generator]
    required = len(types) - len(defaults)
    if not required <= len(args.params) <= len(types):
        parser.error(f"{args.generator} takes {required} to {len(types)} parameters")
    try:
        values = [t(p) for t, p in zip(types, args.params)]
    except ValueError as exc:
        parser.error(str(exc))
    values += list(defaults[len(values) - required:])
    kwargs = {} if args.generator in _SEEDLESS else {"seed": args.seed}
    try:
        g = fn(*values, **kwargs)
        _write_output(write_net(g), args.output)
    except InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _bmatrix_main(argv) -> int:
    parser = argparse.ArgumentParser(prog="expgraph bmatrix",
                                     description="Write the B-matrix of a .net graph as CSV")
    parser.add_argument("graph")
    parser.add_argument("-o", "--output")
    args = parser.parse_args(argv)
    try:
        with open(args.graph, "rb") as fh:
            g = read_net(fh.read())
        _write_output(b_matrix(g).to_csv(), args.output)
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        print(f"{args.graph}: {exc}", file=sys.stderr)
        return _error_code(exc)
    return EXIT_OK


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if argv and argv[0] == "gen":
        return _gen_main(argv[1:])
    if argv and argv[0] == "bmatrix":
        return _bmatrix_main(argv[1:])
    parser = argparse.ArgumentParser(
        prog="expgraph",
        description="Run an exact graph algorithm on a .net file or a directory of them.",
        epilog=f"algorithms: {', '.join(ALGORITHMS)}; "
               "subcommands: 'gen' and 'bmatrix' (see 'expgraph gen -h').",
    )
    parser.add_argument("path", help=".net file or directory of .net files")
    parser.add_argument("algorithm", metavar="ALGO")
    parser.add_argument("--mode", choices=("recursive", "iterative"), default="recursive",
                        help="Moon-Moser variant used by MISMM")
    parser.add_argument("--pair", nargs=2, metavar=("A", "B"),
                        help="vertex labels: SEP lists only minimal A-B separators")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    opts = Options(mode=args.mode, pair=tuple(args.pair) if args.pair else None)
    return run(args.path, args.algorithm, opts)


if __name__ == "__main__":
    sys.exit(main())
