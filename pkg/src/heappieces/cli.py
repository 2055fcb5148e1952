"""Command-line surface: generate, enumerate, count, series, verify, gas, render.

Every subcommand is a thin adapter over the library with byte-stable
output.  Exit codes: 0 success, 1 verification failure, 2 usage error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import gas as gasmod
from .animals import (
    AnimalError,
    animal_count,
    animal_from_json,
    animal_to_json,
    enumerate_animals,
)
from .graphs import GraphError, parse_graph_literal
from .heaps import HeapError, enumerate_heaps
from .randgen import RandomSource, random_animal
from .render import RenderOptions, render_decomposition, render_svg
from .series import (
    SeriesError,
    configurations_series,
    dump_trace_series,
    heaps_series,
    project,
    pyramids_series,
    strict_heaps_series,
)
from .verify import SUITES, run_suites


def _read_graph(path: str):
    return parse_graph_literal(Path(path).read_text())


def _cmd_generate(args: argparse.Namespace) -> int:
    src = RandomSource(args.seed)
    total = 0
    for _ in range(args.samples):
        animal, report = random_animal(args.size, args.lattice, args.source, src)
        print(animal_to_json(animal))
        total += report.nb_tirages
    print(f"nb_tirages_total={total}")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.graph:
        g = _read_graph(args.graph)
        for h in enumerate_heaps(g, args.size):
            word = " ".join(g.labels[v] for v in h.canonical_word())
            print(word if word else "1")
        return 0
    for an in enumerate_animals(args.size, args.lattice, args.source):
        print(animal_to_json(an))
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    print(animal_count(args.size, args.lattice, args.source))
    return 0


_SERIES_BUILDERS = {
    "theta": lambda g, n, base: heaps_series(g, n, signed=False),
    "theta-bar": lambda g, n, base: heaps_series(g, n, signed=True),
    "theta-strict": lambda g, n, base: strict_heaps_series(g, n, signed=False),
    "gamma": lambda g, n, base: configurations_series(g, n, signed=False),
    "gamma-bar": lambda g, n, base: configurations_series(g, n, signed=True),
    "pi": lambda g, n, base: pyramids_series(g, n, signed=False, base=base),
    "pi-bar": lambda g, n, base: pyramids_series(g, n, signed=True, base=base),
}


def _cmd_series(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    base = g.index(args.base) if args.base is not None else None
    series = _SERIES_BUILDERS[args.kind](g, args.degree, base)
    if args.project:
        print(project(series))
    else:
        print(dump_trace_series(series))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = run_suites(names, degree=args.degree)
    failed = 0
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        detail = f"  [{check.detail}]" if check.detail else ""
        print(f"{status} {check.suite}: {check.label}{detail}")
    failed = sum(not c.passed for c in checks)
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 1
    return 0


def _cmd_gas(args: argparse.Namespace) -> int:
    if args.linear:
        print(f"density_series: {gasmod.linear_density(args.degree)}")
        if args.at is not None:
            print(f"density({args.at}) = {gasmod.evaluate_density(args.at):.15f}")
        return 0
    if not args.graph:
        print("gas: need --graph FILE or --linear", file=sys.stderr)
        return 2
    g = _read_graph(args.graph)
    z = gasmod.partition_function(g, args.degree)
    direct = gasmod.mean_particles_direct(g, args.degree)
    pyramids = gasmod.mean_particles_pyramids(g, args.degree)
    print(f"Z: {z}")
    print(f"mean_direct: {direct}")
    print(f"mean_pyramids: {pyramids}")
    ok = direct == pyramids
    print("PASS mean-count identity" if ok else "FAIL mean-count identity")
    return 0 if ok else 1


def _cmd_render(args: argparse.Namespace) -> int:
    if args.input:
        text = Path(args.input).read_text()
    else:
        text = sys.stdin.read()
    animals = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("nb_tirages_total="):
            continue
        animals.append(animal_from_json(line))
    if not animals:
        print("render: no animal JSON on input", file=sys.stderr)
        return 2
    opts = RenderOptions(cell_radius=args.radius, rotation=args.rotation)
    for animal in animals:
        if args.decomposition:
            sys.stdout.write(render_decomposition(animal))
        else:
            sys.stdout.write(render_svg(animal, opts))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heappieces",
        description="Heaps of pieces, directed animals, exact trace series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample uniform random animals")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lattice", choices=("square", "triangular"), default="square")
    p.add_argument("--source", choices=("point", "compact"), default="point")
    p.add_argument("--samples", type=int, default=1)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("enumerate", help="list all animals (or heaps) of a size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--lattice", choices=("square", "triangular"), default="square")
    p.add_argument("--source", choices=("point", "compact"), default="point")
    p.add_argument("--graph", help="graph literal file: enumerate heaps instead")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("count", help="closed-form animal counts")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--lattice", choices=("square", "triangular"), default="square")
    p.add_argument(
        "--source", choices=("point", "compact", "equerre"), default="point"
    )
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("series", help="dump a trace series over a graph")
    p.add_argument("--graph", required=True, help="graph literal file")
    p.add_argument("--kind", choices=sorted(_SERIES_BUILDERS), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--base", help="base vertex label for pyramid series")
    p.add_argument("--project", action="store_true", help="print the t-projection")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=["all", *sorted(SUITES)], default="all")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gas", help="partition function and mean particle count")
    p.add_argument("--graph", help="graph literal file")
    p.add_argument("--linear", action="store_true", help="infinite chain closed form")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--at", type=float, default=None, help="evaluate density at t")
    p.set_defaults(fn=_cmd_gas)

    p = sub.add_parser("render", help="render animal JSON to SVG or text")
    p.add_argument("--input", help="file of animal JSON lines (default stdin)")
    p.add_argument("--radius", type=float, default=0.4)
    p.add_argument("--rotation", choices=("heap", "lattice"), default="lattice")
    p.add_argument(
        "--decomposition", action="store_true", help="dump the equerre decomposition"
    )
    p.set_defaults(fn=_cmd_render)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (GraphError, HeapError, SeriesError, AnimalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
