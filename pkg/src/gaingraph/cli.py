"""Command-line interface: ``gaingraph COMMAND ...``.

Exit codes: 0 success, 1 negative result (not equivalent, failed check),
2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import document
from .gains import GroupSpec, format_gain, parse_gain, validate_spec
from .graphcore import find_switching, fundamental_cycles, gain_of_walk, random_gain_graph, spanning_forest
from .linegraph import line_graph_class
from .orientation import default_orientation, random_orientation
from .spectra import adjacency_matrix, format_matrix, hermitian_eigenvalues, incidence_matrix, line_spectrum
from .verify import run_checks


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{path}: not UTF-8 text") from None
    try:
        return document.parse(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _walk_text(walk) -> str:
    return " ".join(str(v + 1) for v in walk.vertices)


def cmd_info(args) -> int:
    phi = _load(args.file)
    print(f"vertices {phi.n}")
    print(f"edges {phi.m}")
    print(f"group {document.format_group(phi.spec)}")
    print(f"involution {format_gain(phi.involution)}")
    forest = spanning_forest(phi.graph)
    cycles = fundamental_cycles(phi.graph, forest)
    print(f"fundamental cycles {len(cycles)}")
    for e, cycle in cycles:
        a, b = phi.graph.edges[e]
        print(f"cycle edge {a + 1} {b + 1}: {_walk_text(cycle)} gain {format_gain(gain_of_walk(phi, cycle))}")
    return 0


def cmd_linegraph(args) -> int:
    phi = _load(args.file)
    sys.stdout.write(document.serialize(line_graph_class(phi)))
    return 0


def cmd_adjacency(args) -> int:
    sys.stdout.write(format_matrix(adjacency_matrix(_load(args.file))))
    return 0


def cmd_incidence(args) -> int:
    phi = _load(args.file)
    og = default_orientation(phi) if args.seed is None else random_orientation(phi, args.seed)
    sys.stdout.write(format_matrix(incidence_matrix(og)))
    return 0


def cmd_spectrum(args) -> int:
    phi = _load(args.file)
    values = line_spectrum(phi) if args.line else hermitian_eigenvalues(adjacency_matrix(phi))
    for x in values:
        print(f"{round(float(x), 12) + 0.0:.12f}")
    return 0


def cmd_equiv(args) -> int:
    phi1, phi2 = _load(args.file1), _load(args.file2)
    try:
        result = find_switching(phi1, phi2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if result:
        print("equivalent")
        for v, z in enumerate(result.values, start=1):
            print(f"zeta {v} {format_gain(z)}")
        return 0
    print(f"not equivalent: cycle {_walk_text(result.witness)} has gain "
          f"{format_gain(result.gain1)} vs {format_gain(result.gain2)}")
    return 1


def cmd_verify(args) -> int:
    phi = _load(args.file)
    results = run_checks(phi, args.seed)
    for r in results:
        print(r)
    return 0 if all(r.passed for r in results) else 1


def _group_arg(text: str) -> GroupSpec:
    if text in ("circle", "sign"):
        return GroupSpec(text)
    family, _, order = text.partition(":")
    if family == "mu" and order.isdigit() and int(order) > 0:
        return GroupSpec("mu", order=int(order))
    raise UsageError(f"bad --group {text!r}; use mu:K, sign or circle")


def cmd_random(args) -> int:
    base = _group_arg(args.group)
    try:
        s = parse_gain(args.involution)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if s.turns not in (Fraction(0), Fraction(1, 2)):
        raise UsageError("--involution must be 0 or 1/2")
    spec = GroupSpec(base.family, s, base.order)
    problem = validate_spec(spec)
    if problem:
        raise UsageError(problem)
    if args.vertices < 0 or args.edges < 0:
        raise UsageError("--vertices and --edges must be non-negative")
    try:
        phi = random_gain_graph(args.vertices, spec, np.random.default_rng(args.seed), m=args.edges)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(document.serialize(phi))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaingraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="sizes, group and fundamental-cycle gains")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("linegraph", help="line graph representative as a gaingraph document")
    p.add_argument("file")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("adjacency", help="adjacency matrix in matrix text format")
    p.add_argument("file")
    p.set_defaults(func=cmd_adjacency)

    p = sub.add_parser("incidence", help="incidence matrix in matrix text format")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None, help="use a random orientation with this seed")
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("spectrum", help="adjacency eigenvalues, one per line")
    p.add_argument("file")
    p.add_argument("--line", action="store_true", help="spectrum of the line graph instead")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("equiv", help="decide switching equivalence")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("verify", help="run the identity, bound and spectrum checks")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="emit a random gaingraph document")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--group", default="mu:4")
    p.add_argument("--involution", default="1/2")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
