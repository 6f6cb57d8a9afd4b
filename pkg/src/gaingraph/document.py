"""The ``gaingraph v1`` text format.

Example::

    gaingraph v1
    group mu 4
    involution 1/2
    vertices 3
    edge 1 2 1/4
    edge 2 3 0

Vertices are 1-based in files and 0-based in memory.  An edge line gives the
gain read from its first vertex to its second, as rational turns.  Blank lines
and ``#`` comments are ignored.  The group is ``circle``, ``sign`` or
``mu K``.
"""
from __future__ import annotations

from .gains import GroupSpec, format_gain, inv, parse_gain, validate_spec
from .graphcore import GainGraph, SimpleGraph

__all__ = ["ParseError", "parse", "serialize", "parse_group", "format_group"]

HEADER = "gaingraph v1"


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


def parse_group(words: list[str]) -> GroupSpec:
    """Family part of a group spec; the involution is filled in later."""
    if words == ["circle"]:
        return GroupSpec("circle")
    if words == ["sign"]:
        return GroupSpec("sign")
    if len(words) == 2 and words[0] == "mu":
        try:
            order = int(words[1])
        except ValueError:
            raise ValueError(f"bad group order {words[1]!r}") from None
        if order < 1:
            raise ValueError(f"group order must be positive, got {order}")
        return GroupSpec("mu", order=order)
    raise ValueError(f"unknown group {' '.join(words)!r}")


def format_group(spec: GroupSpec) -> str:
    return f"mu {spec.order}" if spec.family == "mu" else spec.family


def parse(text: str) -> GainGraph:
    """Parse a document into a validated :class:`GainGraph`.

    Every problem is reported as a :class:`ParseError` naming its line.
    """
    seen_header = False
    family = involution = None
    n = None
    group_line = 0
    pairs: dict[tuple[int, int], int] = {}
    edges, gains = [], []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if not seen_header:
            if line != HEADER:
                raise ParseError(lineno, f"expected header {HEADER!r}, found {line!r}")
            seen_header = True
            continue
        key, args = words[0], words[1:]
        if key == "group":
            if family is not None:
                raise ParseError(lineno, "group given twice")
            try:
                family = parse_group(args)
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            group_line = lineno
        elif key == "involution":
            if involution is not None:
                raise ParseError(lineno, "involution given twice")
            if len(args) != 1:
                raise ParseError(lineno, "involution takes one gain")
            try:
                involution = parse_gain(args[0])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            if family is None:
                raise ParseError(lineno, "involution before group")
            spec = GroupSpec(family.family, involution, family.order)
            problem = validate_spec(spec)
            if problem:
                raise ParseError(lineno, problem)
            family = spec
        elif key == "vertices":
            if n is not None:
                raise ParseError(lineno, "vertices given twice")
            try:
                n = int(args[0]) if len(args) == 1 else -1
            except ValueError:
                n = -1
            if n < 0:
                raise ParseError(lineno, "vertices takes one non-negative integer")
        elif key == "edge":
            if family is None or involution is None or n is None:
                raise ParseError(lineno, "edge before group, involution and vertices are all set")
            if len(args) != 3:
                raise ParseError(lineno, "edge takes two vertices and a gain")
            try:
                i, j = int(args[0]), int(args[1])
            except ValueError:
                raise ParseError(lineno, f"bad vertex label in {line!r}") from None
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(lineno, f"vertex out of range 1..{n}")
            if i == j:
                raise ParseError(lineno, f"loop at vertex {i}")
            key_pair = (min(i, j), max(i, j))
            if key_pair in pairs:
                raise ParseError(lineno, f"duplicate edge {i} {j} (first on line {pairs[key_pair]})")
            try:
                g = parse_gain(args[2])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            if not family.contains(g):
                raise ParseError(lineno, f"gain {format_gain(g)} outside group {format_group(family)}")
            pairs[key_pair] = lineno
            edges.append((i - 1, j - 1) if i < j else (j - 1, i - 1))
            gains.append(g if i < j else inv(g))
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")

    end = len(text.splitlines()) + 1
    if not seen_header:
        raise ParseError(end, "empty document")
    if family is None:
        raise ParseError(end, "missing group")
    if involution is None:
        raise ParseError(group_line or end, "missing involution")
    if n is None:
        raise ParseError(end, "missing vertices")
    return GainGraph(SimpleGraph(n, tuple(edges)), family, tuple(gains))


def serialize(phi: GainGraph) -> str:
    lines = [
        HEADER,
        f"group {format_group(phi.spec)}",
        f"involution {format_gain(phi.involution)}",
        f"vertices {phi.n}",
    ]
    for (a, b), g in zip(phi.graph.edges, phi.gains):
        lines.append(f"edge {a + 1} {b + 1} {format_gain(g)}")
    return "\n".join(lines) + "\n"
