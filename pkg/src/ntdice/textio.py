"""Plain-text formats for dice sets and digraphs.

Dice sets::

    # dice-set v1
    A: 9 5 1
    B: 8 4 3

Several sets may share one file, separated by lines holding ``---``.

Digraphs::

    # digraph v1
    vertices: A B C
    edge: A B

In both formats blank lines and lines starting with ``#`` are ignored
after the header.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .dice import DiceSet, Die
from .errors import InvalidInputError, ParseError
from .graphs import Digraph

DICE_HEADER = "# dice-set v1"
GRAPH_HEADER = "# digraph v1"
SEPARATOR = "---"


def format_dice_set(s: DiceSet, header: bool = True) -> str:
    lines = [DICE_HEADER] if header else []
    for d in s.dice:
        if not all(isinstance(x, int) for x in d.faces):
            raise InvalidInputError(f"die {d.name} has non-integer labels; normalize first")
        lines.append(f"{d.name}: " + " ".join(str(x) for x in d.faces))
    return "\n".join(lines) + "\n"


def format_dice_sets(sets: Iterable[DiceSet]) -> str:
    blocks = [format_dice_set(s, header=False) for s in sets]
    return DICE_HEADER + "\n" + (SEPARATOR + "\n").join(blocks)


def _body(text: str, header: str):
    lines = text.splitlines()
    if not lines or lines[0].rstrip() != header:
        raise ParseError(f"first line must be {header!r}", 1)
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_die(line: str, lineno: int) -> Die:
    name, sep, rest = line.partition(":")
    name = name.strip()
    if not sep or not name or any(ch.isspace() for ch in name):
        raise ParseError(f"expected '<name>: v1 v2 ...', got {line!r}", lineno)
    try:
        values = [int(tok) for tok in rest.split()]
    except ValueError:
        raise ParseError(f"labels must be decimal integers: {rest.strip()!r}", lineno) from None
    if not values:
        raise ParseError(f"die {name} has no labels", lineno)
    if any(hi <= lo for hi, lo in zip(values, values[1:])):
        raise ParseError(f"labels of {name} must be strictly descending", lineno)
    return Die(name, tuple(values))


def parse_dice_sets(text: str) -> list:
    """Every dice set in ``text``; a file without separators holds one set."""
    blocks = [[]]
    for lineno, line in _body(text, DICE_HEADER):
        if line == SEPARATOR:
            blocks.append([])
        else:
            blocks[-1].append(_parse_die(line, lineno))
    out = []
    for dice in blocks:
        if not dice:
            continue
        try:
            out.append(DiceSet(tuple(dice)))
        except InvalidInputError as exc:
            raise ParseError(str(exc)) from None
    return out


def parse_dice_set(text: str) -> DiceSet:
    sets = parse_dice_sets(text)
    if len(sets) != 1:
        raise ParseError(f"expected one dice set, found {len(sets)}")
    return sets[0]


def format_digraph(g: Digraph) -> str:
    lines = [GRAPH_HEADER, "vertices: " + " ".join(str(v) for v in g.vertices)]
    lines += [f"edge: {u} {v}" for u, v in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    vertices = None
    arcs = []
    for lineno, line in _body(text, GRAPH_HEADER):
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected 'vertices:' or 'edge:', got {line!r}", lineno)
        if key == "vertices":
            if vertices is not None:
                raise ParseError("vertices declared twice", lineno)
            vertices = rest.split()
            if not vertices:
                raise ParseError("no vertices declared", lineno)
        elif key == "edge":
            if vertices is None:
                raise ParseError("edge before vertices line", lineno)
            ends = rest.split()
            if len(ends) != 2:
                raise ParseError(f"edge needs two endpoints, got {rest.strip()!r}", lineno)
            arcs.append((ends[0], ends[1]))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if vertices is None:
        raise ParseError("missing vertices line")
    try:
        return Digraph(tuple(vertices), frozenset(arcs))
    except InvalidInputError as exc:
        raise ParseError(str(exc)) from None


def read_dice_set(path) -> DiceSet:
    return parse_dice_set(Path(path).read_text())


def write_dice_set(path, s: DiceSet) -> None:
    Path(path).write_text(format_dice_set(s))


def read_digraph(path) -> Digraph:
    return parse_digraph(Path(path).read_text())


def write_digraph(path, g: Digraph) -> None:
    Path(path).write_text(format_digraph(g))
