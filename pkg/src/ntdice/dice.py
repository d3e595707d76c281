"""Exact dice, dice sets and pairwise winning probabilities.

Labels are ints or :class:`fractions.Fraction`; nothing in this module
touches floating point once a label has been accepted.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import InvalidInputError
from .graphs import Digraph, default_names

Label = Union[int, Fraction]


def as_label(value) -> Label:
    """Coerce ``value`` to an exact label.

    Floats are read through their shortest decimal repr, so ``6.9`` becomes
    ``Fraction(69, 10)`` rather than the nearest binary double.
    """
    if isinstance(value, bool):
        raise InvalidInputError(f"not a label: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        value = Fraction(repr(value))
    elif isinstance(value, (str, Decimal)):
        value = Fraction(value)
    elif isinstance(value, Rational):
        value = Fraction(value.numerator, value.denominator)
    else:
        raise InvalidInputError(f"not a label: {value!r}")
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class Die:
    """One fair die. Faces are stored strictly descending."""

    name: str
    faces: tuple

    def __post_init__(self):
        if not self.name or any(ch.isspace() for ch in self.name) or ":" in self.name:
            raise InvalidInputError(f"bad die name {self.name!r}")
        faces = sorted((as_label(x) for x in self.faces), reverse=True)
        if not faces:
            raise InvalidInputError(f"die {self.name} has no faces")
        for hi, lo in zip(faces, faces[1:]):
            if hi == lo:
                raise InvalidInputError(f"die {self.name} repeats label {hi}")
        object.__setattr__(self, "faces", tuple(faces))

    def __len__(self):
        return len(self.faces)

    def shifted(self, delta) -> "Die":
        return Die(self.name, tuple(x + delta for x in self.faces))

    def __str__(self):
        return f"{self.name}: " + " ".join(str(x) for x in self.faces)


@dataclass(frozen=True)
class DiceSet:
    """An ordered collection of dice with pairwise disjoint labels.

    The order of ``dice`` is the intended cycle ``dice[0] > dice[1] > ...``.
    All dice must have the same number of faces.
    """

    dice: tuple

    def __post_init__(self):
        dice = tuple(self.dice)
        if not dice:
            raise InvalidInputError("a dice set needs at least one die")
        names = [d.name for d in dice]
        if len(set(names)) != len(names):
            raise InvalidInputError(f"duplicate die names in {names}")
        sides = {len(d) for d in dice}
        if len(sides) != 1:
            raise InvalidInputError(f"dice have unequal face counts {sorted(sides)}")
        seen = set()
        for d in dice:
            clash = seen.intersection(d.faces)
            if clash:
                raise InvalidInputError(f"label {min(clash)} appears on more than one die")
            seen.update(d.faces)
        object.__setattr__(self, "dice", dice)

    @classmethod
    def from_faces(cls, faces: Union[Mapping[str, Iterable], Sequence[Iterable]]) -> "DiceSet":
        """Build a set from ``{name: faces}`` or a list of face lists.

        Unnamed dice are called A, B, C, ... in list order.
        """
        if isinstance(faces, Mapping):
            items = list(faces.items())
        else:
            items = list(zip(default_names(len(faces)), faces))
        return cls(tuple(Die(name, tuple(f)) for name, f in items))

    @property
    def n(self) -> int:
        return len(self.dice)

    @property
    def m(self) -> int:
        return len(self.dice[0])

    @property
    def names(self) -> tuple:
        return tuple(d.name for d in self.dice)

    @property
    def canonical(self) -> bool:
        """True when the labels are exactly the integers 1..n*m."""
        labels = self.labels()
        return all(isinstance(x, int) for x in labels) and labels == list(
            range(1, self.n * self.m + 1)
        )

    def labels(self) -> list:
        """All labels, ascending."""
        return sorted(x for d in self.dice for x in d.faces)

    def __len__(self):
        return len(self.dice)

    def __iter__(self):
        return iter(self.dice)

    def __getitem__(self, key) -> Die:
        if isinstance(key, str):
            for d in self.dice:
                if d.name == key:
                    return d
            raise KeyError(key)
        return self.dice[key]

    def as_dict(self) -> dict:
        return {d.name: list(d.faces) for d in self.dice}

    def renamed(self, names: Sequence[str]) -> "DiceSet":
        if len(names) != self.n:
            raise InvalidInputError(f"need {self.n} names, got {len(names)}")
        return DiceSet(tuple(Die(nm, d.faces) for nm, d in zip(names, self.dice)))

    def __str__(self):
        return "\n".join(str(d) for d in self.dice)


def victories(a: Die, b: Die) -> int:
    """Number of face pairs ``(x, y)`` with ``x`` on ``a``, ``y`` on ``b`` and ``x > y``."""
    lows = sorted(b.faces)
    total = 0
    for x in a.faces:
        k = bisect_left(lows, x)
        if k < len(lows) and lows[k] == x:
            raise InvalidInputError(f"dice {a.name} and {b.name} share label {x}")
        total += k
    return total


def probability(a: Die, b: Die) -> Fraction:
    """Exact probability that ``a`` rolls higher than ``b``.

    The result is a reduced :class:`Fraction`; use :func:`victories` for the
    unreduced numerator over ``len(a) * len(b)``.
    """
    return Fraction(victories(a, b), len(a) * len(b))


def beats(a: Die, b: Die) -> bool:
    # labels are disjoint, so there are no ties to account for
    return 2 * victories(a, b) > len(a) * len(b)


@dataclass(frozen=True)
class VictoryMatrix:
    """Pairwise victory counts; ``counts[i, j] = victories(dice[i], dice[j])``."""

    names: tuple
    counts: np.ndarray = field(repr=False)
    m: int

    @property
    def n(self) -> int:
        return len(self.names)

    def probability(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.counts[i, j]), self.m * self.m)

    def __eq__(self, other):
        if not isinstance(other, VictoryMatrix):
            return NotImplemented
        return (
            self.names == other.names
            and self.m == other.m
            and np.array_equal(self.counts, other.counts)
        )

    def __hash__(self):
        return hash((self.names, self.m, self.counts.tobytes()))

    def __str__(self):
        width = max(len(str(self.m * self.m)), *(len(nm) for nm in self.names))
        head = " " * width + " " + " ".join(nm.rjust(width) for nm in self.names)
        rows = [head]
        for nm, row in zip(self.names, self.counts):
            rows.append(nm.rjust(width) + " " + " ".join(str(int(c)).rjust(width) for c in row))
        return "\n".join(rows)


def victory_matrix(s: DiceSet) -> VictoryMatrix:
    counts = np.zeros((s.n, s.n), dtype=np.int64)
    for i, a in enumerate(s.dice):
        for j, b in enumerate(s.dice):
            if i != j:
                counts[i, j] = victories(a, b)
    counts.setflags(write=False)
    return VictoryMatrix(s.names, counts, s.m)


def _cycle_pairs(s: DiceSet):
    if s.n < 3:
        raise InvalidInputError(f"cycle predicates need at least 3 dice, got {s.n}")
    return [(s.dice[i], s.dice[(i + 1) % s.n]) for i in range(s.n)]


def is_non_transitive(s: DiceSet) -> bool:
    """Each die beats the next one in list order, and the last beats the first."""
    return all(beats(a, b) for a, b in _cycle_pairs(s))


def is_balanced(s: DiceSet):
    """Common winning probability along the cycle, or ``None`` if they differ.

    Dominance is not checked here; combine with :func:`is_non_transitive`.
    """
    probs = {probability(a, b) for a, b in _cycle_pairs(s)}
    return probs.pop() if len(probs) == 1 else None


@dataclass(frozen=True)
class RealizationReport:
    mapping: dict
    probabilities: dict
    violations: tuple

    @property
    def realized(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.realized:
            return "realized"
        bad = ", ".join(f"{u}->{v} ({self.probabilities[u, v]})" for u, v in self.violations)
        return f"not realized: {len(self.violations)} violation(s): {bad}"


def realizes(s: DiceSet, g: Digraph, f: Mapping[str, object] = None) -> RealizationReport:
    """Check that every winning pair of dice maps onto an arc of ``g``.

    ``f`` maps die names to vertices of ``g``; by default each die maps to
    the vertex of the same name.
    """
    if f is None:
        f = {nm: nm for nm in s.names}
    f = dict(f)
    if sorted(f, key=str) != sorted(s.names, key=str):
        raise InvalidInputError("mapping must cover exactly the dice of the set")
    targets = list(f.values())
    if len(set(targets)) != len(targets) or set(targets) != set(g.vertices):
        raise InvalidInputError("mapping must be a bijection onto the graph's vertices")
    probs = {}
    violations = []
    for a in s.dice:
        for b in s.dice:
            if a is b:
                continue
            u, v = f[a.name], f[b.name]
            probs[u, v] = probability(a, b)
            if beats(a, b) and not g.has_arc(u, v):
                violations.append((u, v))
    return RealizationReport(f, probs, tuple(violations))


def normalize(s: DiceSet) -> DiceSet:
    """Relabel by global rank, smallest label becoming 1.

    Only the relative order of labels matters to every victory count, so
    the victory matrix is unchanged.
    """
    rank = {x: k for k, x in enumerate(s.labels(), start=1)}
    return DiceSet(tuple(Die(d.name, tuple(rank[x] for x in d.faces)) for d in s.dice))
