"""Dice realizing tournaments.

Strong tournaments: realize a Hamilton cycle with balanced 3-sided dice,
shift the labels up, then give each remaining arc (a chord of the cycle)
one fresh label above everything and one below everything on each of its
two dice. General tournaments: build each strong component separately,
equalize side counts, and stack the components by the condensation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Iterator, Optional, Sequence

from .cycle import build_cycle_set
from .dice import (
    DiceSet,
    Die,
    RealizationReport,
    is_balanced,
    is_non_transitive,
    normalize,
    realizes,
    victories,
)
from .errors import ConstructionError, InvalidInputError, NotStrongError
from .graphs import Tournament, hamilton_cycle, is_hamilton_cycle, is_tournament, strong_components


@dataclass(frozen=True)
class ChordPlan:
    """Labels handed out at one stage. ``above``/``below`` are (low, high)."""

    stage: int
    winner: str
    loser: str
    above: tuple
    below: tuple


def plan_chord(n: int, stage: int, winner, loser) -> ChordPlan:
    top = n * n + 2 * stage
    bottom = n * n - 3 * n - 2 * stage + 2
    return ChordPlan(stage, winner, loser, (top - 1, top), (bottom - 1, bottom))


@dataclass(frozen=True)
class ChordState:
    """Dice partway through chord augmentation.

    ``base`` keeps the shifted 3-sided cycle dice; the rule for the low
    labels looks at victory counts there, not on the growing dice.
    """

    n: int
    base: DiceSet
    dice: tuple
    done: tuple = ()

    def __getitem__(self, name) -> Die:
        for d in self.dice:
            if d.name == name:
                return d
        raise KeyError(name)

    def to_dice_set(self) -> DiceSet:
        return DiceSet(self.dice)


@dataclass(frozen=True)
class TournamentDice:
    dice: DiceSet
    mapping: dict
    report: RealizationReport
    components: tuple = ()
    cycles: tuple = field(default=())


def shift_labels(s: DiceSet, k: int) -> DiceSet:
    if min(s.labels()) + k < 1:
        raise InvalidInputError(f"shifting by {k} leaves non-positive labels")
    return DiceSet(tuple(d.shifted(k) for d in s.dice))


def start_chords(cycle_dice: DiceSet) -> ChordState:
    """Shift 3-sided cycle dice up by n^2 - 3n to leave room below."""
    n = cycle_dice.n
    if cycle_dice.m != 3:
        raise InvalidInputError("chord augmentation starts from 3-sided dice")
    shifted = shift_labels(cycle_dice, n * n - 3 * n)
    return ChordState(n, shifted, shifted.dice)


def add_chord(state: ChordState, chord: tuple, stage: int) -> ChordState:
    """Give ``chord = (winner, loser)`` its two high and two low labels.

    The winner takes the higher of the top pair. Of the bottom pair, the
    winner takes the lower one if it already beat the loser 5 times out of
    9 on the base dice, and the higher one if only 4 times; either way the
    pair ends at 13 victories out of 25 on their first chord.
    """
    winner, loser = chord
    base_count = victories(state.base[winner], state.base[loser])
    if base_count not in (4, 5):
        raise ConstructionError(
            f"base victory count of {winner} over {loser} is {base_count}, expected 4 or 5"
        )
    plan = plan_chord(state.n, stage, winner, loser)
    low, high = plan.below
    win_low, lose_low = (low, high) if base_count == 5 else (high, low)
    gains = {winner: (plan.above[1], win_low), loser: (plan.above[0], lose_low)}
    dice = tuple(
        Die(d.name, d.faces + gains[d.name]) if d.name in gains else d for d in state.dice
    )
    out = ChordState(state.n, state.base, dice, state.done + (plan,))

    w, l = out[winner], out[loser]
    if len(w) == len(l) == 5 and victories(w, l) != 13:
        raise ConstructionError(f"{winner} over {loser} is {victories(w, l)}/25, expected 13/25")
    return out


def cycle_from_chords(t: Tournament, chord_order: Sequence) -> Optional[list]:
    """The Hamilton cycle left over when ``chord_order`` is removed, if any.

    The returned order starts at the first declared vertex it contains.
    """
    rest = t.arcs - {tuple(c) for c in chord_order}
    nxt = {}
    for u, v in rest:
        if u in nxt:
            return None
        nxt[u] = v
    start = t.vertices[0]
    order = [start]
    while len(order) <= len(t.vertices):
        v = nxt.get(order[-1])
        if v is None or v == start:
            break
        order.append(v)
    return order if is_hamilton_cycle(t, order) and len(rest) == len(order) else None


def _chords_for(t: Tournament, cycle: Sequence, chord_order: Optional[Sequence]) -> list:
    n = len(cycle)
    on_cycle = {(cycle[i], cycle[(i + 1) % n]) for i in range(n)}
    chords = [a for a in t.arcs if a not in on_cycle]
    pos = {v: i for i, v in enumerate(cycle)}
    if chord_order is None:
        return sorted(chords, key=lambda a: (pos[a[0]], pos[a[1]]))
    order = [tuple(c) for c in chord_order]
    if len(order) != len(chords) or set(order) != set(chords):
        raise InvalidInputError("chord order must list every non-cycle arc exactly once")
    return order


def iter_chord_stages(
    t: Tournament,
    chord_order: Optional[Sequence] = None,
    cycle: Optional[Sequence] = None,
) -> Iterator[ChordState]:
    """Yield the starting state, then the state after each chord stage."""
    if not is_tournament(t):
        raise InvalidInputError("expected a tournament")
    n = len(t.vertices)
    if n < 3:
        raise InvalidInputError(f"need at least 3 vertices, got {n}")
    if cycle is None and chord_order is not None:
        cycle = cycle_from_chords(t, chord_order)
    if cycle is None:
        cycle = hamilton_cycle(t)
    elif not is_hamilton_cycle(t, cycle):
        raise InvalidInputError(f"{list(cycle)} is not a Hamilton cycle of the tournament")
    chords = _chords_for(t, cycle, chord_order)

    state = start_chords(build_cycle_set(n, 3, names=list(cycle)))
    yield state
    for stage, chord in enumerate(chords, start=1):
        state = add_chord(state, chord, stage)
        yield state


def build_strong_tournament_dice(
    t: Tournament,
    chord_order: Optional[Sequence] = None,
    cycle: Optional[Sequence] = None,
) -> TournamentDice:
    """Balanced dice with 2n-3 sides realizing a strong tournament.

    ``chord_order`` lists the non-cycle arcs as ``(winner, loser)`` pairs;
    when given without ``cycle``, the remaining arcs must form the Hamilton
    cycle to use. The default order sorts chords by the cycle positions of
    winner, then loser. Dice are returned in cycle order.
    """
    if not is_tournament(t):
        raise InvalidInputError("expected a tournament")
    cond = strong_components(t)
    if len(cond.components) != 1:
        raise NotStrongError(f"tournament is not strong: {list(cond.components)}", cond.components)
    for state in iter_chord_stages(t, chord_order, cycle):
        pass
    dice = state.to_dice_set()
    n = dice.n

    report = realizes(dice, t)
    if not dice.canonical or dice.m != 2 * n - 3:
        raise ConstructionError("labels are not exactly 1..n(2n-3)")
    if not report.realized:
        raise ConstructionError(str(report))
    if is_balanced(dice) is None or not is_non_transitive(dice):
        raise ConstructionError("cycle edges lost balance")
    return TournamentDice(
        dice, {nm: nm for nm in dice.names}, report, (tuple(t.vertices),), (dice.names,)
    )


def blow_up(s: DiceSet, r: int) -> DiceSet:
    """Replace the label of rank k by the r labels r(k-1)+1..rk on the same die.

    Every old face pair becomes r*r pairs ordered the same way, so every
    victory count scales by r*r and probabilities stay put.
    """
    if r < 1:
        raise InvalidInputError(f"blow-up factor must be positive, got {r}")
    s = normalize(s)
    return DiceSet(
        tuple(
            Die(d.name, tuple(r * (k - 1) + j for k in d.faces for j in range(1, r + 1)))
            for d in s.dice
        )
    )


def build_tournament_dice(t: Tournament) -> TournamentDice:
    """Dice realizing any tournament.

    Each strong component is realized on its own (one 1-sided die for a
    lone vertex), blown up to a common side count, and given a block of
    labels above every component it beats.
    """
    if not is_tournament(t):
        raise InvalidInputError("expected a tournament")
    cond = strong_components(t)
    parts = []
    cycles = []
    for comp in cond.components:
        if len(comp) == 1:
            parts.append(DiceSet((Die(comp[0], (1,)),)))
            cycles.append(comp)
        elif len(comp) == 2:
            raise ConstructionError(f"strong component of size 2 in a tournament: {comp}")
        else:
            built = build_strong_tournament_dice(t.induced(comp))
            parts.append(built.dice)
            cycles.append(built.dice.names)
    sides = lcm(*(p.m for p in parts))
    dice = []
    offset = 0
    # components come dominant first; the last one gets the lowest labels
    for part in reversed(parts):
        grown = blow_up(part, sides // part.m)
        dice[:0] = shift_labels(grown, offset).dice
        offset += grown.n * sides
    out = DiceSet(tuple(dice))

    report = realizes(out, t)
    if not report.realized:
        raise ConstructionError(str(report))
    return TournamentDice(
        out, {nm: nm for nm in out.names}, report, cond.components, tuple(cycles)
    )
