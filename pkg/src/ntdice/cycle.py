"""Balanced non-transitive sets of n m-sided dice.

A three-dice base is found by search, then grown one die at a time: the
new die copies the last die's labels nudged just below them, the few
smallest copies are nudged just above instead, and everything is
relabeled by rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .dice import DiceSet, Die, is_balanced, is_non_transitive, normalize, victories
from .errors import ConstructionError, InvalidInputError, UnsupportedBaseError
from .graphs import default_names

# Offset for the copied die. Anything strictly below 1/2 works: the nudged
# copy of c stays inside (c-1, c+1), so it only ever crosses c itself, and
# c+EPS never meets (c+1)-EPS.
EPS = Fraction(1, 3)


@dataclass(frozen=True)
class BaseTripleSearchConfig:
    m: int
    target_victories: Optional[int] = None

    def __post_init__(self):
        if self.m < 3:
            raise InvalidInputError(f"need m >= 3 sides, got {self.m}")
        if self.target_victories is not None:
            lo, hi = self.min_victories, self.max_victories
            if not lo <= self.target_victories <= hi:
                raise InvalidInputError(
                    f"target victories must lie in [{lo}, {hi}] for m={self.m}"
                )

    @property
    def min_victories(self) -> int:
        return self.m * self.m // 2 + 1

    @property
    def max_victories(self) -> int:
        return self.m * (self.m + 1) // 2


def _completable(m: int, target: int, allowed: dict) -> bool:
    """Can labels 3m..1 be dealt to dice 0, 1, 2 so each cycle count equals ``target``?

    ``allowed`` restricts which dice a label may go to. Labels are dealt in
    descending order, so a label placed on die ``d`` loses to every label
    already on the other dice; partial counts only grow, and each can be
    bounded from both sides by how many faces are still unfilled.
    """
    goal = {(0, 1): target, (1, 2): target, (2, 0): target}
    goal.update({(b, a): m * m - v for (a, b), v in list(goal.items())})
    count = dict.fromkeys(goal, 0)
    size = [0, 0, 0]

    def bounded():
        for (x, y), cur in count.items():
            left = m - size[y]
            if cur + left * size[x] > goal[x, y] or cur + left * m < goal[x, y]:
                return False
        return True

    def deal(label):
        if label == 0:
            return True
        for d in allowed.get(label, (0, 1, 2)):
            if size[d] == m:
                continue
            for x in range(3):
                if x != d:
                    count[x, d] += size[x]
            size[d] += 1
            ok = bounded() and deal(label - 1)
            size[d] -= 1
            for x in range(3):
                if x != d:
                    count[x, d] -= size[x]
            if ok:
                return True
        return False

    return deal(3 * m)


@lru_cache(maxsize=None)
def _search(m: int, target: int) -> Optional[tuple]:
    if not _completable(m, target, {}):
        return None
    allowed = {}
    for die in (0, 1):
        prev = 3 * m + 1
        for _ in range(m):
            for cand in range(prev - 1, 0, -1):
                if die not in allowed.get(cand, (die,)):
                    continue
                trial = dict(allowed)
                for skipped in range(cand + 1, prev):
                    if die in trial.get(skipped, (die,)):
                        trial[skipped] = tuple(x for x in (0, 1, 2) if x > die)
                trial[cand] = (die,)
                if _completable(m, target, trial):
                    allowed, prev = trial, cand
                    break
            else:
                raise ConstructionError(f"greedy search lost its witness at m={m}")
    faces = ([], [], [])
    for label in range(3 * m, 0, -1):
        choice = allowed.get(label, (2,))
        faces[choice[0] if len(choice) == 1 else 2].append(label)
    return tuple(tuple(f) for f in faces)


def base_triple(m: int, target_victories: Optional[int] = None) -> Optional[DiceSet]:
    """Three balanced non-transitive ``m``-sided dice labeled 1..3m.

    Without a target, the victory count ascends from the least value that
    beats one half and the first feasible one is used. Among the solutions
    at that count, the result is the first in descending lexicographic
    order of the face tuples ``(A, B, C)``, the same order the exhaustive
    oracle lists them in. For m = 3 this is ``{9,5,1}, {8,4,3}, {7,6,2}``.

    With an explicit ``target_victories`` that admits no solution, returns
    None.
    """
    cfg = BaseTripleSearchConfig(m, target_victories)
    if target_victories is not None:
        faces = _search(m, target_victories)
        return None if faces is None else DiceSet.from_faces(list(faces))
    for target in range(cfg.min_victories, cfg.max_victories + 1):
        faces = _search(m, target)
        if faces is not None:
            return DiceSet.from_faces(list(faces))
    raise ConstructionError(f"no balanced non-transitive triple found for m={m}")


def _fresh_name(taken: Sequence[str]) -> str:
    taken = set(taken)
    k = len(taken)
    while True:
        for name in default_names(k + 1)[k:]:
            if name not in taken:
                return name
        k += 1


def extend_cycle(s: DiceSet, name: Optional[str] = None) -> DiceSet:
    """Append one die while keeping the set balanced and non-transitive.

    The new die copies the last die with every label lowered by ``EPS``;
    then its k smallest entries are raised to ``label + EPS`` instead,
    where ``k = m(m+1)/2 - V`` and ``V`` is the set's victory count. Each
    raise costs the last die exactly one victory over the new one and
    leaves the new die's record against the first die alone.
    """
    if s.n < 3:
        raise InvalidInputError("extend_cycle needs at least 3 dice")
    if not s.canonical:
        raise InvalidInputError("extend_cycle needs canonical labels 1..n*m")
    if is_balanced(s) is None or not is_non_transitive(s):
        raise InvalidInputError("extend_cycle needs a balanced non-transitive set")
    m = s.m
    last, first = s.dice[-1], s.dice[0]
    v = victories(last, first)
    raises = m * (m + 1) // 2 - v
    if raises < 0:
        raise UnsupportedBaseError(
            f"victory count {v} exceeds m(m+1)/2 = {m * (m + 1) // 2}; raises cannot reach it"
        )
    ascending = sorted(last.faces)
    copied = [c + EPS for c in ascending[:raises]] + [c - EPS for c in ascending[raises:]]
    new = Die(name or _fresh_name(s.names), tuple(copied))
    out = normalize(DiceSet(s.dice + (new,)))

    p = Fraction(v, m * m)
    if is_balanced(out) != p or not is_non_transitive(out):
        raise ConstructionError("extension broke balance or non-transitivity")
    return out


def build_cycle_set(
    n: int,
    m: Optional[int] = None,
    base: Optional[DiceSet] = None,
    names: Optional[Sequence[str]] = None,
) -> DiceSet:
    """``n`` balanced non-transitive ``m``-sided dice labeled 1..n*m.

    Starts from ``base`` when given (any balanced non-transitive canonical
    set of at most ``n`` dice), otherwise from :func:`base_triple`.
    ``names`` renames the result in cycle order.
    """
    if base is None:
        if m is None:
            raise InvalidInputError("give m or a base set")
        if n < 3 or m < 3:
            raise InvalidInputError(f"need n, m >= 3, got n={n}, m={m}")
        s = base_triple(m)
    else:
        if m is not None and m != base.m:
            raise InvalidInputError(f"base has {base.m} sides, not {m}")
        if n < base.n:
            raise InvalidInputError(f"base already has {base.n} dice")
        s = base
        if s.n < 3 or not s.canonical or is_balanced(s) is None or not is_non_transitive(s):
            raise InvalidInputError("base must be a canonical balanced non-transitive set")
    while s.n < n:
        s = extend_cycle(s)
    if names is not None:
        s = s.renamed(list(names))
    return s
