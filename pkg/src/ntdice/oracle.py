"""Independent ground truth for the constructions.

Nothing here reuses the constructive search or the graph algorithms: the
enumerator walks every assignment, victory counts are plain double loops,
and strong connectivity is checked by two breadth-first searches.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, product
from math import comb
from typing import NamedTuple, Optional

import numpy as np

from .dice import DiceSet, Die
from .errors import CostGuardError, InvalidInputError
from .graphs import Digraph

MAX_ENUM_SIDES = 6
MAX_BRUTE_VERTICES = 7


def _count(a, b) -> int:
    return sum(1 for x in a for y in b if x > y)


def enumerate_balanced_triples(
    m: int,
    max_results: Optional[int] = None,
    target_victories: Optional[int] = None,
    allow_large: bool = False,
) -> list:
    """Every balanced non-transitive set of three ``m``-sided dice on 1..3m.

    Dice are listed in cycle order (A beats B beats C beats A) and no label
    is pinned to a die, so each cyclic set shows up once per rotation.
    Results come in descending lexicographic order of ``(A, B, C)`` with
    faces sorted high to low. ``target_victories`` keeps only sets whose
    cycle victory count equals it.
    """
    if m < 1:
        raise InvalidInputError(f"m must be positive, got {m}")
    if m > MAX_ENUM_SIDES and not allow_large:
        total = comb(3 * m, m) * comb(2 * m, m)
        raise CostGuardError(f"m={m} means {total} assignments; pass allow_large=True")
    labels = range(3 * m, 0, -1)
    half = m * m
    found = []
    for a in combinations(labels, m):
        rest = [x for x in labels if x not in a]
        for b in combinations(rest, m):
            v = _count(a, b)
            if 2 * v <= half or (target_victories is not None and v != target_victories):
                continue
            c = tuple(x for x in rest if x not in b)
            if _count(b, c) != v or _count(c, a) != v:
                continue
            found.append(DiceSet.from_faces([a, b, c]))
            if max_results is not None and len(found) >= max_results:
                return found
    return found


class MonteCarloEstimate(NamedTuple):
    wins: int
    rolls: int

    @property
    def estimate(self) -> float:
        return self.wins / self.rolls

    def sigma(self, p: float) -> float:
        """Binomial standard error of the estimate under true probability ``p``."""
        return (p * (1 - p) / self.rolls) ** 0.5


def mc_estimate(a: Die, b: Die, rolls: int, seed=None, chunk: int = 1 << 20) -> MonteCarloEstimate:
    """Roll both dice ``rolls`` times and count how often ``a`` shows more."""
    if rolls < 1:
        raise InvalidInputError(f"rolls must be positive, got {rolls}")
    # compare by global rank so rational labels never become floats
    order = {x: k for k, x in enumerate(sorted(set(a.faces) | set(b.faces)))}
    fa = np.array([order[x] for x in a.faces])
    fb = np.array([order[x] for x in b.faces])
    rng = np.random.default_rng(seed)
    wins = 0
    left = rolls
    while left:
        size = min(chunk, left)
        ra = fa[rng.integers(0, len(fa), size)]
        rb = fb[rng.integers(0, len(fb), size)]
        wins += int(np.count_nonzero(ra > rb))
        left -= size
    return MonteCarloEstimate(wins, rolls)


def _reaches_all(vertices, succ) -> bool:
    seen = {vertices[0]}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vertices)


def _strong(vertices, arcs) -> bool:
    fwd = {v: [] for v in vertices}
    bwd = {v: [] for v in vertices}
    for u, v in arcs:
        fwd[u].append(v)
        bwd[v].append(u)
    return _reaches_all(vertices, fwd) and _reaches_all(vertices, bwd)


def brute_force_connectable(g: Digraph) -> bool:
    """Try every orientation of the unjoined pairs and look for a strong result.

    Existing arcs are kept as they are. Two vertices never qualify, since
    the target is a strong tournament and none exists on two vertices.
    """
    verts = list(g.vertices)
    if len(verts) > MAX_BRUTE_VERTICES:
        raise CostGuardError(f"{len(verts)} vertices exceeds the brute-force limit")
    if len(verts) == 1:
        return True
    if len(verts) == 2:
        return False
    missing = [
        (u, v)
        for u, v in combinations(verts, 2)
        if (u, v) not in g.arcs and (v, u) not in g.arcs
    ]
    for flips in product((False, True), repeat=len(missing)):
        extra = [(v, u) if f else (u, v) for (u, v), f in zip(missing, flips)]
        if _strong(verts, list(g.arcs) + extra):
            return True
    return False


def complete_directed_cuts(g: Digraph) -> list:
    """All bipartitions ``(S, T)`` where every pair across is a single arc S -> T."""
    verts = list(g.vertices)
    if len(verts) > MAX_BRUTE_VERTICES:
        raise CostGuardError(f"{len(verts)} vertices exceeds the brute-force limit")
    cuts = []
    for mask in range(1, 2 ** len(verts) - 1):
        s = [v for i, v in enumerate(verts) if mask >> i & 1]
        t = [v for v in verts if v not in s]
        if all((u, v) in g.arcs and (v, u) not in g.arcs for u in s for v in t):
            cuts.append((tuple(s), tuple(t)))
    return cuts
