"""Directed graphs, tournaments, strong components and Hamilton cycles.

Every routine iterates vertices in declaration order, so results are
deterministic for a given input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import InvalidInputError, NotStrongError


def default_names(n: int) -> list:
    """A, B, ..., Z, then A1, B1, ... for larger collections."""
    out = []
    for i in range(n):
        letter = chr(ord("A") + i % 26)
        out.append(letter if i < 26 else f"{letter}{i // 26}")
    return out


@dataclass(frozen=True)
class Digraph:
    """Vertices in declaration order plus a set of arcs ``(u, v)`` meaning u -> v."""

    vertices: tuple
    arcs: frozenset

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise InvalidInputError(f"duplicate vertices in {vertices}")
        arcs = frozenset((u, v) for u, v in self.arcs)
        known = set(vertices)
        for u, v in arcs:
            if u == v:
                raise InvalidInputError(f"self-loop at {u}")
            if u not in known or v not in known:
                raise InvalidInputError(f"arc ({u}, {v}) uses an undeclared vertex")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", arcs)
        index = {v: i for i, v in enumerate(vertices)}
        succ = {v: [] for v in vertices}
        pred = {v: [] for v in vertices}
        for u, v in sorted(arcs, key=lambda a: (index[a[0]], index[a[1]])):
            succ[u].append(v)
            pred[v].append(u)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_succ", {v: tuple(ws) for v, ws in succ.items()})
        object.__setattr__(self, "_pred", {v: tuple(ws) for v, ws in pred.items()})

    def __len__(self):
        return len(self.vertices)

    def has_arc(self, u, v) -> bool:
        return (u, v) in self.arcs

    def successors(self, v) -> tuple:
        return self._succ[v]

    def predecessors(self, v) -> tuple:
        return self._pred[v]

    def index(self, v) -> int:
        return self._index[v]

    def sorted_arcs(self) -> list:
        return sorted(self.arcs, key=lambda a: (self._index[a[0]], self._index[a[1]]))

    def missing_pairs(self) -> list:
        """Unordered pairs joined by no arc, in declaration order."""
        return [
            (u, v)
            for u, v in combinations(self.vertices, 2)
            if (u, v) not in self.arcs and (v, u) not in self.arcs
        ]

    def induced(self, keep: Iterable[Hashable]) -> "Digraph":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        arcs = frozenset((u, v) for u, v in self.arcs if u in keep and v in keep)
        return type(self)(verts, arcs)

    @classmethod
    def from_arcs(cls, vertices: Sequence, arcs: Iterable) -> "Digraph":
        return cls(tuple(vertices), frozenset(arcs))


class Tournament(Digraph):
    """A digraph with exactly one arc between every pair of vertices."""

    def __post_init__(self):
        super().__post_init__()
        for u, v in combinations(self.vertices, 2):
            if ((u, v) in self.arcs) == ((v, u) in self.arcs):
                raise InvalidInputError(f"pair {{{u}, {v}}} needs exactly one arc")

    @classmethod
    def from_digraph(cls, g: Digraph) -> "Tournament":
        return cls(g.vertices, g.arcs)

    def winner(self, u, v):
        return u if (u, v) in self.arcs else v


def is_tournament(g: Digraph) -> bool:
    return all(
        ((u, v) in g.arcs) != ((v, u) in g.arcs) for u, v in combinations(g.vertices, 2)
    )


@dataclass(frozen=True)
class Condensation:
    """Strong components in topological order (sources first).

    ``dag`` has vertices ``0..k-1`` indexing ``components``.
    """

    components: tuple
    dag: Digraph

    def component_of(self, v) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise KeyError(v)


def _tarjan(g: Digraph) -> list:
    index = {}
    low = {}
    on_stack = set()
    stack = []
    found = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            succ = g.successors(v)
            if pos < len(succ):
                work.append((v, pos + 1))
                w = succ[pos]
                if w not in index:
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                found.append(comp)
    return found


def strong_components(g: Digraph) -> Condensation:
    # Tarjan emits components sinks first
    comps = [
        tuple(sorted(c, key=g.index)) for c in reversed(_tarjan(g))
    ]
    where = {v: i for i, c in enumerate(comps) for v in c}
    dag_arcs = {(where[u], where[v]) for u, v in g.arcs if where[u] != where[v]}
    dag = Digraph(tuple(range(len(comps))), frozenset(dag_arcs))
    return Condensation(tuple(comps), dag)


def is_strong(g: Digraph) -> bool:
    return len(strong_components(g).components) == 1


def is_acyclic(g: Digraph) -> bool:
    return all(len(c) == 1 for c in strong_components(g).components)


def is_hamilton_cycle(g: Digraph, order: Sequence) -> bool:
    n = len(g.vertices)
    if len(order) != n or set(order) != set(g.vertices) or n < 2:
        return False
    return all(g.has_arc(order[i], order[(i + 1) % n]) for i in range(n))


def hamilton_cycle(t: Tournament) -> list:
    """Directed Hamilton cycle of a strong tournament.

    Grows a cycle from the first 3-cycle found. An outside vertex with
    arcs both into and out of the cycle is inserted between some
    ``c[i] -> v -> c[i+1]``. When every outside vertex either beats the
    whole cycle (set X) or loses to all of it (set Y), strongness forces
    an arc y -> x, and ``c[0] -> y -> x -> c[1]`` splices both in.
    """
    if not is_tournament(t):
        raise InvalidInputError("hamilton_cycle expects a tournament")
    n = len(t.vertices)
    if n < 3:
        raise InvalidInputError(f"need at least 3 vertices, got {n}")
    cond = strong_components(t)
    if len(cond.components) != 1:
        raise NotStrongError(
            f"tournament is not strong; components: {list(cond.components)}",
            cond.components,
        )

    cycle = _first_triangle(t)
    outside = [v for v in t.vertices if v not in cycle]
    while outside:
        for v in outside:
            k = len(cycle)
            spot = next(
                (i for i in range(k) if t.has_arc(cycle[i], v) and t.has_arc(v, cycle[(i + 1) % k])),
                None,
            )
            if spot is not None:
                cycle.insert(spot + 1, v)
                outside.remove(v)
                break
        else:
            beats_all = [v for v in outside if t.has_arc(v, cycle[0])]
            loses_all = [v for v in outside if t.has_arc(cycle[0], v)]
            y, x = next((y, x) for y in loses_all for x in beats_all if t.has_arc(y, x))
            cycle[1:1] = [y, x]
            outside.remove(y)
            outside.remove(x)
    return cycle


def _first_triangle(t: Digraph) -> list:
    for a in t.vertices:
        for b in t.successors(a):
            for c in t.successors(b):
                if t.has_arc(c, a):
                    return [a, b, c]
    raise InvalidInputError("digraph has no directed 3-cycle")


class _Blocks:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def connectability_quotient(g: Digraph):
    """Merge vertices that can never be split by a complete directed cut.

    Returns ``(blocks, quotient)`` where ``quotient`` is a tournament on
    block indices. A pair joined both ways or not at all must sit on one
    side of any such cut, and so must two blocks with arcs running both
    ways between them.
    """
    uf = _Blocks(g.vertices)
    for u, v in combinations(g.vertices, 2):
        if g.has_arc(u, v) == g.has_arc(v, u):
            uf.union(u, v)
    changed = True
    while changed:
        changed = False
        directions = {}
        for u, v in g.arcs:
            bu, bv = uf.find(u), uf.find(v)
            if bu != bv:
                directions.setdefault(frozenset((bu, bv)), set()).add((bu, bv))
        for dirs in directions.values():
            if len(dirs) == 2:
                (a, b), _ = dirs
                changed |= uf.union(a, b)
    roots = []
    for v in g.vertices:
        r = uf.find(v)
        if r not in roots:
            roots.append(r)
    blocks = tuple(tuple(v for v in g.vertices if uf.find(v) == r) for r in roots)
    at = {r: i for i, r in enumerate(roots)}
    arcs = {(at[uf.find(u)], at[uf.find(v)]) for u, v in g.arcs if uf.find(u) != uf.find(v)}
    return blocks, Digraph(tuple(range(len(blocks))), frozenset(arcs))


def complete_directed_cut(g: Digraph):
    """A complete directed cut ``(S, T)`` with every S-T pair an arc S -> T, or None."""
    blocks, quotient = connectability_quotient(g)
    if len(blocks) < 2:
        return None
    cond = strong_components(quotient)
    if len(cond.components) == 1:
        return None
    top = set(cond.components[0])
    source = tuple(v for i, b in enumerate(blocks) if i in top for v in b)
    rest = tuple(v for v in g.vertices if v not in source)
    return source, rest


def is_strongly_connectable(g: Digraph) -> bool:
    """Can the missing pairs be oriented so that the result is strong?

    A 2-vertex graph is never connectable here: no 2-vertex tournament is
    strong. For three or more vertices the answer is "no complete directed
    cut".
    """
    n = len(g.vertices)
    if n == 1:
        return True
    if n == 2:
        return False
    return complete_directed_cut(g) is None


def random_tournament(n: int, seed=None, names: Sequence = None) -> Tournament:
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    rng = random.Random(seed)
    verts = tuple(names) if names is not None else tuple(default_names(n))
    arcs = set()
    for u, v in combinations(verts, 2):
        arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    return Tournament(verts, frozenset(arcs))


def random_strong_tournament(n: int, seed=None, names: Sequence = None) -> Tournament:
    """Random tournament, redrawn from the same generator until it is strong."""
    if n == 2 or n < 1:
        raise InvalidInputError(f"no strong tournament on {n} vertices")
    rng = random.Random(seed)
    while True:
        t = random_tournament(n, rng.getrandbits(64), names)
        if is_strong(t):
            return t


def random_digraph(n: int, seed=None, p: float = 0.5) -> Digraph:
    """Each ordered pair becomes an arc independently with probability ``p``."""
    rng = random.Random(seed)
    verts = tuple(default_names(n))
    arcs = {(u, v) for u in verts for v in verts if u != v and rng.random() < p}
    return Digraph(verts, frozenset(arcs))
