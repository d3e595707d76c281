"""
Checking constructions independently
====================================

Exhaustive enumeration, Monte Carlo rolls, and brute-force orientation
search, each independent of the constructive code.
"""

from ntdice import Digraph, build_cycle_set, is_balanced, is_strongly_connectable
from ntdice.graphs import complete_directed_cut
from ntdice.oracle import brute_force_connectable, enumerate_balanced_triples, mc_estimate

# Every balanced non-transitive set of three 3-sided dice: all sit at 5/9.
sets = enumerate_balanced_triples(3)
print(len(sets), "triples;", {str(is_balanced(s)) for s in sets})

# Roll two dice a million times.
s = build_cycle_set(4, 3)
est = mc_estimate(s["A"], s["B"], 1_000_000, seed=7)
exact = is_balanced(s)
print(f"A vs B: estimate {est.estimate:.5f}, exact {exact} ~ {float(exact):.5f}")

# A graph can be completed to a strong tournament exactly when no
# bipartition has every cross pair pointing one way.
g = Digraph(("a", "b", "c", "d"), frozenset([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c")]))
print("connectable:", is_strongly_connectable(g), "| brute force:", brute_force_connectable(g))
print("cut:", complete_directed_cut(g))
