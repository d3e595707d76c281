"""
Dice for any tournament
=======================

A tournament that is not strong splits into strong components ordered one
above another. Each component gets its own dice, side counts are matched
by duplicating labels, and whole components are stacked.
"""

from ntdice import build_tournament_dice, probability, random_tournament, strong_components

for seed in range(40):
    t = random_tournament(7, seed)
    comps = strong_components(t).components
    if len(comps) > 1 and any(len(c) >= 3 for c in comps):
        break
print("components, dominant first:", comps)

built = build_tournament_dice(t)
print(built.dice)
print(built.report)

# Across components the upper die always wins.
upper, lower = comps[0][0], comps[-1][0]
print(f"P({upper} beats {lower}) =", probability(built.dice[upper], built.dice[lower]))
